#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "conjd/box.hpp"
#include "conjd/polynomial.hpp"

namespace conjd {

/// Phi_k(Q; B) for polynomials of degree at most n.
struct EnumerationTask {
  int n = 2;
  std::int64_t Q = 1;
  int k = 1;
  Box box;

  /// Throws std::invalid_argument unless 2 <= n, 1 <= k <= n, Q >= 1 and
  /// dim B == k.
  void validate() const;
};

struct CountResult {
  std::uint64_t phi_k = 0;
  /// m -> number of prime polynomials p with N_k(p, B) = m.
  std::map<int, std::uint64_t> histogram;
  /// Polynomials of degree >= 2 in P(Q) that split into two factors of
  /// degree >= 1.
  std::uint64_t reducible = 0;
  /// Irreducible polynomials of degree >= 1 in P(Q) with content > 1.
  std::uint64_t imprimitive_irreducible = 0;
  std::uint64_t prime_count = 0;
};

/// Box guaranteed to contain every real root of every polynomial in P(Q):
/// [-(Q+1), Q+1]^k from the Cauchy bound with leading coefficient >= 1.
Box full_space_proxy(int k, std::int64_t Q);

/// n! / (n-k)!, the largest possible N_k for degree n.
std::uint64_t max_tuples(int n, int k);

/// Calls `visit` once per prime polynomial of degree 1..n and height <= Q,
/// ordered by degree, then by (a_d, ..., a_0) lexicographically.
void for_each_prime_polynomial(int n, std::int64_t Q, const std::function<void(const IntPolynomial&)>& visit);
std::vector<IntPolynomial> enumerate_prime_polynomials(int n, std::int64_t Q);

/// Exact Phi_k(Q; B) with its m-stratification. The coefficient cube is
/// split by (degree, leading coefficient) and merged by exact addition, so
/// the result does not depend on `threads` (0 = default worker count).
CountResult phi_k(const EnumerationTask& task, unsigned threads = 0);

/// Reducible polynomials in P(Q) (degree >= 2, nontrivial splitting).
/// Degrees <= 3 use rational-root counting; larger n sweep the full cube.
std::uint64_t count_reducible(int n, std::int64_t Q, unsigned threads = 0);

/// Same count by classifying every polynomial of the cube.
std::uint64_t count_reducible_by_sweep(int n, std::int64_t Q, unsigned threads = 0);

}  // namespace conjd
