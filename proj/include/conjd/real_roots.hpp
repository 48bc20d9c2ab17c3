#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "conjd/box.hpp"
#include "conjd/polynomial.hpp"

namespace conjd {

/// Closed interval holding exactly one real root of its polynomial. A point
/// interval (lo == hi) is an exact rational root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool overlaps(const IsolatingInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

/// Sturm chain f, f', -rem(f, f'), ... of the squarefree part of a nonzero
/// polynomial. All members are kept as primitive integer polynomials;
/// positive rescaling does not change sign variations.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  const IntPolynomial& base() const { return chain_.front(); }
  std::span<const IntPolynomial> chain() const { return chain_; }

  int variations_at(const Rational& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;

  /// Distinct real roots in (a, b].
  int count_in(const Rational& a, const Rational& b) const;
  /// Distinct real roots <= e, and < e.
  int count_at_most(const Rational& e) const;
  int count_below(const Rational& e) const;
  int real_root_count() const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// Distinct real roots of p in (a, b]. Throws std::invalid_argument for the
/// zero polynomial or a >= b.
int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b);

/// One isolating interval per distinct real root of p, sorted ascending and
/// pairwise disjoint. Rational roots come back as point intervals. Intervals
/// isolate roots of the squarefree part of p.
std::vector<IsolatingInterval> isolate_real_roots(const IntPolynomial& p);

/// A real root of a prime polynomial.
struct AlgebraicNumber {
  IntPolynomial minpoly;
  IsolatingInterval interval;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.minpoly == b.minpoly && a.interval.overlaps(b.interval);
  }
};

/// Bisects until the interval width is at most `width`; exact rational
/// roots collapse to a point.
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

/// Sign of (root - e) for the unique root of squarefree `f` in `iv`.
int compare_root(const IntPolynomial& f, const IsolatingInterval& iv, const Rational& e);

/// Number of injective assignments coordinate i -> root r with bit r set in
/// allowed[i].
inline std::uint64_t count_ordered_tuples(std::span<const std::uint32_t> allowed, std::uint32_t used = 0) {
  if (allowed.empty()) return 1;
  std::uint64_t total = 0;
  for (std::uint32_t free = allowed.front() & ~used; free != 0; free &= free - 1) {
    const std::uint32_t bit = free & (~free + 1);
    total += count_ordered_tuples(allowed.subspan(1), used | bit);
  }
  return total;
}

/// N_k(p, B): ordered k-tuples of distinct real roots of p lying in the
/// closed box B. Requires 1 <= k <= deg p and dim B == k.
std::uint64_t count_k_tuples(const IntPolynomial& p, int k, const Box& box);

}  // namespace conjd
