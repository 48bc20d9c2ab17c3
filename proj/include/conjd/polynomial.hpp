#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjd/integer.hpp"

namespace conjd {

/// Dense integer polynomial a_0 + a_1 x + ... + a_d x^d with arbitrary
/// precision coefficients. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients and degree kZeroDegree.
class IntPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// x^degree scaled by `coeff`.
  static IntPolynomial monomial(const Integer& coeff, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  const Integer& operator[](int i) const;
  const Integer& leading() const;

  IntPolynomial derivative() const;

  /// Sign of p(value), exact.
  int sign_at(const Rational& value) const;
  Rational evaluate(const Rational& value) const;
  Integer evaluate(const Integer& value) const;

  /// Sign of p at -inf / +inf.
  int sign_at_neg_infinity() const;
  int sign_at_pos_infinity() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Divides every coefficient by `d`, which must divide all of them.
  IntPolynomial divided_exactly(const Integer& d) const;

  /// Dense list low to high, e.g. "[-1, 1, 1]" for x^2 + x - 1.
  std::string to_string() const;
  static IntPolynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Naive height max |a_i|; zero for the zero polynomial.
Integer height(const IntPolynomial& p);

struct ContentSplit {
  Integer content;
  IntPolynomial primitive_part;
};

/// p = content * primitive_part with content > 0. Throws std::domain_error
/// ("undefined content") for the zero polynomial.
ContentSplit content_and_primitive(const IntPolynomial& p);

/// Quotient f / g when g divides f in Z[x], empty otherwise. g must be nonzero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& f, const IntPolynomial& g);

/// Positive multiple of the remainder of f by g (sign-preserving pseudo
/// remainder); g nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), made primitive with the sign of p's leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Distinct rational roots of p (nonzero), ascending.
std::vector<Rational> rational_roots(const IntPolynomial& p);

/// True iff p admits no factorization into two integer polynomials of degree
/// at least one. Throws std::domain_error for constants.
bool is_irreducible_over_q(const IntPolynomial& p);

/// The prime polynomial associated with p (primitive, irreducible, positive
/// leading coefficient), or empty when p is not associable to one.
std::optional<IntPolynomial> normalize_to_prime(const IntPolynomial& p);

/// sigma_0..sigma_k of a point in R^k; sigma(i) is zero outside 0..k.
template <class Scalar>
class SymmetricProfile {
 public:
  explicit SymmetricProfile(std::vector<Scalar> values) : values_(std::move(values)) {}

  int order() const { return static_cast<int>(values_.size()) - 1; }
  std::span<const Scalar> values() const { return values_; }

  Scalar sigma(int i) const {
    if (i < 0 || i > order()) return Scalar(0);
    return values_[static_cast<std::size_t>(i)];
  }

 private:
  std::vector<Scalar> values_;
};

/// Elementary symmetric polynomials of x via the product expansion of
/// prod_i (z + x_i).
template <class Scalar>
SymmetricProfile<Scalar> elementary_symmetric(std::span<const Scalar> x) {
  std::vector<Scalar> s(x.size() + 1, Scalar(0));
  s[0] = Scalar(1);
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = j + 1; i >= 1; --i) s[i] += s[i - 1] * x[j];
  return SymmetricProfile<Scalar>(std::move(s));
}

}  // namespace conjd
