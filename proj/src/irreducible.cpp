// Irreducibility over Q for small-degree integer polynomials.
//
// Linear factors are ruled out by the rational root test. Higher degree
// factors are searched with Kronecker's method: a factor g of degree m is
// determined by its values at m+1 integer points, and each g(x_i) must
// divide f(x_i), so there are finitely many candidates to interpolate.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "conjd/polynomial.hpp"

namespace conjd {

namespace {

struct SamplePoint {
  Integer x;
  std::vector<std::int64_t> divisors;
};

// Newton divided differences through (xs[i], ys[i]), expanded to the
// monomial basis. Empty when the interpolant is not an integer polynomial.
std::optional<IntPolynomial> interpolate_integer(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);

  std::vector<Rational> poly{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // poly <- poly * (x - xs[i]) + dd[i]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(xs[i]);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }

  std::vector<Integer> c;
  c.reserve(poly.size());
  for (auto& r : poly) {
    if (r.get_den() != 1) return std::nullopt;
    c.push_back(r.get_num());
  }
  return IntPolynomial(std::move(c));
}

bool has_factor_of_degree(const IntPolynomial& f, int m) {
  // Candidate points 0, 1, -1, 2, -2, ...; keep those whose value has the
  // fewest divisors.
  std::vector<SamplePoint> candidates;
  for (int step = 0; static_cast<int>(candidates.size()) < 2 * m + 4; ++step) {
    const Integer x = (step % 2 == 1) ? Integer((step + 1) / 2) : Integer(-(step / 2));
    const Integer v = f.evaluate(x);
    if (v == 0) return true;  // integer root
    candidates.push_back({x, positive_divisors(v)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const SamplePoint& a, const SamplePoint& b) { return a.divisors.size() < b.divisors.size(); });
  candidates.resize(static_cast<std::size_t>(m) + 1);

  std::vector<Integer> xs;
  for (const auto& c : candidates) xs.push_back(c.x);

  const Integer& lead = f.leading();
  const Integer& constant = f[0];

  // Odometer over signed divisor choices; the first value is kept positive
  // because g and -g are interchangeable.
  const std::size_t points = candidates.size();
  std::vector<std::size_t> idx(points, 0);
  std::vector<int> sgn_choice(points, 1);
  std::vector<Integer> ys(points);
  while (true) {
    for (std::size_t i = 0; i < points; ++i)
      ys[i] = Integer(static_cast<long>(sgn_choice[i] * candidates[i].divisors[idx[i]]));

    if (auto g = interpolate_integer(xs, ys); g && g->degree() == m) {
      if (mpz_divisible_p(lead.get_mpz_t(), g->leading().get_mpz_t()) &&
          mpz_divisible_p(constant.get_mpz_t(), (*g)[0].get_mpz_t()) && divide_exact(f, *g))
        return true;
    }

    std::size_t pos = 0;
    for (; pos < points; ++pos) {
      if (pos > 0 && sgn_choice[pos] == 1) {
        sgn_choice[pos] = -1;
        break;
      }
      sgn_choice[pos] = 1;
      if (++idx[pos] < candidates[pos].divisors.size()) break;
      idx[pos] = 0;
    }
    if (pos == points) return false;
  }
}

}  // namespace

bool is_irreducible_over_q(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::domain_error("degree zero has no irreducibility status");
  if (p.degree() == 1) return true;

  const IntPolynomial f = content_and_primitive(p).primitive_part;
  if (f[0] == 0) return false;
  if (!rational_roots(f).empty()) return false;
  for (int m = 2; m <= f.degree() / 2; ++m)
    if (has_factor_of_degree(f, m)) return false;
  return true;
}

}  // namespace conjd
