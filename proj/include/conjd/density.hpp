#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conjd/box.hpp"
#include "conjd/integer.hpp"
#include "conjd/polynomial.hpp"

namespace conjd {

enum class DensityMethod { kClosedFormBand, kClosedFormKn, kMcPolytope, kRandomPolynomial };

std::string_view to_string(DensityMethod method);

struct DensityEstimate {
  double value = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  DensityMethod method = DensityMethod::kMcPolytope;
};

struct McOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// Minimum sample count accepted by the Monte Carlo estimators.
inline constexpr std::uint64_t kMinSamples = 100;

namespace detail {

template <class Scalar>
Scalar magnitude(const Scalar& v) {
  return v < 0 ? Scalar(-v) : Scalar(v);
}

template <class Scalar>
Scalar pairwise_distance_product(std::span<const Scalar> x) {
  Scalar v(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= magnitude(Scalar(x[i] - x[j]));
  return v;
}

}  // namespace detail

/// The n + 1 forms L_i(t) = sum_j (-1)^j sigma_{k-i+j}(x) t_j, i = 0..n, with
/// t = (t_0..t_{n-k}). Up to sign L_i is the z^i coefficient of
/// T(z) prod_i (z - x_i), T(z) = sum_j t_j z^j.
template <class Scalar>
std::vector<Scalar> dx_forms(int n, const SymmetricProfile<Scalar>& sigma, std::span<const Scalar> t) {
  const int k = sigma.order();
  std::vector<Scalar> forms(static_cast<std::size_t>(n) + 1, Scalar(0));
  for (int i = 0; i <= n; ++i) {
    Scalar acc(0);
    for (int j = 0; j <= n - k; ++j) {
      const Scalar term = sigma.sigma(k - i + j) * t[static_cast<std::size_t>(j)];
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    forms[static_cast<std::size_t>(i)] = acc;
  }
  return forms;
}

/// t in D_x, i.e. max_i |L_i(t)| <= 1.
template <class Scalar>
bool dx_membership(int n, std::span<const Scalar> x, std::span<const Scalar> t) {
  const int k = static_cast<int>(x.size());
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (static_cast<int>(t.size()) != n - k + 1) throw std::invalid_argument("t must have n - k + 1 entries");
  const auto sigma = elementary_symmetric<Scalar>(x);
  for (const auto& form : dx_forms<Scalar>(n, sigma, t))
    if (detail::magnitude(form) > Scalar(1)) return false;
  return true;
}

/// Axis-aligned box [-b_j, b_j] on t containing D_x.
template <class Scalar>
struct TBox {
  std::vector<Scalar> bound;

  Scalar volume() const {
    Scalar v(1);
    for (const auto& b : bound) v *= Scalar(2) * b;
    return v;
  }
};

/// Bounds on |t_j| over D_x. The forms are triangular in t from both ends:
/// L_{j+k} = +-t_j + (terms in t_{>j}) and L_j = +-sigma_k t_j + (terms in
/// t_{<j}); back substitution through the first family and forward
/// substitution through the second each give valid bounds, and the smaller is
/// kept. For k = n the single coordinate is bounded by 1 / max_i |sigma_i|.
template <class Scalar>
TBox<Scalar> t_bounding_box(int n, std::span<const Scalar> x) {
  const int k = static_cast<int>(x.size());
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  const auto sigma = elementary_symmetric<Scalar>(x);
  const int m = n - k;
  TBox<Scalar> box{std::vector<Scalar>(static_cast<std::size_t>(m) + 1, Scalar(0))};
  auto& b = box.bound;

  if (m == 0) {
    Scalar largest(0);
    for (int i = 0; i <= k; ++i) {
      const Scalar s = detail::magnitude(sigma.sigma(i));
      if (s > largest) largest = s;
    }
    b[0] = Scalar(1) / largest;
    return box;
  }

  for (int j = m; j >= 0; --j) {
    Scalar acc(1);
    for (int jj = j + 1; jj <= m; ++jj) acc += detail::magnitude(sigma.sigma(jj - j)) * b[static_cast<std::size_t>(jj)];
    b[static_cast<std::size_t>(j)] = acc;
  }

  const Scalar top = detail::magnitude(sigma.sigma(k));
  if (top > Scalar(0)) {
    for (int j = 0; j <= m; ++j) {
      Scalar acc(1);
      for (int jj = 0; jj < j; ++jj) acc += detail::magnitude(sigma.sigma(k - j + jj)) * b[static_cast<std::size_t>(jj)];
      const Scalar forward = acc / top;
      if (forward < b[static_cast<std::size_t>(j)]) b[static_cast<std::size_t>(j)] = forward;
    }
  }
  return box;
}

/// Band of validity of the k = 1 closed form: |x| <= 1 - 1/sqrt(2).
template <class Scalar>
bool in_k1_band(const Scalar& x) {
  const Scalar gap = Scalar(1) - detail::magnitude(x);
  return gap >= Scalar(0) && Scalar(2) * gap * gap >= Scalar(1);
}

/// rho_1(x) = (3 + sum_{m=1}^{n-1} (m+1)^2 x^{2m}) / 12 inside the band.
template <class Scalar>
Scalar rho_1_band(int n, const Scalar& x) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (!in_k1_band(x)) throw std::domain_error("band formula inapplicable");
  const Scalar x2 = x * x;
  Scalar power(1), sum(3);
  for (int m = 1; m <= n - 1; ++m) {
    power *= x2;
    sum += Scalar((m + 1) * (m + 1)) * power;
  }
  return sum / Scalar(12);
}

/// rho_n(x) = 2^-n / (n + 1) prod_{i<j} |x_i - x_j| / max_i |sigma_i(x)|^(n+1).
template <class Scalar>
Scalar rho_n_closed(std::span<const Scalar> x) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw std::invalid_argument("need n >= 2");
  const auto sigma = elementary_symmetric<Scalar>(x);
  Scalar largest(0);
  for (int i = 0; i <= n; ++i) {
    const Scalar s = detail::magnitude(sigma.sigma(i));
    if (s > largest) largest = s;
  }
  Scalar denom(n + 1);
  for (int i = 0; i < n; ++i) denom *= Scalar(2);
  for (int i = 0; i <= n; ++i) denom *= largest;
  return detail::pairwise_distance_product<Scalar>(x) / denom;
}

/// Exact integral of the band formula over [a, b] (both inside the band).
Rational integrate_rho_1_band(int n, const Rational& a, const Rational& b);

/// Monte Carlo estimate of rho_k(x) for k = x.size(), sampling t uniformly
/// from t_bounding_box. Repeated coordinates give exactly 0.
DensityEstimate rho_k_mc(int n, std::span<const double> x, const McOptions& options);

/// Monte Carlo estimate of the integral of rho_k over B, sampling x in B and
/// t in its bounding box jointly.
DensityEstimate integrate_rho(int n, int k, const Box& B, const McOptions& options);

/// (2Q)^(n+1) / (2 zeta(n+1)).
double count_scale(int n, std::int64_t Q);

struct Prediction {
  double value = 0;
  double std_error = 0;
  DensityEstimate integral;
};

/// count_scale(n, Q) * integral of rho_k over B.
Prediction predicted_count(int n, std::int64_t Q, const DensityEstimate& integral);
Prediction predicted_count(int n, int k, std::int64_t Q, const Box& B, const McOptions& options);

}  // namespace conjd
