#include "conjd/density.hpp"

#include <algorithm>
#include <cmath>

#include "conjd/lattice.hpp"
#include "conjd/random.hpp"
#include "moments.hpp"

namespace conjd {

std::string_view to_string(DensityMethod method) {
  switch (method) {
    case DensityMethod::kClosedFormBand:
      return "closed_form_k1_band";
    case DensityMethod::kClosedFormKn:
      return "closed_form_kn";
    case DensityMethod::kMcPolytope:
      return "mc_polytope";
    case DensityMethod::kRandomPolynomial:
      return "random_polynomial";
  }
  return "unknown";
}

Rational integrate_rho_1_band(int n, const Rational& a, const Rational& b) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (a > b) throw std::invalid_argument("empty interval");
  if (!in_k1_band(a) || !in_k1_band(b)) throw std::domain_error("band formula inapplicable");
  // antiderivative (3x + sum_m (m+1)^2 x^(2m+1) / (2m+1)) / 12
  auto primitive = [n](const Rational& x) {
    const Rational x2 = x * x;
    Rational power = x, sum = 3 * x;
    for (int m = 1; m <= n - 1; ++m) {
      power *= x2;
      sum += Rational((m + 1) * (m + 1), 2 * m + 1) * power;
    }
    return Rational(sum / 12);
  };
  Rational result = primitive(b) - primitive(a);
  result.canonicalize();
  return result;
}

namespace {

void check_degrees(int n, int k) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
}

void check_samples(const McOptions& options) {
  if (options.samples < kMinSamples) throw std::invalid_argument("insufficient samples");
}

// prod_i |T(x_i)| if t lies in D_x, else 0; t is drawn from the bounding box.
double polytope_weight(int n, std::span<const double> x, const SymmetricProfile<double>& sigma, const TBox<double>& box,
                       CounterRng& rng, std::vector<double>& t) {
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = rng.uniform(-box.bound[j], box.bound[j]);
  for (const double form : dx_forms<double>(n, sigma, t))
    if (std::abs(form) > 1.0) return 0.0;
  double w = 1.0;
  for (const double xi : x) {
    double value = 0.0;
    for (std::size_t j = t.size(); j-- > 0;) value = value * xi + t[j];
    w *= std::abs(value);
  }
  return w;
}

}  // namespace

DensityEstimate rho_k_mc(int n, std::span<const double> x, const McOptions& options) {
  const int k = static_cast<int>(x.size());
  check_degrees(n, k);
  check_samples(options);
  for (const double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("point must be finite");

  DensityEstimate result{0.0, 0.0, options.samples, DensityMethod::kMcPolytope};
  const double vandermonde = detail::pairwise_distance_product<double>(x);
  if (vandermonde == 0.0) return result;

  const auto sigma = elementary_symmetric<double>(x);
  const auto box = t_bounding_box<double>(n, x);
  const double scale = std::ldexp(vandermonde * box.volume(), -n - 1);
  const auto m = detail::sample_moments(options.samples, options.threads, [&](std::uint64_t i) {
    CounterRng rng(options.seed, i, streams::kDensityPoint);
    std::vector<double> t(box.bound.size());
    return polytope_weight(n, x, sigma, box, rng, t);
  });
  result.value = scale * m.mean;
  result.std_error = scale * m.standard_error();
  return result;
}

DensityEstimate integrate_rho(int n, int k, const Box& B, const McOptions& options) {
  check_degrees(n, k);
  check_samples(options);
  if (B.dimension() != k) throw std::invalid_argument("box dimension must equal k");

  std::vector<double> lo, hi;
  for (const auto& side : B.sides()) {
    lo.push_back(side.lo.get_d());
    hi.push_back(side.hi.get_d());
  }
  const double volume = B.volume().get_d();
  DensityEstimate result{0.0, 0.0, options.samples, DensityMethod::kMcPolytope};
  if (volume == 0.0) return result;

  const auto m = detail::sample_moments(options.samples, options.threads, [&](std::uint64_t i) {
    CounterRng rng(options.seed, i, streams::kDensityBox);
    std::vector<double> x(static_cast<std::size_t>(k));
    for (std::size_t c = 0; c < x.size(); ++c) x[c] = rng.uniform(lo[c], hi[c]);
    const double vandermonde = detail::pairwise_distance_product<double>(x);
    if (vandermonde == 0.0) return 0.0;
    const auto sigma = elementary_symmetric<double>(x);
    const auto box = t_bounding_box<double>(n, x);
    std::vector<double> t(box.bound.size());
    return vandermonde * box.volume() * polytope_weight(n, x, sigma, box, rng, t);
  });
  const double scale = std::ldexp(volume, -n - 1);
  result.value = scale * m.mean;
  result.std_error = scale * m.standard_error();
  return result;
}

double count_scale(int n, std::int64_t Q) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (Q < 0) throw std::invalid_argument("height bound must be nonnegative");
  return std::pow(2.0 * static_cast<double>(Q), n + 1) / (2.0 * zeta(n + 1));
}

Prediction predicted_count(int n, std::int64_t Q, const DensityEstimate& integral) {
  const double scale = count_scale(n, Q);
  return Prediction{scale * integral.value, scale * integral.std_error, integral};
}

Prediction predicted_count(int n, int k, std::int64_t Q, const Box& B, const McOptions& options) {
  return predicted_count(n, Q, integrate_rho(n, k, B, options));
}

}  // namespace conjd
