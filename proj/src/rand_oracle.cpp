#include "conjd/rand_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conjd/parallel.hpp"
#include "conjd/random.hpp"
#include "conjd/real_roots.hpp"

namespace conjd {

RandomPolynomialSample sample_G(int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  CounterRng rng(seed, index, streams::kRandomPolynomial);
  RandomPolynomialSample s{std::vector<double>(static_cast<std::size_t>(n) + 1), seed, index};
  for (auto& c : s.coeffs) c = rng.uniform(-1.0, 1.0);
  return s;
}

namespace {

double horner(std::span<const double> c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::span<const double> trimmed(std::span<const double> c) {
  std::size_t size = c.size();
  while (size > 0 && c[size - 1] == 0.0) --size;
  return c.first(size);
}

double bisect(std::span<const double> c, double a, double b, double fa, double tolerance) {
  while (b - a > tolerance) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = horner(c, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots_in(std::span<const double> coeffs, double lo, double hi, double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(lo <= hi)) throw std::invalid_argument("empty search interval");
  const auto c = trimmed(coeffs);
  std::vector<double> roots;
  if (c.size() <= 1) return roots;

  std::vector<double> derivative(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) derivative[i - 1] = static_cast<double>(i) * c[i];
  std::vector<double> cuts{lo};
  for (const double r : real_roots_in(derivative, lo, hi, tolerance))
    if (r > cuts.back() && r < hi) cuts.push_back(r);
  cuts.push_back(hi);

  auto push = [&](double r) {
    if (roots.empty() || r - roots.back() > tolerance) roots.push_back(r);
  };
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a = cuts[s], b = cuts[s + 1];
    const double fa = horner(c, a), fb = horner(c, b);
    if (fa == 0.0) {
      push(a);
      continue;
    }
    if (fb == 0.0) {
      if (s + 2 == cuts.size()) push(b);
      continue;
    }
    if ((fa < 0.0) != (fb < 0.0)) push(bisect(c, a, b, fa, tolerance));
  }
  return roots;
}

std::map<std::uint64_t, double> NkDistribution::probabilities() const {
  std::map<std::uint64_t, double> p;
  for (const auto& [m, count] : histogram) p[m] = static_cast<double>(count) / static_cast<double>(trials);
  return p;
}

std::map<std::uint64_t, double> NkDistribution::volumes() const {
  auto v = probabilities();
  for (auto& [m, p] : v) p = std::ldexp(p, n + 1);
  return v;
}

double NkDistribution::mean() const {
  double sum = 0.0;
  for (const auto& [m, count] : histogram) sum += static_cast<double>(m) * static_cast<double>(count);
  return sum / static_cast<double>(trials);
}

double NkDistribution::std_error() const {
  if (trials < 2) return 0.0;
  const double mu = mean();
  double ss = 0.0;
  for (const auto& [m, count] : histogram) {
    const double d = static_cast<double>(m) - mu;
    ss += d * d * static_cast<double>(count);
  }
  const double T = static_cast<double>(trials);
  return std::sqrt(ss / (T - 1.0) / T);
}

namespace {

std::uint64_t tuples_of(std::uint64_t m, int k) {
  std::uint64_t t = 1;
  for (int i = 0; i < k; ++i) t *= m >= static_cast<std::uint64_t>(i) ? m - static_cast<std::uint64_t>(i) : 0;
  return t;
}

struct SearchBox {
  std::vector<double> lo, hi;
  double hull_lo = 0, hull_hi = 0;
};

std::uint64_t sample_count(int n, int k, const std::optional<SearchBox>& box, const OracleOptions& options,
                           std::uint64_t index) {
  const auto g = sample_G(n, options.seed, index);
  const auto c = trimmed(g.coeffs);
  if (c.size() <= 1) return 0;
  if (!box) {
    double largest = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) largest = std::max(largest, std::abs(c[i]));
    const double bound = 1.0 + largest / std::abs(c.back());
    return tuples_of(real_roots_in(c, -bound, bound, options.tolerance).size(), k);
  }
  const auto roots = real_roots_in(c, box->hull_lo, box->hull_hi, options.tolerance);
  if (roots.size() < static_cast<std::size_t>(k)) return 0;
  std::vector<std::uint32_t> allowed(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < allowed.size(); ++i)
    for (std::size_t r = 0; r < roots.size(); ++r)
      if (roots[r] >= box->lo[i] && roots[r] <= box->hi[i]) allowed[i] |= std::uint32_t{1} << r;
  return count_ordered_tuples(allowed);
}

}  // namespace

NkDistribution Nk_distribution(int n, int k, const std::optional<Box>& B, const OracleOptions& options) {
  if (n < 1 || n > 31) throw std::invalid_argument("need 1 <= n <= 31");
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (options.trials < kMinSamples) throw std::invalid_argument("insufficient trials");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  std::optional<SearchBox> box;
  if (B) {
    if (B->dimension() != k) throw std::invalid_argument("box dimension must equal k");
    SearchBox s;
    for (const auto& side : B->sides()) {
      s.lo.push_back(side.lo.get_d());
      s.hi.push_back(side.hi.get_d());
    }
    s.hull_lo = *std::min_element(s.lo.begin(), s.lo.end());
    s.hull_hi = *std::max_element(s.hi.begin(), s.hi.end());
    box = std::move(s);
  }

  constexpr std::uint64_t kBlock = 16384;
  const std::uint64_t blocks = (options.trials + kBlock - 1) / kBlock;
  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(blocks);
  parallel_for(blocks, options.threads, [&](std::size_t b) {
    const std::uint64_t last = std::min(options.trials, (b + 1) * kBlock);
    for (std::uint64_t i = b * kBlock; i < last; ++i) ++partial[b][sample_count(n, k, box, options, i)];
  });

  NkDistribution d{n, k, options.trials, {}};
  for (const auto& h : partial)
    for (const auto& [m, count] : h) d.histogram[m] += count;
  return d;
}

DensityEstimate expected_Nk(int n, int k, const std::optional<Box>& B, const OracleOptions& options) {
  const auto d = Nk_distribution(n, k, B, options);
  return DensityEstimate{d.mean(), d.std_error(), d.trials, DensityMethod::kRandomPolynomial};
}

}  // namespace conjd
