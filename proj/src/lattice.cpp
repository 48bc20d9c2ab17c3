#include "conjd/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "conjd/parallel.hpp"

namespace conjd {

double zeta(double s) {
  if (!(s > 1.0)) throw std::domain_error("zeta needs s > 1");
  constexpr int kTerms = 1000;
  const double N = kTerms;
  // tail sum_{j >= N} j^-s by Euler-Maclaurin with B2, B4, B6
  const double tail = std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s) + s / 12.0 * std::pow(N, -s - 1.0) -
                      s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(N, -s - 3.0) +
                      s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0 * std::pow(N, -s - 5.0);
  double sum = tail;
  for (int j = kTerms - 1; j >= 1; --j) sum += std::pow(static_cast<double>(j), -s);
  return sum;
}

DilatableRegion::DilatableRegion(Kind kind, int d, Box box, Rational radius)
    : kind_(kind), d_(d), box_(std::move(box)), radius_(std::move(radius)) {
  if (d_ < 2) throw std::invalid_argument("region dimension must be at least 2");
}

DilatableRegion DilatableRegion::box(Box b) {
  if (b.volume() <= 0) throw std::invalid_argument("box region needs positive volume");
  const int d = b.dimension();
  return DilatableRegion(Kind::kBox, d, std::move(b), Rational(0));
}

DilatableRegion DilatableRegion::ball(int d, Rational radius) {
  if (radius <= 0) throw std::invalid_argument("ball radius must be positive");
  return DilatableRegion(Kind::kBall, d, Box::cube(std::max(d, 1), -radius, radius), std::move(radius));
}

DilatableRegion DilatableRegion::unit_cube(int d) {
  if (d < 2) throw std::invalid_argument("region dimension must be at least 2");
  return box(Box::cube(d, Rational(-1), Rational(1)));
}

double DilatableRegion::volume() const {
  if (kind_ == Kind::kBox) return box_.volume().get_d();
  const double half = d_ / 2.0;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0) * std::pow(radius_.get_d(), d_);
}

namespace {

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::invalid_argument("dilated region too large");
  return z.get_si();
}

std::int64_t ceil_scaled(const Rational& x, std::int64_t Q) {
  Rational y = x * Rational(static_cast<long>(Q));
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return to_int64(r);
}

std::int64_t floor_scaled(const Rational& x, std::int64_t Q) {
  Rational y = x * Rational(static_cast<long>(Q));
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return to_int64(r);
}

// Walks the first d-1 coordinates of a box with a running gcd; the last
// coordinate is resolved by a table of coprime counts per gcd value.
std::uint64_t count_box(const Box& box, std::int64_t Q, unsigned threads) {
  const int d = box.dimension();
  std::vector<std::int64_t> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    lo[static_cast<std::size_t>(i)] = ceil_scaled(box.side(i).lo, Q);
    hi[static_cast<std::size_t>(i)] = floor_scaled(box.side(i).hi, Q);
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return 0;
  }

  std::int64_t max_abs = 0;
  for (int i = 0; i + 1 < d; ++i)
    max_abs = std::max({max_abs, std::abs(lo[static_cast<std::size_t>(i)]), std::abs(hi[static_cast<std::size_t>(i)])});

  const std::int64_t zlo = lo.back(), zhi = hi.back();
  std::vector<std::uint64_t> coprime_with(static_cast<std::size_t>(max_abs) + 1, 0);
  parallel_for(coprime_with.size(), threads, [&](std::size_t g) {
    std::uint64_t c = 0;
    for (std::int64_t z = zlo; z <= zhi; ++z)
      if (std::gcd(static_cast<std::int64_t>(g), z) == 1) ++c;
    coprime_with[g] = c;
  });

  const auto slabs = static_cast<std::size_t>(hi[0] - lo[0] + 1);
  std::vector<std::uint64_t> partial(slabs, 0);
  parallel_for(slabs, threads, [&](std::size_t s) {
    std::vector<std::int64_t> x(lo.begin(), lo.end() - 1);
    x[0] = lo[0] + static_cast<std::int64_t>(s);
    std::uint64_t total = 0;
    while (true) {
      std::int64_t g = 0;
      for (auto v : x) g = std::gcd(g, v);
      total += coprime_with[static_cast<std::size_t>(g)];
      std::size_t pos = 1;
      while (pos < x.size() && x[pos] == hi[pos]) {
        x[pos] = lo[pos];
        ++pos;
      }
      if (pos >= x.size()) break;
      ++x[pos];
    }
    partial[s] = total;
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::uint64_t count_ball(int d, const Rational& radius, std::int64_t Q, unsigned threads) {
  __extension__ typedef __int128 i128;
  const std::int64_t u = to_int64(radius.get_num());
  const std::int64_t v = to_int64(radius.get_den());
  const i128 rhs = static_cast<i128>(Q) * Q * u * u;  // v^2 |x|^2 <= Q^2 u^2
  const std::int64_t R = (Q * u) / v;

  const auto slabs = static_cast<std::size_t>(2 * R + 1);
  std::vector<std::uint64_t> partial(slabs, 0);
  parallel_for(slabs, threads, [&](std::size_t s) {
    std::vector<std::int64_t> x(static_cast<std::size_t>(d - 1), -R);
    x[0] = -R + static_cast<std::int64_t>(s);
    std::uint64_t total = 0;
    while (true) {
      i128 sq = 0;
      std::int64_t g = 0;
      for (auto c : x) {
        sq += static_cast<i128>(c) * c;
        g = std::gcd(g, c);
      }
      const i128 room = rhs - sq * v * v;
      if (room >= 0) {
        const auto zmax = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(room / (static_cast<i128>(v) * v))));
        for (std::int64_t z = -zmax; z <= zmax; ++z)
          if (std::gcd(g, z) == 1) ++total;
      }
      std::size_t pos = 1;
      while (pos < x.size() && x[pos] == R) {
        x[pos] = -R;
        ++pos;
      }
      if (pos >= x.size()) break;
      ++x[pos];
    }
    partial[s] = total;
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

}  // namespace

std::uint64_t primitive_point_count(const DilatableRegion& region, std::int64_t Q, unsigned threads) {
  if (Q < 1) throw std::invalid_argument("dilation factor must be positive");
  if (region.kind() == DilatableRegion::Kind::kBox) return count_box(region.as_box(), Q, threads);
  return count_ball(region.dimension(), region.radius(), Q, threads);
}

int log_exponent(int d) { return d == 2 ? 1 : 0; }

double remainder_scale(int power, int log_power, std::int64_t Q) {
  const double q = static_cast<double>(Q);
  const double log_term = Q > 1 ? std::pow(std::log(q), log_power) : 1.0;
  return std::pow(q, power) * log_term;
}

std::vector<LemmaRow> verify_lemma(const DilatableRegion& region, const std::vector<std::int64_t>& Q_list,
                                   unsigned threads) {
  if (!std::is_sorted(Q_list.begin(), Q_list.end())) throw std::invalid_argument("Q list must be ascending");
  const int d = region.dimension();
  const double density = region.volume() / zeta(d);
  std::vector<LemmaRow> rows;
  for (auto Q : Q_list) {
    LemmaRow row{Q, primitive_point_count(region, Q, threads), 0, 0, 0};
    row.prediction = density * std::pow(static_cast<double>(Q), d);
    row.ratio = static_cast<double>(row.count) / row.prediction;
    row.residual = std::abs(static_cast<double>(row.count) - row.prediction) / remainder_scale(d - 1, log_exponent(d), Q);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace conjd
