#include "conjd/enumeration.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "conjd/parallel.hpp"
#include "conjd/real_roots.hpp"
#include "enumeration_internal.hpp"

namespace conjd {

namespace detail {

DivisorTable::DivisorTable(std::int64_t limit) : divisors_(static_cast<std::size_t>(limit) + 1) {
  for (std::int64_t d = 1; d <= limit; ++d)
    for (std::int64_t m = d; m <= limit; m += d) divisors_[static_cast<std::size_t>(m)].push_back(d);
}

bool has_rational_root(std::span<const std::int64_t> a, const DivisorTable& table) {
  const int d = static_cast<int>(a.size()) - 1;
  if (a[0] == 0) return true;
  for (std::int64_t v : table.of(std::llabs(a[static_cast<std::size_t>(d)]))) {
    for (std::int64_t u : table.of(std::llabs(a[0]))) {
      if (std::gcd(u, v) != 1) continue;
      for (std::int64_t s : {u, -u}) {
        // v^d p(s/v) by Horner in 128-bit.
        i128 acc = a[static_cast<std::size_t>(d)];
        i128 vpow = 1;
        for (int i = d - 1; i >= 0; --i) {
          vpow *= v;
          acc = acc * s + static_cast<i128>(a[static_cast<std::size_t>(i)]) * vpow;
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace detail

namespace {

using detail::i128;

constexpr int kMaxDegree = 10;

struct SmallRational {
  std::int64_t num;
  std::int64_t den;
};

std::optional<SmallRational> to_small(const Rational& r) {
  constexpr long kLimit = 1L << 31;
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) return std::nullopt;
  const long n = r.get_num().get_si();
  const long d = r.get_den().get_si();
  if (n > kLimit || n < -kLimit || d > kLimit) return std::nullopt;
  return SmallRational{n, d};
}

struct Tally {
  std::uint64_t phi = 0;
  std::vector<std::uint64_t> histogram;
  std::uint64_t reducible = 0;
  std::uint64_t imprimitive_irreducible = 0;
  std::uint64_t primes = 0;

  void merge(const Tally& o) {
    phi += o.phi;
    if (histogram.size() < o.histogram.size()) histogram.resize(o.histogram.size(), 0);
    for (std::size_t m = 0; m < o.histogram.size(); ++m) histogram[m] += o.histogram[m];
    reducible += o.reducible;
    imprimitive_irreducible += o.imprimitive_irreducible;
    primes += o.primes;
  }
};

IntPolynomial to_polynomial(std::span<const std::int64_t> a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (auto x : a) c.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(c));
}

// Classifies every polynomial of one (degree, leading coefficient) slice of
// the coefficient cube. Degrees 1 and 2 are decided in machine integers;
// degree >= 3 falls back to exact Sturm counting on the prime polynomials.
class Sweep {
 public:
  Sweep(int n, std::int64_t Q, int k, const Box* box) : n_(n), Q_(Q), k_(k), box_(box) {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("degree bound must be in 1..10");
    if (Q < 0) throw std::invalid_argument("height bound must be nonnegative");
    const long double magnitude = (n + 1) * std::pow(static_cast<long double>(Q) + 1, n + 1);
    if (magnitude > 1e37L) throw std::invalid_argument("height bound too large for this degree");
    if (n >= 3 && Q > 0) table_.emplace(Q);
    if (box_ != nullptr) {
      small_ = true;
      for (const auto& side : box_->sides()) {
        auto lo = to_small(side.lo);
        auto hi = to_small(side.hi);
        if (!lo || !hi) {
          small_ = false;
          break;
        }
        small_sides_.push_back({*lo, *hi});
      }
    }
  }

  void run(int d, std::int64_t lead, Tally& tally, const std::function<void(const IntPolynomial&)>* visit) const {
    std::array<std::int64_t, kMaxDegree + 1> a{};
    a[static_cast<std::size_t>(d)] = lead;
    for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)] = -Q_;
    const std::span<const std::int64_t> coeffs(a.data(), static_cast<std::size_t>(d) + 1);

    while (true) {
      std::int64_t content = lead;
      for (int i = 0; i < d; ++i) content = std::gcd(content, a[static_cast<std::size_t>(i)]);
      const bool irreducible = is_irreducible(d, coeffs);

      // Each slice stands for itself and its negation.
      if (d >= 2 && !irreducible) tally.reducible += 2;
      if (irreducible && content > 1) tally.imprimitive_irreducible += 2;
      if (irreducible && content == 1) {
        ++tally.primes;
        if (visit) (*visit)(to_polynomial(coeffs));
        if (box_) {
          const auto m = d >= k_ ? tuples(d, coeffs) : 0;
          tally.phi += m;
          if (tally.histogram.size() <= m) tally.histogram.resize(m + 1, 0);
          ++tally.histogram[m];
        }
      }

      int pos = 0;
      while (pos < d && a[static_cast<std::size_t>(pos)] == Q_) a[static_cast<std::size_t>(pos++)] = -Q_;
      if (pos == d) break;
      ++a[static_cast<std::size_t>(pos)];
    }
  }

 private:
  bool is_irreducible(int d, std::span<const std::int64_t> a) const {
    if (d == 1) return true;
    if (a[0] == 0) return false;
    if (d == 2) return !is_perfect_square(a[1] * a[1] - 4 * a[2] * a[0]);
    if (detail::has_rational_root(a, *table_)) return false;
    if (d == 3) return true;
    return is_irreducible_over_q(to_polynomial(a));
  }

  std::uint64_t tuples(int d, std::span<const std::int64_t> a) const {
    std::array<std::uint32_t, kMaxDegree> allowed{};
    const auto sides = static_cast<std::size_t>(k_);

    if (small_ && d == 1) {
      // root -a0/a1 with a1 > 0
      for (std::size_t i = 0; i < sides; ++i) {
        const auto& [lo, hi] = small_sides_[i];
        const bool ge_lo = static_cast<i128>(lo.num) * a[1] <= static_cast<i128>(-a[0]) * lo.den;
        const bool le_hi = static_cast<i128>(-a[0]) * hi.den <= static_cast<i128>(hi.num) * a[1];
        allowed[i] = (ge_lo && le_hi) ? 1u : 0u;
      }
      return count_ordered_tuples(std::span<const std::uint32_t>(allowed.data(), sides));
    }

    if (small_ && d == 2) {
      const std::int64_t disc = a[1] * a[1] - 4 * a[2] * a[0];
      if (disc <= 0) return 0;
      // Roots are irrational, so "<= e" and "< e" agree.
      auto count_le = [&](const SmallRational& e) -> std::uint32_t {
        const i128 u = e.num, v = e.den;
        const i128 s = a[2] * u * u + a[1] * u * v + a[0] * v * v;
        if (s < 0) return 1;
        return (2 * a[2] * u + a[1] * v < 0) ? 0 : 2;
      };
      for (std::size_t i = 0; i < sides; ++i) {
        const auto& [lo, hi] = small_sides_[i];
        allowed[i] = range_mask(count_le(lo), count_le(hi));
      }
      return count_ordered_tuples(std::span<const std::uint32_t>(allowed.data(), sides));
    }

    const SturmSequence sturm(to_polynomial(a));
    for (std::size_t i = 0; i < sides; ++i) {
      const auto& side = box_->side(static_cast<int>(i));
      allowed[i] = range_mask(static_cast<std::uint32_t>(sturm.count_below(side.lo)),
                              static_cast<std::uint32_t>(sturm.count_at_most(side.hi)));
    }
    return count_ordered_tuples(std::span<const std::uint32_t>(allowed.data(), sides));
  }

  // Roots with ascending index in [first, last).
  static std::uint32_t range_mask(std::uint32_t first, std::uint32_t last) {
    if (last <= first) return 0;
    return ((std::uint32_t{1} << last) - 1) & ~((std::uint32_t{1} << first) - 1);
  }

  int n_;
  std::int64_t Q_;
  int k_;
  const Box* box_;
  bool small_ = false;
  std::vector<std::pair<SmallRational, SmallRational>> small_sides_;
  std::optional<detail::DivisorTable> table_;
};

struct Slice {
  int degree;
  std::int64_t lead;
};

// Highest degree first so the expensive slices start early.
std::vector<Slice> slices(int n, std::int64_t Q) {
  std::vector<Slice> out;
  for (int d = n; d >= 1; --d)
    for (std::int64_t lead = 1; lead <= Q; ++lead) out.push_back({d, lead});
  return out;
}

Tally sweep_all(int n, std::int64_t Q, int k, const Box* box, unsigned threads) {
  const Sweep sweep(n, Q, k, box);
  const auto work = slices(n, Q);
  std::vector<Tally> partial(work.size());
  parallel_for(work.size(), threads, [&](std::size_t i) { sweep.run(work[i].degree, work[i].lead, partial[i], nullptr); });
  Tally total;
  for (const auto& t : partial) total.merge(t);
  return total;
}

}  // namespace

void EnumerationTask::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
  if (Q < 1) throw std::invalid_argument("Q must be at least 1");
  if (box.dimension() != k) throw std::invalid_argument("box dimension must equal k");
}

Box full_space_proxy(int k, std::int64_t Q) {
  const Rational r(static_cast<long>(Q + 1));
  return Box::cube(k, -r, r);
}

std::uint64_t max_tuples(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n - i);
  return r;
}

void for_each_prime_polynomial(int n, std::int64_t Q, const std::function<void(const IntPolynomial&)>& visit) {
  if (Q < 1) return;
  const Sweep sweep(n, Q, 1, nullptr);
  Tally scratch;
  for (int d = 1; d <= n; ++d)
    for (std::int64_t lead = 1; lead <= Q; ++lead) sweep.run(d, lead, scratch, &visit);
}

std::vector<IntPolynomial> enumerate_prime_polynomials(int n, std::int64_t Q) {
  std::vector<IntPolynomial> out;
  for_each_prime_polynomial(n, Q, [&](const IntPolynomial& p) { out.push_back(p); });
  return out;
}

CountResult phi_k(const EnumerationTask& task, unsigned threads) {
  task.validate();
  const Tally t = sweep_all(task.n, task.Q, task.k, &task.box, threads);
  CountResult r;
  r.phi_k = t.phi;
  for (std::size_t m = 0; m < t.histogram.size(); ++m)
    if (t.histogram[m] != 0) r.histogram[static_cast<int>(m)] = t.histogram[m];
  r.reducible = t.reducible;
  r.imprimitive_irreducible = t.imprimitive_irreducible;
  r.prime_count = t.primes;
  return r;
}

std::uint64_t count_reducible_by_sweep(int n, std::int64_t Q, unsigned threads) {
  if (n < 2 || Q < 1) return 0;
  return sweep_all(n, Q, 1, nullptr, threads).reducible;
}

std::uint64_t count_reducible(int n, std::int64_t Q, unsigned threads) {
  if (n < 2 || Q < 1) return 0;
  if (n <= 3) return detail::count_reducible_low_degree(n, Q);
  return count_reducible_by_sweep(n, Q, threads);
}

}  // namespace conjd
