// Counting reducible polynomials of degree 2 and 3.
//
// In these degrees a polynomial is reducible exactly when it has a rational
// root r = p/q, i.e. when it factors as (q x - p) g. Pairs (r, g) are counted
// with interval arithmetic on the last cofactor coefficient instead of
// visiting every polynomial.
//
//   degree 2: each polynomial is attributed to its smallest rational root,
//             which is a linear constraint on g_0.
//   degree 3: sum over roots counts every f once per distinct rational root;
//             a cubic with two rational roots splits completely, so the
//             overcount is removed by enumerating c (q_a x - p_a)(q_b x - p_b)(q_c x - p_c).

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "enumeration_internal.hpp"

namespace conjd::detail {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

bool coprime(std::int64_t p, std::int64_t q) { return std::gcd(p, q) == 1; }

std::uint64_t reducible_quadratics(std::int64_t Q) {
  std::uint64_t total = 0;
  for (std::int64_t q = 1; q <= Q; ++q) {
    const std::int64_t g1_max = Q / q;
    for (std::int64_t p = -Q; p <= Q; ++p) {
      if (!coprime(p, q)) continue;
      const std::int64_t g0_abs = p != 0 ? Q / std::llabs(p) : Q;
      for (std::int64_t g1 = -g1_max; g1 <= g1_max; ++g1) {
        if (g1 == 0) continue;
        // f = q g1 x^2 + (q g0 - p g1) x - p g0
        std::int64_t lo = std::max(ceil_div(p * g1 - Q, q), -g0_abs);
        std::int64_t hi = std::min(floor_div(p * g1 + Q, q), g0_abs);
        // the other root -g0/g1 must not be smaller than p/q
        if (g1 > 0)
          hi = std::min(hi, floor_div(-p * g1, q));
        else
          lo = std::max(lo, ceil_div(-p * g1, q));
        if (hi >= lo) total += static_cast<std::uint64_t>(hi - lo + 1);
      }
    }
  }
  return total;
}

// Sum over rational roots r of #{f cubic : r is a root}.
std::uint64_t cubic_root_incidences(std::int64_t Q) {
  std::uint64_t total = 0;
  for (std::int64_t q = 1; q <= Q; ++q) {
    const std::int64_t g2_max = Q / q;
    for (std::int64_t p = -Q; p <= Q; ++p) {
      if (!coprime(p, q)) continue;
      const std::int64_t g0_abs = p != 0 ? Q / std::llabs(p) : Q;
      for (std::int64_t g2 = -g2_max; g2 <= g2_max; ++g2) {
        if (g2 == 0) continue;
        // f = q g2 x^3 + (q g1 - p g2) x^2 + (q g0 - p g1) x - p g0
        const std::int64_t g1_lo = ceil_div(p * g2 - Q, q);
        const std::int64_t g1_hi = floor_div(p * g2 + Q, q);
        for (std::int64_t g1 = g1_lo; g1 <= g1_hi; ++g1) {
          const std::int64_t lo = std::max(ceil_div(p * g1 - Q, q), -g0_abs);
          const std::int64_t hi = std::min(floor_div(p * g1 + Q, q), g0_abs);
          if (hi >= lo) total += static_cast<std::uint64_t>(hi - lo + 1);
        }
      }
    }
  }
  return total;
}

// Sum over completely split cubics f with rho >= 2 distinct roots of rho - 1.
std::uint64_t split_cubic_excess(std::int64_t Q) {
  std::uint64_t total = 0;
  // roots sorted by value: pa/qa <= pb/qb <= pc/qc
  for (std::int64_t qa = 1; qa <= Q; ++qa) {
    for (std::int64_t qb = 1; qa * qb <= Q; ++qb) {
      for (std::int64_t qc = 1; qa * qb * qc <= Q; ++qc) {
        for (std::int64_t pa = -Q; pa <= Q; ++pa) {
          if (!coprime(pa, qa)) continue;
          const std::int64_t budget_b = pa != 0 ? Q / std::llabs(pa) : Q;
          for (std::int64_t pb = std::max(-budget_b, ceil_div(pa * qb, qa)); pb <= budget_b; ++pb) {
            if (!coprime(pb, qb)) continue;
            const std::int64_t budget_c = pb != 0 ? budget_b / std::llabs(pb) : budget_b;
            const bool ab_equal = pa * qb == pb * qa;
            for (std::int64_t pc = std::max(-budget_c, ceil_div(pb * qc, qb)); pc <= budget_c; ++pc) {
              if (!coprime(pc, qc)) continue;
              const bool bc_equal = pb * qc == pc * qb;
              const int distinct = 1 + (ab_equal ? 0 : 1) + (bc_equal ? 0 : 1);
              if (distinct < 2) continue;
              const std::int64_t s1 = qa * pb + qb * pa;
              const std::int64_t c3 = qa * qb * qc;
              const std::int64_t c2 = -(qa * qb * pc + qc * s1);
              const std::int64_t c1 = s1 * pc + qc * pa * pb;
              const std::int64_t c0 = -pa * pb * pc;
              const std::int64_t h = std::max({std::llabs(c3), std::llabs(c2), std::llabs(c1), std::llabs(c0)});
              if (h > Q) continue;
              total += static_cast<std::uint64_t>(distinct - 1) * 2 * static_cast<std::uint64_t>(Q / h);
            }
          }
        }
      }
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_reducible_low_degree(int n, std::int64_t Q) {
  if (n < 2 || n > 3) throw std::invalid_argument("low-degree reducible count needs n in {2, 3}");
  if (Q > (std::int64_t{1} << 20)) throw std::invalid_argument("height bound too large");
  std::uint64_t total = reducible_quadratics(Q);
  if (n == 3) total += cubic_root_incidences(Q) - split_cubic_excess(Q);
  return total;
}

}  // namespace conjd::detail
