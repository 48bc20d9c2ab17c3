#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace conjd::detail {

__extension__ typedef __int128 i128;

/// Positive divisors of every integer in 1..limit.
class DivisorTable {
 public:
  explicit DivisorTable(std::int64_t limit);
  std::span<const std::int64_t> of(std::int64_t v) const { return divisors_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<std::vector<std::int64_t>> divisors_;
};

/// Rational root test for a_0 + ... + a_d x^d with |a_0|, |a_d| covered by
/// the table. Degree >= 1.
bool has_rational_root(std::span<const std::int64_t> a, const DivisorTable& table);

/// Reducible polynomials of degree 2..n (n <= 3) and height <= Q; for these
/// degrees reducible means having a rational root.
std::uint64_t count_reducible_low_degree(int n, std::int64_t Q);

}  // namespace conjd::detail
