#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conjd/integer.hpp"

namespace conjd {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed axis-aligned box in R^k with rational endpoints.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> sides);

  /// [lo, hi]^k.
  static Box cube(int k, const Rational& lo, const Rational& hi);

  /// "a1,b1;a2,b2;..." with exact rational or decimal literals.
  static Box parse(std::string_view text);

  int dimension() const { return static_cast<int>(sides_.size()); }
  const Interval& side(int i) const { return sides_[static_cast<std::size_t>(i)]; }
  std::span<const Interval> sides() const { return sides_; }

  bool contains(std::span<const Rational> point) const;
  bool contains(const Box& inner) const;
  Rational volume() const;

  /// Same syntax that parse() accepts.
  std::string to_string() const;
  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> sides_;
};

}  // namespace conjd
