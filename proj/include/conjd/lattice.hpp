#pragma once

#include <cstdint>
#include <vector>

#include "conjd/box.hpp"
#include "conjd/integer.hpp"

namespace conjd {

/// Riemann zeta for real s > 1: partial sum plus an Euler-Maclaurin tail,
/// accurate to about 1e-13 relative.
double zeta(double s);

/// Bounded region A in R^d (d >= 2) with an exact membership test on
/// rational points: either a box or the closed euclidean ball of radius r
/// centred at the origin.
class DilatableRegion {
 public:
  enum class Kind { kBox, kBall };

  static DilatableRegion box(Box b);
  static DilatableRegion ball(int d, Rational radius);
  /// [-1, 1]^d
  static DilatableRegion unit_cube(int d);

  Kind kind() const { return kind_; }
  int dimension() const { return d_; }
  const Box& as_box() const { return box_; }
  const Rational& radius() const { return radius_; }

  double volume() const;

 private:
  DilatableRegion(Kind kind, int d, Box box, Rational radius);

  Kind kind_;
  int d_;
  Box box_;
  Rational radius_;
};

/// lambda*(Q A): integer points of Q A whose coordinates have gcd 1. The
/// origin never counts.
std::uint64_t primitive_point_count(const DilatableRegion& region, std::int64_t Q, unsigned threads = 0);

struct LemmaRow {
  std::int64_t Q;
  std::uint64_t count;
  double prediction;  // Vol(A) Q^d / zeta(d)
  double ratio;       // count / prediction
  double residual;    // |count - prediction| / (Q^(d-1) log^l(d) Q)
};

/// l(d): 1 for d = 2, 0 otherwise.
int log_exponent(int d);

/// Q^power (ln Q)^log_power, with the log factor taken as 1 at Q = 1.
double remainder_scale(int power, int log_power, std::int64_t Q);

std::vector<LemmaRow> verify_lemma(const DilatableRegion& region, const std::vector<std::int64_t>& Q_list,
                                   unsigned threads = 0);

}  // namespace conjd
