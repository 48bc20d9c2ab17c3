#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "conjd/box.hpp"
#include "conjd/density.hpp"

namespace conjd {

/// G(x) = xi_n x^n + ... + xi_0 with xi_i i.i.d. uniform on [-1, 1].
struct RandomPolynomialSample {
  std::vector<double> coeffs;  // xi_0..xi_n
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

RandomPolynomialSample sample_G(int n, std::uint64_t seed, std::uint64_t index);

/// Distinct real roots of sum_i c_i x^i in [lo, hi], ascending. The interval
/// is split at the critical points (found recursively from the derivative)
/// into monotone pieces, and each sign change is bisected to `tolerance`.
/// Tangential roots are not reported.
std::vector<double> real_roots_in(std::span<const double> coeffs, double lo, double hi, double tolerance);

struct OracleOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  unsigned threads = 0;
};

/// Empirical law of N_k(G, B) over `trials` samples. Without a box the count
/// covers all real roots, searched inside each sample's Cauchy bound.
struct NkDistribution {
  int n = 0;
  int k = 0;
  std::uint64_t trials = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // m -> number of samples with N_k = m

  std::map<std::uint64_t, double> probabilities() const;
  /// Vol(A_m) = 2^(n+1) P(N_k = m).
  std::map<std::uint64_t, double> volumes() const;
  double mean() const;
  double std_error() const;
};

NkDistribution Nk_distribution(int n, int k, const std::optional<Box>& B, const OracleOptions& options);

/// E N_k(G, B) with its standard error.
DensityEstimate expected_Nk(int n, int k, const std::optional<Box>& B, const OracleOptions& options);

}  // namespace conjd
