#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "conjd/parallel.hpp"

namespace conjd::detail {

/// Count, mean and sum of squared deviations (Welford), mergeable with
/// Chan's pairwise update.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double v) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count), nb = static_cast<double>(other.count);
    const double delta = other.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += other.m2 + delta * delta * na * nb / total;
    count += other.count;
  }

  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
  double standard_error() const { return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0; }
};

inline constexpr std::uint64_t kSampleBlock = 16384;

/// Moments of sample(i) over i in [0, samples). Blocks of fixed size are
/// reduced in index order, so the result does not depend on `threads`.
inline Moments sample_moments(std::uint64_t samples, unsigned threads, const std::function<double(std::uint64_t)>& sample) {
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<Moments> partial(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::uint64_t first = b * kSampleBlock;
    const std::uint64_t last = std::min(samples, first + kSampleBlock);
    Moments m;
    for (std::uint64_t i = first; i < last; ++i) m.add(sample(i));
    partial[b] = m;
  });
  Moments total;
  for (const auto& m : partial) total.merge(m);
  return total;
}

}  // namespace conjd::detail
