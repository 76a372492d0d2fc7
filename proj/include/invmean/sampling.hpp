#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "invmean/interval.hpp"

namespace invmean {

/// Closed box [lo, hi] used for random sampling inside an interval.
struct SampleBox {
  double lo;
  double hi;
};

/// [1, 2] intersected with the interval. When that intersection is empty a
/// box well inside the interval is used instead.
SampleBox default_sample_box(const Interval& interval);

/// Points at distance 1e-6 from each end of a bounded interval; empty otherwise.
std::vector<double> boundary_adjacent_points(const Interval& interval);

/// Seeded random source. Draws are platform independent: uniform values are
/// built from the top 53 bits of mt19937_64 rather than a std distribution.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  double uniform(const SampleBox& box) { return uniform(box.lo, box.hi); }
  std::vector<double> uniform_point(const SampleBox& box, std::size_t dim);
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace invmean
