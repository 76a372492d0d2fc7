#include "invmean/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace invmean {

namespace {
constexpr double kBoundaryOffset = 1e-6;
}

SampleBox default_sample_box(const Interval& interval) {
  const double lo = std::max(1.0, interval.lower());
  const double hi = std::min(2.0, interval.upper());
  if (lo < hi && interval.contains(lo) && interval.contains(hi)) return {lo, hi};
  if (lo < hi) {
    // [1, 2] only touches an open end; shrink off it.
    const double width = hi - lo;
    return {interval.contains(lo) ? lo : lo + 0.01 * width, interval.contains(hi) ? hi : hi - 0.01 * width};
  }
  if (interval.bounded()) {
    const double width = interval.upper() - interval.lower();
    return {interval.lower() + 0.25 * width, interval.lower() + 0.75 * width};
  }
  if (std::isfinite(interval.lower())) return {interval.lower() + 1.0, interval.lower() + 2.0};
  return {interval.upper() - 2.0, interval.upper() - 1.0};
}

std::vector<double> boundary_adjacent_points(const Interval& interval) {
  if (!interval.bounded()) return {};
  return {interval.lower() + kBoundaryOffset, interval.upper() - kBoundaryOffset};
}

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::vector<double> Sampler::uniform_point(const SampleBox& box, std::size_t dim) {
  std::vector<double> x(dim);
  for (auto& v : x) v = uniform(box);
  return x;
}

std::size_t Sampler::index(std::size_t n) {
  return static_cast<std::size_t>(uniform(0.0, static_cast<double>(n)));
}

}  // namespace invmean
