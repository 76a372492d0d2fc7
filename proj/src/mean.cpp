#include "invmean/mean.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "invmean/errors.hpp"

namespace invmean {

Mean::Mean(std::size_t arity, Interval domain, Evaluator evaluator, MeanFlags flags, std::string label,
           std::optional<double> power_order)
    : arity_(arity),
      domain_(domain),
      evaluator_(std::move(evaluator)),
      flags_(flags),
      label_(std::move(label)),
      power_order_(power_order) {
  if (arity_ == 0) throw ValidationError("mean arity must be positive");
  if (!evaluator_) throw ValidationError("mean '" + label_ + "' has no evaluator");
}

double Mean::operator()(std::span<const double> x) const {
  if (x.size() != arity_) {
    throw ShapeError("mean '" + label_ + "' expects " + std::to_string(arity_) + " arguments, got " +
                     std::to_string(x.size()));
  }
  return evaluator_(x);
}

double power_mean_eval(const PowerMeanSpec& spec, std::span<const double> x) {
  if (x.size() != spec.arity) {
    throw ShapeError("power mean of arity " + std::to_string(spec.arity) + " given " + std::to_string(x.size()) +
                     " arguments");
  }
  if (x.empty()) throw ShapeError("power mean needs at least one argument");
  for (double v : x) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      std::ostringstream os;
      os << "power mean argument " << v << " is outside (0, +inf)";
      throw DomainError(os.str());
    }
  }
  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (lo == hi) return lo;

  const double n = static_cast<double>(x.size());
  double result;
  if (spec.order == 0.0) {
    double log_sum = 0.0;
    for (double v : x) log_sum += std::log(v);
    result = std::exp(log_sum / n);
  } else {
    // Scale by the extreme that keeps every (x_i / scale)^s in (0, 1].
    const double scale = spec.order > 0.0 ? hi : lo;
    double sum = 0.0;
    for (double v : x) sum += std::pow(v / scale, spec.order);
    result = scale * std::pow(sum / n, 1.0 / spec.order);
  }
  return std::clamp(result, lo, hi);
}

std::string power_mean_label(double order) {
  std::ostringstream os;
  os << "P_" << order;
  if (order == -1.0) os << " (harmonic)";
  else if (order == 0.0) os << " (geometric)";
  else if (order == 1.0) os << " (arithmetic)";
  else if (order == 2.0) os << " (quadratic)";
  return os.str();
}

Mean make_power_mean(const PowerMeanSpec& spec) { return make_power_mean(spec, Interval::positive_reals()); }

Mean make_power_mean(const PowerMeanSpec& spec, const Interval& domain) {
  if (!Interval::positive_reals().contains(domain)) {
    throw ValidationError("power means live on (0, +inf); " + domain.to_string() + " is not inside it");
  }
  if (spec.arity == 0) throw ValidationError("power mean arity must be positive");
  if (!std::isfinite(spec.order)) throw ValidationError("power mean order must be finite");
  MeanFlags flags{.strict = true, .monotone = true, .homogeneous = true, .symmetric = true};
  return Mean(
      spec.arity, domain,
      [spec](std::span<const double> x) { return power_mean_eval(spec, x); }, flags,
      power_mean_label(spec.order), spec.order);
}

namespace {

std::vector<double> draw_sample(const Mean& mean, Sampler& sampler, const SampleBox& box,
                                const std::vector<double>& boundary, std::size_t i) {
  std::vector<double> x(mean.arity());
  const bool near_boundary = !boundary.empty() && i % 4 == 3;
  for (auto& v : x) {
    if (near_boundary) {
      const std::size_t pick = sampler.index(boundary.size() + 1);
      v = pick < boundary.size() ? boundary[pick] : sampler.uniform(box);
    } else {
      v = sampler.uniform(box);
    }
  }
  return x;
}

}  // namespace

MeanPropertyReport check_mean_property(const Mean& mean, Sampler& sampler, std::size_t n_samples) {
  if (n_samples == 0) throw PreconditionError("check_mean_property needs at least one sample");
  const SampleBox box = default_sample_box(mean.domain());
  const std::vector<double> boundary = boundary_adjacent_points(mean.domain());

  MeanPropertyReport report;
  for (std::size_t i = 0; i < n_samples; ++i) {
    std::vector<double> x = draw_sample(mean, sampler, box, boundary, i);
    const double value = mean(x);
    const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
    ++report.samples_checked;
    if (!(value >= *lo_it)) {
      report.violations.push_back({MeanViolationKind::kBelowMin, x, value});
    } else if (!(value <= *hi_it)) {
      report.violations.push_back({MeanViolationKind::kAboveMax, x, value});
    } else if (mean.flags().strict && *lo_it < *hi_it && (value == *lo_it || value == *hi_it)) {
      report.violations.push_back({MeanViolationKind::kNotStrict, x, value});
    }
  }
  return report;
}

}  // namespace invmean
