#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invmean/interval.hpp"
#include "invmean/sampling.hpp"

namespace invmean {

/// Structural properties a mean declares about itself. They are trusted by the
/// certification logic once check_mean_property has failed to falsify them.
struct MeanFlags {
  bool strict = false;
  bool monotone = false;
  bool homogeneous = false;
  bool symmetric = false;

  friend bool operator==(const MeanFlags&, const MeanFlags&) = default;
};

/// An n-variable mean on an interval: min(x) <= M(x) <= max(x).
class Mean {
 public:
  using Evaluator = std::function<double(std::span<const double>)>;

  Mean(std::size_t arity, Interval domain, Evaluator evaluator, MeanFlags flags, std::string label,
       std::optional<double> power_order = std::nullopt);

  std::size_t arity() const noexcept { return arity_; }
  const Interval& domain() const noexcept { return domain_; }
  const MeanFlags& flags() const noexcept { return flags_; }
  const std::string& label() const noexcept { return label_; }

  /// Set for power means; used when a mapping is written back to a spec file.
  std::optional<double> power_order() const noexcept { return power_order_; }

  /// Evaluates after checking the arity. Domain checks belong to the evaluator.
  double operator()(std::span<const double> x) const;

 private:
  std::size_t arity_;
  Interval domain_;
  Evaluator evaluator_;
  MeanFlags flags_;
  std::string label_;
  std::optional<double> power_order_;
};

struct PowerMeanSpec {
  double order = 1.0;
  std::size_t arity = 1;
};

/// P_s(x) = ((x_1^s + ... + x_n^s) / n)^(1/s), and the geometric mean for s = 0.
/// Arguments must be strictly positive. The result is clamped into [min x, max x].
double power_mean_eval(const PowerMeanSpec& spec, std::span<const double> x);

/// Wraps power_mean_eval as a strict, monotone, homogeneous, symmetric mean on (0, +inf).
Mean make_power_mean(const PowerMeanSpec& spec);
/// Same mean restricted to a subinterval of (0, +inf).
Mean make_power_mean(const PowerMeanSpec& spec, const Interval& domain);

/// Human label for a power order, e.g. "P_-1 (harmonic)".
std::string power_mean_label(double order);

enum class MeanViolationKind { kBelowMin, kAboveMax, kNotStrict };

struct MeanViolation {
  MeanViolationKind kind;
  std::vector<double> point;
  double value;
};

struct MeanPropertyReport {
  std::size_t samples_checked = 0;
  std::vector<MeanViolation> violations;

  bool falsified() const noexcept { return !violations.empty(); }
};

/// Samples the mean inside its default sample box (plus boundary-adjacent
/// points for bounded domains) and records every violation of the mean
/// property, and of strictness when the strict flag is declared.
MeanPropertyReport check_mean_property(const Mean& mean, Sampler& sampler, std::size_t n_samples);

}  // namespace invmean
