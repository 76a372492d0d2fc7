#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invmean/averaging.hpp"
#include "invmean/sampling.hpp"

namespace invmean {

/// Stopping rule for the invariant-mean iteration. The absolute tolerance is
/// tol * max(1, |max(x0)|).
struct IterationOptions {
  double tol = 1e-12;
  std::size_t max_iter = 10000;
};

/// Effective absolute tolerance for a starting point.
double scaled_tolerance(double tol, std::span<const double> x0);

struct ConvergenceReport {
  /// Midpoint of the final [min, max] bracket; absent without convergence.
  std::optional<double> value;
  /// Half the final oscillation. The limit lies within this radius of value.
  double error_radius = 0.0;
  std::size_t iterations_used = 0;
  bool converged = false;
  Point final_iterate;
};

/// Iterates M until oscillation(M^n(x)) < 2 * tolerance or max_iter steps.
/// Non-convergence is reported, not thrown.
ConvergenceReport invariant_mean_eval(const ComposedMapping& m, std::span<const double> x,
                                      const IterationOptions& options = {});

/// (K(x), ..., K(x)), or nullopt when the iteration does not converge.
std::optional<Point> limit_mapping_eval(const ComposedMapping& m, std::span<const double> x,
                                        const IterationOptions& options = {});

struct ResidueLimit {
  std::size_t residue = 0;
  Point point;
  bool converged = false;
};

struct SubsequenceLimits {
  std::size_t modulus = 1;
  std::vector<ResidueLimit> limits;
  /// max_r ||M(limits[r]) - limits[(r+1) mod m]||_inf over converged pairs.
  double cyclic_residual = 0.0;
  std::size_t iterations_used = 0;

  bool all_converged() const noexcept;
};

/// Limits of the subsequences M^{r + k*modulus}(x) for each residue r. A
/// residue converges once consecutive same-residue iterates differ by less
/// than the scaled tolerance in the sup norm.
SubsequenceLimits subsequence_limits(const ComposedMapping& m, std::span<const double> x, std::size_t modulus,
                                     const IterationOptions& options = {});

struct PropertyViolation {
  Point point;
  std::string detail;
};

/// Outcome of one sampled property check. Violations are data.
struct PropertyReport {
  std::string property;
  std::size_t checked = 0;
  /// Samples whose invariant mean did not converge.
  std::size_t skipped = 0;
  double max_residual = 0.0;
  std::vector<PropertyViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Random points drawn from the mapping's default sample box. Deterministic
/// for a given sampler state.
std::vector<Point> sample_points(const ComposedMapping& m, Sampler& sampler, std::size_t n_samples);

/// |K(M(x)) - K(x)| <= tol * max(1, |max x|) on sampled x.
PropertyReport verify_invariance(const ComposedMapping& m, double tol, Sampler& sampler, std::size_t n_samples,
                                 const IterationOptions& options = {});

enum class MeanProperty { kStrict, kMonotone, kHomogeneous };

const char* to_string(MeanProperty property);

struct MeanPropertyOptions {
  /// Coordinatewise step used by the monotonicity check.
  double monotone_step = 0.1;
  std::vector<double> homogeneity_factors{0.5, 2.0, 10.0};
  /// Relative tolerance for K(cx) = c K(x).
  double homogeneity_tol = 1e-10;
  IterationOptions iteration;
};

/// Sampled falsification of strictness, monotonicity or positive homogeneity
/// of K. The strictness sweep also tries one-off vectors (a, .., b, .., a) for
/// each variable so that a K ignoring a variable is reported by name.
PropertyReport verify_mean_properties(const ComposedMapping& m, MeanProperty which, Sampler& sampler,
                                      std::size_t n_samples, const MeanPropertyOptions& options = {});

using PointFunction = std::function<double(std::span<const double>)>;

struct InvariantEquationReport {
  bool invariant = false;
  /// max |F(x) - phi(K(x))| over evaluated samples.
  double max_residual = 0.0;
  /// max |F(M(x)) - F(x)| over evaluated samples.
  double max_step_residual = 0.0;
  std::size_t checked = 0;
  /// Samples skipped because K did not converge.
  std::size_t skipped = 0;
  std::optional<PropertyViolation> witness;
};

struct InvariantEquationSolution {
  /// phi(t) = F(t, ..., t).
  std::function<double(double)> phi;
  InvariantEquationReport report;
};

/// Solves F o M = F in the form F = phi o K with phi the restriction of F to
/// the diagonal, and tests the identity on sampled points with tolerance
/// tol * max(1, |F(x)|).
InvariantEquationSolution solve_invariant_equation(PointFunction f, const ComposedMapping& m, double tol,
                                                   Sampler& sampler, std::size_t n_samples = 100,
                                                   const IterationOptions& options = {});

}  // namespace invmean
