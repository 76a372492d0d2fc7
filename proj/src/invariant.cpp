#include "invmean/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "invmean/errors.hpp"

namespace invmean {

namespace {

void check_options(const IterationOptions& options) {
  if (!(options.tol > 0.0)) throw PreconditionError("tolerance must be positive");
  if (options.max_iter == 0) throw PreconditionError("max_iter must be at least 1");
}

double sup_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::string format_point(std::span<const double> x) {
  std::ostringstream os;
  os.precision(12);
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ')';
  return os.str();
}

}  // namespace

double scaled_tolerance(double tol, std::span<const double> x0) {
  const double hi = x0.empty() ? 0.0 : *std::max_element(x0.begin(), x0.end());
  return tol * std::max(1.0, std::abs(hi));
}

ConvergenceReport invariant_mean_eval(const ComposedMapping& m, std::span<const double> x,
                                      const IterationOptions& options) {
  check_options(options);
  m.check_point(x);
  const double tolerance = scaled_tolerance(options.tol, x);

  ConvergenceReport report;
  Point current(x.begin(), x.end());
  Point next(m.p());
  std::size_t n = 0;
  while (true) {
    const auto [lo, hi] = std::minmax_element(current.begin(), current.end());
    const double osc = *hi - *lo;
    report.error_radius = osc / 2.0;
    if (osc < 2.0 * tolerance) {
      report.converged = true;
      report.value = *lo + (*hi - *lo) / 2.0;
      break;
    }
    if (n == options.max_iter) break;
    m.apply_unchecked(current, next);
    current.swap(next);
    ++n;
  }
  report.iterations_used = n;
  report.final_iterate = std::move(current);
  return report;
}

std::optional<Point> limit_mapping_eval(const ComposedMapping& m, std::span<const double> x,
                                        const IterationOptions& options) {
  const ConvergenceReport report = invariant_mean_eval(m, x, options);
  if (!report.converged) return std::nullopt;
  return Point(m.p(), *report.value);
}

bool SubsequenceLimits::all_converged() const noexcept {
  return std::all_of(limits.begin(), limits.end(), [](const ResidueLimit& r) { return r.converged; });
}

SubsequenceLimits subsequence_limits(const ComposedMapping& m, std::span<const double> x, std::size_t modulus,
                                     const IterationOptions& options) {
  check_options(options);
  if (modulus == 0) throw PreconditionError("modulus must be at least 1");
  m.check_point(x);
  const double tolerance = scaled_tolerance(options.tol, x);

  SubsequenceLimits result;
  result.modulus = modulus;
  result.limits.resize(modulus);
  std::vector<bool> seen(modulus, false);
  std::vector<double> last_step(modulus, std::numeric_limits<double>::infinity());

  Point current(x.begin(), x.end());
  Point next(m.p());
  std::size_t n = 0;
  while (true) {
    const std::size_t r = n % modulus;
    auto& slot = result.limits[r];
    if (seen[r]) last_step[r] = sup_distance(current, slot.point);
    slot.residue = r;
    slot.point = current;
    seen[r] = true;

    const bool done = std::all_of(last_step.begin(), last_step.end(), [&](double d) { return d < tolerance; });
    if (done || n == options.max_iter) break;
    m.apply_unchecked(current, next);
    current.swap(next);
    ++n;
  }
  result.iterations_used = n;
  for (std::size_t r = 0; r < modulus; ++r) result.limits[r].converged = last_step[r] < tolerance;

  for (std::size_t r = 0; r < modulus; ++r) {
    const auto& from = result.limits[r];
    const auto& to = result.limits[(r + 1) % modulus];
    if (!from.converged || !to.converged) continue;
    Point image(m.p());
    m.apply_unchecked(from.point, image);
    result.cyclic_residual = std::max(result.cyclic_residual, sup_distance(image, to.point));
  }
  return result;
}

std::vector<Point> sample_points(const ComposedMapping& m, Sampler& sampler, std::size_t n_samples) {
  const SampleBox box = default_sample_box(m.interval());
  std::vector<Point> out;
  out.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) out.push_back(sampler.uniform_point(box, m.p()));
  return out;
}

PropertyReport verify_invariance(const ComposedMapping& m, double tol, Sampler& sampler, std::size_t n_samples,
                                 const IterationOptions& options) {
  PropertyReport report;
  report.property = "invariance";
  for (const Point& x : sample_points(m, sampler, n_samples)) {
    const ConvergenceReport kx = invariant_mean_eval(m, x, options);
    const ConvergenceReport kmx = invariant_mean_eval(m, invmean::apply(m, x), options);
    if (!kx.converged || !kmx.converged) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const double residual = std::abs(*kmx.value - *kx.value);
    report.max_residual = std::max(report.max_residual, residual);
    if (residual > tol * std::max(1.0, std::abs(*std::max_element(x.begin(), x.end())))) {
      std::ostringstream os;
      os.precision(17);
      os << "|K(M(x)) - K(x)| = " << residual;
      report.violations.push_back({x, os.str()});
    }
  }
  return report;
}

const char* to_string(MeanProperty property) {
  switch (property) {
    case MeanProperty::kStrict:
      return "strict";
    case MeanProperty::kMonotone:
      return "monotone";
    case MeanProperty::kHomogeneous:
      return "homogeneous";
  }
  return "unknown";
}

namespace {

void require_flags(const ComposedMapping& m, MeanProperty which) {
  for (std::size_t i = 0; i < m.p(); ++i) {
    const MeanFlags& flags = m.base().mean(i).flags();
    const bool ok = which == MeanProperty::kStrict     ? flags.strict
                    : which == MeanProperty::kMonotone ? flags.monotone
                                                       : flags.homogeneous;
    if (!ok) {
      throw PreconditionError(std::string("mean ") + std::to_string(i + 1) + " does not declare the " +
                              to_string(which) + " property");
    }
  }
  if (which == MeanProperty::kHomogeneous && !(m.interval() == Interval::positive_reals())) {
    throw PreconditionError("homogeneity is only defined on (0, +inf)");
  }
}

void check_strict(const ComposedMapping& m, Sampler& sampler, std::size_t n_samples,
                  const MeanPropertyOptions& options, PropertyReport& report) {
  const SampleBox box = default_sample_box(m.interval());
  std::vector<Point> candidates;
  std::vector<std::optional<std::size_t>> singled_out;
  if (m.p() > 1) {
    for (std::size_t k = 0; k < m.p(); ++k) {
      for (const auto& [base, odd] : {std::pair{box.lo, box.hi}, std::pair{box.hi, box.lo}}) {
        Point x(m.p(), base);
        x[k] = odd;
        candidates.push_back(std::move(x));
        singled_out.emplace_back(k);
      }
    }
  }
  for (Point& x : sample_points(m, sampler, n_samples)) {
    candidates.push_back(std::move(x));
    singled_out.emplace_back(std::nullopt);
  }

  std::vector<bool> variable_reported(m.p(), false);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const Point& x = candidates[c];
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*lo == *hi) continue;
    const ConvergenceReport k = invariant_mean_eval(m, x, options.iteration);
    if (!k.converged) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    // Strict means the certified enclosure [value - r, value + r] clears both ends.
    const double below = *k.value - k.error_radius;
    const double above = *k.value + k.error_radius;
    if (below > *lo && above < *hi) continue;

    std::ostringstream os;
    os.precision(17);
    os << "K" << format_point(x) << " = " << *k.value << " +/- " << k.error_radius << " reaches "
       << (below <= *lo ? "min" : "max") << "(x)";
    if (const auto var = singled_out[c]) {
      if (variable_reported[*var]) continue;
      variable_reported[*var] = true;
      os << "; K does not depend on variable " << *var + 1;
    }
    report.violations.push_back({x, os.str()});
  }
}

void check_monotone(const ComposedMapping& m, Sampler& sampler, std::size_t n_samples,
                    const MeanPropertyOptions& options, PropertyReport& report) {
  for (const Point& x : sample_points(m, sampler, n_samples)) {
    const ConvergenceReport kx = invariant_mean_eval(m, x, options.iteration);
    if (!kx.converged) {
      ++report.skipped;
      continue;
    }
    for (std::size_t k = 0; k < m.p(); ++k) {
      Point y = x;
      y[k] += options.monotone_step;
      if (!m.interval().contains(y[k])) continue;
      const ConvergenceReport ky = invariant_mean_eval(m, y, options.iteration);
      if (!ky.converged) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      const double drop = *kx.value - *ky.value;
      report.max_residual = std::max(report.max_residual, std::max(0.0, drop));
      if (drop > kx.error_radius + ky.error_radius) {
        std::ostringstream os;
        os.precision(17);
        os << "raising variable " << k + 1 << " by " << options.monotone_step << " lowers K by " << drop;
        report.violations.push_back({x, os.str()});
      }
    }
  }
}

void check_homogeneous(const ComposedMapping& m, Sampler& sampler, std::size_t n_samples,
                       const MeanPropertyOptions& options, PropertyReport& report) {
  for (const Point& x : sample_points(m, sampler, n_samples)) {
    const ConvergenceReport kx = invariant_mean_eval(m, x, options.iteration);
    if (!kx.converged) {
      ++report.skipped;
      continue;
    }
    for (double c : options.homogeneity_factors) {
      Point cx = x;
      for (double& v : cx) v *= c;
      const ConvergenceReport kcx = invariant_mean_eval(m, cx, options.iteration);
      if (!kcx.converged) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      const double expected = c * *kx.value;
      const double relative = std::abs(*kcx.value - expected) / std::abs(expected);
      report.max_residual = std::max(report.max_residual, relative);
      if (relative > options.homogeneity_tol) {
        std::ostringstream os;
        os.precision(17);
        os << "K(" << c << " x) differs from " << c << " K(x) by relative " << relative;
        report.violations.push_back({x, os.str()});
      }
    }
  }
}

}  // namespace

PropertyReport verify_mean_properties(const ComposedMapping& m, MeanProperty which, Sampler& sampler,
                                      std::size_t n_samples, const MeanPropertyOptions& options) {
  require_flags(m, which);
  PropertyReport report;
  report.property = to_string(which);
  switch (which) {
    case MeanProperty::kStrict:
      check_strict(m, sampler, n_samples, options, report);
      break;
    case MeanProperty::kMonotone:
      check_monotone(m, sampler, n_samples, options, report);
      break;
    case MeanProperty::kHomogeneous:
      check_homogeneous(m, sampler, n_samples, options, report);
      break;
  }
  return report;
}

InvariantEquationSolution solve_invariant_equation(PointFunction f, const ComposedMapping& m, double tol,
                                                   Sampler& sampler, std::size_t n_samples,
                                                   const IterationOptions& options) {
  if (certify_uniform_weak_contractivity(m).cls != ContractivityClass::kUniformlyWeakCertified) {
    throw PreconditionError("the invariant equation is solved only for certified mappings");
  }
  if (!f) throw PreconditionError("no function given");
  const std::size_t p = m.p();
  InvariantEquationSolution solution;
  solution.phi = [f, p](double t) {
    const Point diagonal(p, t);
    return f(diagonal);
  };

  InvariantEquationReport& report = solution.report;
  for (const Point& x : sample_points(m, sampler, n_samples)) {
    const ConvergenceReport k = invariant_mean_eval(m, x, options);
    if (!k.converged) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const double fx = f(x);
    const double phi_k = solution.phi(*k.value);
    const double fmx = f(invmean::apply(m, x));
    const double residual = std::abs(fx - phi_k);
    report.max_residual = std::max(report.max_residual, residual);
    report.max_step_residual = std::max(report.max_step_residual, std::abs(fmx - fx));
    if (!report.witness && residual > tol * std::max(1.0, std::abs(fx))) {
      std::ostringstream os;
      os.precision(17);
      os << "F(x) = " << fx << " but phi(K(x)) = " << phi_k << " and F(M(x)) = " << fmx;
      report.witness = PropertyViolation{x, os.str()};
    }
  }
  report.invariant = report.checked > 0 && !report.witness;
  return solution;
}

}  // namespace invmean
