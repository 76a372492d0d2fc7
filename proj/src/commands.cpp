#include "invmean/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "invmean/averaging.hpp"
#include "invmean/digraph.hpp"
#include "invmean/errors.hpp"
#include "invmean/invariant.hpp"
#include "invmean/report_json.hpp"

namespace invmean::cli {

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kHumanDigits = 12;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(kHumanDigits) << v;
  return os.str();
}

std::string point(std::span<const double> x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ", " : "") + num(x[i]);
  return out + ")";
}

std::string coloring(const TriStateColoring& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + std::to_string(c[i]);
  return out + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit_json(std::ostream& out, const ojson& doc) { out << doc.dump(2) << '\n'; }

std::string mapping_title(const ParsedSpec& spec) {
  return spec.file.name.value_or("mapping") + " (p = " + std::to_string(spec.file.p) + ") on " +
         spec.file.interval.to_string();
}

std::uint64_t default_probe_length(const ComposedMapping& m, const ContractivityCertificate& cert) {
  if (cert.n0) return *cert.n0;
  return std::min<std::uint64_t>(pow3_saturated(m.p()), 10000);
}

}  // namespace

int cmd_analyze(const ParsedSpec& spec, bool json, std::ostream& out) {
  const ComposedMapping m = spec.mapping();
  const GraphClassification cls = is_ergodic(m.graph());
  const ContractivityCertificate cert = certify_uniform_weak_contractivity(m);

  if (json) {
    ojson doc;
    if (spec.file.name) doc["name"] = *spec.file.name;
    doc["p"] = m.p();
    doc["graph"] = {{"vertices", m.p()}, {"edges", edges_to_json(m.graph())}};
    const ojson classification = to_json(cls);
    for (auto& [key, value] : classification.items()) doc[key] = value;
    doc["certificate"] = to_json(cert);
    emit_json(out, doc);
    return kSuccess;
  }

  out << "mapping: " << mapping_title(spec) << '\n';
  for (std::size_t i = 0; i < m.p(); ++i) {
    out << "  coordinate " << i + 1 << ": " << m.base().mean(i).label() << " of (";
    const auto& row = m.alpha().row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << 'x' << row[j] + 1;
    out << ")\n";
  }
  out << "incidence graph edges:";
  for (const auto& [from, to] : m.graph().edges()) out << ' ' << from + 1 << "->" << to + 1;
  out << '\n';
  out << "irreducible: " << yes_no(cls.irreducible) << '\n';
  out << "period: " << (cls.period ? std::to_string(*cls.period) : "none (acyclic)") << '\n';
  out << "aperiodic: " << yes_no(cls.aperiodic) << '\n';
  out << "ergodic: " << yes_no(cls.ergodic) << '\n';
  if (cls.uniform_walk_length) out << "uniform walk length q0: " << *cls.uniform_walk_length << '\n';
  out << "certificate: " << to_string(cert.cls);
  if (cert.n0) out << " (n0 = " << *cert.n0 << ')';
  out << '\n' << "evidence: " << cert.evidence << '\n';
  return kSuccess;
}

int cmd_iterate(const ParsedSpec& spec, const std::vector<double>& x, const IterateOptions& options,
                std::ostream& out) {
  const ComposedMapping m = spec.mapping();
  const std::vector<Point> trace = iterate(m, x, options.steps);
  std::vector<std::size_t> rows;
  if (options.trace) {
    for (std::size_t k = 0; k < trace.size(); ++k) rows.push_back(k);
  } else {
    rows.push_back(0);
    if (trace.size() > 1) rows.push_back(trace.size() - 1);
  }

  if (options.json) {
    ojson doc;
    doc["steps"] = options.steps;
    doc["trace"] = ojson::array();
    for (std::size_t k : rows) {
      doc["trace"].push_back({{"n", k}, {"point", point_to_json(trace[k])}, {"oscillation", oscillation(trace[k])}});
    }
    emit_json(out, doc);
    return kSuccess;
  }

  out << std::left << std::setw(8) << "n";
  for (std::size_t i = 0; i < m.p(); ++i) out << std::setw(20) << ("x" + std::to_string(i + 1));
  out << "oscillation\n";
  for (std::size_t k : rows) {
    out << std::setw(8) << k;
    for (double v : trace[k]) out << std::setw(20) << num(v);
    out << num(oscillation(trace[k])) << '\n';
  }
  return kSuccess;
}

int cmd_invariant(const ParsedSpec& spec, const std::vector<double>& x, const InvariantOptions& options,
                  std::ostream& out) {
  const ComposedMapping m = spec.mapping();
  const IterationOptions iteration{options.tol, options.max_iter};

  if (options.modulus > 1) {
    const SubsequenceLimits limits = subsequence_limits(m, x, options.modulus, iteration);
    if (options.json) {
      emit_json(out, to_json(limits));
    } else {
      out << "subsequence limits, modulus " << limits.modulus << " (" << limits.iterations_used
          << " iterations)\n";
      for (const auto& l : limits.limits) {
        out << "  n = " << l.residue << " mod " << limits.modulus << ": " << point(l.point)
            << (l.converged ? "" : "  [not converged]") << '\n';
      }
      out << "cyclic residual: " << num(limits.cyclic_residual) << '\n';
    }
    return limits.all_converged() ? kSuccess : kFalsified;
  }

  const ConvergenceReport report = invariant_mean_eval(m, x, iteration);
  if (options.json) {
    emit_json(out, to_json(report));
  } else if (report.converged) {
    out << "K(x) = " << num(*report.value) << " +/- " << num(report.error_radius) << '\n';
    out << "iterations: " << report.iterations_used << '\n';
    out << "final iterate: " << point(report.final_iterate) << '\n';
  } else {
    out << "no common limit after " << report.iterations_used << " iterations\n";
    out << "final oscillation: " << num(2.0 * report.error_radius) << '\n';
    out << "final iterate: " << point(report.final_iterate) << '\n';
    out << "hint: the incidence graph may be periodic or reducible; try --modulus\n";
  }
  return report.converged ? kSuccess : kFalsified;
}

int cmd_tg(const ParsedSpec& spec, const std::vector<int>& c0, const TgOptions& options, std::ostream& out) {
  const ComposedMapping m = spec.mapping();
  if (c0.size() != m.p()) {
    throw ShapeError("coloring has " + std::to_string(c0.size()) + " entries, mapping has p = " +
                     std::to_string(m.p()));
  }
  const TgStabilization result = tg_stabilize(m.graph(), TriStateColoring(c0), options.max_steps);

  if (options.json) {
    emit_json(out, to_json(result));
  } else {
    for (std::size_t k = 0; k < result.trace.size(); ++k) {
      out << "step " << k << ": " << coloring(result.trace[k]) << '\n';
    }
    if (result.steps_to_constant) {
      out << "constant from step " << *result.steps_to_constant << ", value " << *result.constant_value
          << " (cap " << result.max_steps << ")\n";
    } else {
      out << "never constant within " << result.max_steps << " steps";
      if (result.cycle_length) out << " (colorings cycle with period " << *result.cycle_length << ')';
      out << "\nfinal: " << coloring(result.final_coloring) << '\n';
    }
  }
  return result.steps_to_constant ? kSuccess : kFalsified;
}

namespace {

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | skipped
  std::string summary;
  ojson detail = ojson::object();
};

CheckResult check_component_means(const ComposedMapping& m, Sampler& sampler, std::size_t samples) {
  CheckResult check{"mean_property", "pass", "", ojson::array()};
  std::size_t total = 0;
  for (std::size_t i = 0; i < m.p(); ++i) {
    const MeanPropertyReport report = check_mean_property(m.base().mean(i), sampler, samples);
    total += report.samples_checked;
    ojson entry{{"mean", i + 1}, {"label", m.base().mean(i).label()}, {"violations", report.violations.size()}};
    if (report.falsified()) {
      check.status = "fail";
      entry["witness"] = point_to_json(report.violations.front().point);
    }
    check.detail.push_back(entry);
  }
  check.summary = std::to_string(m.p()) + " means, " + std::to_string(total) + " samples" +
                  (check.status == "pass" ? ", no violations" : ", violations found");
  return check;
}

CheckResult check_mapping_mean_type(const ComposedMapping& m, Sampler& sampler, std::size_t samples) {
  CheckResult check{"mapping_mean_type", "pass", ""};
  for (const Point& x : sample_points(m, sampler, samples)) {
    const Point y = invmean::apply(m, x);
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    for (double v : y) {
      if (v < *lo || v > *hi) {
        check.status = "fail";
        check.detail["witness"] = point_to_json(x);
      }
    }
    if (check.status == "fail") break;
  }
  check.summary = check.status == "pass" ? "every coordinate of M(x) lies in [min x, max x]"
                                         : "M(x) leaves [min x, max x]";
  return check;
}

CheckResult check_oscillation_monotone(const ComposedMapping& m, Sampler& sampler, std::size_t samples) {
  constexpr std::size_t kSteps = 50;
  CheckResult check{"oscillation_monotone", "pass", ""};
  for (const Point& x : sample_points(m, sampler, samples)) {
    const auto trace = iterate(m, x, kSteps);
    for (std::size_t k = 1; k < trace.size(); ++k) {
      const double prev_lo = *std::min_element(trace[k - 1].begin(), trace[k - 1].end());
      const double prev_hi = *std::max_element(trace[k - 1].begin(), trace[k - 1].end());
      const double lo = *std::min_element(trace[k].begin(), trace[k].end());
      const double hi = *std::max_element(trace[k].begin(), trace[k].end());
      if (lo < prev_lo || hi > prev_hi) {
        check.status = "fail";
        check.detail = {{"witness", point_to_json(x)}, {"step", k}};
        break;
      }
    }
    if (check.status == "fail") break;
  }
  check.summary = check.status == "pass" ? "min(M^n x) nondecreasing and max(M^n x) nonincreasing for n <= 50"
                                         : "bracket widened along the iteration";
  return check;
}

CheckResult check_dichotomy(const ComposedMapping& m, std::uint64_t n0, Sampler& sampler, std::size_t samples) {
  CheckResult check{"oscillation_dichotomy", "pass", ""};
  if (n0 > 1000000) {
    check.status = "skipped";
    check.summary = "3^p iterations too many to sample";
    return check;
  }
  std::size_t constant = 0;
  for (const Point& x : sample_points(m, sampler, samples)) {
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*lo == *hi) continue;
    const Point y = iterate_to(m, x, static_cast<std::size_t>(n0));
    if (is_numerically_constant(y)) {
      ++constant;
      continue;
    }
    const auto [ylo, yhi] = std::minmax_element(y.begin(), y.end());
    if (!(*lo < *ylo && *yhi < *hi)) {
      check.status = "fail";
      check.detail = {{"witness", point_to_json(x)}, {"image", point_to_json(y)}};
      break;
    }
  }
  check.summary = check.status == "pass"
                      ? "M^(3^p)(x) is constant or strictly inside (min x, max x) (" + std::to_string(constant) +
                            " constant)"
                      : "M^(3^p)(x) touches the bracket of a nonconstant x";
  return check;
}

CheckResult from_property(const PropertyReport& report) {
  CheckResult check{report.property, report.passed() ? "pass" : "fail", "", to_json(report)};
  if (report.checked == 0) {
    check.status = "skipped";
    check.summary = "invariant mean did not converge on any sample";
  } else if (report.passed()) {
    check.summary = std::to_string(report.checked) + " checks, max residual " + num(report.max_residual);
  } else {
    check.summary = std::to_string(report.violations.size()) + " violation(s): " + report.violations.front().detail;
  }
  return check;
}

bool all_flags(const ComposedMapping& m, bool MeanFlags::*flag) {
  return std::all_of(m.base().means().begin(), m.base().means().end(),
                     [&](const Mean& mean) { return mean.flags().*flag; });
}

}  // namespace

int cmd_verify(const ParsedSpec& spec, const VerifyOptions& options, std::ostream& out) {
  const ComposedMapping m = spec.mapping();
  Sampler sampler(options.seed);
  const std::size_t samples = std::max<std::size_t>(options.samples, 1);
  const ContractivityCertificate cert = certify_uniform_weak_contractivity(m);
  const bool certified = cert.cls == ContractivityClass::kUniformlyWeakCertified;

  std::vector<CheckResult> checks;
  checks.push_back(check_component_means(m, sampler, samples));
  checks.push_back(check_mapping_mean_type(m, sampler, samples));
  checks.push_back(check_oscillation_monotone(m, sampler, samples));

  const std::uint64_t n0 = default_probe_length(m, cert);
  {
    FalsifyOptions probe;
    probe.n_samples = samples;
    const ContractivityCertificate found = falsify_contractivity(m, static_cast<std::size_t>(n0), sampler, probe);
    CheckResult check{"contractivity_probe", found.cls == ContractivityClass::kFalsified ? "fail" : "pass",
                      found.evidence, to_json(found)};
    if (found.witness) {
      check.summary = "witness " + point(*found.witness) +
                      (found.witness_is_fixed_point ? " is a nonconstant fixed point" : "") + ": " + found.evidence;
    }
    checks.push_back(std::move(check));
  }

  if (certified) {
    checks.push_back(check_dichotomy(m, n0, sampler, samples));
    IterationOptions iteration;
    checks.push_back(from_property(verify_invariance(m, options.tol, sampler, samples, iteration)));
  } else {
    checks.push_back({"oscillation_dichotomy", "skipped", "not certified: " + cert.evidence});
    checks.push_back({"invariance", "skipped", "not certified: " + cert.evidence});
  }

  // Without certification K need not exist; probe once before the sweeps.
  bool k_exists = certified;
  if (!certified) {
    Sampler probe_sampler(options.seed ^ 0x9e3779b97f4a7c15ULL);
    const Point probe = sample_points(m, probe_sampler, 1).front();
    k_exists = invariant_mean_eval(m, probe).converged;
  }
  const struct {
    MeanProperty which;
    bool MeanFlags::*flag;
  } properties[] = {{MeanProperty::kStrict, &MeanFlags::strict},
                    {MeanProperty::kMonotone, &MeanFlags::monotone},
                    {MeanProperty::kHomogeneous, &MeanFlags::homogeneous}};
  for (const auto& [which, flag] : properties) {
    const std::string name = to_string(which);
    if (!all_flags(m, flag)) {
      checks.push_back({name, "skipped", "not every mean declares " + name});
    } else if (which == MeanProperty::kHomogeneous && !(m.interval() == Interval::positive_reals())) {
      checks.push_back({name, "skipped", "interval is not (0, +inf)"});
    } else if (!k_exists) {
      checks.push_back({name, "skipped", "iterates have no common limit (no invariant mean to test)"});
    } else {
      checks.push_back(from_property(verify_mean_properties(m, which, sampler, samples)));
    }
  }

  const bool falsified =
      std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == "fail"; });

  if (options.json) {
    ojson doc;
    if (spec.file.name) doc["name"] = *spec.file.name;
    doc["seed"] = options.seed;
    doc["samples"] = samples;
    doc["certificate"] = to_json(cert);
    doc["checks"] = ojson::array();
    for (const auto& c : checks) {
      doc["checks"].push_back({{"check", c.name}, {"status", c.status}, {"summary", c.summary}, {"detail", c.detail}});
    }
    doc["falsified"] = falsified;
    emit_json(out, doc);
  } else {
    out << "verify: " << mapping_title(spec) << ", seed " << options.seed << ", " << samples << " samples\n";
    out << "certificate: " << to_string(cert.cls);
    if (cert.n0) out << " (n0 = " << *cert.n0 << ')';
    out << '\n';
    for (const auto& c : checks) out << '[' << c.status << "] " << c.name << ": " << c.summary << '\n';
    out << (falsified ? "result: falsified\n" : "result: nothing falsified\n");
  }
  return falsified ? kFalsified : kSuccess;
}

}  // namespace invmean::cli
