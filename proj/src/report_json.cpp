#include "invmean/report_json.hpp"

namespace invmean {

using ojson = nlohmann::ordered_json;

namespace {

template <typename T>
ojson optional_to_json(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson coloring_to_json(const TriStateColoring& c) { return ojson(c.values()); }

}  // namespace

ojson point_to_json(std::span<const double> x) { return ojson(std::vector<double>(x.begin(), x.end())); }

ojson edges_to_json(const Digraph& g) {
  ojson edges = ojson::array();
  for (const auto& [from, to] : g.edges()) edges.push_back({from + 1, to + 1});
  return edges;
}

ojson to_json(const GraphClassification& c) {
  return {{"irreducible", c.irreducible},
          {"period", optional_to_json(c.period)},
          {"aperiodic", c.aperiodic},
          {"ergodic", c.ergodic},
          {"uniform_walk_length", optional_to_json(c.uniform_walk_length)}};
}

ojson to_json(const ContractivityCertificate& c) {
  ojson out{{"class", to_string(c.cls)}, {"n0", optional_to_json(c.n0)}, {"evidence", c.evidence}};
  if (c.witness) {
    out["witness"] = point_to_json(*c.witness);
    out["witness_is_fixed_point"] = c.witness_is_fixed_point;
  }
  return out;
}

ojson to_json(const ConvergenceReport& r) {
  return {{"value", optional_to_json(r.value)},
          {"error_radius", r.error_radius},
          {"iterations_used", r.iterations_used},
          {"converged", r.converged},
          {"final_iterate", point_to_json(r.final_iterate)}};
}

ojson to_json(const SubsequenceLimits& s) {
  ojson limits = ojson::array();
  for (const auto& l : s.limits) {
    limits.push_back({{"residue", l.residue}, {"converged", l.converged}, {"point", point_to_json(l.point)}});
  }
  return {{"modulus", s.modulus},
          {"limits", limits},
          {"cyclic_residual", s.cyclic_residual},
          {"iterations_used", s.iterations_used}};
}

ojson to_json(const TgStabilization& t) {
  ojson trace = ojson::array();
  for (const auto& c : t.trace) trace.push_back(coloring_to_json(c));
  return {{"max_steps", t.max_steps},
          {"trace", trace},
          {"steps_to_constant", optional_to_json(t.steps_to_constant)},
          {"constant_value", optional_to_json(t.constant_value)},
          {"cycle_length", optional_to_json(t.cycle_length)},
          {"final", coloring_to_json(t.final_coloring)}};
}

ojson to_json(const PropertyReport& r) {
  ojson violations = ojson::array();
  for (const auto& v : r.violations) violations.push_back({{"point", point_to_json(v.point)}, {"detail", v.detail}});
  return {{"property", r.property},
          {"passed", r.passed()},
          {"checked", r.checked},
          {"skipped", r.skipped},
          {"max_residual", r.max_residual},
          {"violations", violations}};
}

ojson to_json(const InvariantEquationReport& r) {
  ojson out{{"invariant", r.invariant},
            {"max_residual", r.max_residual},
            {"max_step_residual", r.max_step_residual},
            {"checked", r.checked},
            {"skipped", r.skipped}};
  out["witness"] = r.witness ? ojson{{"point", point_to_json(r.witness->point)}, {"detail", r.witness->detail}}
                             : ojson(nullptr);
  return out;
}

}  // namespace invmean
