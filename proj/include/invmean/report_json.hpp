#pragma once

#include <span>

#include <json.hpp>

#include "invmean/averaging.hpp"
#include "invmean/digraph.hpp"
#include "invmean/invariant.hpp"

namespace invmean {

/// JSON forms of the engine's reports. Vertices are 1-based; edges are
/// [from, to] pairs; absent optionals become null.
nlohmann::ordered_json edges_to_json(const Digraph& g);
nlohmann::ordered_json to_json(const GraphClassification& c);
nlohmann::ordered_json to_json(const ContractivityCertificate& c);
nlohmann::ordered_json to_json(const ConvergenceReport& r);
nlohmann::ordered_json to_json(const SubsequenceLimits& s);
nlohmann::ordered_json to_json(const TgStabilization& t);
nlohmann::ordered_json to_json(const PropertyReport& r);
nlohmann::ordered_json to_json(const InvariantEquationReport& r);
nlohmann::ordered_json point_to_json(std::span<const double> x);

}  // namespace invmean
