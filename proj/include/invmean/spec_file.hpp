#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invmean/averaging.hpp"
#include "invmean/index_vector.hpp"
#include "invmean/interval.hpp"

namespace invmean {

/// One entry of the "means" list. Aliases (harmonic, geometric, arithmetic,
/// quadratic) are normalised to a power order when parsed.
struct MeanEntry {
  double order = 1.0;
  std::size_t arity = 1;

  friend bool operator==(const MeanEntry&, const MeanEntry&) = default;
};

/// In-memory form of a mapping spec file. alpha keeps the file's 1-based indices.
struct MappingSpec {
  std::optional<std::string> name;
  std::optional<std::string> description;
  std::size_t p = 0;
  Interval interval = Interval::positive_reals();
  std::vector<MeanEntry> means;
  std::vector<std::vector<long long>> alpha;

  friend bool operator==(const MappingSpec&, const MappingSpec&) = default;
};

/// Validated spec plus the domain objects built from it.
struct ParsedSpec {
  MappingSpec file;
  AveragingMapping base;
  IndexVector alpha;

  ComposedMapping mapping() const { return compose(base, alpha); }
};

/// Parses and validates spec JSON. Throws ValidationError with a location in
/// the message (e.g. "alpha row 2, position 1: ...").
ParsedSpec parse_spec_json(const nlohmann::json& doc);
ParsedSpec parse_spec_text(const std::string& text);
/// Reads a file, or standard input when path is "-".
ParsedSpec load_spec(const std::string& path, std::istream& stdin_stream);

/// Canonical JSON: means written as {"kind": "power", "order", "arity"}, infinite ends as null.
nlohmann::ordered_json spec_to_json(const MappingSpec& spec);
std::string serialize_spec(const MappingSpec& spec);

/// Order for a mean alias, or nullopt if the name is not an alias.
std::optional<double> alias_order(const std::string& kind);

}  // namespace invmean
