#include "invmean/spec_file.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "invmean/errors.hpp"

namespace invmean {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ValidationError(where + ": unknown key \"" + key + "\"");
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t positive_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ValidationError(where + ": expected a positive integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    throw ValidationError(where + ": expected a finite number, got " + v.dump());
  }
  return v.get<double>();
}

bool boolean(const json& v, const std::string& where) {
  if (!v.is_boolean()) throw ValidationError(where + ": expected true or false, got " + v.dump());
  return v.get<bool>();
}

Interval parse_interval(const json& v) {
  if (!v.is_object()) throw ValidationError("interval: expected an object");
  reject_unknown_keys(v, {"lower", "upper", "lower_open", "upper_open"}, "interval");
  const json& lower = require(v, "lower", "interval");
  const json& upper = require(v, "upper", "interval");
  const double lo = lower.is_null() ? -Interval::kInf : finite_number(lower, "interval.lower");
  const double hi = upper.is_null() ? Interval::kInf : finite_number(upper, "interval.upper");
  const bool lo_open = boolean(require(v, "lower_open", "interval"), "interval.lower_open");
  const bool hi_open = boolean(require(v, "upper_open", "interval"), "interval.upper_open");
  try {
    return Interval(lo, hi, lo_open, hi_open);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("interval: ") + e.what());
  }
}

MeanEntry parse_mean(const json& v, std::size_t index) {
  const std::string where = "means[" + std::to_string(index + 1) + "]";
  if (!v.is_object()) throw ValidationError(where + ": expected an object");
  reject_unknown_keys(v, {"kind", "order", "arity"}, where);
  const json& kind_json = require(v, "kind", where);
  if (!kind_json.is_string()) throw ValidationError(where + ".kind: expected a string");
  const std::string kind = kind_json.get<std::string>();

  MeanEntry entry;
  entry.arity = positive_integer(require(v, "arity", where), where + ".arity");
  if (kind == "power") {
    entry.order = finite_number(require(v, "order", where), where + ".order");
  } else if (const auto order = alias_order(kind)) {
    entry.order = *order;
    if (v.contains("order") && finite_number(v["order"], where + ".order") != *order) {
      throw ValidationError(where + ": order " + v["order"].dump() + " contradicts kind \"" + kind + "\"");
    }
  } else {
    throw ValidationError(where + ".kind: unknown mean kind \"" + kind +
                          "\" (expected power, harmonic, geometric, arithmetic or quadratic)");
  }
  return entry;
}

std::vector<std::vector<long long>> parse_alpha(const json& v, std::size_t p) {
  if (!v.is_array()) throw ValidationError("alpha: expected an array of rows");
  if (v.size() != p) {
    throw ShapeError("alpha: expected p = " + std::to_string(p) + " rows, got " + std::to_string(v.size()));
  }
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.empty()) {
      throw ValidationError("alpha row " + std::to_string(i + 1) + ": expected a non-empty array");
    }
    std::vector<long long> parsed;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number_integer()) {
        throw ValidationError("alpha row " + std::to_string(i + 1) + ", position " + std::to_string(j + 1) +
                              ": expected an integer, got " + row[j].dump());
      }
      parsed.push_back(row[j].get<long long>());
    }
    rows.push_back(std::move(parsed));
  }
  return rows;
}

}  // namespace

std::optional<double> alias_order(const std::string& kind) {
  if (kind == "harmonic") return -1.0;
  if (kind == "geometric") return 0.0;
  if (kind == "arithmetic") return 1.0;
  if (kind == "quadratic") return 2.0;
  return std::nullopt;
}

ParsedSpec parse_spec_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("spec: expected a JSON object");
  reject_unknown_keys(doc, {"name", "description", "p", "interval", "means", "alpha"}, "spec");

  MappingSpec file;
  for (const char* key : {"name", "description"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_string()) throw ValidationError(std::string("spec.") + key + ": expected a string");
    (key == std::string("name") ? file.name : file.description) = doc[key].get<std::string>();
  }
  file.p = positive_integer(require(doc, "p", "spec"), "spec.p");
  if (doc.contains("interval")) file.interval = parse_interval(doc["interval"]);

  const json& means = require(doc, "means", "spec");
  if (!means.is_array()) throw ValidationError("means: expected an array");
  if (means.size() != file.p) {
    throw ShapeError("means: expected p = " + std::to_string(file.p) + " entries, got " +
                     std::to_string(means.size()));
  }
  for (std::size_t i = 0; i < means.size(); ++i) file.means.push_back(parse_mean(means[i], i));
  file.alpha = parse_alpha(require(doc, "alpha", "spec"), file.p);

  IndexVector alpha = IndexVector::from_one_based(file.alpha, file.p);
  std::vector<Mean> built;
  for (std::size_t i = 0; i < file.p; ++i) {
    if (file.alpha[i].size() != file.means[i].arity) {
      throw ShapeError("alpha row " + std::to_string(i + 1) + " has " + std::to_string(file.alpha[i].size()) +
                       " entries but means[" + std::to_string(i + 1) + "] has arity " +
                       std::to_string(file.means[i].arity));
    }
    built.push_back(make_power_mean({file.means[i].order, file.means[i].arity}, file.interval));
  }
  return ParsedSpec{std::move(file), AveragingMapping(std::move(built)), std::move(alpha)};
}

ParsedSpec parse_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_spec_json(doc);
}

ParsedSpec load_spec(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return parse_spec_text(std::string(std::istreambuf_iterator<char>(stdin_stream), {}));
  }
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_spec_text(buffer.str());
}

nlohmann::ordered_json spec_to_json(const MappingSpec& spec) {
  nlohmann::ordered_json doc;
  if (spec.name) doc["name"] = *spec.name;
  if (spec.description) doc["description"] = *spec.description;
  doc["p"] = spec.p;
  const Interval& iv = spec.interval;
  doc["interval"] = {
      {"lower", std::isinf(iv.lower()) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(iv.lower())},
      {"upper", std::isinf(iv.upper()) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(iv.upper())},
      {"lower_open", iv.lower_open()},
      {"upper_open", iv.upper_open()}};
  doc["means"] = nlohmann::ordered_json::array();
  for (const auto& m : spec.means) doc["means"].push_back({{"kind", "power"}, {"order", m.order}, {"arity", m.arity}});
  doc["alpha"] = spec.alpha;
  return doc;
}

std::string serialize_spec(const MappingSpec& spec) { return spec_to_json(spec).dump(2); }

}  // namespace invmean
