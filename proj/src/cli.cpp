#include <CLI11.hpp>

#include <cerrno>
#include <cstdlib>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>

#include "invmean/commands.hpp"
#include "invmean/errors.hpp"

namespace invmean::cli {

namespace {

std::vector<std::string> split_list(const std::string& text, const char* what) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ValidationError(std::string("empty entry in ") + what + " '" + text + "'");
    items.push_back(item.substr(first, last - first + 1));
  }
  if (items.empty() || text.back() == ',') throw ValidationError(std::string("malformed ") + what + " '" + text + "'");
  return items;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text, "point")) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (errno != 0 || end == item.c_str() || *end != '\0') {
      throw ValidationError("'" + item + "' is not a number");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_coloring(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text, "coloring")) {
    if (item == "1" || item == "+1") out.push_back(1);
    else if (item == "0") out.push_back(0);
    else if (item == "-1") out.push_back(-1);
    else throw ValidationError("coloring entry '" + item + "' is not -1, 0 or 1");
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant means of mean-type mappings built from power means and an index vector"};
  app.name("invmean");
  app.require_subcommand(1);

  std::string spec_path;
  std::string point_text;
  std::string coloring_text;
  bool json = false;
  IterateOptions iterate_opts;
  InvariantOptions invariant_opts;
  TgOptions tg_opts;
  std::size_t tg_max_steps = 0;
  VerifyOptions verify_opts;

  auto* analyze = app.add_subcommand("analyze", "Classify the incidence graph and certify contractivity");
  analyze->add_option("spec", spec_path, "Mapping spec file, or - for stdin")->required();
  analyze->add_flag("--json", json, "Emit JSON");

  auto* iterate_cmd = app.add_subcommand("iterate", "Print iterates M^n(x) and their oscillation");
  iterate_cmd->add_option("spec", spec_path, "Mapping spec file, or - for stdin")->required();
  iterate_cmd->add_option("x", point_text, "Starting point, comma separated")->required();
  iterate_cmd->add_option("n", iterate_opts.steps, "Number of iterations")->required();
  iterate_cmd->add_flag("--trace", iterate_opts.trace, "Print every step instead of the first and last");
  iterate_cmd->add_flag("--json", json, "Emit JSON");

  auto* invariant_cmd = app.add_subcommand("invariant", "Compute the invariant mean K(x)");
  invariant_cmd->add_option("spec", spec_path, "Mapping spec file, or - for stdin")->required();
  invariant_cmd->add_option("x", point_text, "Point, comma separated")->required();
  invariant_cmd->add_option("--tol", invariant_opts.tol, "Tolerance, scaled by max(1, |max x|)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  invariant_cmd->add_option("--max-iter", invariant_opts.max_iter, "Iteration cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  invariant_cmd->add_option("--modulus", invariant_opts.modulus, "Report limits of M^(r + k m) per residue r")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  invariant_cmd->add_flag("--json", json, "Emit JSON");

  auto* tg_cmd = app.add_subcommand("tg", "Run the tri-state T_G dynamics on the incidence graph");
  tg_cmd->add_option("spec", spec_path, "Mapping spec file, or - for stdin")->required();
  tg_cmd->add_option("c0", coloring_text, "Initial coloring over {-1,0,1}, comma separated")->required();
  auto* max_steps_opt =
      tg_cmd->add_option("--max-steps", tg_max_steps, "Step cap (default 3^p)")->check(CLI::PositiveNumber);
  tg_cmd->add_flag("--json", json, "Emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Run the sampled property suite");
  verify_cmd->add_option("spec", spec_path, "Mapping spec file, or - for stdin")->required();
  verify_cmd->add_option("--samples", verify_opts.samples, "Samples per check")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_opts.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--tol", verify_opts.tol, "Invariance residual tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const ParsedSpec spec = load_spec(spec_path, in);
    if (analyze->parsed()) return cmd_analyze(spec, json, out);
    if (iterate_cmd->parsed()) {
      iterate_opts.json = json;
      return cmd_iterate(spec, parse_point(point_text), iterate_opts, out);
    }
    if (invariant_cmd->parsed()) {
      invariant_opts.json = json;
      return cmd_invariant(spec, parse_point(point_text), invariant_opts, out);
    }
    if (tg_cmd->parsed()) {
      tg_opts.json = json;
      if (max_steps_opt->count() > 0) tg_opts.max_steps = tg_max_steps;
      return cmd_tg(spec, parse_coloring(coloring_text), tg_opts, out);
    }
    if (verify_cmd->parsed()) {
      verify_opts.json = json;
      return cmd_verify(spec, verify_opts, out);
    }
  } catch (const std::exception& e) {
    err << "invmean: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace invmean::cli
