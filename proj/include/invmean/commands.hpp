#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "invmean/spec_file.hpp"

namespace invmean::cli {

/// Process exit codes shared by every command.
enum ExitCode : int { kSuccess = 0, kUsageError = 1, kFalsified = 2 };

struct IterateOptions {
  std::size_t steps = 1;
  bool trace = false;
  bool json = false;
};

struct InvariantOptions {
  double tol = 1e-12;
  std::size_t max_iter = 10000;
  std::size_t modulus = 1;
  bool json = false;
};

struct TgOptions {
  std::optional<std::size_t> max_steps;
  bool json = false;
};

struct VerifyOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  bool json = false;
};

/// Each command writes its report to `out` and returns the exit code. Domain
/// and shape errors propagate as exceptions.
int cmd_analyze(const ParsedSpec& spec, bool json, std::ostream& out);
int cmd_iterate(const ParsedSpec& spec, const std::vector<double>& x, const IterateOptions& options,
                std::ostream& out);
int cmd_invariant(const ParsedSpec& spec, const std::vector<double>& x, const InvariantOptions& options,
                  std::ostream& out);
int cmd_tg(const ParsedSpec& spec, const std::vector<int>& c0, const TgOptions& options, std::ostream& out);
int cmd_verify(const ParsedSpec& spec, const VerifyOptions& options, std::ostream& out);

/// Full command-line entry point: parses argv, loads the spec (stdin for
/// "-"), runs the command and maps exceptions to exit code 1.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace invmean::cli
