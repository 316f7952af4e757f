#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 input or parse error, 3 budget exceeded.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vsbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  std::string command;
  std::optional<std::string> field;  // "p=<int>,e=<int>"
  std::string vars_text;  // comma-separated
  std::string map;
  std::vector<std::string> inputs;  // positional polynomials
  std::uint64_t budget_domain = 1u << 20;
  std::uint64_t budget_u = 512;
  std::uint64_t seed = 42;
  std::optional<std::string> out;
  std::string format = "json";

  // sweep
  std::string q_range = "2..5";
  std::size_t n = 2;
  std::uint32_t deg_max = 4;
  std::uint64_t samples = 100;
  std::string family = "random";
  std::string a_range = "1..3";

  // verify / u-invariant / polytope-svg
  std::optional<std::string> instance_path;
  bool trace = false;
  std::optional<std::string> dilation;
};

/// Parses "2..5", "3" or "2,3,7" into an ascending list.
std::vector<std::uint64_t> parse_range(const std::string& text);

/// Variable names for a map given without --vars: "x" alone gives {"x"};
/// x1..xk gives x1..xmax(k, min_n); anything else is listed in order of first
/// appearance.
std::vector<std::string> infer_varnames(const std::string& text, std::size_t min_n = 0);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vsbound::cli
