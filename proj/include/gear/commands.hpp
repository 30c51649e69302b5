#pragma once

#include <optional>
#include <string>

#include "gear/output.hpp"
#include "gear/trees.hpp"

// Subcommand implementations behind the `gearpinv` executable. Each returns
// the document text and the process exit code instead of touching the
// process streams, so they can be driven from tests.
namespace gear::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  std::optional<int> n;
  std::optional<Format> format;  // unset: the command's natural format
  double tol = 1e-9;
  std::string method = "oracle";  // formula | oracle | k4
  std::string part = "L";         // A | H | B | L
  std::optional<int> k;
  std::string edges;               // tree-distance: "1-2,2-3:1/2"
  std::optional<std::string> input;  // pinv: matrix document text
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

CommandResult cmd_gen(const std::string& kind, const Options& opt);
CommandResult cmd_pinv(const Options& opt);
CommandResult cmd_spectrum(const Options& opt);
CommandResult cmd_verify(const Options& opt);
CommandResult cmd_laplacian(const Options& opt);

// "u-v[:w],u-v[:w],..." with 1-based ids and optional rational weights.
// The vertex count is the largest id mentioned.
WeightedTree parse_tree_edges(const std::string& text);

}  // namespace gear::cli
