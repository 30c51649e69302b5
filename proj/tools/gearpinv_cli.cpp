// gearpinv: gear-graph distance matrices, their special Laplacians and
// Moore-Penrose inverses.
//
//   gearpinv gen gear-distance --n 6
//   gearpinv gen tree-distance --edges 1-2,2-3:1/2
//   gearpinv pinv --n 5 --method oracle
//   gearpinv pinv --input doc.json
//   gearpinv spectrum --n 6
//   gearpinv verify --n 6 --tol 1e-9
//   gearpinv laplacian --n 5 --part H

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "gear/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gear::cli;

  CLI::App app{"Distance matrices of gear graphs and their Moore-Penrose inverses", "gearpinv"};
  app.set_version_flag("--version", gear::kToolVersion);
  app.require_subcommand(1);

  Options opt;
  int n = 0;
  std::string format;
  std::string gen_kind;
  std::string input_path;

  app.add_option("--format", format, "rational | decimal")->check(CLI::IsMember({"rational", "decimal"}));
  app.add_option("--tol", opt.tol, "tolerance for float comparisons")->capture_default_str();
  app.fallthrough();

  auto* gen = app.add_subcommand("gen", "emit a distance matrix");
  gen->add_option("kind", gen_kind, "gear-distance | wheel-distance | tree-distance")->required();
  gen->add_option("--n", n, "wheel size (n >= 4)");
  gen->add_option("--edges", opt.edges, "tree edges u-v[:w], comma separated");

  auto* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse of D(G_n)");
  pinv->add_option("--n", n, "wheel size (n >= 4)");
  pinv->add_option("--method", opt.method, "formula | oracle | k4")->capture_default_str();
  pinv->add_option("--input", input_path, "matrix document to invert ('-' for stdin)");

  auto* spectrum = app.add_subcommand("spectrum", "analytic spectrum of D(G_n) with residuals");
  spectrum->add_option("--n", n, "wheel size (n >= 4)")->required();

  auto* verify = app.add_subcommand("verify", "run every identity for one n");
  verify->add_option("--n", n, "wheel size (n >= 4)")->required();

  auto* laplacian = app.add_subcommand("laplacian", "special Laplacian or one of its parts");
  laplacian->add_option("--n", n, "wheel size (n >= 4)")->required();
  laplacian->add_option("--part", opt.part, "A | H | B | L")->capture_default_str();
  laplacian->add_option("--k", opt.k, "index for --part B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (auto* sub : {gen, pinv, spectrum, verify, laplacian})
    if (sub->count("--n") > 0) opt.n = n;
  if (!format.empty()) opt.format = gear::parse_format(format);

  CommandResult result;
  try {
    if (!input_path.empty()) opt.input = read_file(input_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*gen) result = cmd_gen(gen_kind, opt);
  else if (*pinv) result = cmd_pinv(opt);
  else if (*spectrum) result = cmd_spectrum(opt);
  else if (*verify) result = cmd_verify(opt);
  else result = cmd_laplacian(opt);

  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
