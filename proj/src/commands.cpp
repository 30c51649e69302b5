#include "gear/commands.hpp"

#include <exception>
#include <sstream>

#include "gear/edm.hpp"
#include "gear/graph.hpp"
#include "gear/laplacian.hpp"
#include "gear/pinv.hpp"
#include "gear/rational.hpp"
#include "gear/spectral.hpp"

namespace gear::cli {

namespace {

int require_n(const Options& opt) {
  if (!opt.n) throw std::invalid_argument("--n is required");
  require_wheel_size(*opt.n);
  return *opt.n;
}

Json base_metadata(std::optional<int> n) {
  Json meta;
  meta["tool"] = "gearpinv";
  meta["version"] = kToolVersion;
  if (n) meta["parity"] = *n % 2 == 0 ? "even" : "odd";
  return meta;
}

Format decimal_only(const Options& opt, const std::string& what) {
  if (opt.format == Format::rational)
    throw std::invalid_argument(what + " is floating-point; use --format decimal");
  return Format::decimal;
}

template <class Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

CommandResult emit(const OutputDocument& doc, int code = kExitOk) { return {code, serialize(doc), ""}; }

OutputDocument pinv_document(const RationalMatrix& pinv, std::optional<int> n, Format f) {
  OutputDocument doc{"matrix", n, f, matrix_payload(pinv, f), {}, base_metadata(n)};
  doc.metadata["method"] = "oracle";
  return doc;
}

}  // namespace

WeightedTree parse_tree_edges(const std::string& text) {
  WeightedTree t;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) continue;
    TreeEdge e;
    std::string ends = item;
    if (const auto colon = item.find(':'); colon != std::string::npos) {
      ends = item.substr(0, colon);
      e.weight = parse_rational(item.substr(colon + 1));
    }
    const auto dash = ends.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge '" + item + "' is not of the form u-v");
    try {
      e.u = std::stoi(ends.substr(0, dash));
      e.v = std::stoi(ends.substr(dash + 1));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("edge '" + item + "' has non-integer endpoints");
    }
    t.m = std::max({t.m, e.u, e.v});
    t.edges.push_back(std::move(e));
  }
  if (t.edges.empty()) throw std::invalid_argument("--edges must list at least one edge");
  validate_tree(t);
  return t;
}

CommandResult cmd_gen(const std::string& kind, const Options& opt) {
  return guarded([&] {
    const Format f = opt.format.value_or(Format::rational);
    if (kind == "gear-distance" || kind == "wheel-distance") {
      const int n = require_n(opt);
      const IntegerMatrix d = kind == "gear-distance" ? gear_distance_closed(n) : bfs_distances(build_wheel(n));
      OutputDocument doc{"matrix", n, f, matrix_payload(to_rational(d), f), {}, base_metadata(n)};
      doc.metadata["source"] = kind;
      return emit(doc);
    }
    if (kind == "tree-distance") {
      const WeightedTree t = parse_tree_edges(opt.edges);
      OutputDocument doc{"matrix", std::nullopt, f, matrix_payload(tree_distance(t), f), {}, base_metadata(std::nullopt)};
      doc.metadata["source"] = kind;
      doc.metadata["vertices"] = t.m;
      return emit(doc);
    }
    throw std::invalid_argument("unknown gen kind '" + kind + "' (gear-distance | wheel-distance | tree-distance)");
  });
}

CommandResult cmd_pinv(const Options& opt) {
  return guarded([&] {
    std::optional<int> n = opt.n;
    RationalMatrix d;
    if (opt.input) {
      const Json in = Json::parse(*opt.input);
      if (in.value("kind", "") != "matrix") throw std::invalid_argument("input document is not a matrix");
      d = parse_rational_matrix(in.at("payload"));
      if (in.contains("n")) n = in["n"].get<int>();
    } else {
      d = to_rational(gear_distance_closed(require_n(opt)));
    }

    if (opt.method == "oracle") {
      return emit(pinv_document(rational_pinv(d), n, opt.format.value_or(Format::rational)));
    }
    if (opt.method == "formula") {
      if (!n) throw std::invalid_argument("formula method needs --n");
      require_wheel_size(*n);
      if (opt.input && !(d == to_rational(gear_distance_closed(*n))))
        throw std::invalid_argument("formula method applies to gear distance matrices only");
      OutputDocument doc{"matrix", n, decimal_only(opt, "the formula route"),
                         matrix_payload(gear_pinv_formula(*n)), {}, base_metadata(n)};
      doc.metadata["method"] = "formula";
      return emit(doc);
    }
    if (opt.method == "k4") {
      OutputDocument doc{"matrix", n, decimal_only(opt, "the EDM route"), matrix_payload(balaji_bapat_pinv(d)),
                         {}, base_metadata(n)};
      doc.metadata["method"] = "k4";
      return emit(doc);
    }
    throw std::invalid_argument("unknown method '" + opt.method + "' (formula | oracle | k4)");
  });
}

CommandResult cmd_spectrum(const Options& opt) {
  return guarded([&] {
    const int n = require_n(opt);
    const Format f = decimal_only(opt, "the spectrum");
    const SpectrumReport rep = spectrum_report(n);
    const auto lp = lambda_pairs(n);
    Json payload;
    payload["lambda"] = Json::array({lp[0].value, lp[1].value});
    payload["theta"] = Json::array();
    for (int k = 1; k <= n - 2; ++k) payload["theta"].push_back(theta(n, k));
    payload["null_multiplicity"] = rep.null_multiplicity;
    payload["residuals"] = {{"eigenvalue_gap", rep.max_eigenvalue_gap},
                            {"lambda", rep.max_lambda_residual},
                            {"theta", rep.max_theta_residual},
                            {"null", rep.max_null_residual}};
    OutputDocument doc{"spectrum", n, f, std::move(payload), {}, base_metadata(n)};
    return emit(doc);
  });
}

CommandResult cmd_verify(const Options& opt) {
  return guarded([&] {
    const int n = require_n(opt);
    if (!(opt.tol > 0)) throw std::invalid_argument("--tol must be positive");
    const VerifyReport rep = verify_gear(n, opt.tol);
    std::size_t passed = 0;
    for (const auto& c : rep.checks) passed += c.pass ? 1 : 0;
    Json payload{{"all_pass", rep.all_pass()}, {"passed", passed}, {"total", rep.checks.size()}};
    OutputDocument doc{"verify-report", n, Format::decimal, std::move(payload), rep.checks, base_metadata(n)};
    doc.metadata["tolerance"] = opt.tol;
    return emit(doc, rep.all_pass() ? kExitOk : kExitVerifyFailed);
  });
}

CommandResult cmd_laplacian(const Options& opt) {
  return guarded([&] {
    const int n = require_n(opt);
    OutputDocument doc{"matrix", n, Format::rational, {}, {}, base_metadata(n)};
    doc.metadata["part"] = opt.part;
    if (opt.part == "A" || opt.part == "H") {
      doc.format = opt.format.value_or(Format::rational);
      doc.payload = matrix_payload(opt.part == "A" ? a_matrix(n) : h_matrix(n), doc.format);
    } else if (opt.part == "B") {
      if (!opt.k) throw std::invalid_argument("--part B needs --k");
      doc.format = decimal_only(opt, "B_k");
      doc.payload = matrix_payload(b_matrix(n, *opt.k));
      doc.metadata["k"] = *opt.k;
    } else if (opt.part == "L") {
      doc.format = decimal_only(opt, "the assembled Laplacian");
      doc.payload = matrix_payload(special_laplacian(n));
    } else {
      throw std::invalid_argument("unknown part '" + opt.part + "' (A | H | B | L)");
    }
    return emit(doc);
  });
}

}  // namespace gear::cli
