#include <doctest.h>

#include "gear/commands.hpp"
#include "gear/pinv.hpp"
#include "gear/rational.hpp"

using namespace gear;
using namespace gear::cli;

namespace {

Options with_n(int n) {
  Options o;
  o.n = n;
  return o;
}

}  // namespace

TEST_CASE("gen") {
  const CommandResult r = cmd_gen("gear-distance", with_n(6));
  REQUIRE(r.exit_code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["kind"] == "matrix");
  CHECK(doc["payload"].size() == 11);
  CHECK(doc["payload"][1][6] == "1");
  CHECK(doc["payload"][1][7] == "3");
  CHECK(doc["metadata"]["parity"] == "even");

  const CommandResult bad = cmd_gen("gear-distance", with_n(3));
  CHECK(bad.exit_code == kExitUsage);
  CHECK(bad.err.find("n must be") != std::string::npos);
  CHECK(bad.out.empty());

  Options t;
  t.edges = "1-2,2-3";
  CHECK(Json::parse(cmd_gen("tree-distance", t).out)["payload"][0][2] == "2");
  t.edges = "1-2,2-3:1/2";
  CHECK(Json::parse(cmd_gen("tree-distance", t).out)["payload"][0][2] == "3/2");
  t.edges = "1-2,1-2";
  CHECK(cmd_gen("tree-distance", t).exit_code == kExitUsage);
  CHECK(cmd_gen("wheel-distance", with_n(5)).exit_code == kExitOk);
  CHECK(cmd_gen("cube", with_n(5)).exit_code == kExitUsage);
}

TEST_CASE("pinv routes") {
  const Json oracle = Json::parse(cmd_pinv(with_n(5)).out);
  CHECK(oracle["payload"][0][0] == "-35/162");
  CHECK(oracle["format"] == "rational");

  Options f = with_n(5);
  f.method = "formula";
  const Json formula = Json::parse(cmd_pinv(f).out);
  CHECK(formula["format"] == "decimal");
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c)
      CHECK(std::abs(formula["payload"][r][c].get<double>() -
                     parse_rational(oracle["payload"][r][c].get<std::string>()).get_d()) <= 1e-9);

  Options k4 = with_n(6);
  k4.method = "k4";
  CHECK(Json::parse(cmd_pinv(k4).out)["payload"][0][0].get<double>() == doctest::Approx(-0.2).epsilon(1e-12));

  f.format = Format::rational;
  CHECK(cmd_pinv(f).exit_code == kExitUsage);
  Options bogus = with_n(5);
  bogus.method = "svd";
  CHECK(cmd_pinv(bogus).exit_code == kExitUsage);
  CHECK(cmd_pinv(Options{}).exit_code == kExitUsage);
}

TEST_CASE("gen output fed back through pinv is byte-identical to the oracle route") {
  for (int n : {4, 5, 6, 9}) {
    Options in;
    in.input = cmd_gen("gear-distance", with_n(n)).out;
    const CommandResult round = cmd_pinv(in);
    REQUIRE(round.exit_code == kExitOk);
    CHECK(round.out == cmd_pinv(with_n(n)).out);
  }
  Options tree;
  tree.edges = "1-2,2-3,2-4";
  Options in;
  in.input = cmd_gen("tree-distance", tree).out;
  CHECK(cmd_pinv(in).exit_code == kExitOk);
  in.input = "{not json";
  CHECK(cmd_pinv(in).exit_code == kExitUsage);
}

TEST_CASE("spectrum") {
  const Json s4 = Json::parse(cmd_spectrum(with_n(4)).out);
  CHECK(s4["payload"]["theta"][0].get<double>() == doctest::Approx(-4));
  CHECK(s4["payload"]["theta"][1].get<double>() == doctest::Approx(-4));
  const Json s6 = Json::parse(cmd_spectrum(with_n(6)).out);
  CHECK(s6["payload"]["lambda"][0].get<double>() == doctest::Approx(22.247449).epsilon(1e-7));
  CHECK(s6["payload"]["null_multiplicity"] == 5);
  Options rat = with_n(6);
  rat.format = Format::rational;
  CHECK(cmd_spectrum(rat).exit_code == kExitUsage);
}

TEST_CASE("verify") {
  for (int n : {5, 6}) {
    const CommandResult r = cmd_verify(with_n(n));
    CHECK(r.exit_code == kExitOk);
    const Json doc = Json::parse(r.out);
    CHECK(doc["payload"]["all_pass"] == true);
    CHECK(doc["checks"].size() == 10);
    for (const auto& c : doc["checks"]) CHECK(c["pass"] == true);
  }
  CHECK(cmd_verify(with_n(2)).exit_code == kExitUsage);
  Options zero = with_n(6);
  zero.tol = 0;
  CHECK(cmd_verify(zero).exit_code == kExitUsage);
}

TEST_CASE("verify fails when the tolerance is impossibly tight") {
  Options tight = with_n(9);
  tight.tol = 1e-300;
  const CommandResult r = cmd_verify(tight);
  CHECK(r.exit_code == kExitVerifyFailed);
  CHECK(Json::parse(r.out)["payload"]["all_pass"] == false);
}

TEST_CASE("laplacian parts") {
  Options a = with_n(5);
  a.part = "A";
  CHECK(Json::parse(cmd_laplacian(a).out)["payload"][0][0] == "4/9");
  Options h = with_n(5);
  h.part = "H";
  CHECK(Json::parse(cmd_laplacian(h).out)["payload"][1][2] == "-1/4");
  h.n = 6;
  CHECK(cmd_laplacian(h).exit_code == kExitUsage);
  Options b = with_n(6);
  b.part = "B";
  CHECK(cmd_laplacian(b).exit_code == kExitUsage);
  b.k = 2;
  CHECK(cmd_laplacian(b).exit_code == kExitOk);
  Options l = with_n(6);
  CHECK(Json::parse(cmd_laplacian(l).out)["payload"][0][0].get<double>() == doctest::Approx(0.45).epsilon(1e-12));
  l.part = "Q";
  CHECK(cmd_laplacian(l).exit_code == kExitUsage);
}
