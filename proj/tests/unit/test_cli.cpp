#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zlab/classifier.hpp"
#include "zlab/cli.hpp"
#include "zlab/error.hpp"

using namespace zlab;
using zlab::cli::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(ZLAB_CONFIG_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string("/tmp/zlab_test_") + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("classify e^z") {
  const Result r = run({"classify", config("exp_z.json")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["family"] == "exp");
  CHECK(j[0]["arg_set"]["kind"] == "single");
  CHECK(j[1]["family"] == "precomposition");
}

TEST_CASE("classify z e^{z^3}") {
  const Result r = run({"classify", config("z_exp_z3.json")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["family"] == "power");
  CHECK(j[0]["exponent"] == 1);
  CHECK(j[1]["arg_set"]["kind"] == "all_nonzero");
}

TEST_CASE("config errors exit 2") {
  const std::string bad = write_temp("alpha.json", R"({"kind": "polynomial", "alpha": 1.5,
    "polynomial": {"leading": [1, 0], "roots": [{"point": [0, 0], "mult": 1}]}})");
  const Result r = run({"classify", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("alpha out of range (-1,1)") != std::string::npos);

  const std::string missing = write_temp("missing.json", R"({"kind": "rational", "alpha": 0})");
  const Result m = run({"classify", missing});
  CHECK(m.code == 2);
  CHECK(m.err.find("rational") != std::string::npos);

  const std::string syntax = write_temp("syntax.json", "{\"kind\": ");
  CHECK(run({"classify", syntax}).code == 2);
  CHECK(run({"classify", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", config("monome.json"), "--target", "affine", "--params", "{oops"}).code == 2);
  CHECK(run({"verify", config("monome.json"), "--target", "nowhere"}).code == 2);
}

TEST_CASE("rays text format") {
  const Result r = run({"rays", config("exp_z2.json"), "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.785398, 2.356194, 3.926991, 5.497787\n");
}

TEST_CASE("verify monome passes") {
  const Result r = run({"verify", config("monome.json"), "--target", "affine", "--params", R"({"A": 2, "C": [1, 0]})"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# zalcman-lab v1");
  std::getline(lines, line);
  CHECK(line == "n,sup_error,phase_dispersion,selected_flag");
  double last = 1.0;
  int rows = 0;
  while (std::getline(lines, line) && line[0] != '#') {
    std::stringstream ss(line);
    std::string n, e;
    std::getline(ss, n, ',');
    std::getline(ss, e, ',');
    last = std::stod(e);
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(last <= 1e-9);
  CHECK(line == "# verdict: pass");
}

TEST_CASE("verify mismatched target exits 1") {
  const Result r = run({"verify", config("exp_z.json"), "--target", "exp-ray", "--params", R"({"z0": 1})", "--limit",
                        R"({"form": "exp", "A0": [0, 0], "A1": [0.995004165, 0.0998334166]})"});
  CHECK(r.code == 1);
  CHECK(r.out.find("# reason: non-decreasing error") != std::string::npos);
}

TEST_CASE("numeric failures exit 1 with a reason") {
  const Result r = run({"verify", config("exp_z2.json"), "--target", "exp-interior", "--params", R"({"theta0": 0.785398163397448})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("invalid-theta") != std::string::npos);
  const Result s = run({"construct", config("exp_z.json"), "--target", "exp-ray", "--params", R"({"A1": [0, 1]})"});
  CHECK(s.code == 1);
  CHECK(s.err.find("infeasible-target") != std::string::npos);
}

TEST_CASE("construct prints five terms with diagnostics") {
  const Result r = run({"construct", config("exp_z2.json"), "--target", "exp-interior", "--params", R"({"theta0": 1.5707963267948966})", "--mode", "faithful"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["recipe"] == "exp-interior");
  REQUIRE(j["terms"].size() == 5);
  CHECK(j["terms"][0]["n"] == 2);
  CHECK(j["terms"][4]["diagnostics"].contains("t"));
  CHECK(j["terms"][4]["diagnostics"].contains("residual"));
  CHECK(!j["terms"][4]["diagnostics"].contains("congruence"));
}

TEST_CASE("scan csv") {
  const Result r = run({"scan", config("exp_z2.json"), "--center", "0.353553391,0.353553391", "--radius", "0.1", "--nmax", "50"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# zalcman-lab v1\nz_re,z_im,n,marty_value\n", 0) == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", config("exp_z2.json"), "--target", "exp-interior", "--params", R"({"theta0": 2.0, "rho_scale": 0.1})"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  const Result c = run({"classify", config("exp_z2.json"), "--format", "text"});
  CHECK(c.out == run({"classify", config("exp_z2.json"), "--format", "text"}).out);
}

TEST_CASE("descriptor json round trip") {
  const std::vector<Function> fs{
      Function::exp_rational(Rational(1.0, {{{0.0, 0.0}, 1}}, {{{2.0, 0.0}, 1}}), Polynomial(1.0, {{{0.0, 0.0}, 2}})),
      Function::exp_rational(Rational(1.0, {{{1.0, 0.0}, 1}}, {}), Polynomial(2.0, {{{0.0, 0.0}, 1}})),
      Function::rational(Rational(1.0, {}, {{{0.0, 0.0}, 2}})),
      Function::polynomial(Polynomial(3.0, {{{0.0, 0.0}, 1}, {{1.0, 1.0}, 1}})),
  };
  for (const Function& f : fs) {
    for (double alpha : {-0.5, 0.0, 0.5}) {
      const FamilySet s = classify(f, alpha);
      const json j = cli::families_to_json(s);
      const FamilySet back = cli::families_from_json(json::parse(j.dump()));
      CHECK(same_family_set(s, back, 1e-8));
      CHECK(cli::families_to_json(back).dump() == j.dump());
    }
  }
}

TEST_CASE("function json round trip") {
  const Function f = Function::exp_rational(Rational({2.0, 1.0}, {{{0.0, 0.0}, 1}}, {{{2.0, 0.0}, 3}}),
                                            Polynomial::from_coefficients({{0.5, 0.0}, {0.0, 0.0}, {1.0, -1.0}}));
  const json j = cli::function_to_json(f);
  const Function g = cli::parse_function(json::parse(j.dump()));
  CHECK(same_function(f, g, 1e-8));
  json cfg = j;
  cfg["alpha"] = 0.5;
  CHECK(cli::parse_config(cfg).alpha == 0.5);
}

TEST_CASE("number formatting") {
  CHECK(cli::format9(0.1) == "0.1");
  CHECK(cli::format9(1.0 / 3.0) == "0.333333333");
  CHECK(cli::round9(1.0 / 3.0) == 0.333333333);
}

TEST_CASE("selftest") {
  const Result r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
}
