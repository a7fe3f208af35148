// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "discordant/cli/commands.hpp"
#include "discordant/cli/document.hpp"
#include "discordant/cli/report.hpp"

using namespace discordant;
using namespace discordant::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

BipartiteState near_threshold_state() {
  const Matrix u = random_unitary(2, 5);
  const std::vector<double> p{0.3, 0.7};
  const std::vector<Vector> basis{u.col(0), u.col(1)};
  const std::vector<HermitianOperator> sigmas{random_state({2, 1}, 2, 6).rho(), random_state({2, 1}, 2, 7).rho()};
  const BipartiteState zero = zero_discord_state(p, basis, sigmas);
  const double eps = 1e-7;
  return BipartiteState({2, 2}, (1 - eps) * zero.matrix() + eps * random_state({2, 2}, 4, 8).matrix());
}

}  // namespace

TEST_CASE("parse_param") {
  CHECK(parse_param("a=0.25").second == Json(0.25));
  CHECK(parse_param("seed=7").second == Json(7));
  CHECK(parse_param("dims=2,3").second == Json::array({2, 3}));
  CHECK(parse_param("p=1,").second == Json::array({1}));
  CHECK(parse_param("weights=doubled").second == Json("doubled"));
  CHECK_THROWS_AS(parse_param("a"), DocumentError);
  CHECK_THROWS_AS(parse_param("=3"), DocumentError);
  CHECK_THROWS_AS(parse_param("a="), DocumentError);
  CHECK_THROWS_AS(parse_param("a=1,,2"), DocumentError);
}

TEST_CASE("state documents") {
  SUBCASE("family round trip") {
    const StateDocument doc = StateDocument::parse(R"({"family": {"name": "bell_mixture", "params": {"a": 0.3}}})");
    CHECK(StateDocument::from_json(doc.to_json()).to_json() == doc.to_json());
    CHECK(max_abs(doc.build().matrix() - bell_mixture(0.3).matrix()) == 0.0);
  }
  SUBCASE("explicit round trip is bit exact") {
    for (int k = 0; k < 10; ++k) {
      const BipartiteState s = random_state({2, 3}, 1 + k % 6, 40 + k);
      const StateDocument doc = StateDocument::of_state(s);
      const StateDocument back = StateDocument::parse(doc.to_json().dump());
      CHECK(max_abs(back.explicit_state->matrix - s.matrix()) == 0.0);
      CHECK(back.to_json().dump() == doc.to_json().dump());
    }
  }
  SUBCASE("every fixture round trips") {
    const std::filesystem::path dir = std::filesystem::path(DISCORDANT_TEST_DIR) / "cli" / "fixtures";
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      std::ifstream f(entry.path());
      const Json original = Json::parse(f);
      const StateDocument doc = StateDocument::from_json(original);
      CHECK(doc.to_json() == original);
      CHECK_NOTHROW(doc.build());
      ++count;
    }
    CHECK(count >= 5);
  }
  SUBCASE("structural errors") {
    CHECK_THROWS_AS(StateDocument::parse("[]"), DocumentError);
    CHECK_THROWS_AS(StateDocument::parse("{}"), DocumentError);
    CHECK_THROWS_AS(StateDocument::parse(R"({"family": {"name": "x"}, "explicit": {}})"), DocumentError);
    CHECK_THROWS_AS(StateDocument::parse(R"({"family": {"params": {}}})"), DocumentError);
    CHECK_THROWS_AS(StateDocument::parse(R"({"explicit": {"dims": [2, 2], "matrix": [[1, 0]]}})"), DocumentError);
    CHECK_THROWS_AS(StateDocument::parse(R"({"explicit": {"dims": [0, 2], "matrix": []}})"), DocumentError);
    CHECK_THROWS_AS(StateDocument::of_family("random", {{"dims", {2, 2}}, {"seed", -1}}).build(), DocumentError);
    CHECK_THROWS_AS(StateDocument::of_family("teahouse_ensemble", {{"weights", "lopsided"}}).build(), DocumentError);
    CHECK_THROWS_AS(StateDocument::of_family("bell_mixture", {{"a", "half"}}).build(), DocumentError);
  }
  SUBCASE("physical errors come from the library") {
    CHECK_THROWS_AS(StateDocument::of_family("example_state", {{"b", 1.0}, {"c", 1.0}}).build(), Error);
    CHECK_THROWS_AS(StateDocument::parse(R"({"explicit": {"dims": [1, 1], "matrix": [[2, 0]]}})").build(), Error);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"classify", "--family", "teahouse_ensemble"}).code == kExitOk);
  CHECK(run({"classify", "--family", "teahouse_ensemble", "--param", "weights=doubled"}).code == kExitNonzero);

  const std::string doc = StateDocument::of_state(near_threshold_state()).to_json().dump();
  const Run ambiguous = run({"classify", "--input", "-"}, doc);
  CHECK(ambiguous.code == kExitAmbiguous);
  CHECK(ambiguous.out.find("AMBIGUOUS") != std::string::npos);
  CHECK(ambiguous.out.find("commutator") != std::string::npos);
  CHECK(ambiguous.out.find("residual") != std::string::npos);

  CHECK(run({"analyze", "--input", "-"}, "{").code == kExitParse);
  CHECK(run({"analyze", "--input", "-"}, R"({"explicit": {"dims": [1, 1], "matrix": [[2, 0]]}})").code ==
        kExitValidation);
  CHECK(run({"analyze", "--family", "random", "--param", "rank=9"}).code == kExitValidation);
  CHECK(run({"analyze", "--input", "-", "--param", "a=1"}, "{}").code == kExitParse);
}

TEST_CASE("human output uses four decimals and JSON full precision") {
  const Run human = run({"discord", "--family", "example_state", "--measure", "D3"});
  CHECK(human.out.find("D3^A = 0.2104") != std::string::npos);
  const Run json = run({"discord", "--family", "example_state", "--measure", "D3", "--json"});
  const Json r = Json::parse(json.out);
  CHECK(r["discord"]["value"].get<double>() == doctest::Approx(0.2104020877662769).epsilon(1e-13));
  CHECK_FALSE(r.contains("timing"));
}

TEST_CASE("table1 rows") {
  Settings settings;
  settings.optimizer.restarts = 6;
  const Json t = table1_report(0.25, settings);
  REQUIRE(t["rows"].size() == 4);
  for (int i = 0; i < 2; ++i) {
    CHECK(t["rows"][i]["D1_A"].get<double>() <= 1e-7);
    CHECK(t["rows"][i]["D1_B"].get<double>() <= 1e-7);
  }
  for (int i = 2; i < 4; ++i) CHECK(t["rows"][i]["D1_A"].get<double>() > 1e-3);
  CHECK(t["all_match"].get<bool>());
  CHECK(t["bell_mixture_literal_form"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("analysis WARN flags stay empty on valid input") {
  Settings settings;
  settings.optimizer.restarts = 4;
  for (int k = 0; k < 5; ++k) {
    const BipartiteState s = random_state({2, 2}, 1 + k % 4, 700 + k);
    const Json r = analyze_report(StateDocument::of_state(s), s, settings);
    CHECK(r["warnings"].empty());
  }
}
