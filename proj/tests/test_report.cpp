#include <algorithm>

#include "doctest.h"
#include "rgsv/error.hpp"
#include "rgsv/report.hpp"

using namespace rgsv;
using nlohmann::json;

namespace {

RunConfig config(const std::string& manifold, const std::string& chain, int depth) {
  RunConfig c;
  c.manifold = manifold;
  c.chain = chain;
  c.depth = depth;
  return c;
}

const json& torus_report() {
  static const json j = report_to_json(run_theorem_report(config("torus:2", "sublattice:2", 2)));
  return j;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("config round trip and rejection") {
  RunConfig c = config("surface:2", "cyclic:2", 3);
  c.seed = 7;
  c.budgets.pachner.move_budget = 500;
  auto back = config_from_json(config_to_json(c));
  CHECK(back.manifold == "surface:2");
  CHECK(back.chain == "cyclic:2");
  CHECK(back.depth == 3);
  CHECK(back.seed == 7);
  CHECK(back.budgets.pachner.seed == 7);
  CHECK(back.budgets.pachner.move_budget == 500);
  CHECK(config_to_json(back) == config_to_json(c));

  auto code = [](const json& j) {
    try {
      config_from_json(j);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code(json{{"manifold", "circle"}}) == ErrorCode::ParseError);
  CHECK(code(json{{"schema_version", 2}}) == ErrorCode::ParseError);
  CHECK(code(json{{"schema_version", 1}, {"colour", "red"}}) == ErrorCode::ParseError);
  CHECK(code(json{{"schema_version", 1}, {"depth", "two"}}) == ErrorCode::ParseError);
}

TEST_CASE("torus report rows and offline validation") {
  auto r = run_theorem_report(config("torus:2", "sublattice:2", 2));
  CHECK(r.sound());
  CHECK_FALSE(r.partial());
  REQUIRE(r.sequence.levels.size() == 3);
  CHECK(r.sequence.levels[2].volume_ratio <= Ratio{7, 8});
  for (const auto& cert : r.certificates) CHECK(cert.status == "certified");

  auto csv = report_to_csv(r);
  CHECK(csv.rfind("index,volume_upper,volume_upper/index,rank_lower,rank_upper,(rank_lower-1)/index,flags\n", 0) == 0);
  CHECK(count_lines(csv) == 4);
  CHECK(csv.find("\n16,14,0.875000,2,2,0.062500,\n") != std::string::npos);
  CHECK(report_to_text(r).find("sound") != std::string::npos);

  CHECK(validate_report(torus_report()).empty());
}

TEST_CASE("reports are byte-for-byte deterministic") {
  auto again = report_to_json(run_theorem_report(config("torus:2", "sublattice:2", 2)));
  CHECK(again.dump() == torus_report().dump());
}

TEST_CASE("validator catches tampered witnesses") {
  auto tampered = torus_report();
  tampered["levels"][1]["volume"]["upper"] = 13;
  CHECK_FALSE(validate_report(tampered).empty());

  tampered = torus_report();
  auto& words = tampered["levels"][2]["rank"]["generators"];
  words.erase(words.begin());
  tampered["levels"][2]["rank"]["upper"] = 1;
  CHECK_FALSE(validate_report(tampered).empty());

  tampered = torus_report();
  std::swap(tampered["levels"][1]["table"], tampered["levels"][2]["table"]);
  CHECK_FALSE(validate_report(tampered).empty());

  tampered = torus_report();
  auto& facets = tampered["levels"][0]["volume"]["upper_witness_facets"];
  facets.erase(facets.begin());
  CHECK_FALSE(validate_report(tampered).empty());

  tampered = torus_report();
  tampered["levels"][0]["ratios"]["rank_lower"] = json::array({0, 1});
  CHECK_FALSE(validate_report(tampered).empty());

  tampered = torus_report();
  tampered["schema_version"] = 99;
  CHECK_FALSE(validate_report(tampered).empty());
}

TEST_CASE("trivial group ratios are floored for display only") {
  auto r = run_theorem_report(config("sphere:3", "constant", 1));
  CHECK(r.sound());
  REQUIRE(r.sequence.levels.size() == 2);
  const auto& level = r.sequence.levels[0];
  CHECK(level.rank.lower == 0);
  CHECK(level.rank_lower_ratio.num == -1);
  CHECK(displayed_rank_ratio(level.rank_lower_ratio) == 0.0);
  CHECK(level.volume_ratio.value() > 0);
  auto j = report_to_json(r);
  CHECK(j["levels"][0]["ratios"]["rank_lower"] == json::array({-1, 1}));
  CHECK(j["levels"][0]["ratios"]["rank_lower_display"] == 0.0);
  CHECK(validate_report(j).empty());
}

TEST_CASE("genus-2 report over a short cyclic chain") {
  auto r = run_theorem_report(config("surface:2", "cyclic:2", 2));
  CHECK(r.sound());
  REQUIRE(r.sequence.levels.size() == 3);
  for (const auto& level : r.sequence.levels) CHECK(level.rank_lower_ratio <= level.volume_ratio);
  CHECK(r.best_rank_lower_ratio <= r.best_volume_ratio);
  CHECK(validate_report(report_to_json(r)).empty());
}

TEST_CASE("truncated chains are flagged as partial") {
  auto r = run_theorem_report(config("surface:2", "modp:2", 2));
  CHECK(r.partial());
  CHECK(r.sequence.levels.size() == 2);
  CHECK(report_to_json(r)["summary"]["partial"] == true);
}
