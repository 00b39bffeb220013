#include "doctest.h"
#include "fixtures.hpp"
#include "rgsv/catalog.hpp"
#include "rgsv/chain.hpp"
#include "rgsv/error.hpp"
#include "rgsv/volume.hpp"

using namespace rgsv;

namespace {

Ratio r(long long n, long long d) { return {n, d}; }
bool same(const Ratio& a, const Ratio& b) { return a <= b && b <= a; }

StableSequence run(const std::string& manifold, const std::string& spec, int depth, Budgets budgets = {}) {
  auto model = group_model(catalog_entry(manifold).triangulation, budgets.tietze_budget);
  auto chain = build_chain(model.working(), parse_chain_spec(spec, depth), budgets);
  return stable_sequence(model, chain.tables, budgets);
}

}  // namespace

TEST_CASE("exact ratios compare by cross multiplication") {
  CHECK(r(1, 3) < r(1, 2));
  CHECK(r(-1, 1) < r(0, 5));
  CHECK(same(r(2, 4), r(1, 2)));
  CHECK(r(7, 2).value() == doctest::Approx(3.5));
}

TEST_CASE("rank bounds bracket the rank") {
  auto z2 = rank_bounds(parse_presentation("gens 2\nabAB\n"), 1000);
  CHECK(z2.lower == 2);
  CHECK(z2.upper == 2);
  auto trivial = rank_bounds(parse_presentation("gens 2\na\nab\n"), 1000);
  CHECK(trivial.lower == 0);
  CHECK(trivial.upper == 0);
  auto free3 = rank_bounds(parse_presentation("gens 3\n"), 1000);
  CHECK(free3.lower == 3);
  CHECK(free3.upper == 3);
  // Eliminations stop at the budget; the count is still an upper bound.
  auto capped = rank_bounds(parse_presentation("gens 3\na\nb\n"), 1);
  CHECK(capped.budget_exhausted);
  CHECK(capped.upper == 2);
  CHECK(capped.lower == 1);
}

TEST_CASE("volume bounds on small manifolds") {
  auto torus = validate_triangulation(fixtures::torus7());
  auto vt = volume_bounds(torus, presentation_from_complex(torus).presentation, PachnerOptions{});
  CHECK(vt.lower == 2);
  CHECK(vt.upper <= 14);
  CHECK(vt.upper_witness.facet_count() == vt.upper);

  auto surface = catalog_entry("surface:2").triangulation;
  auto vs = volume_bounds(surface, presentation_from_complex(surface).presentation, PachnerOptions{});
  CHECK(vs.lower == 4);
  CHECK(vs.lower <= vs.upper);
  CHECK(vs.upper < surface.facet_count());

  auto sphere = catalog_entry("sphere:3").triangulation;
  auto v3 = volume_bounds(sphere, presentation_from_complex(sphere).presentation, PachnerOptions{});
  CHECK(v3.lower == 1);
  CHECK(v3.upper <= 5);
}

TEST_CASE("torus sublattice sequence reaches 14 triangles per level") {
  auto seq = run("torus:2", "sublattice:2", 2);
  REQUIRE(seq.levels.size() == 3);
  CHECK(seq.violations.empty());
  const std::vector<Ratio> volume{r(14, 1), r(14, 4), r(14, 16)};
  const std::vector<Ratio> rank{r(1, 1), r(1, 4), r(1, 16)};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(seq.levels[k].volume_ratio <= volume[k]);
    CHECK(same(seq.levels[k].rank_lower_ratio, rank[k]));
    CHECK(seq.levels[k].volume.upper_witness.facet_count() == seq.levels[k].volume.upper);
  }
  CHECK(seq.levels[2].cover_facets == 14 * 16);
}

TEST_CASE("genus-2 rank sequence over indices 1, 2, 4") {
  auto seq = run("surface:2", "lowindex:2", 2);
  REQUIRE(seq.levels.size() == 3);
  CHECK(seq.violations.empty());
  CHECK(same(seq.levels[0].rank_lower_ratio, r(3, 1)));
  CHECK(same(seq.levels[1].rank_lower_ratio, r(5, 2)));
  CHECK(same(seq.levels[2].rank_lower_ratio, r(9, 4)));
  for (const auto& level : seq.levels) {
    CHECK(level.rank.lower == level.rank.upper);  // surface groups: d = 2g
    CHECK(level.volume.lower == level.rank.lower);
  }
  for (std::size_t k = 1; k < seq.levels.size(); ++k) {
    CHECK(seq.running_min_volume[k] <= seq.running_min_volume[k - 1]);
    CHECK(seq.running_min_rank_lower[k] <= seq.running_min_rank_lower[k - 1]);
  }
}

TEST_CASE("constant chain repeats the level-0 ratios") {
  auto seq = run("torus:2", "constant", 2);
  REQUIRE(seq.levels.size() == 3);
  for (const auto& level : seq.levels) {
    CHECK(same(level.volume_ratio, seq.levels[0].volume_ratio));
    CHECK(same(level.rank_lower_ratio, seq.levels[0].rank_lower_ratio));
  }
}

TEST_CASE("stable sequence rejects ascending chains") {
  auto model = group_model(catalog_entry("torus:2").triangulation, 100000);
  auto chain = build_chain(model.working(), parse_chain_spec("sublattice:2", 1), Budgets{});
  std::vector<CosetTable> reversed(chain.tables.rbegin(), chain.tables.rend());
  try {
    stable_sequence(model, reversed, Budgets{});
    FAIL("expected ChainNotDescending");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChainNotDescending);
  }
}

TEST_CASE("stable sequence is deterministic") {
  auto a = run("surface:2", "cyclic:2", 2);
  auto b = run("surface:2", "cyclic:2", 2);
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t k = 0; k < a.levels.size(); ++k)
    CHECK(a.levels[k].volume.upper_witness.facets() == b.levels[k].volume.upper_witness.facets());
}
