#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgsv/coset.hpp"
#include "rgsv/error.hpp"
#include "rgsv/presentation.hpp"
#include "rgsv/tietze.hpp"

using namespace rgsv;

namespace {

// Size of the permutation group generated by a table's action; breadth-first
// closure over composed permutations.
std::size_t group_order(const CosetTable& t) {
  using Perm = std::vector<int>;
  Perm id(static_cast<std::size_t>(t.degree()));
  for (int i = 0; i < t.degree(); ++i) id[static_cast<std::size_t>(i)] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : t.permutations()) {
      Perm next(id.size());
      for (std::size_t c = 0; c < id.size(); ++c) next[c] = g[static_cast<std::size_t>(queue[i][c])];
      if (seen.insert(next).second) queue.push_back(next);
    }
  return seen.size();
}

std::size_t count_of_index(const std::vector<CosetTable>& tables, int index) {
  std::size_t n = 0;
  for (const auto& t : tables) n += t.degree() == index;
  return n;
}

}  // namespace

TEST_CASE("word utilities") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(inverse({1, -2}) == Word{2, -1});
  CHECK(format_word({1, -2}, 2) == "aB");
  CHECK(format_word({}, 2) == "1");
}

TEST_CASE("presentation parsing") {
  auto p = parse_presentation("# comment\ngens 2\naBAb\n[1 1 -2]\n1\n");
  CHECK(p.generator_count == 2);
  CHECK(p.relators.size() == 2);
  CHECK(p.relators[0] == Word{1, -2, -1, 2});
  CHECK(p.relators[1] == Word{1, 1, -2});
  CHECK_THROWS_AS(parse_presentation("gens 1\nab\n"), Error);
  CHECK_THROWS_AS(parse_presentation("aa\n"), Error);
  CHECK_THROWS_AS(parse_presentation("gens 1\n[2]\n"), Error);
}

TEST_CASE("abelianization") {
  auto z2 = parse_presentation("gens 2\nabAB\n");
  CHECK(abelianization(z2).betti == 2);
  auto s3 = parse_presentation("gens 2\naa\nbbb\nabab\n");
  auto ab = abelianization(s3);
  CHECK(ab.betti == 0);
  CHECK(ab.torsion == std::vector<BigInt>{2});
}

TEST_CASE("presentations from complexes") {
  auto t = validate_triangulation(fixtures::torus7());
  auto cp = presentation_from_complex(t);
  CHECK(cp.presentation.generator_count == 21 - 6);
  CHECK(cp.presentation.relators.size() == 14);
  CHECK(abelianization(cp.presentation).betti == 2);
  auto s2 = presentation_from_complex(validate_triangulation(fixtures::simplex_boundary(2)));
  CHECK(abelianization(s2.presentation).min_generators() == 0);
}

TEST_CASE("coset enumeration of finite groups") {
  auto s3 = parse_presentation("gens 2\naa\nbbb\nabab\n");
  auto full = todd_coxeter(s3, {}, 1000);
  REQUIRE_FALSE(full.overflow());
  CHECK(full.index() == 6);
  CHECK(group_order(*full.table) == 6);
  CHECK(is_valid_coset_table(*full.table, s3));
  CHECK(todd_coxeter(s3, {{1}}, 1000).index() == 3);
  CHECK(todd_coxeter(s3, {{2}}, 1000).index() == 2);

  // Binary-ish example with coincidences: <a,b | a^8, b^7, (ab)^2, (a^-1 b)^3> has order 10752.
  auto big = parse_presentation("gens 2\naaaaaaaa\nbbbbbbb\nabab\nAbAbAb\n");
  auto e = todd_coxeter(big, {{1, 2}}, 200000);
  REQUIRE_FALSE(e.overflow());
  CHECK(e.index() == 10752 / 2);
}

TEST_CASE("coset enumeration overflow is reported") {
  auto z2 = parse_presentation("gens 2\nabAB\n");
  auto e = todd_coxeter(z2, {{1}}, 50);
  CHECK(e.overflow());
  CHECK(e.cosets_defined <= 50);
  CHECK(todd_coxeter(z2, {{1}, {2}}, 50).index() == 1);
  CHECK(todd_coxeter(z2, {{1, 1}, {2}}, 50).index() == 2);
}

TEST_CASE("low index subgroup counts") {
  auto z2 = low_index_subgroups(parse_presentation("gens 2\nabAB\n"), 3);
  CHECK(count_of_index(z2, 1) == 1);
  CHECK(count_of_index(z2, 2) == 3);
  CHECK(count_of_index(z2, 3) == 4);
  auto f2 = low_index_subgroups(parse_presentation("gens 2\n"), 3);
  CHECK(count_of_index(f2, 2) == 3);
  CHECK(count_of_index(f2, 3) == 13);
  CHECK(low_index_subgroups(parse_presentation("gens 1\naa\n"), 5).size() == 2);

  std::set<std::vector<std::vector<int>>> distinct;
  for (const auto& t : z2) {
    CHECK(standardize(t) == t);
    CHECK(is_valid_coset_table(t, parse_presentation("gens 2\nabAB\n")));
    distinct.insert(t.permutations());
  }
  CHECK(distinct.size() == z2.size());
}

TEST_CASE("low index agrees with enumeration of the same subgroup") {
  auto s3 = parse_presentation("gens 2\naa\nbbb\nabab\n");
  auto tables = low_index_subgroups(s3, 6);
  // S3 has 6 subgroups.
  CHECK(tables.size() == 6);
  CHECK(count_of_index(tables, 6) == 1);
  CHECK(*todd_coxeter(s3, {}, 100).table == tables.back());
}

TEST_CASE("refinement maps") {
  auto z2 = parse_presentation("gens 2\nabAB\n");
  auto fine = *todd_coxeter(z2, {{1, 1}, {2, 2}}, 100).table;
  auto coarse = *todd_coxeter(z2, {{1}, {2, 2}}, 100).table;
  auto other = *todd_coxeter(z2, {{2}, {1, 1}}, 100).table;
  CHECK(refinement_map(fine, coarse).has_value());
  CHECK_FALSE(refinement_map(coarse, fine).has_value());
  CHECK_FALSE(refinement_map(coarse, other).has_value());
}

TEST_CASE("tietze simplification preserves the group") {
  auto t = validate_triangulation(fixtures::torus7());
  auto p = presentation_from_complex(t).presentation;
  auto r = tietze_simplify(p, 100000);
  CHECK(r.presentation.generator_count == 2);
  CHECK(abelianization(r.presentation) == abelianization(p));
  CHECK(r.generator_images.size() == static_cast<std::size_t>(p.generator_count));

  // Same subgroup counts before and after, and tables transport along the images.
  auto before = low_index_subgroups(p, 3);
  auto after = low_index_subgroups(r.presentation, 3);
  CHECK(before.size() == after.size());
  for (const auto& tab : after) {
    auto ext = extend_table(tab, r.generator_images);
    CHECK(is_valid_coset_table(ext, p));
    CHECK(restrict_table(ext, r.kept) == tab);
  }

  auto sphere = tietze_simplify(presentation_from_complex(validate_triangulation(fixtures::simplex_boundary(2))).presentation, 1000);
  CHECK(sphere.presentation.generator_count == 0);
  CHECK(sphere.presentation.relators.empty());
}

TEST_CASE("tietze budget") {
  auto p = presentation_from_complex(validate_triangulation(fixtures::grid_torus(4, 4))).presentation;
  auto r = tietze_simplify(p, 2);
  CHECK(r.budget_exhausted);
  CHECK(r.eliminations == 2);
  CHECK(r.presentation.generator_count == p.generator_count - 2);
}

TEST_CASE("random presentations survive simplification") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> gen(0, 2), len(1, 5), coin(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    Presentation p;
    p.generator_count = 3;
    for (int r = 0; r < 3; ++r) {
      Word w;
      int n = len(rng);
      for (int i = 0; i < n; ++i) w.push_back(letter(gen(rng), coin(rng)));
      w = free_reduce(w);
      if (!w.empty()) p.relators.push_back(w);
    }
    auto s = tietze_simplify(p, 1000);
    CHECK(abelianization(s.presentation) == abelianization(p));
    CHECK(low_index_subgroups(s.presentation, 3).size() == low_index_subgroups(p, 3).size());
  }
}
