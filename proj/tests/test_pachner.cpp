#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgsv/catalog.hpp"
#include "rgsv/cover.hpp"
#include "rgsv/homology.hpp"
#include "rgsv/pachner.hpp"
#include "rgsv/tietze.hpp"

using namespace rgsv;

namespace {

// Exhaustive search over all bistellar moves that do not grow the complex;
// returns the smallest reachable facet count.
std::size_t exhaustive_minimum(int dimension, const std::vector<Simplex>& facets) {
  std::set<std::vector<Simplex>> seen;
  std::vector<std::vector<Simplex>> queue;
  auto canon = [](std::vector<Simplex> f) {
    std::sort(f.begin(), f.end());
    return f;
  };
  queue.push_back(canon(facets));
  seen.insert(queue.back());
  std::size_t best = facets.size();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    best = std::min(best, queue[i].size());
    BistellarComplex k(dimension, queue[i]);
    std::set<Simplex> faces;
    for (const auto& f : queue[i])
      for (unsigned mask = 1; mask < (1u << f.size()); ++mask) {
        Simplex a;
        for (std::size_t b = 0; b < f.size(); ++b)
          if (mask & (1u << b)) a.push_back(f[b]);
        faces.insert(a);
      }
    for (const auto& a : faces) {
      BistellarComplex copy = k;
      Simplex target;
      if (!copy.move_target(a, target) || target.empty()) continue;
      copy.apply(a);
      auto next = canon(copy.facets());
      if (next.size() > queue[i].size()) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("bistellar moves on the circle") {
  auto hexagon = fixtures::circle(6);
  CHECK(exhaustive_minimum(1, hexagon) == 3);
  auto t = validate_triangulation(hexagon);
  auto r = pachner_simplify(t, 1, 1000);
  CHECK(r.triangulation.facet_count() == 3);
}

TEST_CASE("flip legality") {
  BistellarComplex k(2, fixtures::simplex_boundary(2));
  Simplex b;
  CHECK_FALSE(k.move_target({0, 1}, b));  // opposite edge 2-3 already exists
  CHECK_FALSE(k.move_target({0}, b));     // link is a face
  CHECK(k.move_target({0, 1, 2}, b));
  CHECK(b.empty());
  CHECK(k.apply({0, 1, 2}));
  CHECK(k.facet_count() == 6);
  CHECK(k.apply({4}));
  CHECK(k.facet_count() == 4);
}

TEST_CASE("simplification of torus covers reaches the minimal torus") {
  auto t = generate_catalog_manifold("torus", 2);
  auto cp = presentation_from_complex(t);
  auto s = tietze_simplify(cp.presentation, 100000);
  for (const auto& tab : low_index_subgroups(s.presentation, 4)) {
    if (tab.degree() != 4) continue;
    auto cover = build_cover(t, cp, extend_table(tab, s.generator_images));
    REQUIRE(cover.total.facet_count() == 56);
    auto r = pachner_simplify(cover.total, 7, 100000);
    CHECK(r.triangulation.facet_count() == 14);
    CHECK(r.triangulation.euler_characteristic() == 0);
    CHECK(homology(r.triangulation, 1).betti == 2);
  }
}

TEST_CASE("simplification preserves homology and never grows") {
  for (const auto& name : standard_catalog()) {
    auto t = catalog_entry(name).triangulation;
    auto r = pachner_simplify(t, 3, 20000);
    CHECK(r.triangulation.facet_count() <= t.facet_count());
    CHECK(homology_all(r.triangulation) == homology_all(t));
    if (t.dimension() == 2) CHECK(r.triangulation.euler_characteristic() == t.euler_characteristic());
  }
  auto s3 = pachner_simplify(generate_catalog_manifold("sphere", 3), 1, 1000);
  CHECK(s3.triangulation.facet_count() == 5);
}

TEST_CASE("simplification is deterministic and seed driven") {
  auto t = generate_catalog_manifold("surface", 2);
  auto a = pachner_simplify(t, 11, 5000);
  auto b = pachner_simplify(t, 11, 5000);
  CHECK(a.triangulation.facets() == b.triangulation.facets());
  CHECK(a.moves_applied == b.moves_applied);

  PachnerOptions o;
  o.seed = 11;
  o.move_budget = 5000;
  o.restarts = 3;
  auto c = pachner_simplify(t, o);
  auto d = pachner_simplify(t, o);
  CHECK(c.triangulation.facets() == d.triangulation.facets());
  CHECK(c.triangulation.facet_count() <= a.triangulation.facet_count());
}

TEST_CASE("budget and unsupported dimension") {
  auto t = generate_catalog_manifold("surface", 2);
  auto r = pachner_simplify(t, 1, 10);
  CHECK(r.budget_exhausted);
  CHECK(r.moves_applied <= 10);
  auto s4 = generate_catalog_manifold("sphere", 4);
  auto u = pachner_simplify(s4, 1, 100);
  CHECK(u.unsupported_dimension);
  CHECK(u.triangulation.facets() == s4.facets());
}
