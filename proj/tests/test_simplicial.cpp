#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgsv/error.hpp"
#include "rgsv/homology.hpp"
#include "rgsv/kernels.hpp"
#include "rgsv/simplicial.hpp"

using namespace rgsv;

namespace {

ErrorCode rejection(const std::vector<std::vector<int>>& facets) {
  try {
    validate_triangulation(facets);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("accepted invalid input");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("permutation signs") {
  CHECK(permutation_sign({0, 1, 2}) == 1);
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({2, 0, 1}) == 1);
  CHECK(permutation_sign({1, 1, 2}) == 0);
}

TEST_CASE("validation accepts closed orientable complexes") {
  auto t = validate_triangulation(fixtures::torus7());
  CHECK(t.dimension() == 2);
  CHECK(t.vertex_count() == 7);
  CHECK(t.simplices(1).size() == 21);
  CHECK(t.euler_characteristic() == 0);
  CHECK(t.orientation()[0] == 1);

  auto s3 = validate_triangulation(fixtures::simplex_boundary(3));
  CHECK(s3.euler_characteristic() == 0);
  auto c = validate_triangulation(fixtures::circle(5));
  CHECK(c.facet_count() == 5);
}

TEST_CASE("validation reindexes labels preserving order") {
  auto t = validate_triangulation(std::vector<std::vector<long long>>{{10, 20}, {20, 35}, {35, 10}});
  CHECK(t.vertex_count() == 3);
  CHECK(t.original_labels() == std::vector<long long>{10, 20, 35});
}

TEST_CASE("validation rejections carry the right code") {
  CHECK(rejection({}) == ErrorCode::InvalidInput);
  CHECK(rejection({{0}, {1}}) == ErrorCode::DimensionZero);
  CHECK(rejection({{0, 1, 1}, {0, 1, 2}}) == ErrorCode::DegenerateFacet);
  auto dup = fixtures::simplex_boundary(2);
  dup.push_back({1, 0, 2});
  CHECK(rejection(dup) == ErrorCode::DuplicateFacet);
  CHECK(rejection({{0, 1, 2}, {0, 1, 3}}) == ErrorCode::NotPseudoManifold);
  auto two = fixtures::circle(3);
  two.push_back({3, 4});
  two.push_back({4, 5});
  two.push_back({5, 3});
  CHECK(rejection(two) == ErrorCode::NotConnected);
  CHECK(rejection(fixtures::rp2()) == ErrorCode::NotOrientable);
  CHECK(rejection({{0, 1}, {1, 2, 3}}) == ErrorCode::InvalidInput);
}

TEST_CASE("boundary of boundary vanishes") {
  auto t = validate_triangulation(fixtures::simplex_boundary(3));
  auto d2 = boundary_matrix(t, 2), d3 = boundary_matrix(t, 3);
  auto prod = multiply(d2, d3);
  CHECK(prod.nonzeros() == 0);
}

TEST_CASE("fundamental cycles") {
  for (const auto& facets : {fixtures::torus7(), fixtures::simplex_boundary(2), fixtures::simplex_boundary(3),
                             fixtures::circle(4), fixtures::grid_torus(3, 4)}) {
    auto t = validate_triangulation(facets);
    auto fc = fundamental_cycle(t);
    CHECK(fc.chain.boundary().is_zero());
    CHECK(fc.l1 == static_cast<long long>(t.facet_count()));
    CHECK(is_fundamental_cycle(t, fc.chain));
    CHECK_FALSE(is_fundamental_cycle(t, fc.chain.scaled(2)));
    CHECK_FALSE(is_fundamental_cycle(t, fc.chain.scaled(-1)));
  }
}

TEST_CASE("homology of standard complexes") {
  auto torus = homology_all(validate_triangulation(fixtures::torus7()));
  CHECK(torus[0].betti == 1);
  CHECK(torus[1].betti == 2);
  CHECK(torus[2].betti == 1);
  CHECK(torus[1].torsion.empty());

  auto s3 = homology_all(validate_triangulation(fixtures::simplex_boundary(3)));
  CHECK(s3[1].betti == 0);
  CHECK(s3[2].betti == 0);
  CHECK(s3[3].betti == 1);

  // Ranks of the boundary maps of the 7-vertex torus.
  auto t = validate_triangulation(fixtures::torus7());
  CHECK(invariant_factors(boundary_matrix(t, 2)).size() == 13);
  CHECK(invariant_factors(boundary_matrix(t, 1)).size() == 6);
}

TEST_CASE("text round trip") {
  auto t = validate_triangulation(fixtures::torus7());
  std::stringstream buf;
  write_triangulation(buf, t);
  auto back = read_triangulation(buf);
  CHECK(back.facets() == t.facets());
  CHECK(back.content_hash() == t.content_hash());

  std::istringstream bad("dim 2\n0 1\n");
  CHECK_THROWS_AS(read_triangulation(bad), Error);
}

TEST_CASE("homology of arbitrary complexes from their faces") {
  auto rp2 = simplicial_homology(fixtures::rp2());
  REQUIRE(rp2.size() == 3);
  CHECK(rp2[0].to_string() == make_group(1, {}).to_string());
  CHECK(rp2[1] == make_group(0, {2}));
  CHECK(rp2[2] == make_group(0, {}));
  // Figure eight: two triangles' boundaries sharing a vertex.
  auto eight = simplicial_homology({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  CHECK(eight[1] == make_group(2, {}));
  // A filled triangle is contractible; faces need not be listed.
  auto disk = simplicial_homology({{0, 1, 2}});
  CHECK(disk[1] == make_group(0, {}));
  CHECK(disk[2] == make_group(0, {}));
  auto t = validate_triangulation(fixtures::torus7());
  CHECK(simplicial_homology(t.facets()) == homology_all(t));
  auto d = boundary_matrices({{0, 1, 2, 3}});
  CHECK(kernels::serial::composition_vanishes(d[1], d[2]));
  CHECK(kernels::serial::composition_vanishes(d[2], d[3]));
}
