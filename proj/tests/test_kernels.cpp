#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgsv/coset.hpp"
#include "rgsv/kernels.hpp"
#include "rgsv/presentation.hpp"

using namespace rgsv;

namespace {

SparseIntMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> val(-3, 3), pick(0, density);
  SparseIntMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (pick(rng) == 0) {
        int v = val(rng);
        if (v != 0) m.columns[c].emplace_back(static_cast<int>(r), v);
      }
  return m;
}

}  // namespace

TEST_CASE("rank mod p: serial and parallel agree") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 60);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_sparse(rng, dim(rng), dim(rng), trial % 5 + 1);
    for (std::uint32_t p : {2u, 3u, kernels::kDefaultPrime})
      CHECK(kernels::serial::rank_mod_p(m, p) == kernels::parallel::rank_mod_p(m, p));
  }
}

TEST_CASE("rank mod p of boundary maps") {
  auto t = validate_triangulation(fixtures::grid_torus(5, 6));
  auto d2 = boundary_matrix(t, 2);
  CHECK(kernels::parallel::rank_mod_p(d2, kernels::kDefaultPrime) == t.facet_count() - 1);
  CHECK(kernels::serial::rank_mod_p(d2, 2) == t.facet_count() - 1);
}

TEST_CASE("composition check: serial and parallel agree") {
  auto t = validate_triangulation(fixtures::simplex_boundary(4));
  for (int k = 2; k <= 4; ++k) {
    auto a = boundary_matrix(t, k - 1), b = boundary_matrix(t, k);
    CHECK(kernels::serial::composition_vanishes(a, b));
    CHECK(kernels::parallel::composition_vanishes(a, b));
  }
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_sparse(rng, 8, 10, 2), b = random_sparse(rng, 10, 7, 3);
    CHECK(kernels::serial::composition_vanishes(a, b) == kernels::parallel::composition_vanishes(a, b));
  }
}

TEST_CASE("facet lifting and relator checks: serial and parallel agree") {
  auto t = validate_triangulation(fixtures::torus7());
  auto cp = presentation_from_complex(t);
  std::vector<std::vector<Letter>> spokes;
  for (const auto& f : t.facets()) {
    std::vector<Letter> s{0};
    for (std::size_t k = 1; k < f.size(); ++k) {
      auto w = cp.edge_word_between(f[0], f[k]);
      s.push_back(w.empty() ? 0 : w[0]);
    }
    spokes.push_back(s);
  }
  for (const auto& table : low_index_subgroups(cp.presentation, 4)) {
    CHECK(kernels::serial::lift_facets(t.facets(), spokes, table) ==
          kernels::parallel::lift_facets(t.facets(), spokes, table));
    CHECK(kernels::serial::relators_hold(table, cp.presentation.relators));
    CHECK(kernels::parallel::relators_hold(table, cp.presentation.relators));
  }
  auto s3 = parse_presentation("gens 2\naa\nbbb\nabab\n");
  auto table = *todd_coxeter(s3, {}, 100).table;
  std::vector<Word> wrong{{1, 2, 1, 2, 1, 2}};
  CHECK(kernels::serial::relators_hold(table, wrong) == kernels::parallel::relators_hold(table, wrong));
}
