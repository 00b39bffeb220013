#pragma once

// Data-parallel kernels. Each kernel has an OpenMP implementation used by
// the library and a plain serial reference used by the tests and the
// benchmark target. Both must return identical results.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rgsv/coset.hpp"
#include "rgsv/integer.hpp"
#include "rgsv/simplicial.hpp"

namespace rgsv::kernels {

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

// `spokes[j][k]` is the letter carried by the edge from vertex 0 to vertex k
// of base facet j (0 for the identity); lifted vertex (v, c) gets id v*d + c.
// Output facet j*d + c is the lift of facet j whose vertex 0 lies over coset c.

namespace serial {
// Dense Gaussian elimination over Z/p.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);
bool composition_vanishes(const SparseIntMatrix& outer, const SparseIntMatrix& inner);
std::vector<Simplex> lift_facets(const std::vector<Simplex>& facets, const std::vector<std::vector<Letter>>& spokes,
                                 const CosetTable& table);
bool relators_hold(const CosetTable& table, const std::vector<Word>& relators);
}  // namespace serial

namespace parallel {
// Sparse Markowitz elimination over Z/p with parallel column updates.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);
bool composition_vanishes(const SparseIntMatrix& outer, const SparseIntMatrix& inner);
std::vector<Simplex> lift_facets(const std::vector<Simplex>& facets, const std::vector<std::vector<Letter>>& spokes,
                                 const CosetTable& table);
bool relators_hold(const CosetTable& table, const std::vector<Word>& relators);
}  // namespace parallel

}  // namespace rgsv::kernels
