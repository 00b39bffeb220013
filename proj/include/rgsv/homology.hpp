#pragma once

#include <vector>

#include "rgsv/simplicial.hpp"
#include "rgsv/smith.hpp"

namespace rgsv {

// H_k(t; Z) from the invariant factors of the boundary maps d_k and d_{k+1}.
HomologyGroup homology(const OrientedTriangulation& t, int k);

// H_0 .. H_n, sharing the boundary factorizations between degrees.
std::vector<HomologyGroup> homology_all(const OrientedTriangulation& t);

// Homology of an arbitrary simplicial complex given by faces (closed under
// taking faces internally); H_0 .. H_dim.
std::vector<HomologyGroup> simplicial_homology(const std::vector<Simplex>& faces);

// Boundary matrices of the same closure: result[k] maps k-simplices to
// (k-1)-simplices, both in lexicographic order (result[0] is empty).
std::vector<SparseIntMatrix> boundary_matrices(const std::vector<Simplex>& faces);

}  // namespace rgsv
