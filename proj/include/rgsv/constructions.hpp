#pragma once

// Executable versions of two rank-versus-volume arguments.
//
// Glued complex: paste one n-simplex per cell of a fundamental cycle along
// codimension-one faces whose images in M agree as ordered simplices. Its
// fundamental group needs at most n * m generators and surjects onto pi_1(M).
//
// Generator extraction: for each facet of the cycle take the group element
// carried by its 0 -> 1 edge. These at most m elements generate pi_1(M): the
// lift of the cycle with every vertex 0 in the tree section projects to a
// cycle of the cover belonging to the generated subgroup, forcing degree 1.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rgsv/presentation.hpp"
#include "rgsv/simplicial.hpp"
#include "rgsv/smith.hpp"

namespace rgsv {

struct CertificateBudgets {
  std::size_t tietze_budget = 1000000;
  std::size_t max_cosets = 2000000;
};

struct GluedComplex {
  int dimension = 0;
  std::vector<Simplex> cells;          // image of cell j in M (sorted vertices)
  std::vector<BigInt> coefficients;    // z_c = sum a_j tau_j
  // Face classes: class_of[j * 2^(n+1) + mask] for the face of cell j spanned by
  // the vertex positions in `mask`.
  std::vector<int> class_of;
  Skeleton2 skeleton;                  // cellular 2-skeleton
  std::vector<int> vertex_image;       // vertex class -> vertex of M
  std::vector<std::pair<int, int>> edge_image;  // edge -> oriented edge of M (or a tree path for connectors)
  std::vector<bool> connector;         // edge added to join components
  std::vector<int> triangle_cell;      // first cell containing each triangle class
  std::vector<bool> triangle_at_vertex0;
  std::size_t components_joined = 0;
  bool cycle_verified = false;         // boundary of z_c vanishes

  std::size_t cell_count() const { return cells.size(); }
};

// Throws Error(NotACycle) unless c is a top-degree cycle supported on facets of t.
GluedComplex build_glued_complex(const OrientedTriangulation& t, const IntegerChain& c);

struct GluedComplexCertificate {
  bool passed = false;
  std::string status;                  // certified | unresolved | failed
  std::size_t achieved_rank = 0;       // generators after guided elimination
  std::size_t target_rank = 0;         // n * m
  bool rank_stalled = false;           // achieved_rank > target_rank (flag only)
  int image_index = -1;                // index of the image of pi_1(X_c); -1 if unresolved
  std::size_t cosets_defined = 0;
  bool pushforward_matches = false;    // f_c(z_c) == c
  HomologyGroup abelianization;        // of pi_1(X_c)
  std::vector<std::string> failures;
};

GluedComplexCertificate verify_glued_complex(const OrientedTriangulation& t, const GluedComplex& x,
                                             const IntegerChain& c, const CertificateBudgets& budgets = {});

struct GeneratorExtraction {
  ComplexPresentation presentation;    // spanning tree and edge labels
  std::vector<Simplex> facets;         // support of c, sorted vertices
  std::vector<Word> facet_words;       // g_j for each facet
  std::vector<Word> generators;        // S: distinct nontrivial g_j
  BigInt l1;
};

GeneratorExtraction extract_generators(const OrientedTriangulation& t, const IntegerChain& c, int base_vertex = 0);

struct GenerationCertificate {
  bool passed = false;
  std::string status;                  // certified | unresolved | index_not_one | failed
  int index = -1;                      // [pi_1(M) : <S>]
  std::size_t cosets_defined = 0;
  std::size_t generator_count = 0;     // |S|
  BigInt l1;
  bool lift_is_cycle = false;
  BigInt lift_multiple;                // section lift = k * fundamental cycle of the cover
  bool lifts_agree = false;            // table-based and adjacency-based lifts coincide
  std::vector<std::string> failures;
};

// `generators` defaults to extraction.generators; pass a subset for negative
// controls.
GenerationCertificate verify_generation(const OrientedTriangulation& t, const IntegerChain& c,
                                        const GeneratorExtraction& extraction, const std::vector<Word>& generators,
                                        const CertificateBudgets& budgets = {});
GenerationCertificate verify_generation(const OrientedTriangulation& t, const IntegerChain& c,
                                        const GeneratorExtraction& extraction, const CertificateBudgets& budgets = {});

}  // namespace rgsv
