#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rgsv/coset.hpp"
#include "rgsv/cover.hpp"
#include "rgsv/pachner.hpp"
#include "rgsv/presentation.hpp"
#include "rgsv/simplicial.hpp"
#include "rgsv/smith.hpp"
#include "rgsv/tietze.hpp"

namespace rgsv {

// Exact nonnegative-denominator fraction used for per-index ratios.
struct Ratio {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator<=(const Ratio& o) const { return static_cast<__int128>(num) * o.den <= static_cast<__int128>(o.num) * den; }
  bool operator<(const Ratio& o) const { return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den; }
};

// d(G) in [lower, upper]: lower from the abelianization, upper from the
// generator count after Tietze elimination.
struct RankBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  HomologyGroup abelianization;
  std::size_t input_generators = 0;
  std::vector<int> kept;  // input generators that still generate
  bool budget_exhausted = false;
};

RankBounds rank_bounds(const Presentation& p, std::size_t tietze_budget);

// Integral simplicial volume in [lower, upper]. Within one triangulation the
// top cycle space has rank one, so the best simplicial fundamental cycle is
// the facet sum; the upper bound improves only by changing the triangulation.
struct VolumeBound {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string lower_witness;  // "betti_k" or "abelianization"
  OrientedTriangulation upper_witness;
  std::vector<HomologyGroup> homology;
  std::size_t moves = 0;
  bool simplification_unsupported = false;
  bool budget_exhausted = false;
};

// `p` presents pi_1 of `t`; its abelianization rank feeds the lower bound.
VolumeBound volume_bounds(const OrientedTriangulation& t, const Presentation& p, const PachnerOptions& options);

struct Budgets {
  PachnerOptions pachner;
  std::size_t tietze_budget = 1000000;
  std::size_t max_cosets = 2000000;
  std::size_t max_index = 4096;  // chain levels beyond this index are not built
};

// A triangulated manifold with its edge-path group and a simplified
// presentation of it. Chain tables live over the simplified presentation.
struct GroupModel {
  OrientedTriangulation triangulation;
  ComplexPresentation complex;
  TietzeResult simplified;

  const Presentation& working() const { return simplified.presentation; }
};

GroupModel group_model(const OrientedTriangulation& t, std::size_t tietze_budget);

struct StableLevel {
  int index = 1;
  CosetTable table;
  VolumeBound volume;
  RankBounds rank;
  std::vector<Word> rank_generators;  // words over the working presentation generating the level
  std::size_t cover_facets = 0;
  Ratio volume_ratio;       // volume upper / index
  Ratio rank_lower_ratio;   // (rank lower - 1) / index, may be negative
  Ratio rank_upper_ratio;   // (rank upper - 1) / index
  std::vector<std::string> flags;
};

struct StableSequence {
  std::vector<StableLevel> levels;
  std::vector<Ratio> running_min_volume;
  std::vector<Ratio> running_min_rank_lower;
  std::vector<std::string> violations;  // soundness failures; must stay empty
};

// Throws Error(ChainNotDescending) unless every table refines its predecessor.
StableSequence stable_sequence(const GroupModel& model, const std::vector<CosetTable>& chain, const Budgets& budgets,
                               const CoverCache* cache = nullptr);

}  // namespace rgsv
