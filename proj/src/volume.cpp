#include "rgsv/volume.hpp"

#include <algorithm>

#include "rgsv/error.hpp"
#include "rgsv/homology.hpp"
#include "rgsv/schreier.hpp"

namespace rgsv {

RankBounds rank_bounds(const Presentation& p, std::size_t tietze_budget) {
  RankBounds r;
  r.input_generators = static_cast<std::size_t>(p.generator_count);
  r.abelianization = abelianization(p);
  r.lower = r.abelianization.min_generators();
  auto simplified = tietze_simplify(p, tietze_budget);
  r.upper = static_cast<std::size_t>(simplified.presentation.generator_count);
  r.kept = simplified.kept;
  r.budget_exhausted = simplified.budget_exhausted;
  return r;
}

VolumeBound volume_bounds(const OrientedTriangulation& t, const Presentation& p, const PachnerOptions& options) {
  VolumeBound v;
  v.homology = homology_all(t);
  for (std::size_t k = 0; k < v.homology.size(); ++k)
    if (v.homology[k].betti > v.lower) {
      v.lower = v.homology[k].betti;
      v.lower_witness = "betti_" + std::to_string(k);
    }
  std::size_t ab = abelianization(p).min_generators();
  if (ab > v.lower) {
    v.lower = ab;
    v.lower_witness = "abelianization";
  }
  auto simplified = pachner_simplify(t, options);
  v.upper_witness = simplified.triangulation;
  v.upper = simplified.triangulation.facet_count();
  v.moves = simplified.moves_applied;
  v.simplification_unsupported = simplified.unsupported_dimension;
  v.budget_exhausted = simplified.budget_exhausted;
  return v;
}

GroupModel group_model(const OrientedTriangulation& t, std::size_t tietze_budget) {
  GroupModel g;
  g.triangulation = t;
  g.complex = presentation_from_complex(t);
  g.simplified = tietze_simplify(g.complex.presentation, tietze_budget);
  return g;
}

StableSequence stable_sequence(const GroupModel& model, const std::vector<CosetTable>& chain, const Budgets& budgets,
                               const CoverCache* cache) {
  for (const auto& table : chain)
    if (!is_valid_coset_table(table, model.working()))
      throw Error(ErrorCode::InvalidInput, "chain table is not a coset table of the group");
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!refinement_map(chain[k], chain[k - 1]))
      throw Error(ErrorCode::ChainNotDescending, "level " + std::to_string(k) + " is not a subgroup of level " +
                                                     std::to_string(k - 1));

  StableSequence seq;
  seq.levels.resize(chain.size());
  const auto count = static_cast<std::ptrdiff_t>(chain.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    auto& level = seq.levels[static_cast<std::size_t>(k)];
    const auto& table = chain[static_cast<std::size_t>(k)];
    level.table = table;
    level.index = table.degree();
    auto cover = cached_cover(model.triangulation, model.complex,
                              extend_table(table, model.simplified.generator_images), cache);
    level.cover_facets = cover.total.facet_count();
    auto rs = reidemeister_schreier(model.working(), table);
    level.rank = rank_bounds(rs.presentation, budgets.tietze_budget);
    for (int s : level.rank.kept) level.rank_generators.push_back(rs.element(s));
    level.volume = volume_bounds(cover.total, rs.presentation, budgets.pachner);
    if (level.rank.budget_exhausted) level.flags.push_back("rank_budget_exhausted");
    if (level.volume.budget_exhausted) level.flags.push_back("move_budget_exhausted");
    if (level.volume.simplification_unsupported) level.flags.push_back("unsupported_dimension");
    const long long idx = level.index;
    level.volume_ratio = {static_cast<long long>(level.volume.upper), idx};
    level.rank_lower_ratio = {static_cast<long long>(level.rank.lower) - 1, idx};
    level.rank_upper_ratio = {static_cast<long long>(level.rank.upper) - 1, idx};
  }

  for (std::size_t k = 0; k < seq.levels.size(); ++k) {
    const auto& level = seq.levels[k];
    auto violation = [&](const std::string& what) {
      seq.violations.push_back("level " + std::to_string(k) + " (index " + std::to_string(level.index) + "): " + what);
    };
    if (level.volume.lower > level.volume.upper) violation("volume lower bound exceeds upper bound");
    if (level.rank.lower > level.rank.upper) violation("rank lower bound exceeds upper bound");
    if (level.rank.lower > level.volume.upper) violation("rank lower bound exceeds volume upper bound");
    if (!(level.rank_lower_ratio <= level.volume_ratio)) violation("rank gradient ratio exceeds volume ratio");
    // Covers of degree [G_j : G_k] transfer cycles: ||M_k|| <= [G_j:G_k] ||M_j||.
    for (std::size_t j = 0; j < k; ++j) {
      const auto& prev = seq.levels[j];
      if (static_cast<__int128>(level.volume.lower) * prev.index >
          static_cast<__int128>(prev.volume.upper) * level.index)
        violation("volume lower bound contradicts the transfer bound from level " + std::to_string(j));
    }
    Ratio vol = level.volume_ratio, rank = level.rank_lower_ratio;
    if (k > 0) {
      vol = std::min(vol, seq.running_min_volume.back(), [](const Ratio& a, const Ratio& b) { return a < b; });
      rank = std::min(rank, seq.running_min_rank_lower.back(), [](const Ratio& a, const Ratio& b) { return a < b; });
    }
    seq.running_min_volume.push_back(vol);
    seq.running_min_rank_lower.push_back(rank);
  }
  return seq;
}

}  // namespace rgsv
