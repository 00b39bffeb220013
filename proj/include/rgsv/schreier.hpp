#pragma once

#include <utility>
#include <vector>

#include "rgsv/coset.hpp"
#include "rgsv/presentation.hpp"

namespace rgsv {

// Presentation of the subgroup described by a coset table, on Schreier
// generators s_{c,x} = t_c x t_{c.x}^-1 for the non-tree pairs (c, x).
struct SchreierPresentation {
  Presentation presentation;
  CosetTable table;  // the table the presentation was built from
  // schreier_generator[c][g]: index of s_{c,x_g}, or -1 when (c, x_g) is a
  // transversal tree edge (then s_{c,x_g} = 1).
  std::vector<std::vector<int>> schreier_generator;
  // transversal[c]: word in the parent generators with 0 . t_c = c.
  std::vector<Word> transversal;
  // source[s] = (c, g) for Schreier generator s.
  std::vector<std::pair<int, int>> source;

  // Rewrites a parent word read from coset `start` into Schreier generators.
  Word rewrite(const Word& w, int start = 0) const;
  // Parent word of Schreier generator s.
  Word element(int s) const;
};

SchreierPresentation reidemeister_schreier(const Presentation& p, const CosetTable& table);

// Coset table over the parent generators for the subgroup K <= H, where
// `parent` describes H and `sub` is a table over rs.presentation for K.
CosetTable induce_table(const CosetTable& parent, const SchreierPresentation& rs, const CosetTable& sub);

}  // namespace rgsv
