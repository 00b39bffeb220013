#pragma once

#include <string>
#include <vector>

#include "rgsv/coset.hpp"
#include "rgsv/presentation.hpp"
#include "rgsv/volume.hpp"

namespace rgsv {

enum class ChainStrategy {
  Constant,    // the whole group at every level
  Sublattice,  // kernel of G -> (Z/m^k)^b through the free part of G^ab
  ModP,        // G_{k+1} = kernel of G_k -> H_1(G_k; Z/p)
  CyclicP,     // G_{k+1} = kernel of the first coordinate of G_k -> H_1(G_k; Z/p)
  LowIndex,    // G_{k+1} = first subgroup of index e in G_k, in table order
};

struct ChainSpec {
  ChainStrategy strategy = ChainStrategy::Constant;
  int parameter = 0;
  int depth = 0;  // number of levels after the whole group

  std::string to_string() const;  // "modp:2" etc., without the depth
};

// Accepts "constant", "sublattice:m", "modp:p", "cyclic:p", "lowindex:e".
// Throws Error(BadParams) or Error(UnknownName).
ChainSpec parse_chain_spec(const std::string& text, int depth);

struct Chain {
  std::vector<CosetTable> tables;  // tables[0] is the whole group
  bool truncated = false;          // fewer than depth + 1 levels were built
  std::string truncation_reason;
};

// Tables over `p` for a descending chain. A level whose index would exceed
// budgets.max_index, or that cannot be formed (no free abelian quotient, no
// subgroup of the requested index, vanishing mod-p homology), ends the chain.
Chain build_chain(const Presentation& p, const ChainSpec& spec, const Budgets& budgets);

// Coordinates of each generator in H_1(G; Z/p) = (Z/p)^r, one row per
// generator. p must be prime.
std::vector<std::vector<int>> mod_p_coordinates(const Presentation& p, int prime);

// Coordinates of each generator in the free part Z^b of G^ab.
std::vector<std::vector<BigInt>> free_abelian_coordinates(const Presentation& p);

}  // namespace rgsv
