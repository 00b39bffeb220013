#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rgsv/integer.hpp"

namespace rgsv {

// U * A * V = S with U, V unimodular and S diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SnfResult {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  // Nonzero diagonal entries in order.
  std::vector<BigInt> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

// Pivot: smallest nonzero |entry| of the remaining block, with row/column
// gcd reduction and a divisibility repair step.
SnfResult smith_normal_form(const IntMatrix& a);

// Nonzero invariant factors of a sparse matrix without transforms. Unit
// pivots are eliminated sparsely (Markowitz order); the residual block goes
// through the dense routine.
std::vector<BigInt> invariant_factors(const SparseIntMatrix& a);

// Finitely generated abelian group Z^betti + sum Z/t_i with t_i | t_{i+1}.
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  std::size_t min_generators() const { return betti + torsion.size(); }
  std::string to_string() const;
  bool operator==(const HomologyGroup&) const = default;
};

// Group Z^free + sum Z/f over the factors f > 1.
HomologyGroup make_group(std::size_t free_rank, const std::vector<BigInt>& factors);

}  // namespace rgsv
