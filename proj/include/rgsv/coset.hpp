#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rgsv/presentation.hpp"

namespace rgsv {

// Right action of the generators on the cosets of a subgroup. Cosets are
// numbered 0..degree-1 and coset 0 is the subgroup itself.
class CosetTable {
 public:
  CosetTable() = default;
  // action[g][c] = c . x_g; throws Error(InvalidInput) unless every row is a
  // permutation of 0..degree-1.
  CosetTable(int generator_count, std::vector<std::vector<int>> action);

  static CosetTable trivial(int generator_count);

  int generator_count() const { return generator_count_; }
  int degree() const { return degree_; }

  int act(int coset, Letter l) const {
    return l > 0 ? forward_[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(coset)]
                 : backward_[static_cast<std::size_t>(-l - 1)][static_cast<std::size_t>(coset)];
  }
  int act(int coset, const Word& w) const {
    for (Letter l : w) coset = act(coset, l);
    return coset;
  }
  const std::vector<int>& permutation(int g) const { return forward_[static_cast<std::size_t>(g)]; }
  const std::vector<std::vector<int>>& permutations() const { return forward_; }

  bool is_transitive() const;
  std::uint64_t content_hash() const;

  bool operator==(const CosetTable& other) const {
    return generator_count_ == other.generator_count_ && forward_ == other.forward_;
  }

 private:
  int generator_count_ = 0;
  int degree_ = 0;
  std::vector<std::vector<int>> forward_;
  std::vector<std::vector<int>> backward_;
};

// All relators fix every coset.
bool relators_hold(const CosetTable& table, const Presentation& p);

// Relators hold, action transitive, generator counts agree.
bool is_valid_coset_table(const CosetTable& table, const Presentation& p);

// Renumbers cosets by first appearance in a breadth-first scan from coset 0
// over columns x1, x1^-1, x2, x2^-1, ... Two tables describe the same
// subgroup iff their standard forms coincide.
CosetTable standardize(const CosetTable& table);

struct Enumeration {
  std::optional<CosetTable> table;  // empty on overflow
  std::size_t cosets_defined = 0;

  bool overflow() const { return !table.has_value(); }
  int index() const { return table ? table->degree() : -1; }
};

// Coset enumeration (HLT relator scanning with coincidence processing).
// Overflow means the index was not resolved within max_cosets; it makes no
// claim about the index being infinite.
Enumeration todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets);

// Every subgroup of index <= max_index, one standardized table each, ordered
// by (index, table). Top-level branches may be explored in parallel.
std::vector<CosetTable> low_index_subgroups(const Presentation& p, int max_index);

// Map f with f(0) = 0 and f(c.x) = f(c).x if `finer` describes a subgroup of
// the one described by `coarser`.
std::optional<std::vector<int>> refinement_map(const CosetTable& finer, const CosetTable& coarser);

// Table over the generators `kept` (indices into the original generators).
CosetTable restrict_table(const CosetTable& table, const std::vector<int>& kept);

// Table over original generators given their images as words in the
// generators the table is defined on.
CosetTable extend_table(const CosetTable& table, const std::vector<Word>& images);

}  // namespace rgsv
