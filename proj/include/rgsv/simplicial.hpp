#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgsv/integer.hpp"

namespace rgsv {

// A k-simplex is identified by its sorted vertex tuple. Ordered occurrences
// (facets in stored order, faces of an ordered simplex) carry the sign of the
// sorting permutation.
using Simplex = std::vector<int>;

// Sign of the permutation sorting `tuple` ascending; 0 if a vertex repeats.
int permutation_sign(const std::vector<int>& tuple);

// Removes position `i` from `tuple`.
Simplex drop_vertex(const Simplex& tuple, std::size_t i);

// Closed, connected, coherently oriented pseudo-manifold given by facets.
// Instances only come out of validate_triangulation, so every instance
// satisfies the invariants.
class OrientedTriangulation {
 public:
  int dimension() const { return dimension_; }
  int vertex_count() const { return vertex_count_; }
  std::size_t facet_count() const { return facets_.size(); }

  // Facets in stored vertex order; the stored order fixes each facet's sign.
  const std::vector<Simplex>& facets() const { return facets_; }
  // Coherent orientation signs (+1 for facet 0).
  const std::vector<int>& orientation() const { return orientation_; }

  // All k-simplices as sorted tuples, lexicographically ordered.
  const std::vector<Simplex>& simplices(int k) const { return skeleta_.at(static_cast<std::size_t>(k)); }
  std::optional<std::size_t> simplex_index(const Simplex& sorted) const;

  long long euler_characteristic() const;

  // Vertex label from the input before contiguous reindexing.
  const std::vector<long long>& original_labels() const { return labels_; }

  // Canonical text (see write_triangulation) hashed with FNV-1a.
  std::uint64_t content_hash() const;

 private:
  friend OrientedTriangulation validate_triangulation(const std::vector<std::vector<long long>>& facets);

  int dimension_ = 0;
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<int> orientation_;
  std::vector<std::vector<Simplex>> skeleta_;
  std::vector<long long> labels_;
};

// Throws Error with NotPseudoManifold / NotConnected / NotOrientable (and
// InvalidInput, DimensionZero, DegenerateFacet, DuplicateFacet for malformed
// input). Vertex ids are reindexed to 0..V-1 preserving their order.
OrientedTriangulation validate_triangulation(const std::vector<std::vector<long long>>& facets);
OrientedTriangulation validate_triangulation(const std::vector<std::vector<int>>& facets);

// Rows: (k-1)-simplices, columns: k-simplices. Entry (-1)^i for the face
// obtained by dropping the i-th vertex of the sorted k-simplex.
SparseIntMatrix boundary_matrix(const OrientedTriangulation& t, int k);

// Sparse integer k-chain over sorted simplices; zero coefficients are never
// stored.
class IntegerChain {
 public:
  explicit IntegerChain(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Simplex, BigInt>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void add(const Simplex& sorted, const BigInt& coefficient);
  // Adds an ordered simplex, converting to sorted form with the permutation sign.
  void add_ordered(const std::vector<int>& ordered, const BigInt& coefficient);
  BigInt coefficient(const Simplex& sorted) const;

  BigInt l1_norm() const;
  IntegerChain boundary() const;
  IntegerChain scaled(const BigInt& factor) const;

  bool operator==(const IntegerChain& other) const = default;

 private:
  int degree_;
  std::map<Simplex, BigInt> entries_;
};

struct FundamentalCycle {
  IntegerChain chain;
  BigInt l1;
};

// Signed sum of all facets using the orientation signs.
FundamentalCycle fundamental_cycle(const OrientedTriangulation& t);

// True iff `chain` is a degree-n cycle supported on facets of `t` that
// generates H_n(t; Z) and agrees with the stored orientation. The rank of the
// top boundary map is certified by elimination over a large prime field.
bool is_fundamental_cycle(const OrientedTriangulation& t, const IntegerChain& chain);

// Text format: `dim n`, then one facet per line; `#` starts a comment line.
OrientedTriangulation read_triangulation(std::istream& in);
OrientedTriangulation read_triangulation_file(const std::string& path);
void write_triangulation(std::ostream& out, const OrientedTriangulation& t);

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace rgsv
