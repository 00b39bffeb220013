#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rgsv/simplicial.hpp"

namespace rgsv {

struct PachnerOptions {
  std::uint64_t seed = 1;
  std::size_t move_budget = 100000;  // applied moves per restart
  int restarts = 1;
  double initial_temperature = 0.6;
  double cooling = 0.9995;           // per perturbation move
  double floor_temperature = 0.05;
  std::size_t stall_rounds = 60;     // perturbation rounds without a new best
};

struct PachnerResult {
  OrientedTriangulation triangulation;
  std::size_t initial_facets = 0;
  std::size_t moves_applied = 0;
  bool unsupported_dimension = false;  // n >= 4: input returned unchanged
  bool budget_exhausted = false;
  int best_restart = 0;
};

// Bistellar simplification: greedy facet-reducing moves interleaved with an
// annealed random walk of size-neutral (and occasionally size-increasing)
// moves. The result is PL-homeomorphic to the input and never has more
// facets. Deterministic for fixed (input, options).
PachnerResult pachner_simplify(const OrientedTriangulation& t, const PachnerOptions& options);
PachnerResult pachner_simplify(const OrientedTriangulation& t, std::uint64_t seed, std::size_t move_budget);

// Low-level move engine, exposed for tests and tools. A move is given by a
// face A whose link is the boundary of a vertex set B that is not itself a
// face; it replaces A * dB by dA * B. An empty B introduces a new vertex.
class BistellarComplex {
 public:
  explicit BistellarComplex(const OrientedTriangulation& t);
  explicit BistellarComplex(int dimension, const std::vector<Simplex>& facets);

  int dimension() const { return dimension_; }
  std::size_t facet_count() const { return alive_count_; }
  std::size_t vertex_count() const;

  // Facets containing every vertex of the sorted set `a`.
  std::vector<int> star(const Simplex& a) const;
  bool is_face(const Simplex& sorted) const;
  // B for which (a, B) is a legal move, or nothing.
  bool move_target(const Simplex& a, Simplex& b) const;
  // Applies the move at `a` if legal.
  bool apply(const Simplex& a);

  int degree(int vertex) const;
  // Cyclic link of a vertex in dimension 2.
  std::vector<int> link_cycle(int vertex) const;

  std::vector<Simplex> facets() const;
  const Simplex& facet(int id) const { return facets_[static_cast<std::size_t>(id)]; }
  bool alive(int id) const { return alive_[static_cast<std::size_t>(id)] != 0; }
  std::size_t facet_slots() const { return facets_.size(); }
  int vertex_bound() const { return next_vertex_; }

 private:
  void remove_facet(int id);
  int add_facet(Simplex s);

  int dimension_;
  int next_vertex_ = 0;
  std::size_t alive_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<char> alive_;
  std::vector<int> free_;
  std::vector<std::vector<int>> star_;
};

}  // namespace rgsv
