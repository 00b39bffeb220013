#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rgsv/smith.hpp"

namespace rgsv {

class OrientedTriangulation;

// A letter is +(g+1) for generator g and -(g+1) for its inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline int generator_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline Letter letter(int generator, bool inverse = false) { return inverse ? -(generator + 1) : generator + 1; }

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

// `aBc` style for up to 26 generators (uppercase = inverse), signed 1-based
// indices in brackets otherwise.
std::string format_word(const Word& w, int generator_count);

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

// Grammar (one item per line, `#` comments, blank lines ignored):
//   gens <k>
//   <relator>
// A relator is either a run of letters (a..z generators 0..25, A..Z their
// inverses, whitespace ignored) or a bracketed list of signed 1-based
// generator indices such as `[1 -2 -1 2]`. A line `1` denotes the empty
// relator and is dropped. Relators are freely reduced on input.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation(const std::string& text);
void write_presentation(std::ostream& out, const Presentation& p);

// Exponent-sum matrix (rows: relators, columns: generators).
SparseIntMatrix relator_matrix(const Presentation& p);

// Abelianization as a finitely generated abelian group.
HomologyGroup abelianization(const Presentation& p);

// Lower bound d(G) >= d(G^ab) = betti + number of torsion factors.
std::pair<std::size_t, HomologyGroup> abelianization_min_generators(const Presentation& p);

// Two-dimensional cell structure: edges are oriented tail -> head, a triangle
// lists its edges (e01, e12, e02) so that its boundary word is e01 e12 e02^-1.
// Loops and multi-edges are allowed (glued complexes need them).
struct Skeleton2 {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
};

Skeleton2 skeleton_of(const OrientedTriangulation& t);

// Fundamental group presentation of a connected 2-complex relative to a
// breadth-first spanning tree (neighbours visited smallest vertex first).
// Generators are the non-tree edges in edge order.
struct ComplexPresentation {
  Presentation presentation;
  int base_vertex = 0;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_generator;   // edge -> generator, -1 on tree edges
  std::vector<int> generator_edge;   // generator -> edge
  std::vector<int> tree_parent_edge; // vertex -> tree edge to its parent, -1 at base

  // Word of the loop tree(base->tail) . edge . tree(head->base), traversed
  // forwards or backwards.
  Word edge_word(int edge, bool forward = true) const;
  // Same for the edge joining u and w in a simplicial complex (u != w).
  Word edge_word_between(int u, int w) const;

 private:
  friend ComplexPresentation presentation_from_complex(const Skeleton2&, int);
  std::unordered_map<long long, int> edge_lookup_;
};

ComplexPresentation presentation_from_complex(const Skeleton2& complex, int base_vertex);
ComplexPresentation presentation_from_complex(const OrientedTriangulation& t, int base_vertex = 0);

}  // namespace rgsv
