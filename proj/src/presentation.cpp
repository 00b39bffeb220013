#include "rgsv/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>

#include "rgsv/error.hpp"
#include "rgsv/simplicial.hpp"

namespace rgsv {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string format_word(const Word& w, int generator_count) {
  if (w.empty()) return "1";
  std::ostringstream out;
  if (generator_count <= 26) {
    for (Letter l : w) out << static_cast<char>((l > 0 ? 'a' : 'A') + generator_of(l));
  } else {
    out << "[";
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << "]";
  }
  return out.str();
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  bool have_gens = false;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (!have_gens) {
      std::istringstream ls(line);
      std::string key;
      int k = -1;
      ls >> key >> k;
      if (key != "gens" || ls.fail() || k < 0) fail("expected `gens k`");
      p.generator_count = k;
      have_gens = true;
      continue;
    }
    Word w;
    if (line.find('[') != std::string::npos) {
      auto open = line.find('[');
      auto close = line.find(']');
      if (close == std::string::npos || close < open) fail("unterminated index list");
      std::istringstream ls(line.substr(open + 1, close - open - 1));
      long long v;
      while (ls >> v) {
        if (v == 0 || std::llabs(v) > p.generator_count) fail("generator index out of range");
        w.push_back(static_cast<Letter>(v));
      }
      if (!ls.eof()) fail("bad index list");
    } else if (line.find_first_not_of("1 \t\r") == std::string::npos) {
      // identity relator
    } else {
      for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (!std::isalpha(static_cast<unsigned char>(ch))) fail("unexpected character in relator");
        bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
        int g = std::tolower(static_cast<unsigned char>(ch)) - 'a';
        if (g >= p.generator_count) fail("generator letter out of range");
        w.push_back(letter(g, inv));
      }
    }
    w = free_reduce(w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  if (!have_gens) throw Error(ErrorCode::ParseError, "missing `gens k` header");
  return p;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

void write_presentation(std::ostream& out, const Presentation& p) {
  out << "gens " << p.generator_count << "\n";
  for (const auto& r : p.relators) out << format_word(r, p.generator_count) << "\n";
}

SparseIntMatrix relator_matrix(const Presentation& p) {
  SparseIntMatrix m(p.relators.size(), static_cast<std::size_t>(p.generator_count));
  std::vector<std::map<int, std::int64_t>> cols(static_cast<std::size_t>(p.generator_count));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (Letter l : p.relators[r]) cols[static_cast<std::size_t>(generator_of(l))][static_cast<int>(r)] += (l > 0 ? 1 : -1);
  for (std::size_t g = 0; g < cols.size(); ++g)
    for (const auto& [r, v] : cols[g])
      if (v != 0) m.columns[g].emplace_back(r, v);
  return m;
}

HomologyGroup abelianization(const Presentation& p) {
  auto factors = invariant_factors(relator_matrix(p));
  return make_group(static_cast<std::size_t>(p.generator_count) - factors.size(), factors);
}

std::pair<std::size_t, HomologyGroup> abelianization_min_generators(const Presentation& p) {
  HomologyGroup g = abelianization(p);
  return {g.min_generators(), std::move(g)};
}

Skeleton2 skeleton_of(const OrientedTriangulation& t) {
  Skeleton2 s;
  s.vertex_count = t.vertex_count();
  const auto& edges = t.simplices(1);
  s.edges.reserve(edges.size());
  for (const auto& e : edges) s.edges.emplace_back(e[0], e[1]);
  if (t.dimension() >= 2) {
    auto edge_id = [&](int a, int b) { return static_cast<int>(*t.simplex_index({a, b})); };
    for (const auto& tri : t.simplices(2))
      s.triangles.push_back({edge_id(tri[0], tri[1]), edge_id(tri[1], tri[2]), edge_id(tri[0], tri[2])});
  }
  return s;
}

Word ComplexPresentation::edge_word(int edge, bool forward) const {
  int g = edge_generator[static_cast<std::size_t>(edge)];
  if (g < 0) return {};
  return {letter(g, !forward)};
}

Word ComplexPresentation::edge_word_between(int u, int w) const {
  int lo = std::min(u, w), hi = std::max(u, w);
  auto it = edge_lookup_.find(static_cast<long long>(lo) * vertex_count + hi);
  if (it == edge_lookup_.end()) throw Error(ErrorCode::InvalidInput, "no edge between the given vertices");
  int e = it->second;
  return edge_word(e, edges[static_cast<std::size_t>(e)].first == u);
}

ComplexPresentation presentation_from_complex(const Skeleton2& complex, int base_vertex) {
  const int nv = complex.vertex_count;
  if (base_vertex < 0 || base_vertex >= nv) throw Error(ErrorCode::BadParams, "base vertex out of range");
  ComplexPresentation cp;
  cp.base_vertex = base_vertex;
  cp.vertex_count = nv;
  cp.edges = complex.edges;

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
  for (std::size_t e = 0; e < complex.edges.size(); ++e) {
    auto [u, w] = complex.edges[e];
    adj[static_cast<std::size_t>(u)].emplace_back(w, static_cast<int>(e));
    if (u != w) adj[static_cast<std::size_t>(w)].emplace_back(u, static_cast<int>(e));
    int lo = std::min(u, w), hi = std::max(u, w);
    cp.edge_lookup_.emplace(static_cast<long long>(lo) * nv + hi, static_cast<int>(e));
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  cp.tree_parent_edge.assign(static_cast<std::size_t>(nv), -1);
  std::vector<bool> seen(static_cast<std::size_t>(nv), false);
  std::vector<bool> tree(complex.edges.size(), false);
  std::queue<int> queue;
  queue.push(base_vertex);
  seen[static_cast<std::size_t>(base_vertex)] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      tree[static_cast<std::size_t>(e)] = true;
      cp.tree_parent_edge[static_cast<std::size_t>(w)] = e;
      queue.push(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorCode::NotConnected, "1-skeleton is disconnected");

  cp.edge_generator.assign(complex.edges.size(), -1);
  for (std::size_t e = 0; e < complex.edges.size(); ++e) {
    if (tree[e]) continue;
    cp.edge_generator[e] = static_cast<int>(cp.generator_edge.size());
    cp.generator_edge.push_back(static_cast<int>(e));
  }
  cp.presentation.generator_count = static_cast<int>(cp.generator_edge.size());
  for (const auto& tri : complex.triangles) {
    Word w = cp.edge_word(tri[0]);
    for (Letter l : cp.edge_word(tri[1])) w.push_back(l);
    for (Letter l : cp.edge_word(tri[2], false)) w.push_back(l);
    cp.presentation.relators.push_back(free_reduce(w));
  }
  return cp;
}

ComplexPresentation presentation_from_complex(const OrientedTriangulation& t, int base_vertex) {
  return presentation_from_complex(skeleton_of(t), base_vertex);
}

}  // namespace rgsv
