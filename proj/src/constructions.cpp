#include "rgsv/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rgsv/coset.hpp"
#include "rgsv/cover.hpp"
#include "rgsv/error.hpp"
#include "rgsv/tietze.hpp"

namespace rgsv {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (Letter l : w) {
    const Word& img = images[static_cast<std::size_t>(generator_of(l))];
    if (l > 0)
      out.insert(out.end(), img.begin(), img.end());
    else
      for (Letter x : inverse(img)) out.push_back(x);
  }
  return free_reduce(out);
}

int lowest_bit(unsigned mask) { return __builtin_ctz(mask); }
int highest_bit(unsigned mask) { return 31 - __builtin_clz(mask); }

void check_top_cycle(const OrientedTriangulation& t, const IntegerChain& c) {
  if (c.degree() != t.dimension() || c.is_zero()) throw Error(ErrorCode::NotACycle, "chain is not a nonzero top-degree chain");
  for (const auto& [s, a] : c.entries())
    if (!t.simplex_index(s)) throw Error(ErrorCode::NotACycle, "chain is not supported on facets of the triangulation");
  if (!c.boundary().is_zero()) throw Error(ErrorCode::NotACycle, "boundary of the chain is nonzero");
}

}  // namespace

GluedComplex build_glued_complex(const OrientedTriangulation& t, const IntegerChain& c) {
  check_top_cycle(t, c);
  const int n = t.dimension();
  const unsigned full = (1u << (n + 1)) - 1;
  const std::size_t per_cell = std::size_t{1} << (n + 1);

  GluedComplex x;
  x.dimension = n;
  for (const auto& [s, a] : c.entries()) {
    x.cells.push_back(s);
    x.coefficients.push_back(a);
  }
  const std::size_t m = x.cells.size();
  auto node = [&](std::size_t j, unsigned mask) { return static_cast<int>(j * per_cell + mask); };

  // Codimension-one faces with the same image are glued, vertex by vertex in
  // order; lower faces follow.
  std::map<Simplex, std::vector<std::pair<std::size_t, int>>> by_face;
  for (std::size_t j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) by_face[drop_vertex(x.cells[j], static_cast<std::size_t>(k))].emplace_back(j, k);
  UnionFind uf(m * per_cell);
  for (const auto& [face, members] : by_face) {
    auto [j0, k0] = members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
      auto [j1, k1] = members[i];
      std::vector<int> pos0, pos1;
      for (int p = 0; p <= n; ++p) {
        if (p != k0) pos0.push_back(p);
        if (p != k1) pos1.push_back(p);
      }
      const unsigned face_mask = (1u << n) - 1;  // subsets of the n face positions
      for (unsigned sub = 1; sub <= face_mask; ++sub) {
        unsigned m0 = 0, m1 = 0;
        for (int b = 0; b < n; ++b)
          if (sub & (1u << b)) {
            m0 |= 1u << pos0[static_cast<std::size_t>(b)];
            m1 |= 1u << pos1[static_cast<std::size_t>(b)];
          }
        uf.unite(node(j0, m0), node(j1, m1));
      }
    }
  }

  // Number the classes separately in each dimension.
  x.class_of.assign(m * per_cell, -1);
  std::vector<std::map<int, int>> ids(static_cast<std::size_t>(n + 2));
  for (std::size_t j = 0; j < m; ++j)
    for (unsigned mask = 1; mask <= full; ++mask) {
      auto dim = static_cast<std::size_t>(__builtin_popcount(mask));
      int root = uf.find(node(j, mask));
      auto [it, inserted] = ids[dim].emplace(root, static_cast<int>(ids[dim].size()));
      x.class_of[static_cast<std::size_t>(node(j, mask))] = it->second;
      if (!inserted) continue;
      if (dim == 1) {
        x.vertex_image.push_back(x.cells[j][static_cast<std::size_t>(lowest_bit(mask))]);
      } else if (dim == 2) {
        int lo = lowest_bit(mask), hi = highest_bit(mask);
        x.skeleton.edges.emplace_back(x.class_of[static_cast<std::size_t>(node(j, 1u << lo))],
                                      x.class_of[static_cast<std::size_t>(node(j, 1u << hi))]);
        x.edge_image.emplace_back(x.cells[j][static_cast<std::size_t>(lo)], x.cells[j][static_cast<std::size_t>(hi)]);
        x.connector.push_back(false);
      } else if (dim == 3) {
        int p = lowest_bit(mask), r = highest_bit(mask);
        int q = lowest_bit(mask & ~(1u << p));
        auto edge = [&](int a, int b) { return x.class_of[static_cast<std::size_t>(node(j, (1u << a) | (1u << b)))]; };
        x.skeleton.triangles.push_back({edge(p, q), edge(q, r), edge(p, r)});
        x.triangle_cell.push_back(static_cast<int>(j));
        x.triangle_at_vertex0.push_back(false);
      }
    }
  // A triangle class touches vertex 0 of a cell if any of its representatives does.
  for (std::size_t j = 0; j < m; ++j)
    for (unsigned mask = 1; mask <= full; ++mask)
      if (__builtin_popcount(mask) == 3 && (mask & 1u))
        x.triangle_at_vertex0[static_cast<std::size_t>(x.class_of[static_cast<std::size_t>(node(j, mask))])] = true;
  x.skeleton.vertex_count = static_cast<int>(x.vertex_image.size());

  // Join components by extra edges (mapped to tree paths downstairs).
  UnionFind comp(static_cast<std::size_t>(x.skeleton.vertex_count));
  for (auto [a, b] : x.skeleton.edges) comp.unite(a, b);
  const int root_vertex = x.class_of[static_cast<std::size_t>(node(0, 1u))];
  for (int v = 0; v < x.skeleton.vertex_count; ++v)
    if (comp.find(v) != comp.find(root_vertex)) {
      comp.unite(v, root_vertex);
      x.skeleton.edges.emplace_back(root_vertex, v);
      x.edge_image.emplace_back(x.vertex_image[static_cast<std::size_t>(root_vertex)],
                                x.vertex_image[static_cast<std::size_t>(v)]);
      x.connector.push_back(true);
      ++x.components_joined;
    }

  // Cellular boundary of z_c.
  std::map<int, BigInt> boundary;
  for (std::size_t j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) {
      int face = x.class_of[static_cast<std::size_t>(node(j, full & ~(1u << k)))];
      boundary[face] += (k % 2 == 0 ? x.coefficients[j] : BigInt(-x.coefficients[j]));
    }
  x.cycle_verified = std::all_of(boundary.begin(), boundary.end(), [](const auto& e) { return e.second == 0; });
  return x;
}

GluedComplexCertificate verify_glued_complex(const OrientedTriangulation& t, const GluedComplex& x,
                                             const IntegerChain& c, const CertificateBudgets& budgets) {
  GluedComplexCertificate cert;
  auto fail = [&](const std::string& why) { cert.failures.push_back(why); };

  IntegerChain image(x.dimension);
  for (std::size_t j = 0; j < x.cells.size(); ++j) image.add(x.cells[j], x.coefficients[j]);
  cert.pushforward_matches = image == c;
  if (!cert.pushforward_matches) fail("glued cycle does not map onto the input cycle");
  if (!x.cycle_verified) fail("glued chain is not a cycle");

  const int base = x.class_of[1];  // vertex 0 of cell 0
  auto cpx = presentation_from_complex(x.skeleton, base);
  cert.abelianization = abelianization(cpx.presentation);

  // Guided elimination: relators of triangles at vertex 0 of a cell first.
  TietzeOptions options;
  options.budget = budgets.tietze_budget;
  std::vector<std::size_t> order(x.skeleton.triangles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (x.triangle_at_vertex0[a] != x.triangle_at_vertex0[b]) return static_cast<bool>(x.triangle_at_vertex0[a]);
    return x.triangle_cell[a] < x.triangle_cell[b];
  });
  options.relator_priority = order;
  auto reduced = tietze_simplify(cpx.presentation, options);
  cert.achieved_rank = static_cast<std::size_t>(reduced.presentation.generator_count);
  cert.target_rank = static_cast<std::size_t>(x.dimension) * x.cells.size();
  cert.rank_stalled = cert.achieved_rank > cert.target_rank;

  // Images of the generators of pi_1(X_c) in pi_1(M).
  auto cpm = presentation_from_complex(t);
  auto edge_word = [&](int e, int from) {
    if (x.connector[static_cast<std::size_t>(e)]) return Word{};
    auto [u, w] = x.edge_image[static_cast<std::size_t>(e)];
    bool forward = x.skeleton.edges[static_cast<std::size_t>(e)].first == from;
    return forward ? cpm.edge_word_between(u, w) : cpm.edge_word_between(w, u);
  };
  std::vector<Word> to_vertex(static_cast<std::size_t>(x.skeleton.vertex_count));
  std::vector<bool> done(to_vertex.size(), false);
  done[static_cast<std::size_t>(base)] = true;
  for (int v = 0; v < x.skeleton.vertex_count; ++v) {
    std::vector<int> path;
    for (int u = v; !done[static_cast<std::size_t>(u)];) {
      path.push_back(u);
      auto [a, b] = x.skeleton.edges[static_cast<std::size_t>(cpx.tree_parent_edge[static_cast<std::size_t>(u)])];
      u = a == u ? b : a;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      int u = *it;
      int e = cpx.tree_parent_edge[static_cast<std::size_t>(u)];
      auto [a, b] = x.skeleton.edges[static_cast<std::size_t>(e)];
      int parent = a == u ? b : a;
      to_vertex[static_cast<std::size_t>(u)] = concat(to_vertex[static_cast<std::size_t>(parent)], edge_word(e, parent));
      done[static_cast<std::size_t>(u)] = true;
    }
  }
  std::vector<Word> images;
  for (int e : cpx.generator_edge) {
    auto [a, b] = x.skeleton.edges[static_cast<std::size_t>(e)];
    Word w = concat(to_vertex[static_cast<std::size_t>(a)], edge_word(e, a));
    images.push_back(concat(w, inverse(to_vertex[static_cast<std::size_t>(b)])));
  }

  auto target = tietze_simplify(cpm.presentation, budgets.tietze_budget);
  std::vector<Word> mapped;
  for (const auto& w : images) mapped.push_back(substitute(w, target.generator_images));
  auto e = todd_coxeter(target.presentation, mapped, budgets.max_cosets);
  cert.cosets_defined = e.cosets_defined;
  cert.image_index = e.index();
  if (e.overflow()) {
    cert.status = "unresolved";
    fail("coset enumeration of the image subgroup overflowed");
    return cert;
  }
  if (cert.image_index != 1) fail("image subgroup has index " + std::to_string(cert.image_index));
  cert.passed = cert.failures.empty();
  cert.status = cert.passed ? "certified" : "failed";
  return cert;
}

GeneratorExtraction extract_generators(const OrientedTriangulation& t, const IntegerChain& c, int base_vertex) {
  check_top_cycle(t, c);
  GeneratorExtraction ex;
  ex.presentation = presentation_from_complex(t, base_vertex);
  for (const auto& [s, a] : c.entries()) {
    ex.facets.push_back(s);
    Word g = ex.presentation.edge_word_between(s[0], s[1]);
    ex.facet_words.push_back(g);
    if (!g.empty() && std::find(ex.generators.begin(), ex.generators.end(), g) == ex.generators.end())
      ex.generators.push_back(g);
  }
  ex.l1 = c.l1_norm();
  return ex;
}

GenerationCertificate verify_generation(const OrientedTriangulation& t, const IntegerChain& c,
                                        const GeneratorExtraction& ex, const CertificateBudgets& budgets) {
  return verify_generation(t, c, ex, ex.generators, budgets);
}

GenerationCertificate verify_generation(const OrientedTriangulation& t, const IntegerChain& c,
                                        const GeneratorExtraction& ex, const std::vector<Word>& generators,
                                        const CertificateBudgets& budgets) {
  GenerationCertificate cert;
  auto fail = [&](const std::string& why) { cert.failures.push_back(why); };
  cert.generator_count = generators.size();
  cert.l1 = ex.l1;
  if (BigInt(cert.generator_count) > cert.l1) fail("more generators than the l1 norm");

  auto simplified = tietze_simplify(ex.presentation.presentation, budgets.tietze_budget);
  std::vector<Word> mapped;
  for (const auto& w : generators) mapped.push_back(substitute(w, simplified.generator_images));
  auto e = todd_coxeter(simplified.presentation, mapped, budgets.max_cosets);
  cert.cosets_defined = e.cosets_defined;
  if (e.overflow()) {
    cert.status = "unresolved";
    fail("coset enumeration of <S> overflowed");
    return cert;
  }
  cert.index = e.index();
  auto cover = build_cover(t, ex.presentation, extend_table(*e.table, simplified.generator_images));
  const int d = cover.degree;

  // Lift with every vertex 0 in the section, once through the coset table...
  IntegerChain lifted = lift_from_sheet(cover, c, 0);
  // ...and once by walking the cover: the facet over sigma at the section copy of its vertex 0.
  std::vector<std::vector<int>> star(static_cast<std::size_t>(cover.total.vertex_count()));
  for (std::size_t f = 0; f < cover.total.facet_count(); ++f)
    for (int v : cover.total.facets()[f]) star[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  IntegerChain walked(c.degree());
  for (const auto& [s, a] : c.entries()) {
    int start = -1;
    for (int v = 0; v < cover.total.vertex_count(); ++v)
      if (cover.vertex_map[static_cast<std::size_t>(v)] == std::make_pair(s[0], 0)) start = v;
    for (int f : star[static_cast<std::size_t>(start)]) {
      Simplex up = cover.total.facets()[static_cast<std::size_t>(f)];
      Simplex down;
      for (int v : up) down.push_back(cover.vertex_map[static_cast<std::size_t>(v)].first);
      std::sort(down.begin(), down.end());
      if (down != s) continue;
      std::sort(up.begin(), up.end(), [&](int p, int q) {
        return cover.vertex_map[static_cast<std::size_t>(p)].first < cover.vertex_map[static_cast<std::size_t>(q)].first;
      });
      walked.add_ordered(up, a);
    }
  }
  cert.lifts_agree = lifted == walked;
  if (!cert.lifts_agree) fail("table-based and adjacency-based lifts differ");

  cert.lift_is_cycle = lifted.boundary().is_zero();
  if (!cert.lift_is_cycle) fail("section lift is not a cycle");

  auto fundamental = fundamental_cycle(cover.total).chain;
  const auto& [first, coefficient] = *lifted.entries().begin();
  BigInt base_coefficient = fundamental.coefficient(first);
  if (base_coefficient != 0 && coefficient % base_coefficient == 0) cert.lift_multiple = coefficient / base_coefficient;
  if (cert.lift_multiple == 0 || !(lifted == fundamental.scaled(cert.lift_multiple))) {
    fail("section lift is not a multiple of the fundamental cycle of the cover");
  } else if (!(pushforward(cover, fundamental.scaled(cert.lift_multiple)) == c)) {
    fail("projection of the section lift is not the input cycle");
  }
  // p(lift) = c and p([cover]) = d [M] force lift_multiple * d = +-1.
  if (d != 1) {
    cert.status = "index_not_one";
    fail("generated subgroup has index " + std::to_string(d));
    return cert;
  }
  cert.passed = cert.failures.empty();
  cert.status = cert.passed ? "certified" : "failed";
  return cert;
}

}  // namespace rgsv
