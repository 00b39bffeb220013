#include "rgsv/pachner.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rgsv {

BistellarComplex::BistellarComplex(const OrientedTriangulation& t) : BistellarComplex(t.dimension(), t.facets()) {}

BistellarComplex::BistellarComplex(int dimension, const std::vector<Simplex>& facets) : dimension_(dimension) {
  for (const auto& f : facets)
    for (int v : f) next_vertex_ = std::max(next_vertex_, v + 1);
  star_.resize(static_cast<std::size_t>(next_vertex_));
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    add_facet(std::move(f));
  }
}

std::size_t BistellarComplex::vertex_count() const {
  return static_cast<std::size_t>(std::count_if(star_.begin(), star_.end(), [](const auto& s) { return !s.empty(); }));
}

int BistellarComplex::degree(int vertex) const {
  if (vertex < 0 || vertex >= next_vertex_) return 0;
  return static_cast<int>(star_[static_cast<std::size_t>(vertex)].size());
}

std::vector<int> BistellarComplex::star(const Simplex& a) const {
  if (a.empty()) return {};
  int pivot = a.front();
  for (int v : a) {
    if (v < 0 || v >= next_vertex_) return {};
    if (star_[static_cast<std::size_t>(v)].size() < star_[static_cast<std::size_t>(pivot)].size()) pivot = v;
  }
  std::vector<int> out;
  for (int id : star_[static_cast<std::size_t>(pivot)]) {
    const auto& f = facets_[static_cast<std::size_t>(id)];
    if (std::includes(f.begin(), f.end(), a.begin(), a.end())) out.push_back(id);
  }
  return out;
}

bool BistellarComplex::is_face(const Simplex& sorted) const { return !star(sorted).empty(); }

bool BistellarComplex::move_target(const Simplex& a, Simplex& b) const {
  const std::size_t k = a.size();
  const std::size_t n = static_cast<std::size_t>(dimension_);
  b.clear();
  if (k == 0 || k > n + 1) return false;
  auto st = star(a);
  if (k == n + 1) return st.size() == 1;
  const std::size_t need = n + 2 - k;
  if (st.size() != need) return false;
  for (int id : st)
    for (int v : facets_[static_cast<std::size_t>(id)])
      if (!std::binary_search(a.begin(), a.end(), v)) b.push_back(v);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (b.size() != need) return false;
  return !is_face(b);
}

bool BistellarComplex::apply(const Simplex& a) {
  Simplex b;
  if (!move_target(a, b)) return false;
  for (int id : star(a)) remove_facet(id);
  if (b.empty()) {
    b.push_back(next_vertex_++);
    star_.emplace_back();
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    Simplex f = b;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) f.push_back(a[j]);
    std::sort(f.begin(), f.end());
    add_facet(std::move(f));
  }
  return true;
}

std::vector<int> BistellarComplex::link_cycle(int vertex) const {
  std::vector<std::pair<int, int>> edges;
  for (int id : star_[static_cast<std::size_t>(vertex)]) {
    std::pair<int, int> e{-1, -1};
    for (int v : facets_[static_cast<std::size_t>(id)]) {
      if (v == vertex) continue;
      (e.first < 0 ? e.first : e.second) = v;
    }
    edges.push_back(e);
  }
  std::vector<int> cycle;
  if (edges.empty()) return cycle;
  std::vector<bool> used(edges.size(), false);
  cycle.push_back(edges[0].first);
  int current = edges[0].second;
  used[0] = true;
  while (current != cycle.front()) {
    cycle.push_back(current);
    bool advanced = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (used[i]) continue;
      if (edges[i].first == current || edges[i].second == current) {
        used[i] = true;
        current = edges[i].first == current ? edges[i].second : edges[i].first;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return cycle;
}

std::vector<Simplex> BistellarComplex::facets() const {
  std::vector<Simplex> out;
  out.reserve(alive_count_);
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (alive_[i]) out.push_back(facets_[i]);
  return out;
}

void BistellarComplex::remove_facet(int id) {
  alive_[static_cast<std::size_t>(id)] = 0;
  --alive_count_;
  for (int v : facets_[static_cast<std::size_t>(id)]) {
    auto& s = star_[static_cast<std::size_t>(v)];
    auto it = std::find(s.begin(), s.end(), id);
    *it = s.back();
    s.pop_back();
  }
  free_.push_back(id);
}

int BistellarComplex::add_facet(Simplex s) {
  int id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
    facets_[static_cast<std::size_t>(id)] = std::move(s);
    alive_[static_cast<std::size_t>(id)] = 1;
  } else {
    id = static_cast<int>(facets_.size());
    facets_.push_back(std::move(s));
    alive_.push_back(1);
  }
  ++alive_count_;
  for (int v : facets_[static_cast<std::size_t>(id)]) star_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

namespace {

struct RunResult {
  std::vector<Simplex> best;
  std::size_t moves = 0;
  bool budget_exhausted = false;
};

class Annealer {
 public:
  Annealer(const OrientedTriangulation& t, const PachnerOptions& o, std::uint64_t stream)
      : k_(t), options_(o), temperature_(o.initial_temperature) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    rng_.seed(seq);
  }

  RunResult run() {
    const int n = k_.dimension();
    best_count_ = k_.facet_count();
    best_ = k_.facets();
    std::size_t stalled = 0;
    while (!exhausted()) {
      greedy();
      if (k_.facet_count() < best_count_) {
        best_count_ = k_.facet_count();
        dirty_ = true;
        stalled = 0;
      } else if (++stalled > options_.stall_rounds) {
        break;
      }
      // Nothing is left to gain below the boundary of the (n+1)-simplex.
      if (n == 1 || k_.facet_count() <= static_cast<std::size_t>(n + 2) || exhausted()) break;
      perturb();
    }
    if (dirty_ && k_.facet_count() == best_count_) best_ = k_.facets();
    return {best_, moves_, exhausted()};
  }

 private:
  bool exhausted() const { return moves_ >= options_.move_budget; }

  bool apply(const Simplex& a) {
    if (exhausted() || !k_.apply(a)) return false;
    ++moves_;
    if (k_.facet_count() < best_count_) {
      best_count_ = k_.facet_count();
      dirty_ = true;
    }
    return true;
  }

  void greedy() {
    bool changed = true;
    while (changed && !exhausted()) {
      changed = false;
      if (k_.dimension() == 2) {
        for (int v = 0; v < k_.vertex_bound() && !exhausted(); ++v)
          if (k_.degree(v) > 0 && remove_surface_vertex(v)) changed = true;
      } else {
        for (int v = 0; v < k_.vertex_bound() && !exhausted(); ++v)
          if (k_.degree(v) == k_.dimension() + 1 && apply({v})) changed = true;
        if (k_.dimension() == 3) {
          for (std::size_t id = 0; id < k_.facet_slots() && !exhausted(); ++id) {
            if (!k_.alive(static_cast<int>(id))) continue;
            Simplex f = k_.facet(static_cast<int>(id));
            for (std::size_t i = 0; i < 4 && k_.alive(static_cast<int>(id)); ++i)
              for (std::size_t j = i + 1; j < 4 && k_.alive(static_cast<int>(id)); ++j)
                if (k_.star({f[i], f[j]}).size() == 3 && apply({f[i], f[j]})) changed = true;
          }
        }
      }
    }
  }

  std::vector<int> neighbours(int v) const {
    std::vector<int> out;
    for (int id : k_.star({v}))
      for (int w : k_.facet(id))
        if (w != v) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Removes a surface vertex by contracting an edge that satisfies the link
  // condition, realised as flips of the other spokes followed by a 3-1 move.
  bool remove_surface_vertex(int v) {
    auto cycle = k_.link_cycle(v);
    const int d = static_cast<int>(cycle.size());
    if (d < 3) return false;
    if (d == 3) return apply({v});
    auto nv = neighbours(v);
    int pick = -1, pick_degree = 0;
    for (int i = 0; i < d; ++i) {
      auto nw = neighbours(cycle[static_cast<std::size_t>(i)]);
      std::vector<int> common;
      std::set_intersection(nv.begin(), nv.end(), nw.begin(), nw.end(), std::back_inserter(common));
      int deg = k_.degree(cycle[static_cast<std::size_t>(i)]);
      if (common.size() == 2 && (pick < 0 || deg < pick_degree)) {
        pick = i;
        pick_degree = deg;
      }
    }
    if (pick < 0) return unblock(v, cycle, nv);
    if (options_.move_budget - moves_ < static_cast<std::size_t>(d - 2)) {
      moves_ = options_.move_budget;
      return false;
    }
    for (int step = 1; step <= d - 3; ++step) {
      int w = cycle[static_cast<std::size_t>((pick + step) % d)];
      Simplex edge{std::min(v, w), std::max(v, w)};
      if (!apply(edge)) return false;
    }
    return apply({v});
  }

  // Every spoke v-w lies on a non-facial triangle v-w-x. Flipping an edge w-x
  // or v-x of such a triangle (both size-neutral) can restore the link
  // condition; at most one flip per call keeps the greedy pass from churning.
  bool unblock(int v, const std::vector<int>& cycle, const std::vector<int>& nv) {
    const int d = static_cast<int>(cycle.size());
    for (int i = 0; i < d; ++i) {
      int w = cycle[static_cast<std::size_t>(i)];
      int prev = cycle[static_cast<std::size_t>((i + d - 1) % d)];
      int next = cycle[static_cast<std::size_t>((i + 1) % d)];
      auto nw = neighbours(w);
      std::vector<int> common;
      std::set_intersection(nv.begin(), nv.end(), nw.begin(), nw.end(), std::back_inserter(common));
      if (common.size() != 3) continue;
      for (int x : common) {
        if (x == prev || x == next) continue;
        for (int y : {w, v}) {
          Simplex edge{std::min(x, y), std::max(x, y)};
          if (apply(edge)) {
            ++unblock_flips_;
            return false;
          }
        }
      }
    }
    return false;
  }

  void perturb() {
    const int n = k_.dimension();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> slot(0, k_.facet_slots() - 1);
    const std::size_t attempts = 4 * static_cast<std::size_t>(std::sqrt(static_cast<double>(k_.facet_count()))) + 40;
    for (std::size_t t = 0; t < attempts && !exhausted(); ++t) {
      std::size_t id = slot(rng_);
      while (!k_.alive(static_cast<int>(id))) id = slot(rng_);
      const Simplex& f = k_.facet(static_cast<int>(id));
      // Face size: neutral flips in dimension 2, 2-3 moves in dimension 3;
      // rarely a stellar subdivision.
      std::size_t size = n == 2 ? 2 : 3;
      if (unit(rng_) < 0.03) size = static_cast<std::size_t>(n + 1);
      Simplex a = f;
      std::shuffle(a.begin(), a.end(), rng_);
      a.resize(size);
      std::sort(a.begin(), a.end());
      Simplex b;
      if (!k_.move_target(a, b)) continue;
      const long delta = static_cast<long>(2 * size) - static_cast<long>(n) - 2;
      bool accept = delta < 0 || (delta == 0 ? unit(rng_) < 0.5 : unit(rng_) < std::exp(-delta / temperature_));
      if (!accept) continue;
      if (delta > 0 && dirty_ && k_.facet_count() == best_count_) {
        best_ = k_.facets();
        dirty_ = false;
      }
      apply(a);
      temperature_ = std::max(options_.floor_temperature, temperature_ * options_.cooling);
    }
  }

  BistellarComplex k_;
  const PachnerOptions& options_;
  std::mt19937_64 rng_;
  double temperature_;
  std::size_t moves_ = 0;
  std::size_t best_count_ = 0;
  std::vector<Simplex> best_;
  bool dirty_ = false;
  std::size_t unblock_flips_ = 0;
};

}  // namespace

PachnerResult pachner_simplify(const OrientedTriangulation& t, const PachnerOptions& options) {
  PachnerResult result;
  result.initial_facets = t.facet_count();
  if (t.dimension() >= 4) {
    result.triangulation = t;
    result.unsupported_dimension = true;
    return result;
  }
  const int restarts = std::max(1, options.restarts);
  std::vector<RunResult> runs(static_cast<std::size_t>(restarts));
#pragma omp parallel for schedule(dynamic) if (restarts > 1)
  for (int r = 0; r < restarts; ++r)
    runs[static_cast<std::size_t>(r)] = Annealer(t, options, static_cast<std::uint64_t>(r)).run();

  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (runs[static_cast<std::size_t>(r)].best.size() < runs[static_cast<std::size_t>(best)].best.size()) best = r;
  const auto& chosen = runs[static_cast<std::size_t>(best)];
  result.best_restart = best;
  for (const auto& run : runs) result.moves_applied += run.moves;
  result.budget_exhausted = chosen.budget_exhausted;
  if (chosen.best.size() >= t.facet_count()) {
    result.triangulation = t;
  } else {
    result.triangulation = validate_triangulation(chosen.best);
  }
  return result;
}

PachnerResult pachner_simplify(const OrientedTriangulation& t, std::uint64_t seed, std::size_t move_budget) {
  PachnerOptions options;
  options.seed = seed;
  options.move_budget = move_budget;
  return pachner_simplify(t, options);
}

}  // namespace rgsv
