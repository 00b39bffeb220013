#include "rgsv/coset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "rgsv/error.hpp"
#include "rgsv/kernels.hpp"
#include "rgsv/simplicial.hpp"

namespace rgsv {

CosetTable::CosetTable(int generator_count, std::vector<std::vector<int>> action)
    : generator_count_(generator_count), forward_(std::move(action)) {
  if (static_cast<int>(forward_.size()) != generator_count_)
    throw Error(ErrorCode::InvalidInput, "coset table has the wrong number of generators");
  degree_ = forward_.empty() ? 1 : static_cast<int>(forward_.front().size());
  if (degree_ == 0) throw Error(ErrorCode::InvalidInput, "coset table of degree 0");
  backward_.assign(forward_.size(), std::vector<int>(static_cast<std::size_t>(degree_), -1));
  for (std::size_t g = 0; g < forward_.size(); ++g) {
    if (static_cast<int>(forward_[g].size()) != degree_)
      throw Error(ErrorCode::InvalidInput, "coset table rows of unequal length");
    for (int c = 0; c < degree_; ++c) {
      int d = forward_[g][static_cast<std::size_t>(c)];
      if (d < 0 || d >= degree_ || backward_[g][static_cast<std::size_t>(d)] != -1)
        throw Error(ErrorCode::InvalidInput, "generator does not act as a permutation");
      backward_[g][static_cast<std::size_t>(d)] = c;
    }
  }
}

CosetTable CosetTable::trivial(int generator_count) {
  return CosetTable(generator_count, std::vector<std::vector<int>>(static_cast<std::size_t>(generator_count), {0}));
}

bool CosetTable::is_transitive() const {
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (const auto& perm : forward_) {
      int d = perm[static_cast<std::size_t>(c)];
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = true;
        ++reached;
        stack.push_back(d);
      }
    }
  }
  return reached == static_cast<std::size_t>(degree_);
}

std::uint64_t CosetTable::content_hash() const {
  std::ostringstream out;
  out << generator_count_ << ":" << degree_;
  for (const auto& perm : forward_) {
    out << "|";
    for (int v : perm) out << v << ",";
  }
  return fnv1a(out.str());
}

bool relators_hold(const CosetTable& table, const Presentation& p) {
  return kernels::parallel::relators_hold(table, p.relators);
}

bool is_valid_coset_table(const CosetTable& table, const Presentation& p) {
  return table.generator_count() == p.generator_count && table.is_transitive() && relators_hold(table, p);
}

namespace {

std::vector<int> standard_order(int degree, int columns, const std::function<int(int, int)>& entry) {
  std::vector<int> number(static_cast<std::size_t>(degree), -1);
  std::vector<int> order{0};
  number[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int col = 0; col < columns; ++col) {
      int d = entry(order[i], col);
      if (d >= 0 && number[static_cast<std::size_t>(d)] < 0) {
        number[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  return number;
}

Letter column_letter(int col) { return letter(col / 2, col % 2 == 1); }

}  // namespace

CosetTable standardize(const CosetTable& table) {
  const int d = table.degree();
  auto number = standard_order(d, 2 * table.generator_count(),
                               [&](int c, int col) { return table.act(c, column_letter(col)); });
  std::vector<std::vector<int>> action(static_cast<std::size_t>(table.generator_count()),
                                       std::vector<int>(static_cast<std::size_t>(d)));
  for (int g = 0; g < table.generator_count(); ++g)
    for (int c = 0; c < d; ++c)
      action[static_cast<std::size_t>(g)][static_cast<std::size_t>(number[static_cast<std::size_t>(c)])] =
          number[static_cast<std::size_t>(table.permutation(g)[static_cast<std::size_t>(c)])];
  return CosetTable(table.generator_count(), std::move(action));
}

namespace {

// Hand-over-hand HLT enumerator following the classical formulation with a
// union-find coincidence queue.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : columns_(2 * p.generator_count), max_cosets_(max_cosets) {
    for (const auto& r : p.relators) relators_.push_back(to_columns(r));
  }

  std::vector<int> to_columns(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(2 * generator_of(l) + (l < 0 ? 1 : 0));
    return out;
  }

  bool run(const std::vector<Word>& subgroup) {
    if (!define_new()) return false;
    for (const auto& w : subgroup)
      if (!scan_and_fill(0, to_columns(free_reduce(w)))) return false;
    for (;;) {
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        for (const auto& r : relators_) {
          if (!alive(static_cast<int>(c))) break;
          if (!scan_and_fill(static_cast<int>(c), r)) return false;
        }
        if (!alive(static_cast<int>(c))) continue;
        for (int x = 0; x < columns_; ++x)
          if (entry(static_cast<int>(c), x) < 0 && !define(static_cast<int>(c), x)) return false;
      }
      if (complete()) return true;
    }
  }

  std::size_t defined() const { return parent_.size(); }

  CosetTable table(int generator_count) {
    std::vector<int> live;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(static_cast<int>(c))) live.push_back(static_cast<int>(c));
    std::vector<int> index(parent_.size(), -1);
    for (std::size_t i = 0; i < live.size(); ++i) index[static_cast<std::size_t>(live[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> action(static_cast<std::size_t>(generator_count),
                                         std::vector<int>(live.size()));
    for (int g = 0; g < generator_count; ++g)
      for (std::size_t i = 0; i < live.size(); ++i)
        action[static_cast<std::size_t>(g)][i] = index[static_cast<std::size_t>(rep(entry(live[i], 2 * g)))];
    return standardize(CosetTable(generator_count, std::move(action)));
  }

 private:
  int& entry(int c, int x) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(columns_) + static_cast<std::size_t>(x)]; }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  bool define_new() {
    if (parent_.size() >= max_cosets_) return false;
    parent_.push_back(static_cast<int>(parent_.size()));
    table_.resize(table_.size() + static_cast<std::size_t>(columns_), -1);
    return true;
  }

  bool define(int c, int x) {
    if (!define_new()) return false;
    int d = static_cast<int>(parent_.size()) - 1;
    entry(c, x) = d;
    entry(d, x ^ 1) = c;
    return true;
  }

  bool complete() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(static_cast<int>(c))) continue;
      for (int x = 0; x < columns_; ++x)
        if (entry(static_cast<int>(c), x) < 0) return false;
    }
    return true;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < columns_; ++x) {
        int f = entry(e, x);
        if (f < 0) continue;
        entry(f, x ^ 1) = -1;
        int e1 = rep(e);
        int f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, x ^ 1) >= 0) {
          merge(e1, entry(f1, x ^ 1), queue);
        } else {
          entry(e1, x) = f1;
          entry(f1, x ^ 1) = e1;
        }
      }
    }
  }

  bool scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) f = entry(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) b = entry(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        entry(f, w[static_cast<std::size_t>(i)]) = b;
        entry(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
        return true;
      }
      if (!define(f, w[static_cast<std::size_t>(i)])) return false;
    }
  }

  int columns_;
  std::size_t max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

Enumeration todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  for (const auto& w : subgroup)
    for (Letter l : w)
      if (generator_of(l) >= p.generator_count) throw Error(ErrorCode::BadParams, "subgroup word uses unknown generator");
  Enumerator e(p, max_cosets);
  Enumeration out;
  bool done = e.run(subgroup);
  out.cosets_defined = e.defined();
  if (done) out.table = e.table(p.generator_count);
  return out;
}

namespace {

// Partial coset table for the low-index search.
struct PartialTable {
  int columns = 0;
  int cosets = 0;
  std::vector<int> cells;  // max_index x columns, -1 undefined

  int& at(int c, int x) { return cells[static_cast<std::size_t>(c * columns + x)]; }
  int at(int c, int x) const { return cells[static_cast<std::size_t>(c * columns + x)]; }
};

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int max_index) : generators_(p.generator_count), max_index_(max_index) {
    for (const auto& r : p.relators) {
      std::vector<int> cols;
      for (Letter l : cyclic_reduce(r)) cols.push_back(2 * generator_of(l) + (l < 0 ? 1 : 0));
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
  }

  PartialTable root() const {
    PartialTable t;
    t.columns = 2 * generators_;
    t.cosets = 1;
    t.cells.assign(static_cast<std::size_t>(max_index_ * t.columns), -1);
    return t;
  }

  // Children of a node in the fixed branching order.
  std::vector<PartialTable> children(const PartialTable& t) const {
    std::vector<PartialTable> out;
    int c = -1, x = -1;
    if (!first_gap(t, c, x)) return out;
    for (int d = 0; d < t.cosets; ++d) {
      if (t.at(d, x ^ 1) >= 0) continue;
      PartialTable next = t;
      if (assign(next, c, x, d)) out.push_back(std::move(next));
    }
    if (t.cosets < max_index_) {
      PartialTable next = t;
      int d = next.cosets++;
      if (assign(next, c, x, d)) out.push_back(std::move(next));
    }
    return out;
  }

  bool complete(const PartialTable& t) const {
    int c, x;
    return !first_gap(t, c, x);
  }

  void collect(const PartialTable& t, std::vector<CosetTable>& out) const {
    if (complete(t)) {
      out.push_back(to_table(t));
      return;
    }
    for (const auto& child : children(t)) collect(child, out);
  }

  CosetTable to_table(const PartialTable& t) const {
    std::vector<std::vector<int>> action(static_cast<std::size_t>(generators_),
                                         std::vector<int>(static_cast<std::size_t>(t.cosets)));
    for (int g = 0; g < generators_; ++g)
      for (int c = 0; c < t.cosets; ++c) action[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = t.at(c, 2 * g);
    return CosetTable(generators_, std::move(action));
  }

 private:
  bool first_gap(const PartialTable& t, int& c, int& x) const {
    for (c = 0; c < t.cosets; ++c)
      for (x = 0; x < t.columns; ++x)
        if (t.at(c, x) < 0) return true;
    return false;
  }

  bool assign(PartialTable& t, int c, int x, int d) const {
    if (t.at(c, x) >= 0 || t.at(d, x ^ 1) >= 0) return false;
    t.at(c, x) = d;
    t.at(d, x ^ 1) = c;
    return close(t);
  }

  // Relator scanning without definitions; deduces single gaps, fails on a
  // contradiction.
  bool close(PartialTable& t) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < t.cosets; ++c) {
        for (const auto& w : relators_) {
          int f = c, b = c;
          std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
          while (i <= j && t.at(f, w[static_cast<std::size_t>(i)]) >= 0) f = t.at(f, w[static_cast<std::size_t>(i++)]);
          if (i > j) {
            if (f != b) return false;
            continue;
          }
          while (j >= i && t.at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) b = t.at(b, w[static_cast<std::size_t>(j--)] ^ 1);
          if (j < i) {
            if (f != b) return false;
            continue;
          }
          if (i == j) {
            int x = w[static_cast<std::size_t>(i)];
            if (t.at(b, x ^ 1) >= 0) return false;
            t.at(f, x) = b;
            t.at(b, x ^ 1) = f;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  int generators_;
  int max_index_;
  std::vector<std::vector<int>> relators_;
};

bool table_less(const CosetTable& a, const CosetTable& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.permutations() < b.permutations();
}

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& p, int max_index) {
  if (max_index < 1) return {};
  LowIndexSearch search(p, max_index);

  // Expand the tree breadth-first until there is enough work to share.
  std::vector<PartialTable> frontier{search.root()};
  std::vector<CosetTable> found;
  for (int level = 0; level < 4 && !frontier.empty(); ++level) {
    std::vector<PartialTable> next;
    for (const auto& node : frontier) {
      if (search.complete(node)) {
        found.push_back(search.to_table(node));
        continue;
      }
      for (auto& child : search.children(node)) next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<CosetTable>> partial(frontier.size());
  const auto count = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    search.collect(frontier[static_cast<std::size_t>(i)], partial[static_cast<std::size_t>(i)]);
  for (auto& list : partial)
    for (auto& t : list) found.push_back(std::move(t));

  std::sort(found.begin(), found.end(), table_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::optional<std::vector<int>> refinement_map(const CosetTable& finer, const CosetTable& coarser) {
  if (finer.generator_count() != coarser.generator_count()) return std::nullopt;
  if (finer.degree() % coarser.degree() != 0) return std::nullopt;
  std::vector<int> f(static_cast<std::size_t>(finer.degree()), -1);
  f[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int c = queue[i];
    for (int g = 0; g < finer.generator_count(); ++g) {
      for (bool inv : {false, true}) {
        Letter l = letter(g, inv);
        int d = finer.act(c, l);
        int want = coarser.act(f[static_cast<std::size_t>(c)], l);
        if (f[static_cast<std::size_t>(d)] < 0) {
          f[static_cast<std::size_t>(d)] = want;
          queue.push_back(d);
        } else if (f[static_cast<std::size_t>(d)] != want) {
          return std::nullopt;
        }
      }
    }
  }
  if (std::find(f.begin(), f.end(), -1) != f.end()) return std::nullopt;
  return f;
}

CosetTable restrict_table(const CosetTable& table, const std::vector<int>& kept) {
  std::vector<std::vector<int>> action;
  action.reserve(kept.size());
  for (int g : kept) action.push_back(table.permutation(g));
  if (action.empty()) return CosetTable::trivial(0);
  return CosetTable(static_cast<int>(kept.size()), std::move(action));
}

CosetTable extend_table(const CosetTable& table, const std::vector<Word>& images) {
  std::vector<std::vector<int>> action(images.size(), std::vector<int>(static_cast<std::size_t>(table.degree())));
  for (std::size_t g = 0; g < images.size(); ++g)
    for (int c = 0; c < table.degree(); ++c) action[g][static_cast<std::size_t>(c)] = table.act(c, images[g]);
  if (images.empty() && table.degree() != 1)
    throw Error(ErrorCode::InvalidInput, "cannot extend a nontrivial table to zero generators");
  return CosetTable(static_cast<int>(images.size()), std::move(action));
}

}  // namespace rgsv
