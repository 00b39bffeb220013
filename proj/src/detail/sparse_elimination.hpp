#pragma once

// Markowitz-ordered sparse elimination shared by the exact integer
// invariant-factor routine and the prime-field rank kernel.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

namespace rgsv::detail {

// Ring requirements:
//   using Value;
//   bool is_zero(const Value&) const;
//   bool is_pivot(const Value&) const;                    // unit test
//   Value factor(const Value& entry, const Value& pivot) const; // entry / pivot
//   Value sub_mul(const Value& x, const Value& f, const Value& y) const; // x - f*y
template <class Ring>
class SparseEliminator {
 public:
  using Value = typename Ring::Value;
  using Column = std::vector<std::pair<int, Value>>;

  SparseEliminator(std::size_t rows, std::vector<Column> columns, Ring ring, bool parallel)
      : rows_(rows), cols_(std::move(columns)), ring_(std::move(ring)), parallel_(parallel) {}

  // Eliminates every reachable unit pivot; returns how many were used.
  std::size_t eliminate() {
    std::vector<std::vector<int>> row_cols(rows_);
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (const auto& e : cols_[c]) row_cols[static_cast<std::size_t>(e.first)].push_back(static_cast<int>(c));
    active_.assign(cols_.size(), true);

    using Item = std::pair<std::size_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) heap.emplace(cols_[c].size(), static_cast<int>(c));

    std::size_t pivots = 0;
    std::vector<int> affected;
    while (!heap.empty()) {
      auto [nnz, c] = heap.top();
      heap.pop();
      auto& pcol = cols_[static_cast<std::size_t>(c)];
      if (!active_[static_cast<std::size_t>(c)] || pcol.size() != nnz || nnz == 0) continue;

      int prow = -1;
      std::size_t best = 0;
      Value pval{};
      for (const auto& [r, v] : pcol) {
        if (!ring_.is_pivot(v)) continue;
        std::size_t cost = row_cols[static_cast<std::size_t>(r)].size();
        if (prow < 0 || cost < best) {
          prow = r;
          best = cost;
          pval = v;
        }
      }
      if (prow < 0) continue;

      auto& candidates = row_cols[static_cast<std::size_t>(prow)];
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      affected.clear();
      for (int other : candidates) {
        if (other == c || !active_[static_cast<std::size_t>(other)]) continue;
        if (find_entry(cols_[static_cast<std::size_t>(other)], prow) != nullptr) affected.push_back(other);
      }

      const Column& pivot_col = pcol;
      const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(affected.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel_ && count > 32)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto& target = cols_[static_cast<std::size_t>(affected[static_cast<std::size_t>(i)])];
        const Value* entry = find_entry(target, prow);
        Value f = ring_.factor(*entry, pval);
        target = combine(target, f, pivot_col);
      }

      for (int other : affected) {
        for (const auto& e : pivot_col)
          if (e.first != prow) row_cols[static_cast<std::size_t>(e.first)].push_back(other);
        const auto& col = cols_[static_cast<std::size_t>(other)];
        if (!col.empty()) heap.emplace(col.size(), other);
      }
      active_[static_cast<std::size_t>(c)] = false;
      ++pivots;
    }
    return pivots;
  }

  // Columns still carrying entries after elimination.
  std::vector<Column> residual() const {
    std::vector<Column> out;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (active_[c] && !cols_[c].empty()) out.push_back(cols_[c]);
    return out;
  }

 private:
  static const Value* find_entry(const Column& col, int row) {
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const std::pair<int, Value>& e, int r) { return e.first < r; });
    if (it == col.end() || it->first != row) return nullptr;
    return &it->second;
  }

  Column combine(const Column& x, const Value& f, const Column& y) const {
    Column out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    Value zero{};
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        Value v = ring_.sub_mul(zero, f, y[j].second);
        if (!ring_.is_zero(v)) out.emplace_back(y[j].first, std::move(v));
        ++j;
      } else {
        Value v = ring_.sub_mul(x[i].second, f, y[j].second);
        if (!ring_.is_zero(v)) out.emplace_back(x[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t rows_;
  std::vector<Column> cols_;
  std::vector<bool> active_;
  Ring ring_;
  bool parallel_;
};

}  // namespace rgsv::detail
