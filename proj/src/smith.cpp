#include "rgsv/smith.hpp"

#include <algorithm>
#include <sstream>

#include "detail/sparse_elimination.hpp"

namespace rgsv {

namespace {

struct IntegerRing {
  using Value = BigInt;
  bool is_zero(const Value& v) const { return v == 0; }
  bool is_pivot(const Value& v) const { return v == 1 || v == -1; }
  // Pivots are units, so entry / pivot == entry * pivot.
  Value factor(const Value& entry, const Value& pivot) const { return entry * pivot; }
  Value sub_mul(const Value& x, const Value& f, const Value& y) const { return x - f * y; }
};

}  // namespace

std::vector<BigInt> SnfResult::invariant_factors() const {
  std::vector<BigInt> out;
  std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
  return out;
}

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          BigInt mag = abs(s(i, j));
          if (pr == rows || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return {std::move(u), std::move(s), std::move(v)};

      s.swap_rows(t, pr);
      u.swap_rows(t, pr);
      s.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        BigInt q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        BigInt q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility repair: pull an offending row into the pivot row.
      bool repaired = false;
      for (std::size_t i = t + 1; i < rows && !repaired; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (s(i, j) != 0 && s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            repaired = true;
            break;
          }
        }
      }
      if (!repaired) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

std::vector<BigInt> invariant_factors(const SparseIntMatrix& a) {
  using Column = detail::SparseEliminator<IntegerRing>::Column;
  std::vector<Column> cols(a.cols);
  for (std::size_t c = 0; c < a.cols; ++c) {
    cols[c].reserve(a.columns[c].size());
    for (const auto& [r, v] : a.columns[c]) cols[c].emplace_back(r, BigInt(v));
  }
  detail::SparseEliminator<IntegerRing> elim(a.rows, std::move(cols), IntegerRing{}, false);
  std::size_t units = elim.eliminate();
  std::vector<Column> rest = elim.residual();

  std::vector<BigInt> factors(units, BigInt(1));
  if (!rest.empty()) {
    std::vector<int> used_rows;
    for (const auto& col : rest)
      for (const auto& e : col) used_rows.push_back(e.first);
    std::sort(used_rows.begin(), used_rows.end());
    used_rows.erase(std::unique(used_rows.begin(), used_rows.end()), used_rows.end());
    IntMatrix dense(used_rows.size(), rest.size());
    for (std::size_t c = 0; c < rest.size(); ++c) {
      for (const auto& [r, v] : rest[c]) {
        auto row = static_cast<std::size_t>(std::lower_bound(used_rows.begin(), used_rows.end(), r) - used_rows.begin());
        dense(row, c) = v;
      }
    }
    for (auto& f : smith_normal_form(dense).invariant_factors()) factors.push_back(std::move(f));
  }
  return factors;
}

HomologyGroup make_group(std::size_t free_rank, const std::vector<BigInt>& factors) {
  HomologyGroup g;
  g.betti = free_rank;
  for (const auto& f : factors)
    if (f > 1) g.torsion.push_back(f);
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (betti > 0) {
    out << "Z";
    if (betti > 1) out << "^" << betti;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace rgsv
