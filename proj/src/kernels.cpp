#include "rgsv/kernels.hpp"

#include <algorithm>
#include <map>

#include "detail/sparse_elimination.hpp"

namespace rgsv::kernels {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t power(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

struct PrimeField {
  using Value = std::uint32_t;
  std::uint32_t p;
  bool is_zero(Value v) const { return v == 0; }
  bool is_pivot(Value v) const { return v != 0; }
  Value factor(Value entry, Value pivot) const {
    return static_cast<Value>(static_cast<std::uint64_t>(entry) * power(pivot, p - 2, p) % p);
  }
  Value sub_mul(Value x, Value f, Value y) const {
    std::uint64_t prod = static_cast<std::uint64_t>(f) * y % p;
    return static_cast<Value>((x + p - prod) % p);
  }
};

Simplex lift_one(const Simplex& facet, const std::vector<Letter>& spokes, const CosetTable& table, int coset) {
  const int d = table.degree();
  Simplex out(facet.size());
  out[0] = facet[0] * d + coset;
  for (std::size_t k = 1; k < facet.size(); ++k) {
    Letter l = spokes[k];
    int target = l == 0 ? coset : table.act(coset, l);
    out[k] = facet[k] * d + target;
  }
  return out;
}

bool column_product_zero(const SparseIntMatrix& outer, const std::vector<SparseIntMatrix::Entry>& col) {
  std::map<int, std::int64_t> acc;
  for (const auto& [k, bv] : col)
    for (const auto& [i, av] : outer.columns[static_cast<std::size_t>(k)]) acc[i] += av * bv;
  return std::all_of(acc.begin(), acc.end(), [](const auto& e) { return e.second == 0; });
}

}  // namespace

namespace serial {

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> a(m.rows, std::vector<std::uint32_t>(m.cols, 0));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) a[static_cast<std::size_t>(r)][c] = reduce(v, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    std::uint64_t inv = power(a[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][c] == 0) continue;
      std::uint64_t f = a[r][c] * inv % p;
      for (std::size_t j = c; j < m.cols; ++j) {
        std::uint64_t prod = f * a[rank][j] % p;
        a[r][j] = static_cast<std::uint32_t>((a[r][j] + p - prod) % p);
      }
    }
    ++rank;
  }
  return rank;
}

bool composition_vanishes(const SparseIntMatrix& outer, const SparseIntMatrix& inner) {
  for (const auto& col : inner.columns)
    if (!column_product_zero(outer, col)) return false;
  return true;
}

std::vector<Simplex> lift_facets(const std::vector<Simplex>& facets, const std::vector<std::vector<Letter>>& spokes,
                                 const CosetTable& table) {
  std::vector<Simplex> out;
  out.reserve(facets.size() * static_cast<std::size_t>(table.degree()));
  for (std::size_t j = 0; j < facets.size(); ++j)
    for (int c = 0; c < table.degree(); ++c) out.push_back(lift_one(facets[j], spokes[j], table, c));
  return out;
}

bool relators_hold(const CosetTable& table, const std::vector<Word>& relators) {
  for (int c = 0; c < table.degree(); ++c)
    for (const auto& r : relators)
      if (table.act(c, r) != c) return false;
  return true;
}

}  // namespace serial

namespace parallel {

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  using Column = detail::SparseEliminator<PrimeField>::Column;
  std::vector<Column> cols(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) {
      std::uint32_t x = reduce(v, p);
      if (x != 0) cols[c].emplace_back(r, x);
    }
  detail::SparseEliminator<PrimeField> elim(m.rows, std::move(cols), PrimeField{p}, true);
  return elim.eliminate();
}

bool composition_vanishes(const SparseIntMatrix& outer, const SparseIntMatrix& inner) {
  bool ok = true;
  const auto n = static_cast<std::ptrdiff_t>(inner.cols);
#pragma omp parallel for reduction(&& : ok) schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) ok = ok && column_product_zero(outer, inner.columns[static_cast<std::size_t>(j)]);
  return ok;
}

std::vector<Simplex> lift_facets(const std::vector<Simplex>& facets, const std::vector<std::vector<Letter>>& spokes,
                                 const CosetTable& table) {
  const int d = table.degree();
  std::vector<Simplex> out(facets.size() * static_cast<std::size_t>(d));
  const auto total = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    auto j = static_cast<std::size_t>(idx / d);
    int c = static_cast<int>(idx % d);
    out[static_cast<std::size_t>(idx)] = lift_one(facets[j], spokes[j], table, c);
  }
  return out;
}

bool relators_hold(const CosetTable& table, const std::vector<Word>& relators) {
  bool ok = true;
  const int d = table.degree();
#pragma omp parallel for reduction(&& : ok) schedule(static)
  for (int c = 0; c < d; ++c) {
    for (const auto& r : relators) {
      if (!ok) break;
      if (table.act(c, r) != c) ok = false;
    }
  }
  return ok;
}

}  // namespace parallel

}  // namespace rgsv::kernels
