#include "rgsv/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rgsv/error.hpp"

namespace rgsv {

namespace {

std::vector<BigInt> boundary_factors(const OrientedTriangulation& t, int k) {
  if (k <= 0 || k > t.dimension()) return {};
  return invariant_factors(boundary_matrix(t, k));
}

HomologyGroup assemble(const OrientedTriangulation& t, int k, const std::vector<BigInt>& lower,
                       const std::vector<BigInt>& upper) {
  std::size_t cells = t.simplices(k).size();
  return make_group(cells - lower.size() - upper.size(), upper);
}

}  // namespace

HomologyGroup homology(const OrientedTriangulation& t, int k) {
  if (k < 0 || k > t.dimension()) throw Error(ErrorCode::BadParams, "homology degree out of range");
  return assemble(t, k, boundary_factors(t, k), boundary_factors(t, k + 1));
}

std::vector<HomologyGroup> homology_all(const OrientedTriangulation& t) {
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(t.dimension() + 2));
  for (int k = 1; k <= t.dimension(); ++k) factors[static_cast<std::size_t>(k)] = boundary_factors(t, k);
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= t.dimension(); ++k)
    out.push_back(assemble(t, k, factors[static_cast<std::size_t>(k)], factors[static_cast<std::size_t>(k + 1)]));
  return out;
}

std::vector<SparseIntMatrix> boundary_matrices(const std::vector<Simplex>& faces) {
  std::vector<std::set<Simplex>> cells;
  for (auto f : faces) {
    if (f.empty()) throw Error(ErrorCode::InvalidInput, "empty face");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw Error(ErrorCode::DegenerateFacet, "repeated vertex");
    // All nonempty subsets of f.
    const std::size_t n = f.size();
    if (n > 20) throw Error(ErrorCode::BadParams, "face too large");
    if (cells.size() < n) cells.resize(n);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      cells[s.size() - 1].insert(s);
    }
  }
  std::vector<SparseIntMatrix> out(cells.size());
  for (std::size_t k = 1; k < cells.size(); ++k) {
    std::map<Simplex, int> row;
    for (const auto& s : cells[k - 1]) row.emplace(s, static_cast<int>(row.size()));
    SparseIntMatrix m(cells[k - 1].size(), cells[k].size());
    std::size_t col = 0;
    for (const auto& s : cells[k]) {
      for (std::size_t i = 0; i <= k; ++i) m.columns[col].emplace_back(row.at(drop_vertex(s, i)), i % 2 ? -1 : 1);
      std::sort(m.columns[col].begin(), m.columns[col].end());
      ++col;
    }
    out[k] = std::move(m);
  }
  if (!out.empty()) out[0] = SparseIntMatrix(0, cells[0].size());
  return out;
}

std::vector<HomologyGroup> simplicial_homology(const std::vector<Simplex>& faces) {
  auto d = boundary_matrices(faces);
  std::vector<std::vector<BigInt>> factors(d.size() + 1);
  for (std::size_t k = 1; k < d.size(); ++k) factors[k] = invariant_factors(d[k]);
  std::vector<HomologyGroup> out;
  for (std::size_t k = 0; k < d.size(); ++k)
    out.push_back(make_group(d[k].cols - factors[k].size() - factors[k + 1].size(), factors[k + 1]));
  return out;
}

}  // namespace rgsv
