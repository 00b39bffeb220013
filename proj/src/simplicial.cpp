#include "rgsv/simplicial.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "rgsv/error.hpp"
#include "rgsv/kernels.hpp"

namespace rgsv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::DegenerateFacet: return "DegenerateFacet";
    case ErrorCode::DuplicateFacet: return "DuplicateFacet";
    case ErrorCode::NotPseudoManifold: return "NotPseudoManifold";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::ChainNotDescending: return "ChainNotDescending";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

int permutation_sign(const std::vector<int>& tuple) {
  int sign = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return 0;
      if (tuple[i] > tuple[j]) sign = -sign;
    }
  }
  return sign;
}

Simplex drop_vertex(const Simplex& tuple, std::size_t i) {
  Simplex out;
  out.reserve(tuple.size() - 1);
  for (std::size_t k = 0; k < tuple.size(); ++k)
    if (k != i) out.push_back(tuple[k]);
  return out;
}

std::optional<std::size_t> OrientedTriangulation::simplex_index(const Simplex& sorted) const {
  if (sorted.empty() || sorted.size() > skeleta_.size()) return std::nullopt;
  const auto& list = skeleta_[sorted.size() - 1];
  auto it = std::lower_bound(list.begin(), list.end(), sorted);
  if (it == list.end() || *it != sorted) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

long long OrientedTriangulation::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < skeleta_.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(skeleta_[k].size());
  return chi;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t OrientedTriangulation::content_hash() const {
  std::ostringstream out;
  write_triangulation(out, *this);
  return fnv1a(out.str());
}

OrientedTriangulation validate_triangulation(const std::vector<std::vector<int>>& facets) {
  std::vector<std::vector<long long>> wide;
  wide.reserve(facets.size());
  for (const auto& f : facets) wide.emplace_back(f.begin(), f.end());
  return validate_triangulation(wide);
}

OrientedTriangulation validate_triangulation(const std::vector<std::vector<long long>>& input) {
  if (input.empty()) throw Error(ErrorCode::InvalidInput, "empty facet list");
  const std::size_t arity = input.front().size();
  if (arity == 0) throw Error(ErrorCode::InvalidInput, "empty facet");
  if (arity == 1) throw Error(ErrorCode::DimensionZero, "dimension 0 is not supported");
  std::vector<long long> labels;
  for (const auto& f : input) {
    if (f.size() != arity) throw Error(ErrorCode::InvalidInput, "facets of mixed arity");
    for (long long v : f) {
      if (v < 0) throw Error(ErrorCode::InvalidInput, "negative vertex id");
      labels.push_back(v);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  OrientedTriangulation t;
  t.dimension_ = static_cast<int>(arity) - 1;
  t.vertex_count_ = static_cast<int>(labels.size());
  t.labels_ = labels;
  t.facets_.reserve(input.size());
  for (const auto& f : input) {
    Simplex s;
    s.reserve(arity);
    for (long long v : f)
      s.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
    if (permutation_sign(s) == 0) throw Error(ErrorCode::DegenerateFacet, "facet repeats a vertex");
    t.facets_.push_back(std::move(s));
  }

  std::vector<Simplex> sorted_facets;
  sorted_facets.reserve(t.facets_.size());
  for (const auto& f : t.facets_) {
    Simplex s = f;
    std::sort(s.begin(), s.end());
    sorted_facets.push_back(std::move(s));
  }
  {
    std::vector<Simplex> check = sorted_facets;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
      throw Error(ErrorCode::DuplicateFacet, "two facets share the same vertex set");
  }

  // Codimension-one faces with the sign they receive in the boundary of the
  // ordered facet.
  struct Incidence {
    Simplex face;
    int facet;
    int sign;
  };
  std::vector<Incidence> incidences;
  incidences.reserve(t.facets_.size() * arity);
  for (std::size_t j = 0; j < t.facets_.size(); ++j) {
    const auto& f = t.facets_[j];
    for (std::size_t i = 0; i < arity; ++i) {
      Simplex ordered = drop_vertex(f, i);
      int sign = ((i % 2 == 0) ? 1 : -1) * permutation_sign(ordered);
      std::sort(ordered.begin(), ordered.end());
      incidences.push_back({std::move(ordered), static_cast<int>(j), sign});
    }
  }
  std::sort(incidences.begin(), incidences.end(),
            [](const Incidence& a, const Incidence& b) { return std::tie(a.face, a.facet) < std::tie(b.face, b.facet); });

  struct Neighbour {
    int facet;
    int relative;  // sign relating the two facets' orientations
  };
  std::vector<std::vector<Neighbour>> adjacency(t.facets_.size());
  for (std::size_t i = 0; i < incidences.size();) {
    std::size_t j = i;
    while (j < incidences.size() && incidences[j].face == incidences[i].face) ++j;
    if (j - i != 2) {
      std::ostringstream msg;
      msg << "a codimension-one face lies in " << (j - i) << " facets";
      throw Error(ErrorCode::NotPseudoManifold, msg.str());
    }
    const auto& a = incidences[i];
    const auto& b = incidences[i + 1];
    int relative = -a.sign * b.sign;
    adjacency[static_cast<std::size_t>(a.facet)].push_back({b.facet, relative});
    adjacency[static_cast<std::size_t>(b.facet)].push_back({a.facet, relative});
    i = j;
  }

  t.orientation_.assign(t.facets_.size(), 0);
  t.orientation_[0] = 1;
  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop();
    for (const auto& [g, rel] : adjacency[static_cast<std::size_t>(f)]) {
      int want = t.orientation_[static_cast<std::size_t>(f)] * rel;
      int& have = t.orientation_[static_cast<std::size_t>(g)];
      if (have == 0) {
        have = want;
        queue.push(g);
      } else if (have != want) {
        throw Error(ErrorCode::NotOrientable, "orientation propagation found a contradiction");
      }
    }
  }
  if (std::find(t.orientation_.begin(), t.orientation_.end(), 0) != t.orientation_.end())
    throw Error(ErrorCode::NotConnected, "facet adjacency graph is disconnected");

  t.skeleta_.assign(arity, {});
  for (const auto& f : sorted_facets) {
    const unsigned subsets = 1u << arity;
    for (unsigned mask = 1; mask < subsets; ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < arity; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      t.skeleta_[s.size() - 1].push_back(std::move(s));
    }
  }
  for (auto& level : t.skeleta_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return t;
}

SparseIntMatrix boundary_matrix(const OrientedTriangulation& t, int k) {
  if (k < 0 || k > t.dimension()) throw Error(ErrorCode::BadParams, "boundary degree out of range");
  const auto& cols = t.simplices(k);
  if (k == 0) return SparseIntMatrix(0, cols.size());
  const auto& rows = t.simplices(k - 1);
  SparseIntMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = m.columns[c];
    for (std::size_t i = 0; i < cols[c].size(); ++i) {
      Simplex face = drop_vertex(cols[c], i);
      auto r = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
      col.emplace_back(r, (i % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

void IntegerChain::add(const Simplex& sorted, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = entries_.emplace(sorted, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) entries_.erase(it);
  }
}

void IntegerChain::add_ordered(const std::vector<int>& ordered, const BigInt& coefficient) {
  int sign = permutation_sign(ordered);
  if (sign == 0) return;  // degenerate simplices vanish
  Simplex sorted = ordered;
  std::sort(sorted.begin(), sorted.end());
  add(sorted, sign > 0 ? coefficient : BigInt(-coefficient));
}

BigInt IntegerChain::coefficient(const Simplex& sorted) const {
  auto it = entries_.find(sorted);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt IntegerChain::l1_norm() const {
  BigInt total = 0;
  for (const auto& [s, a] : entries_) total += abs(a);
  return total;
}

IntegerChain IntegerChain::boundary() const {
  IntegerChain out(degree_ - 1);
  if (degree_ == 0) return out;
  for (const auto& [s, a] : entries_)
    for (std::size_t i = 0; i < s.size(); ++i) out.add(drop_vertex(s, i), (i % 2 == 0) ? a : BigInt(-a));
  return out;
}

IntegerChain IntegerChain::scaled(const BigInt& factor) const {
  IntegerChain out(degree_);
  if (factor == 0) return out;
  for (const auto& [s, a] : entries_) out.entries_.emplace(s, a * factor);
  return out;
}

FundamentalCycle fundamental_cycle(const OrientedTriangulation& t) {
  IntegerChain chain(t.dimension());
  for (std::size_t j = 0; j < t.facet_count(); ++j) chain.add_ordered(t.facets()[j], t.orientation()[j]);
  BigInt l1 = chain.l1_norm();
  return {std::move(chain), std::move(l1)};
}

bool is_fundamental_cycle(const OrientedTriangulation& t, const IntegerChain& chain) {
  const int n = t.dimension();
  if (chain.degree() != n || chain.is_zero()) return false;
  if (!chain.boundary().is_zero()) return false;
  for (const auto& [s, a] : chain.entries())
    if (!t.simplex_index(s) || s.size() != static_cast<std::size_t>(n + 1)) return false;
  // The cycle space of the top boundary map must be of rank one; the rank over
  // a prime field bounds the rational rank from below, which suffices here.
  const std::size_t m = t.facet_count();
  if (kernels::parallel::rank_mod_p(boundary_matrix(t, n), kernels::kDefaultPrime) != m - 1) return false;
  BigInt g = 0;
  for (const auto& [s, a] : chain.entries()) g = gcd(g, abs(a));
  if (g != 1) return false;
  // Agreement with the stored orientation: compare on facet 0.
  Simplex f0 = t.facets()[0];
  int sign0 = permutation_sign(f0) * t.orientation()[0];
  std::sort(f0.begin(), f0.end());
  BigInt a0 = chain.coefficient(f0);
  return sign0 > 0 ? a0 > 0 : a0 < 0;
}

OrientedTriangulation read_triangulation(std::istream& in) {
  std::string line;
  int dim = -1;
  std::vector<std::vector<long long>> facets;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (dim < 0) {
      std::string key;
      ls >> key >> dim;
      if (key != "dim" || ls.fail() || dim < 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected `dim n`");
      continue;
    }
    std::vector<long long> facet;
    long long v;
    while (ls >> v) facet.push_back(v);
    if (!ls.eof()) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad vertex id");
    if (facet.size() != static_cast<std::size_t>(dim + 1))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": facet arity does not match dim");
    facets.push_back(std::move(facet));
  }
  if (dim < 0) throw Error(ErrorCode::ParseError, "missing `dim n` header");
  if (dim == 0) throw Error(ErrorCode::DimensionZero, "dimension 0 is not supported");
  return validate_triangulation(facets);
}

OrientedTriangulation read_triangulation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return read_triangulation(in);
}

void write_triangulation(std::ostream& out, const OrientedTriangulation& t) {
  out << "dim " << t.dimension() << "\n";
  for (const auto& f : t.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << "\n";
  }
}

}  // namespace rgsv
