// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and time limits are fixed here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rgsv/catalog.hpp"
#include "rgsv/chain.hpp"
#include "rgsv/constructions.hpp"
#include "rgsv/cover.hpp"
#include "rgsv/homology.hpp"
#include "rgsv/report.hpp"
#include "rgsv/schreier.hpp"
#include "rgsv/tietze.hpp"
#include "rgsv/smith.hpp"
#include "rgsv/volume.hpp"

using namespace rgsv;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

// Soundness rows gathered from every run of criteria 1-5.
struct SoundnessLog {
  std::size_t rows = 0;
  std::vector<std::string> violations;

  void row(const std::string& where, std::size_t vol_lo, std::size_t vol_hi, std::size_t rank_lo,
           std::size_t rank_hi, int index) {
    ++rows;
    if (vol_lo > vol_hi) violations.push_back(where + ": volume lower > upper");
    if (rank_lo > rank_hi) violations.push_back(where + ": rank lower > upper");
    if (static_cast<long long>(rank_lo) - 1 > static_cast<long long>(vol_hi))
      violations.push_back(where + ": (rank_lower-1)/index > volume_upper/index");
    (void)index;
  }
  void sequence(const std::string& where, const StableSequence& seq) {
    for (const auto& l : seq.levels)
      row(where + " index " + std::to_string(l.index), l.volume.lower, l.volume.upper, l.rank.lower, l.rank.upper,
          l.index);
    for (const auto& v : seq.violations) violations.push_back(where + ": " + v);
  }
};

SoundnessLog soundness;
int failures = 0;

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.notes.push_back(std::string("FAILED: exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs <= limit_seconds, "runtime " + fmt(secs, 1) + " s exceeds " + fmt(limit_seconds, 0) + " s");
  if (!out.pass) ++failures;
  std::printf("%s  criterion %d  %s  [%.1f s / %.0f s]\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              limit_seconds);
  for (const auto& n : out.notes) std::printf("        %s\n", n.c_str());
  std::fflush(stdout);
}

RunConfig run_config(const std::string& manifold, const std::string& chain, int depth) {
  RunConfig c;
  c.manifold = manifold;
  c.chain = chain;
  c.depth = depth;
  c.seed = 1;
  c.budgets.pachner.seed = 1;
  c.budgets.pachner.move_budget = 100000;
  return c;
}

std::string ratio_list(const StableSequence& seq, bool volume) {
  std::string s;
  for (const auto& l : seq.levels)
    s += (s.empty() ? "" : ", ") + fmt(volume ? l.volume_ratio.value() : l.rank_lower_ratio.value());
  return "(" + s + ")";
}

// ---------------------------------------------------------------------------
// Independent exact-algebra oracles.

using Dense = std::vector<std::vector<BigInt>>;

// Smith diagonal by repeated smallest-pivot elimination with explicit row and
// column operations; no transforms kept.
std::vector<BigInt> oracle_smith(Dense a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      const BigInt p = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        BigInt q = a[i][t] / p;
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        BigInt q = a[t][j] / p;
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols && divisible; ++j)
          if (a[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divisible = false;
          }
      if (divisible) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::size_t rank_mod(Dense a, long long p) {
  std::vector<std::vector<long long>> m;
  for (const auto& row : a) {
    std::vector<long long> r;
    for (const auto& x : row) r.push_back(static_cast<long long>(((x % p) + p) % p));
    m.push_back(r);
  }
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long long inv = 1;
    for (long long k = 1; k < p; ++k)
      if (m[rank][c] * k % p == 1) inv = k;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long f = m[r][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Boundary matrices of the closure of `faces`, built independently.
std::vector<Dense> oracle_boundaries(const std::vector<std::vector<int>>& faces, int dim) {
  std::vector<std::set<std::vector<int>>> cells(static_cast<std::size_t>(dim + 1));
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    const int n = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(f[static_cast<std::size_t>(i)]);
      cells[s.size() - 1].insert(s);
    }
  }
  std::vector<Dense> d(static_cast<std::size_t>(dim + 2));
  for (int k = 0; k <= dim + 1; ++k) {
    std::size_t lo = k == 0 ? 0 : cells[static_cast<std::size_t>(k - 1)].size();
    std::size_t hi = k <= dim ? cells[static_cast<std::size_t>(k)].size() : 0;
    d[static_cast<std::size_t>(k)] = Dense(lo, std::vector<BigInt>(hi, 0));
    if (k == 0 || k > dim) continue;
    std::map<std::vector<int>, std::size_t> row;
    for (const auto& s : cells[static_cast<std::size_t>(k - 1)]) row.emplace(s, row.size());
    std::size_t col = 0;
    for (const auto& s : cells[static_cast<std::size_t>(k)]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        d[static_cast<std::size_t>(k)][row.at(face)][col] = i % 2 ? -1 : 1;
      }
      ++col;
    }
  }
  // Column count of d[k] for k = 0 is the vertex count.
  d[0] = Dense(0);
  return d;
}

// ---------------------------------------------------------------------------

Outcome genus_two() {
  Outcome out;
  auto report = run_theorem_report(run_config("surface:2", "cyclic:2", 6));
  const auto& seq = report.sequence;
  soundness.sequence("surface:2 cyclic:2", seq);
  out.require(seq.levels.size() == 7 && !report.partial(), "chain reaches depth 6 (index 64)");
  out.note("indices 1..64, volume_upper/index " + ratio_list(seq, true));
  out.note("(rank_lower-1)/index " + ratio_list(seq, false));
  for (std::size_t k = 1; k < seq.levels.size(); ++k)
    out.require(seq.levels[k].rank_lower_ratio <= seq.levels[k - 1].rank_lower_ratio,
                "rank sequence non-increasing at level " + std::to_string(k));
  const auto& last = seq.levels.back();
  out.require(std::abs(last.rank_lower_ratio.value() - 2.0) <= 0.5, "deepest rank ratio within 0.5 of 2");
  for (const auto& l : seq.levels) {
    out.require(Ratio{4, 1} <= l.volume_ratio, "volume_upper/index >= 4 at index " + std::to_string(l.index));
    out.require(l.rank_lower_ratio <= l.volume_ratio, "rank <= volume at index " + std::to_string(l.index));
  }
  out.require(last.volume_ratio <= Ratio{6, 1}, "deepest volume_upper/index <= 6 with 1e5 moves");
  for (std::size_t k = 0; k < report.certificates.size(); ++k)
    out.require(report.certificates[k].passed, "generation certificate at level " + std::to_string(k));
  out.require(report.sound(), "report sound");

  // The full mod-2 homology kernel for comparison: index 16, next level 2^38.
  auto full = run_theorem_report(run_config("surface:2", "modp:2", 2));
  soundness.sequence("surface:2 modp:2", full.sequence);
  if (full.sequence.levels.size() >= 2) {
    const auto& l = full.sequence.levels[1];
    out.note("full mod-2 kernel: index " + std::to_string(l.index) + ", volume_upper/index " +
             fmt(l.volume_ratio.value()) + ", (rank_lower-1)/index " + fmt(l.rank_lower_ratio.value()) +
             (full.partial() ? "; " + full.chain.truncation_reason : ""));
  }
  return out;
}

Outcome torus() {
  Outcome out;
  auto report = run_theorem_report(run_config("torus:2", "sublattice:2", 2));
  const auto& seq = report.sequence;
  soundness.sequence("torus:2 sublattice:2", seq);
  std::vector<int> idx;
  for (const auto& l : seq.levels) idx.push_back(l.index);
  out.require(idx == std::vector<int>{1, 4, 16}, "indices 1, 4, 16");
  const Ratio vol[] = {{14, 1}, {7, 2}, {7, 8}};
  const Ratio rank[] = {{1, 1}, {1, 4}, {1, 16}};
  for (std::size_t k = 0; k < seq.levels.size() && k < 3; ++k) {
    out.require(seq.levels[k].volume_ratio <= vol[k], "volume ratio bound at level " + std::to_string(k));
    out.require(seq.levels[k].rank_lower_ratio <= rank[k], "rank ratio bound at level " + std::to_string(k));
    out.require(seq.levels[k].rank_lower_ratio <= seq.levels[k].volume_ratio, "rank <= volume at level " + std::to_string(k));
    if (k > 0) {
      out.require(seq.levels[k].volume_ratio <= seq.levels[k - 1].volume_ratio, "volume ratios monotone");
      out.require(seq.levels[k].rank_lower_ratio <= seq.levels[k - 1].rank_lower_ratio, "rank ratios monotone");
    }
  }
  out.note("volume_upper/index " + ratio_list(seq, true) + ", (rank_lower-1)/index " + ratio_list(seq, false));
  out.require(report.sound(), "report sound");
  return out;
}

Outcome generation() {
  Outcome out;
  for (const auto& name : standard_catalog()) {
    auto t = catalog_entry(name).triangulation;
    auto c = fundamental_cycle(t).chain;
    auto ex = extract_generators(t, c);
    auto cert = verify_generation(t, c, ex);
    out.require(cert.passed && cert.index == 1, name + ": <S> has index 1 (" + cert.status + ")");
    out.require(ex.generators.size() <= t.facet_count(), name + ": |S| <= facet count");
    out.require(cert.lift_is_cycle, name + ": projected lift is a cycle");
    out.require(cert.lift_multiple == 1 || cert.lift_multiple == -1, name + ": pushforward multiplicity 1");
    out.note(name + ": |S| = " + std::to_string(ex.generators.size()) + " of " + std::to_string(t.facet_count()) +
             " facets, " + cert.status);
  }
  // Negative control: keep only the torus words on one line through the
  // origin of Z^2, so they generate an infinite-index subgroup.
  auto t = catalog_entry("torus:2").triangulation;
  auto c = fundamental_cycle(t).chain;
  auto ex = extract_generators(t, c);
  auto simple = tietze_simplify(ex.presentation.presentation, 100000);
  auto coords = [&](const Word& w) {
    long long a = 0, b = 0;
    for (Letter l : w)
      for (Letter m : simple.generator_images[static_cast<std::size_t>(generator_of(l))])
        (generator_of(m) == 0 ? a : b) += (l > 0) == (m > 0) ? 1 : -1;
    return std::pair{a, b};
  };
  auto [a0, b0] = coords(ex.generators.front());
  std::vector<Word> kept;
  for (const auto& w : ex.generators) {
    auto [a, b] = coords(w);
    if (a * b0 == b * a0) kept.push_back(w);
  }
  CertificateBudgets small;
  small.max_cosets = 20000;
  auto neg = verify_generation(t, c, ex, kept, small);
  out.require(!neg.passed, "negative control does not certify");
  out.note("negative control: " + std::to_string(kept.size()) + " of " + std::to_string(ex.generators.size()) +
           " words kept, status " + neg.status);
  return out;
}

Outcome glued() {
  Outcome out;
  for (const auto& name : standard_catalog()) {
    auto t = catalog_entry(name).triangulation;
    auto c = fundamental_cycle(t).chain;
    auto x = build_glued_complex(t, c);
    auto cert = verify_glued_complex(t, x, c);
    out.require(cert.passed, name + ": certificate (" + cert.status + ")");
    out.require(cert.image_index == 1, name + ": image subgroup index 1");
    out.require(cert.achieved_rank <= cert.target_rank && !cert.rank_stalled, name + ": rank <= n*m without flags");
    out.require(x.cycle_verified, name + ": glued cycle has zero boundary");
    out.note(name + ": rank " + std::to_string(cert.achieved_rank) + " <= n*m = " + std::to_string(cert.target_rank));
  }
  return out;
}

Outcome covers() {
  Outcome out;
  std::mt19937_64 rng(20260101);
  for (auto [name, max_index] : {std::pair<std::string, int>{"torus:2", 6}, {"surface:2", 3}}) {
    auto model = group_model(catalog_entry(name).triangulation, 1000000);
    const auto& base = model.triangulation;
    auto base_cycle = fundamental_cycle(base);
    auto all = low_index_subgroups(model.working(), max_index);
    std::vector<CosetTable> proper;
    for (auto& t : all)
      if (t.degree() > 1) proper.push_back(t);
    out.require(proper.size() >= 20, name + ": at least 20 subgroups to sample");
    std::shuffle(proper.begin(), proper.end(), rng);
    proper.resize(std::min<std::size_t>(20, proper.size()));
    std::map<int, int> by_degree;
    for (const auto& table : proper) {
      const int d = table.degree();
      ++by_degree[d];
      const std::string where = name + " degree " + std::to_string(d);
      auto cover = build_cover(base, model.complex, extend_table(table, model.simplified.generator_images));
      auto check = verify_covering(cover);
      out.require(check.passed, where + ": covering certificate");
      validate_triangulation(cover.total.facets());
      out.require(cover.total.euler_characteristic() == d * base.euler_characteristic(), where + ": euler characteristic");
      auto h = homology_all(cover.total);
      std::size_t expected_b1 = name == "torus:2" ? 2 : static_cast<std::size_t>(2 * (d + 1));
      out.require(h[1].betti == expected_b1 && h[1].torsion.empty(), where + ": b1 matches Riemann-Hurwitz");
      auto lift = lift_fundamental_cycle(cover, base_cycle.chain);
      out.require(lift.l1 == BigInt(d) * base_cycle.l1, where + ": lifted l1 = degree x base");
      out.require(is_fundamental_cycle(cover.total, lift.chain), where + ": lift is a fundamental cycle");

      auto rs = reidemeister_schreier(model.working(), table);
      auto rank = rank_bounds(rs.presentation, 1000000);
      auto vol = volume_bounds(cover.total, rs.presentation, PachnerOptions{});
      soundness.row(where, vol.lower, vol.upper, rank.lower, rank.upper, d);
    }
    std::string hist;
    for (auto [d, n] : by_degree) hist += " " + std::to_string(n) + "x" + std::to_string(d);
    out.note(name + ": " + std::to_string(all.size()) + " subgroups of index <= " + std::to_string(max_index) +
             ", sampled degrees" + hist);
  }
  return out;
}

Outcome algebra() {
  Outcome out;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> size(1, 12), entry(-9, 9);
  int snf_ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
    IntMatrix a(r, c);
    Dense dense(r, std::vector<BigInt>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = dense[i][j] = entry(rng);
    auto snf = smith_normal_form(a);
    bool ok = snf.left * a * snf.right == snf.diagonal;
    BigInt du = determinant(snf.left), dv = determinant(snf.right);
    ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j && snf.diagonal(i, j) != 0) ok = false;
    auto factors = snf.invariant_factors();
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (factors[k] <= 0 || snf.diagonal(k, k) != factors[k]) ok = false;
      if (k + 1 < factors.size() && factors[k + 1] % factors[k] != 0) ok = false;
    }
    ok = ok && factors == oracle_smith(dense) && invariant_factors(SparseIntMatrix::from_dense(a)) == factors;
    snf_ok += ok;
  }
  out.require(snf_ok == 200, "SNF matches oracle on " + std::to_string(snf_ok) + "/200 matrices");

  int hom_ok = 0, with_torsion = 0;
  std::uniform_int_distribution<int> verts(5, 8);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = verts(rng);
    const double density = trial % 5 == 0 ? 0.05 : 0.15 + 0.5 * coin(rng);
    std::vector<std::vector<int>> faces;
    if (trial % 5 == 0)  // six-vertex projective plane as a seed for torsion
      faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    for (int x = 0; x < n; ++x) {
      faces.push_back({x});
      for (int y = x + 1; y < n; ++y) {
        if (coin(rng) < 0.3) faces.push_back({x, y});
        for (int z = y + 1; z < n; ++z)
          if (coin(rng) < density * 0.4) faces.push_back({x, y, z});
      }
    }
    std::vector<Simplex> simplices(faces.begin(), faces.end());
    auto got = simplicial_homology(simplices);
    got.resize(3);  // degrees above the top dimension are zero
    auto d = oracle_boundaries(faces, 2);
    bool ok = true;
    for (int k = 0; ok && k <= 2; ++k) {
      const auto& dk = d[static_cast<std::size_t>(k)];
      const auto& dk1 = d[static_cast<std::size_t>(k + 1)];
      std::size_t cells = k == 0 ? dk1.size() : (dk.empty() ? 0 : dk[0].size());
      auto lower = k == 0 ? std::vector<BigInt>{} : oracle_smith(dk);
      auto upper = oracle_smith(dk1);
      HomologyGroup expect = make_group(cells - lower.size() - upper.size(), upper);
      ok = ok && got[static_cast<std::size_t>(k)] == expect;
      // Brute-force p-ranks: dim H_k(F_p) = betti + p-torsion of H_k and H_{k-1}.
      for (long long p : {2LL, 3LL}) {
        std::size_t fp = cells - (k == 0 ? 0 : rank_mod(dk, p)) - rank_mod(dk1, p);
        auto ptors = [&](const HomologyGroup& g) {
          return static_cast<std::size_t>(std::count_if(g.torsion.begin(), g.torsion.end(), [&](const BigInt& t) { return t % p == 0; }));
        };
        std::size_t predicted = expect.betti + ptors(expect) + (k > 0 ? ptors(got[static_cast<std::size_t>(k - 1)]) : 0);
        ok = ok && fp == predicted;
      }
      if (!expect.torsion.empty()) ++with_torsion;
    }
    hom_ok += ok;
  }
  out.require(hom_ok == 50, "homology matches oracle on " + std::to_string(hom_ok) + "/50 complexes");
  out.note(std::to_string(with_torsion) + " homology groups with torsion among the samples");
  return out;
}

}  // namespace

int main() {
  criterion(1, "genus-2 surface over an iterated mod-2 kernel chain", 300, genus_two);
  criterion(2, "torus over the sublattice chain 1, 4, 16", 120, torus);
  criterion(3, "generator extraction certifies index 1 on the catalog; negative control refused", 120, generation);
  criterion(4, "glued-complex certificates on the catalog", 120, glued);
  criterion(5, "covering-space properties on 20 random low-index subgroups each of torus(2), surface(2)", 180, covers);
  criterion(6, "exact algebra against independent oracles", 120, algebra);
  criterion(7, "global soundness across criteria 1-5", 1, [] {
    Outcome out;
    out.require(soundness.rows > 0, "rows were checked");
    for (const auto& v : soundness.violations) out.require(false, v);
    out.note(std::to_string(soundness.rows) + " rows checked, " + std::to_string(soundness.violations.size()) +
             " violations");
    return out;
  });
  std::printf("%s: %d criteria failed\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", failures);
  return failures ? 1 : 0;
}
