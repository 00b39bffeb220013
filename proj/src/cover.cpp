#include "rgsv/cover.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rgsv/error.hpp"
#include "rgsv/kernels.hpp"

namespace rgsv {

namespace {

Simplex lift_simplex(const Simplex& s, const std::vector<Letter>& spokes, const CosetTable& table, int sheet) {
  const int d = table.degree();
  Simplex out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    int c = spokes[k] == 0 ? sheet : table.act(sheet, spokes[k]);
    out[k] = s[k] * d + c;
  }
  return out;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void write_atomically(const std::filesystem::path& target, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write cache file " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::InvalidInput, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

std::vector<std::vector<Letter>> spoke_letters(const ComplexPresentation& cp, const std::vector<Simplex>& simplices) {
  std::vector<std::vector<Letter>> spokes;
  spokes.reserve(simplices.size());
  for (const auto& s : simplices) {
    std::vector<Letter> row{0};
    for (std::size_t k = 1; k < s.size(); ++k) {
      Word w = cp.edge_word_between(s[0], s[k]);
      row.push_back(w.empty() ? 0 : w.front());
    }
    spokes.push_back(std::move(row));
  }
  return spokes;
}

CoverComplex build_cover(const OrientedTriangulation& base, const ComplexPresentation& cp, const CosetTable& table) {
  if (table.generator_count() != cp.presentation.generator_count || cp.vertex_count != base.vertex_count())
    throw Error(ErrorCode::LabelMismatch, "coset table is not over this triangulation's edge-path group");
  if (!table.is_transitive() || !kernels::parallel::relators_hold(table, cp.presentation.relators))
    throw Error(ErrorCode::LabelMismatch, "coset table does not satisfy the triangle relators");

  const int d = table.degree();
  auto lifted = kernels::parallel::lift_facets(base.facets(), spoke_letters(cp, base.facets()), table);
  CoverComplex cover;
  cover.total = validate_triangulation(lifted);
  if (cover.total.vertex_count() != base.vertex_count() * d)
    throw Error(ErrorCode::LabelMismatch, "lifted complex misses some vertex sheets");
  cover.base = base;
  cover.degree = d;
  cover.vertex_map.reserve(static_cast<std::size_t>(cover.total.vertex_count()));
  for (int v = 0; v < cover.total.vertex_count(); ++v) cover.vertex_map.emplace_back(v / d, v % d);
  cover.facet_map.reserve(lifted.size());
  for (std::size_t f = 0; f < lifted.size(); ++f) {
    cover.facet_map.push_back(static_cast<int>(f) / d);
    cover.facet_sheet.push_back(static_cast<int>(f) % d);
  }
  cover.presentation = cp;
  cover.table = table;
  return cover;
}

CoverComplex build_cover(const OrientedTriangulation& base, const CosetTable& table) {
  return build_cover(base, presentation_from_complex(base), table);
}

IntegerChain lift_from_sheet(const CoverComplex& cover, const IntegerChain& c, int sheet) {
  IntegerChain out(c.degree());
  for (const auto& [s, a] : c.entries()) {
    auto spokes = spoke_letters(cover.presentation, {s});
    out.add_ordered(lift_simplex(s, spokes[0], cover.table, sheet), a);
  }
  return out;
}

FundamentalCycle lift_fundamental_cycle(const CoverComplex& cover, const IntegerChain& c) {
  if (c.degree() != cover.base.dimension()) throw Error(ErrorCode::InvalidInput, "chain is not top-dimensional");
  std::vector<Simplex> support;
  std::vector<BigInt> coefficient;
  for (const auto& [s, a] : c.entries()) {
    if (!cover.base.simplex_index(s)) throw Error(ErrorCode::InvalidInput, "chain is not supported on the base");
    support.push_back(s);
    coefficient.push_back(a);
  }
  auto lifted = kernels::parallel::lift_facets(support, spoke_letters(cover.presentation, support), cover.table);
  IntegerChain chain(c.degree());
  const auto d = static_cast<std::size_t>(cover.degree);
  for (std::size_t i = 0; i < lifted.size(); ++i) chain.add_ordered(lifted[i], coefficient[i / d]);
  BigInt l1 = chain.l1_norm();
  return {std::move(chain), std::move(l1)};
}

IntegerChain pushforward(const CoverComplex& cover, const IntegerChain& chain) {
  IntegerChain out(chain.degree());
  for (const auto& [s, a] : chain.entries()) {
    Simplex image(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) image[k] = cover.vertex_map.at(static_cast<std::size_t>(s[k])).first;
    out.add_ordered(image, a);
  }
  return out;
}

CoveringCertificate verify_covering(const CoverComplex& cover) {
  CoveringCertificate cert;
  auto fail = [&](const std::string& why) {
    cert.passed = false;
    cert.failures.push_back(why);
  };
  const auto& base = cover.base;
  const auto& total = cover.total;
  const int d = cover.degree;

  if (total.facet_count() != base.facet_count() * static_cast<std::size_t>(d)) fail("facet count is not degree x base");
  if (total.vertex_count() != base.vertex_count() * d) fail("vertex count is not degree x base");
  if (cover.vertex_map.size() != static_cast<std::size_t>(total.vertex_count())) {
    fail("vertex map has the wrong size");
  } else {
    for (int v = 0; v < total.vertex_count(); ++v)
      if (cover.vertex_map[static_cast<std::size_t>(v)] != std::make_pair(v / d, v % d)) {
        fail("vertex map disagrees with the sheet numbering at vertex " + std::to_string(v));
        break;
      }
  }

  if (cover.facet_map.size() != total.facet_count()) {
    fail("facet map has the wrong size");
  } else {
    std::vector<int> preimages(base.facet_count(), 0);
    for (std::size_t f = 0; f < total.facet_count(); ++f) {
      int j = cover.facet_map[f];
      if (j < 0 || static_cast<std::size_t>(j) >= base.facet_count()) {
        fail("facet bijection violation: facet " + std::to_string(f) + " maps outside the base");
        continue;
      }
      Simplex image;
      for (int v : total.facets()[f]) image.push_back(v / d);
      Simplex want = base.facets()[static_cast<std::size_t>(j)];
      std::sort(image.begin(), image.end());
      std::sort(want.begin(), want.end());
      if (image != want || std::adjacent_find(image.begin(), image.end()) != image.end()) {
        fail("facet bijection violation: facet " + std::to_string(f) + " does not project onto base facet " +
             std::to_string(j));
        continue;
      }
      ++preimages[static_cast<std::size_t>(j)];
    }
    for (std::size_t j = 0; j < preimages.size(); ++j)
      if (preimages[j] != d) {
        fail("facet bijection violation: base facet " + std::to_string(j) + " has " + std::to_string(preimages[j]) +
             " preimages");
        break;
      }
  }

  // Local injectivity: vertex stars have the same size upstairs and downstairs.
  std::vector<int> star_total(static_cast<std::size_t>(total.vertex_count()), 0);
  std::vector<int> star_base(static_cast<std::size_t>(base.vertex_count()), 0);
  for (const auto& f : total.facets())
    for (int v : f) ++star_total[static_cast<std::size_t>(v)];
  for (const auto& f : base.facets())
    for (int v : f) ++star_base[static_cast<std::size_t>(v)];
  for (int v = 0; v < total.vertex_count(); ++v)
    if (star_total[static_cast<std::size_t>(v)] != star_base[static_cast<std::size_t>(v / d)]) {
      fail("vertex star of " + std::to_string(v) + " is not mapped bijectively");
      break;
    }

  if (total.euler_characteristic() != d * base.euler_characteristic()) fail("Euler characteristic is not multiplicative");
  for (int k = 0; k <= base.dimension(); ++k)
    if (total.simplices(k).size() != base.simplices(k).size() * static_cast<std::size_t>(d))
      fail(std::to_string(k) + "-simplex count is not degree x base");

  auto up = fundamental_cycle(total).chain;
  auto down = fundamental_cycle(base).chain;
  auto image = pushforward(cover, up);
  for (long long k : {static_cast<long long>(d), -static_cast<long long>(d)})
    if (image == down.scaled(k)) cert.pushforward_multiplicity = k;
  if (cert.pushforward_multiplicity != d) fail("fundamental class does not push forward to degree x base class");
  return cert;
}

std::optional<CoverCache> CoverCache::from_environment() {
  const char* dir = std::getenv("RGSV_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return CoverCache(dir);
}

std::filesystem::path CoverCache::entry(const OrientedTriangulation& base, const CosetTable& table, const char* ext) const {
  return root_ / hex(base.content_hash()) / ("cover_" + hex(table.content_hash()) + ext);
}

std::optional<CoverComplex> CoverCache::load(const OrientedTriangulation& base, const ComplexPresentation& cp,
                                             const CosetTable& table) const {
  std::ifstream map(entry(base, table, ".map"));
  if (!map) return std::nullopt;
  std::string header;
  std::getline(map, header);
  if (header != "# rgsv-cover-map v1") return std::nullopt;
  std::string key, base_hash, table_hash;
  int degree = 0;
  std::size_t facets = 0;
  map >> key >> degree;
  if (key != "degree") return std::nullopt;
  map >> key >> base_hash;
  if (key != "base_hash" || base_hash != hex(base.content_hash())) return std::nullopt;
  map >> key >> table_hash;
  if (key != "table_hash" || table_hash != hex(table.content_hash())) return std::nullopt;
  map >> key >> facets;
  if (key != "facets" || degree != table.degree()) return std::nullopt;

  CoverComplex cover;
  try {
    cover.total = read_triangulation_file(entry(base, table, ".tri").string());
  } catch (const Error&) {
    return std::nullopt;
  }
  if (cover.total.facet_count() != facets || cover.total.vertex_count() != base.vertex_count() * degree)
    return std::nullopt;
  for (std::size_t f = 0; f < facets; ++f) {
    int j = -1, sheet = -1;
    if (!(map >> j >> sheet)) return std::nullopt;
    cover.facet_map.push_back(j);
    cover.facet_sheet.push_back(sheet);
  }
  cover.base = base;
  cover.degree = degree;
  for (int v = 0; v < cover.total.vertex_count(); ++v) cover.vertex_map.emplace_back(v / degree, v % degree);
  cover.presentation = cp;
  cover.table = table;
  return cover;
}

void CoverCache::store(const CoverComplex& cover, const CosetTable& table) const {
  std::filesystem::create_directories(entry(cover.base, table, ".tri").parent_path());
  std::ostringstream tri;
  write_triangulation(tri, cover.total);
  write_atomically(entry(cover.base, table, ".tri"), tri.str());
  std::ostringstream map;
  map << "# rgsv-cover-map v1\n"
      << "degree " << cover.degree << "\n"
      << "base_hash " << hex(cover.base.content_hash()) << "\n"
      << "table_hash " << hex(table.content_hash()) << "\n"
      << "facets " << cover.facet_map.size() << "\n";
  for (std::size_t f = 0; f < cover.facet_map.size(); ++f) map << cover.facet_map[f] << " " << cover.facet_sheet[f] << "\n";
  // The sidecar is written last; its presence marks a complete entry.
  write_atomically(entry(cover.base, table, ".map"), map.str());
}

CoverComplex cached_cover(const OrientedTriangulation& base, const ComplexPresentation& cp, const CosetTable& table,
                          const CoverCache* cache) {
  if (cache != nullptr)
    if (auto hit = cache->load(base, cp, table)) return *hit;
  auto cover = build_cover(base, cp, table);
  if (cache != nullptr) cache->store(cover, table);
  return cover;
}

}  // namespace rgsv
