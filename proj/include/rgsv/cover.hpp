#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgsv/coset.hpp"
#include "rgsv/presentation.hpp"
#include "rgsv/simplicial.hpp"

namespace rgsv {

// Finite cover of a triangulation described by a coset table of its edge-path
// group. Total vertex v*d + c lies over base vertex v in sheet c; the section
// of chosen lifts (one per base vertex) is sheet 0.
struct CoverComplex {
  OrientedTriangulation total;
  OrientedTriangulation base;
  int degree = 1;
  std::vector<std::pair<int, int>> vertex_map;  // total vertex -> (base vertex, sheet)
  std::vector<int> facet_map;                   // total facet -> base facet
  std::vector<int> facet_sheet;                 // sheet of the lifted vertex 0
  ComplexPresentation presentation;             // edge-path group data of the base
  CosetTable table;
};

// `table` must be a coset table over presentation_from_complex(base) (same
// generator labelling); throws Error(LabelMismatch) otherwise.
CoverComplex build_cover(const OrientedTriangulation& base, const ComplexPresentation& cp, const CosetTable& table);
CoverComplex build_cover(const OrientedTriangulation& base, const CosetTable& table);

// Letters carried by the edges vertex0 -> vertex k of each simplex (0 for tree
// edges); the input to the lifting kernel.
std::vector<std::vector<Letter>> spoke_letters(const ComplexPresentation& cp, const std::vector<Simplex>& simplices);

// Full preimage of a top-degree chain on the base.
FundamentalCycle lift_fundamental_cycle(const CoverComplex& cover, const IntegerChain& c);

// Lift of each simplex of `c` whose vertex 0 lies in the given sheet.
IntegerChain lift_from_sheet(const CoverComplex& cover, const IntegerChain& c, int sheet);

// Image of a chain on the total space under the projection.
IntegerChain pushforward(const CoverComplex& cover, const IntegerChain& chain);

struct CoveringCertificate {
  bool passed = true;
  std::vector<std::string> failures;
  long long pushforward_multiplicity = 0;
};

// Re-checks facet counts, the facet-wise bijection onto base facets, the
// vertex map, Euler characteristic and skeleton sizes, and that the
// fundamental cycle pushes forward to degree x the base fundamental cycle.
CoveringCertificate verify_covering(const CoverComplex& cover);

// On-disk cover cache. Layout: <root>/<base hash>/cover_<table hash>.tri in
// the triangulation text format plus a cover_<table hash>.map sidecar whose
// first line is `# rgsv-cover-map v1`. Files are written to a temporary name
// and renamed into place.
class CoverCache {
 public:
  explicit CoverCache(std::filesystem::path root) : root_(std::move(root)) {}
  // Uses $RGSV_CACHE_DIR when set.
  static std::optional<CoverCache> from_environment();

  const std::filesystem::path& root() const { return root_; }

  std::optional<CoverComplex> load(const OrientedTriangulation& base, const ComplexPresentation& cp,
                                   const CosetTable& table) const;
  void store(const CoverComplex& cover, const CosetTable& table) const;

 private:
  std::filesystem::path entry(const OrientedTriangulation& base, const CosetTable& table, const char* ext) const;
  std::filesystem::path root_;
};

// Cache-aware build_cover.
CoverComplex cached_cover(const OrientedTriangulation& base, const ComplexPresentation& cp, const CosetTable& table,
                          const CoverCache* cache);

}  // namespace rgsv
