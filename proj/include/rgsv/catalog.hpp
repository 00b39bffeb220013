#pragma once

#include <string>
#include <vector>

#include "rgsv/simplicial.hpp"

namespace rgsv {

// A reference value for a catalog manifold together with where it comes from.
struct KnownValue {
  std::string quantity;
  std::string value;
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  OrientedTriangulation triangulation;
  std::vector<KnownValue> known;
};

// name in {circle, sphere, torus, surface}; `param` is the dimension for
// sphere and torus and the genus for surface (ignored for circle).
// Throws Error(UnknownName) / Error(BadParams).
OrientedTriangulation generate_catalog_manifold(const std::string& name, int param = 0);

// Parses `circle`, `sphere:N`, `torus:N`, `surface:G` or `file:PATH`.
CatalogEntry catalog_entry(const std::string& spec);

// The manifolds every certificate suite runs over.
std::vector<std::string> standard_catalog();

}  // namespace rgsv
