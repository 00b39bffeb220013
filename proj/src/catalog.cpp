#include "rgsv/catalog.hpp"

#include <array>
#include <cstdlib>

#include "rgsv/error.hpp"

namespace rgsv {

namespace {

using FacetList = std::vector<std::vector<int>>;

FacetList simplex_boundary(int n) {
  FacetList f;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<int> facet;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) facet.push_back(v);
    f.push_back(std::move(facet));
  }
  return f;
}

// Vertices Z/7, triangles {i, i+1, i+3} and {i, i+2, i+3}.
FacetList torus7() {
  FacetList f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return f;
}

// Kuhn subdivision of the 3x3x3 periodic cube grid: each cube splits into
// six tetrahedra along monotone lattice paths.
FacetList torus3() {
  constexpr int m = 3;
  auto id = [](std::array<int, 3> p) { return ((p[0] % m) * m + p[1] % m) * m + p[2] % m; };
  std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  FacetList f;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (const auto& order : orders) {
          std::array<int, 3> p{i, j, k};
          std::vector<int> tet{id(p)};
          for (int axis : order) {
            ++p[static_cast<std::size_t>(axis)];
            tet.push_back(id(p));
          }
          f.push_back(std::move(tet));
        }
  return f;
}

// Closed orientable surface of genus g from the 4g-gon a1 b1 a1^-1 b1^-1 ...
// Each side is cut into three edges; all corners become one vertex and each
// side pair shares two interior vertices. Inside the polygon a ring of 12g
// vertices and a centre vertex keep the result simplicial.
FacetList surface(int g) {
  const int sides = 4 * g;
  const int ring0 = 1 + 4 * g;
  const int centre = ring0 + 12 * g;
  std::vector<int> boundary;
  for (int s = 0; s < sides; ++s) {
    int pair = s / 4 * 2 + s % 2;  // a_t and b_t
    int x = 1 + 2 * pair, y = 2 + 2 * pair;
    bool inverse = s % 4 >= 2;
    boundary.push_back(0);
    boundary.push_back(inverse ? y : x);
    boundary.push_back(inverse ? x : y);
  }
  const int n = static_cast<int>(boundary.size());
  FacetList f;
  for (int i = 0; i < n; ++i) {
    int b0 = boundary[static_cast<std::size_t>(i)], b1 = boundary[static_cast<std::size_t>((i + 1) % n)];
    int r0 = ring0 + i, r1 = ring0 + (i + 1) % n;
    f.push_back({b0, b1, r0});
    f.push_back({b1, r1, r0});
    f.push_back({r0, r1, centre});
  }
  return f;
}

int parse_param(const std::string& text) {
  char* end = nullptr;
  long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0') throw Error(ErrorCode::BadParams, "expected an integer parameter, got `" + text + "`");
  return static_cast<int>(v);
}

}  // namespace

OrientedTriangulation generate_catalog_manifold(const std::string& name, int param) {
  if (name == "circle") return validate_triangulation(simplex_boundary(1));
  if (name == "sphere") {
    if (param < 1 || param > 8) throw Error(ErrorCode::BadParams, "sphere dimension must be in 1..8");
    return validate_triangulation(simplex_boundary(param));
  }
  if (name == "torus") {
    if (param == 1) return validate_triangulation(simplex_boundary(1));
    if (param == 2) return validate_triangulation(torus7());
    if (param == 3) return validate_triangulation(torus3());
    throw Error(ErrorCode::BadParams, "torus dimension must be 1, 2 or 3");
  }
  if (name == "surface") {
    if (param < 1 || param > 64) throw Error(ErrorCode::BadParams, "surface genus must be in 1..64");
    return validate_triangulation(surface(param));
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog manifold `" + name + "`");
}

CatalogEntry catalog_entry(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  CatalogEntry entry;
  entry.name = spec;
  if (name == "file") {
    if (arg.empty()) throw Error(ErrorCode::BadParams, "file: needs a path");
    entry.triangulation = read_triangulation_file(arg);
    return entry;
  }
  if (name == "circle") {
    if (!arg.empty()) throw Error(ErrorCode::BadParams, "circle takes no parameter");
    entry.triangulation = generate_catalog_manifold("circle");
    entry.known = {{"rank", "1", "fundamental group Z"},
                   {"stable_integral_volume", "0", "the circle covers itself with every degree"}};
    return entry;
  }
  if (name != "sphere" && name != "torus" && name != "surface")
    throw Error(ErrorCode::UnknownName, "unknown catalog manifold `" + name + "`");
  if (arg.empty()) throw Error(ErrorCode::BadParams, name + " needs a parameter, e.g. " + name + ":2");
  int param = parse_param(arg);
  entry.triangulation = generate_catalog_manifold(name, param);
  if (name == "sphere") {
    if (param >= 2) entry.known = {{"rank", "0", "simply connected"}};
  } else if (name == "torus") {
    entry.known = {{"rank", std::to_string(param), "fundamental group Z^n"},
                   {"rank_gradient", "0", "infinite amenable residually finite fundamental group"},
                   {"stable_integral_volume", "0", "self-covers of every degree"}};
  } else {
    entry.known = {{"rank", std::to_string(2 * param), "standard surface group presentation"},
                   {"rank_gradient", std::to_string(2 * param - 2), "first L2-Betti number of the surface group"},
                   {"stable_integral_volume", std::to_string(4 * param - 4),
                    "stable integral volume of surfaces equals simplicial volume 4g-4"}};
  }
  return entry;
}

std::vector<std::string> standard_catalog() {
  return {"circle", "sphere:2", "sphere:3", "torus:2", "torus:3", "surface:2", "surface:3"};
}

}  // namespace rgsv
