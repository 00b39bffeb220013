#pragma once

// Small hand-written complexes shared by the unit tests. Kept independent of
// the catalog so catalog bugs cannot mask themselves.

#include <vector>

#include "rgsv/simplicial.hpp"

namespace fixtures {

inline std::vector<std::vector<int>> circle(int n) {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < n; ++i) f.push_back({i, (i + 1) % n});
  return f;
}

inline std::vector<std::vector<int>> simplex_boundary(int n) {
  std::vector<std::vector<int>> f;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<int> facet;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) facet.push_back(v);
    f.push_back(facet);
  }
  return f;
}

// 7-vertex torus.
inline std::vector<std::vector<int>> torus7() {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return f;
}

// Square grid torus (a x b squares, each cut along the diagonal).
inline std::vector<std::vector<int>> grid_torus(int a, int b) {
  std::vector<std::vector<int>> f;
  auto id = [&](int i, int j) { return ((i % a + a) % a) * b + ((j % b + b) % b); };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      f.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      f.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return f;
}

// 6-vertex real projective plane (not orientable).
inline std::vector<std::vector<int>> rp2() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
}

}  // namespace fixtures
