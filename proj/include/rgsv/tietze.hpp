#pragma once

#include <cstddef>
#include <vector>

#include "rgsv/presentation.hpp"

namespace rgsv {

struct TietzeOptions {
  std::size_t budget = 1000000;  // maximum number of generator eliminations
  // Relator indices to prefer among equally short defining relators.
  std::vector<std::size_t> relator_priority;
};

struct TietzeResult {
  Presentation presentation;
  // generator_images[g]: word in the new generators equal to old generator g.
  std::vector<Word> generator_images;
  // New generator i is old generator kept[i].
  std::vector<int> kept;
  std::size_t eliminations = 0;
  bool budget_exhausted = false;
};

// Repeatedly eliminates a generator occurring exactly once in some relator,
// choosing the shortest such relator (ties: priority list, then lowest
// generator index). Relators are kept cyclically reduced; empty and repeated
// relators are dropped. The result presents an isomorphic group.
TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& options);
TietzeResult tietze_simplify(const Presentation& p, std::size_t budget);

}  // namespace rgsv
