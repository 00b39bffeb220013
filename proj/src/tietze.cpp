#include "rgsv/tietze.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

namespace rgsv {

namespace {

// Canonical representative of a relator up to cyclic permutation and
// inversion, used only for de-duplication.
Word canonical_relator(const Word& w) {
  if (w.size() > 200) return w;
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    Word rot = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

Word substitute(const Word& w, int x, const Word& value, const Word& value_inv) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (generator_of(l) != x) {
      out.push_back(l);
    } else {
      const Word& rep = l > 0 ? value : value_inv;
      out.insert(out.end(), rep.begin(), rep.end());
    }
  }
  return cyclic_reduce(out);
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, std::size_t budget) {
  TietzeOptions options;
  options.budget = budget;
  return tietze_simplify(p, options);
}

TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& options) {
  const int n = p.generator_count;
  std::vector<Word> rels;
  std::vector<std::size_t> rank;
  const std::size_t unranked = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> priority(p.relators.size(), unranked);
  for (std::size_t i = 0; i < options.relator_priority.size(); ++i)
    if (options.relator_priority[i] < priority.size() && priority[options.relator_priority[i]] == unranked)
      priority[options.relator_priority[i]] = i;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word w = cyclic_reduce(p.relators[i]);
    if (w.empty()) continue;
    rels.push_back(std::move(w));
    rank.push_back(priority[i]);
  }

  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<Word> definition(static_cast<std::size_t>(n));
  std::vector<int> order;
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::vector<int> touched;

  TietzeResult result;
  for (;;) {
    // (length, priority, generator, relator)
    std::tuple<std::size_t, std::size_t, int, std::size_t> best{std::numeric_limits<std::size_t>::max(), 0, 0, 0};
    bool found = false;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      const Word& w = rels[r];
      if (w.empty()) continue;
      if (found && w.size() > std::get<0>(best)) continue;
      touched.clear();
      for (Letter l : w) {
        int g = generator_of(l);
        if (count[static_cast<std::size_t>(g)]++ == 0) touched.push_back(g);
      }
      for (int g : touched) {
        if (count[static_cast<std::size_t>(g)] == 1) {
          auto key = std::make_tuple(w.size(), rank[r], g, r);
          if (!found || key < best) {
            best = key;
            found = true;
          }
        }
        count[static_cast<std::size_t>(g)] = 0;
      }
    }
    if (!found) break;
    if (result.eliminations >= options.budget) {
      result.budget_exhausted = true;
      break;
    }

    const int x = std::get<2>(best);
    const std::size_t r = std::get<3>(best);
    Word w = rels[r];
    auto pos = static_cast<std::size_t>(
        std::find_if(w.begin(), w.end(), [x](Letter l) { return generator_of(l) == x; }) - w.begin());
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
    Letter head = w.front();
    Word rest(w.begin() + 1, w.end());
    Word value = head > 0 ? inverse(rest) : rest;
    Word value_inv = inverse(value);

    rels[r].clear();
    for (auto& other : rels) {
      if (other.empty()) continue;
      if (std::any_of(other.begin(), other.end(), [x](Letter l) { return generator_of(l) == x; }))
        other = substitute(other, x, value, value_inv);
    }
    alive[static_cast<std::size_t>(x)] = false;
    definition[static_cast<std::size_t>(x)] = std::move(value);
    order.push_back(x);
    ++result.eliminations;
  }

  // Compact the surviving generators.
  std::vector<int> renumber(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    if (!alive[static_cast<std::size_t>(g)]) continue;
    renumber[static_cast<std::size_t>(g)] = static_cast<int>(result.kept.size());
    result.kept.push_back(g);
  }
  auto rename = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(letter(renumber[static_cast<std::size_t>(generator_of(l))], l < 0));
    return out;
  };

  result.generator_images.assign(static_cast<std::size_t>(n), {});
  for (int g : result.kept) result.generator_images[static_cast<std::size_t>(g)] = {letter(renumber[static_cast<std::size_t>(g)])};
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Word resolved;
    for (Letter l : definition[static_cast<std::size_t>(*it)]) {
      const Word& img = result.generator_images[static_cast<std::size_t>(generator_of(l))];
      if (l > 0)
        resolved.insert(resolved.end(), img.begin(), img.end());
      else {
        Word inv = inverse(img);
        resolved.insert(resolved.end(), inv.begin(), inv.end());
      }
    }
    result.generator_images[static_cast<std::size_t>(*it)] = free_reduce(resolved);
  }

  result.presentation.generator_count = static_cast<int>(result.kept.size());
  std::set<Word> seen;
  for (const auto& w : rels) {
    if (w.empty()) continue;
    Word renamed = rename(w);
    if (seen.insert(canonical_relator(renamed)).second) result.presentation.relators.push_back(std::move(renamed));
  }
  return result;
}

}  // namespace rgsv
