#include "rgsv/schreier.hpp"

#include <set>

#include "rgsv/error.hpp"

namespace rgsv {

Word SchreierPresentation::rewrite(const Word& w, int start) const {
  Word out;
  int c = start;
  for (Letter l : w) {
    int g = generator_of(l);
    if (l > 0) {
      int s = schreier_generator[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)];
      if (s >= 0) out.push_back(letter(s));
      c = table.act(c, l);
    } else {
      int prev = table.act(c, l);
      int s = schreier_generator[static_cast<std::size_t>(prev)][static_cast<std::size_t>(g)];
      if (s >= 0) out.push_back(letter(s, true));
      c = prev;
    }
  }
  return free_reduce(out);
}

Word SchreierPresentation::element(int s) const {
  auto [c, g] = source[static_cast<std::size_t>(s)];
  Word w = transversal[static_cast<std::size_t>(c)];
  w.push_back(letter(g));
  for (Letter l : inverse(transversal[static_cast<std::size_t>(table.act(c, letter(g)))])) w.push_back(l);
  return free_reduce(w);
}

SchreierPresentation reidemeister_schreier(const Presentation& p, const CosetTable& table) {
  if (table.generator_count() != p.generator_count)
    throw Error(ErrorCode::InvalidInput, "coset table and presentation disagree on generators");
  const int d = table.degree();
  const int k = p.generator_count;
  SchreierPresentation rs;
  rs.table = table;
  rs.transversal.assign(static_cast<std::size_t>(d), {});
  rs.schreier_generator.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(k), -2));

  // Breadth-first transversal over columns x1, x1^-1, x2, ...
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int c = queue[i];
    for (int g = 0; g < k; ++g) {
      for (bool inv : {false, true}) {
        Letter l = letter(g, inv);
        int e = table.act(c, l);
        if (seen[static_cast<std::size_t>(e)]) continue;
        seen[static_cast<std::size_t>(e)] = true;
        rs.transversal[static_cast<std::size_t>(e)] = rs.transversal[static_cast<std::size_t>(c)];
        rs.transversal[static_cast<std::size_t>(e)].push_back(l);
        // Tree edge: (c, x) forward, or (e, x) when reached through x^-1.
        if (inv)
          rs.schreier_generator[static_cast<std::size_t>(e)][static_cast<std::size_t>(g)] = -1;
        else
          rs.schreier_generator[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)] = -1;
        queue.push_back(e);
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(d)) throw Error(ErrorCode::InvalidInput, "coset table is not transitive");

  for (int c = 0; c < d; ++c)
    for (int g = 0; g < k; ++g) {
      int& slot = rs.schreier_generator[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)];
      if (slot == -2) {
        slot = static_cast<int>(rs.source.size());
        rs.source.emplace_back(c, g);
      }
    }

  rs.presentation.generator_count = static_cast<int>(rs.source.size());
  std::set<Word> unique;
  for (int c = 0; c < d; ++c)
    for (const auto& r : p.relators) {
      Word w = cyclic_reduce(rs.rewrite(r, c));
      if (!w.empty() && unique.insert(w).second) rs.presentation.relators.push_back(std::move(w));
    }
  return rs;
}

CosetTable induce_table(const CosetTable& parent, const SchreierPresentation& rs, const CosetTable& sub) {
  if (!(parent == rs.table)) throw Error(ErrorCode::InvalidInput, "parent table differs from the Schreier data");
  if (sub.generator_count() != rs.presentation.generator_count)
    throw Error(ErrorCode::InvalidInput, "subgroup table does not match the Schreier presentation");
  const int d = parent.degree(), e = sub.degree();
  std::vector<std::vector<int>> action(static_cast<std::size_t>(parent.generator_count()),
                                       std::vector<int>(static_cast<std::size_t>(d) * static_cast<std::size_t>(e)));
  for (int g = 0; g < parent.generator_count(); ++g)
    for (int c = 0; c < d; ++c) {
      int s = rs.schreier_generator[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)];
      int target = parent.act(c, letter(g));
      for (int j = 0; j < e; ++j) {
        int jj = s >= 0 ? sub.act(j, letter(s)) : j;
        action[static_cast<std::size_t>(g)][static_cast<std::size_t>(c * e + j)] = target * e + jj;
      }
    }
  return standardize(CosetTable(parent.generator_count(), std::move(action)));
}

}  // namespace rgsv
