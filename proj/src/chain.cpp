#include "rgsv/chain.hpp"

#include <algorithm>
#include <cstdlib>

#include "rgsv/error.hpp"
#include "rgsv/schreier.hpp"
#include "rgsv/smith.hpp"
#include "rgsv/tietze.hpp"

namespace rgsv {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

int mod(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

long long inverse_mod(long long a, int p) {
  long long result = 1, base = mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Table of G acting on prod Z/moduli[i] by translation: generator g adds
// shift[g]. The shifts must generate the product.
CosetTable translation_table(const std::vector<std::vector<int>>& shift, const std::vector<int>& moduli) {
  int degree = 1;
  for (int m : moduli) degree *= m;
  std::vector<std::vector<int>> action(shift.size(), std::vector<int>(static_cast<std::size_t>(degree)));
  std::vector<int> digits(moduli.size());
  for (int c = 0; c < degree; ++c) {
    int rest = c;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      digits[i] = rest % moduli[i];
      rest /= moduli[i];
    }
    for (std::size_t g = 0; g < shift.size(); ++g) {
      int target = 0;
      for (std::size_t i = moduli.size(); i-- > 0;) target = target * moduli[i] + (digits[i] + shift[g][i]) % moduli[i];
      action[g][static_cast<std::size_t>(c)] = target;
    }
  }
  return standardize(CosetTable(static_cast<int>(shift.size()), std::move(action)));
}

long long checked_index(long long current, long long factor, std::size_t limit) {
  if (factor <= 0 || current > static_cast<long long>(limit) / factor) return -1;
  return current * factor;
}

}  // namespace

std::string ChainSpec::to_string() const {
  switch (strategy) {
    case ChainStrategy::Constant: return "constant";
    case ChainStrategy::Sublattice: return "sublattice:" + std::to_string(parameter);
    case ChainStrategy::ModP: return "modp:" + std::to_string(parameter);
    case ChainStrategy::CyclicP: return "cyclic:" + std::to_string(parameter);
    case ChainStrategy::LowIndex: return "lowindex:" + std::to_string(parameter);
  }
  return "?";
}

ChainSpec parse_chain_spec(const std::string& text, int depth) {
  if (depth < 0) throw Error(ErrorCode::BadParams, "chain depth must be nonnegative");
  ChainSpec spec;
  spec.depth = depth;
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  if (name == "constant") {
    if (colon != std::string::npos) throw Error(ErrorCode::BadParams, "constant chain takes no parameter");
    return spec;
  }
  if (name == "sublattice")
    spec.strategy = ChainStrategy::Sublattice;
  else if (name == "modp")
    spec.strategy = ChainStrategy::ModP;
  else if (name == "cyclic")
    spec.strategy = ChainStrategy::CyclicP;
  else if (name == "lowindex")
    spec.strategy = ChainStrategy::LowIndex;
  else
    throw Error(ErrorCode::UnknownName, "unknown chain strategy '" + name + "'");
  if (colon == std::string::npos) throw Error(ErrorCode::BadParams, name + " needs a parameter, e.g. " + name + ":2");
  std::string arg = text.substr(colon + 1);
  char* end = nullptr;
  long v = std::strtol(arg.c_str(), &end, 10);
  if (arg.empty() || *end != '\0' || v < 2 || v > 1000)
    throw Error(ErrorCode::BadParams, "chain parameter must be an integer in [2, 1000]");
  spec.parameter = static_cast<int>(v);
  if ((spec.strategy == ChainStrategy::ModP || spec.strategy == ChainStrategy::CyclicP) && !is_prime(spec.parameter))
    throw Error(ErrorCode::BadParams, "mod-p strategies need a prime");
  return spec;
}

std::vector<std::vector<int>> mod_p_coordinates(const Presentation& p, int prime) {
  const auto n = static_cast<std::size_t>(p.generator_count);
  std::vector<std::vector<long long>> rows;
  for (const auto& r : p.relators) {
    std::vector<long long> row(n, 0);
    for (Letter l : r) row[static_cast<std::size_t>(generator_of(l))] += l > 0 ? 1 : -1;
    for (auto& x : row) x = mod(x, prime);
    rows.push_back(std::move(row));
  }
  // Reduced row echelon form over Z/p.
  std::vector<int> pivot_row(n, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    long long inv = inverse_mod(rows[rank][c], prime);
    for (auto& x : rows[rank]) x = x * inv % prime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      long long f = rows[r][c];
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = mod(rows[r][j] - f * rows[rank][j], prime);
    }
    pivot_row[c] = static_cast<int>(rank++);
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) free_cols.push_back(c);
  std::vector<std::vector<int>> coords(n, std::vector<int>(free_cols.size(), 0));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      if (pivot_row[g] < 0)
        coords[g][i] = free_cols[i] == g ? 1 : 0;
      else  // e_g = e_g - row = -(row restricted to free columns)
        coords[g][i] = mod(-rows[static_cast<std::size_t>(pivot_row[g])][free_cols[i]], prime);
    }
  }
  return coords;
}

std::vector<std::vector<BigInt>> free_abelian_coordinates(const Presentation& p) {
  const auto n = static_cast<std::size_t>(p.generator_count);
  if (p.relators.empty()) {
    std::vector<std::vector<BigInt>> id(n, std::vector<BigInt>(n, 0));
    for (std::size_t g = 0; g < n; ++g) id[g][g] = 1;
    return id;
  }
  IntMatrix r(p.relators.size(), n);
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (Letter l : p.relators[i]) r(i, static_cast<std::size_t>(generator_of(l))) += l > 0 ? 1 : -1;
  // U R V = S: x -> x V maps the relation lattice onto the row space of S,
  // so the columns of V past rank(S) are free coordinates.
  auto snf = smith_normal_form(r);
  const std::size_t rank = snf.rank();
  std::vector<std::vector<BigInt>> coords(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = rank; j < n; ++j) coords[g].push_back(snf.right(g, j));
  return coords;
}

Chain build_chain(const Presentation& p, const ChainSpec& spec, const Budgets& budgets) {
  Chain chain;
  chain.tables.push_back(CosetTable::trivial(p.generator_count));
  auto stop = [&](const std::string& why) {
    chain.truncated = true;
    chain.truncation_reason = why;
    return chain;
  };

  switch (spec.strategy) {
    case ChainStrategy::Constant:
      for (int k = 0; k < spec.depth; ++k) chain.tables.push_back(chain.tables.front());
      return chain;

    case ChainStrategy::Sublattice: {
      auto coords = free_abelian_coordinates(p);
      const std::size_t b = coords.empty() ? 0 : coords.front().size();
      if (spec.depth > 0 && b == 0) return stop("abelianization has no free part");
      long long modulus = 1;
      for (int k = 1; k <= spec.depth; ++k) {
        modulus *= spec.parameter;
        long long index = 1;
        for (std::size_t i = 0; i < b && index > 0; ++i) index = checked_index(index, modulus, budgets.max_index);
        if (index < 0) return stop("index exceeds max_index at level " + std::to_string(k));
        std::vector<std::vector<int>> shift(coords.size(), std::vector<int>(b));
        for (std::size_t g = 0; g < coords.size(); ++g)
          for (std::size_t i = 0; i < b; ++i) {
            BigInt r = coords[g][i] % modulus;
            if (r < 0) r += modulus;
            shift[g][i] = static_cast<int>(r);
          }
        chain.tables.push_back(translation_table(shift, std::vector<int>(b, static_cast<int>(modulus))));
      }
      return chain;
    }

    case ChainStrategy::ModP:
    case ChainStrategy::CyclicP:
    case ChainStrategy::LowIndex:
      break;
  }

  for (int k = 1; k <= spec.depth; ++k) {
    const CosetTable& current = chain.tables.back();
    auto rs = reidemeister_schreier(p, current);
    auto simp = tietze_simplify(rs.presentation, budgets.tietze_budget);
    const auto& sp = simp.presentation;
    CosetTable sub;
    if (spec.strategy == ChainStrategy::LowIndex) {
      if (checked_index(current.degree(), spec.parameter, budgets.max_index) < 0)
        return stop("index exceeds max_index at level " + std::to_string(k));
      auto candidates = low_index_subgroups(sp, spec.parameter);
      auto it = std::find_if(candidates.begin(), candidates.end(),
                             [&](const CosetTable& t) { return t.degree() == spec.parameter; });
      if (it == candidates.end())
        return stop("no subgroup of index " + std::to_string(spec.parameter) + " at level " + std::to_string(k));
      sub = *it;
    } else {
      auto coords = mod_p_coordinates(sp, spec.parameter);
      std::size_t r = coords.empty() ? 0 : coords.front().size();
      if (r == 0) return stop("mod-p homology vanishes at level " + std::to_string(k));
      if (spec.strategy == ChainStrategy::CyclicP) {
        for (auto& c : coords) c.resize(1);
        r = 1;
      }
      long long index = current.degree();
      for (std::size_t i = 0; i < r && index > 0; ++i) index = checked_index(index, spec.parameter, budgets.max_index);
      if (index < 0) return stop("index exceeds max_index at level " + std::to_string(k));
      sub = translation_table(coords, std::vector<int>(r, spec.parameter));
    }
    chain.tables.push_back(induce_table(current, rs, extend_table(sub, simp.generator_images)));
  }
  return chain;
}

}  // namespace rgsv
