#include "rgsv/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "rgsv/catalog.hpp"
#include "rgsv/error.hpp"
#include "rgsv/homology.hpp"
#include "rgsv/schreier.hpp"

namespace rgsv {

using nlohmann::json;

namespace {

json ratio_json(const Ratio& r) { return json::array({r.num, r.den}); }

Ratio ratio_from(const json& j) { return {j.at(0).get<long long>(), j.at(1).get<long long>()}; }

bool same(const Ratio& a, const Ratio& b) { return a <= b && b <= a; }

Ratio min_ratio(const Ratio& a, const Ratio& b) { return b < a ? b : a; }

std::string fixed(double v, int digits = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

json facets_json(const OrientedTriangulation& t) {
  json out = json::array();
  for (const auto& f : t.facets()) out.push_back(f);
  return out;
}

OrientedTriangulation facets_from(const json& j) {
  return validate_triangulation(j.get<std::vector<std::vector<long long>>>());
}

json homology_json(const std::vector<HomologyGroup>& groups) {
  json out = json::array();
  for (const auto& g : groups) out.push_back(g.to_string());
  return out;
}

std::vector<std::string> level_flags(const StableLevel& level, const GenerationCertificate* cert) {
  auto flags = level.flags;
  if (cert && !cert->passed) flags.push_back("generation_" + cert->status);
  return flags;
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  if (!j.contains("schema_version") || j.at("schema_version") != kConfigSchemaVersion)
    throw Error(ErrorCode::ParseError, "config schema_version must be " + std::to_string(kConfigSchemaVersion));
  static const std::set<std::string> known{"schema_version", "manifold",      "chain",      "depth",
                                           "seed",           "move_budget",   "restarts",   "tietze_budget",
                                           "max_cosets",     "max_index",     "certificates"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw Error(ErrorCode::ParseError, "unknown config key '" + key + "'");
  RunConfig c;
  try {
    c.manifold = j.value("manifold", c.manifold);
    c.chain = j.value("chain", c.chain);
    c.depth = j.value("depth", c.depth);
    c.seed = j.value("seed", c.seed);
    c.budgets.pachner.move_budget = j.value("move_budget", c.budgets.pachner.move_budget);
    c.budgets.pachner.restarts = j.value("restarts", c.budgets.pachner.restarts);
    c.budgets.tietze_budget = j.value("tietze_budget", c.budgets.tietze_budget);
    c.budgets.max_cosets = j.value("max_cosets", c.budgets.max_cosets);
    c.budgets.max_index = j.value("max_index", c.budgets.max_index);
    c.certificates = j.value("certificates", c.certificates);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
  c.budgets.pachner.seed = c.seed;
  return c;
}

json config_to_json(const RunConfig& c) {
  return {{"schema_version", kConfigSchemaVersion},
          {"manifold", c.manifold},
          {"chain", c.chain},
          {"depth", c.depth},
          {"seed", c.seed},
          {"move_budget", c.budgets.pachner.move_budget},
          {"restarts", c.budgets.pachner.restarts},
          {"tietze_budget", c.budgets.tietze_budget},
          {"max_cosets", c.budgets.max_cosets},
          {"max_index", c.budgets.max_index},
          {"certificates", c.certificates}};
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return config_from_json(j);
}

double displayed_rank_ratio(const Ratio& raw) { return std::max(0.0, raw.value()); }

TheoremReport run_theorem_report(const RunConfig& config, const CoverCache* cache) {
  TheoremReport r;
  r.config = config;
  r.config.budgets.pachner.seed = config.seed;
  const auto& budgets = r.config.budgets;
  auto spec = parse_chain_spec(config.chain, config.depth);
  r.model = group_model(catalog_entry(config.manifold).triangulation, budgets.tietze_budget);
  r.chain = build_chain(r.model.working(), spec, budgets);
  r.sequence = stable_sequence(r.model, r.chain.tables, budgets, cache);

  if (config.certificates) {
    r.certificates.resize(r.sequence.levels.size());
    const auto count = static_cast<std::ptrdiff_t>(r.sequence.levels.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const auto& witness = r.sequence.levels[static_cast<std::size_t>(k)].volume.upper_witness;
      auto cycle = fundamental_cycle(witness);
      auto extraction = extract_generators(witness, cycle.chain);
      r.certificates[static_cast<std::size_t>(k)] =
          verify_generation(witness, cycle.chain, extraction, {budgets.tietze_budget, budgets.max_cosets});
    }
  }

  r.violations = r.sequence.violations;
  if (!r.sequence.levels.empty()) {
    r.best_volume_ratio = r.sequence.running_min_volume.back();
    r.best_rank_lower_ratio = r.sequence.running_min_rank_lower.back();
    if (!(r.best_rank_lower_ratio <= r.best_volume_ratio))
      r.violations.push_back("best rank gradient ratio exceeds best volume ratio");
  }
  for (std::size_t k = 0; k < r.certificates.size(); ++k)
    if (r.certificates[k].status == "failed" || r.certificates[k].status == "index_not_one")
      r.violations.push_back("level " + std::to_string(k) + ": generation certificate " + r.certificates[k].status);
  return r;
}

json report_to_json(const TheoremReport& r) {
  json levels = json::array();
  for (std::size_t k = 0; k < r.sequence.levels.size(); ++k) {
    const auto& level = r.sequence.levels[k];
    const GenerationCertificate* cert = r.certificates.empty() ? nullptr : &r.certificates[k];
    json words = json::array();
    for (const auto& w : level.rank_generators) words.push_back(w);
    json entry{{"level", k},
               {"index", level.index},
               {"table", level.table.permutations()},
               {"cover_facets", level.cover_facets},
               {"volume",
                {{"lower", level.volume.lower},
                 {"lower_witness", level.volume.lower_witness},
                 {"upper", level.volume.upper},
                 {"upper_witness_facets", facets_json(level.volume.upper_witness)},
                 {"moves", level.volume.moves},
                 {"homology", homology_json(level.volume.homology)}}},
               {"rank",
                {{"lower", level.rank.lower},
                 {"upper", level.rank.upper},
                 {"abelianization", level.rank.abelianization.to_string()},
                 {"schreier_generators", level.rank.input_generators},
                 {"generators", words}}},
               {"ratios",
                {{"volume_upper", ratio_json(level.volume_ratio)},
                 {"rank_lower", ratio_json(level.rank_lower_ratio)},
                 {"rank_upper", ratio_json(level.rank_upper_ratio)},
                 {"rank_lower_display", displayed_rank_ratio(level.rank_lower_ratio)},
                 {"running_min_volume", ratio_json(r.sequence.running_min_volume[k])},
                 {"running_min_rank_lower", ratio_json(r.sequence.running_min_rank_lower[k])}}},
               {"inequality_holds", level.rank_lower_ratio <= level.volume_ratio},
               {"flags", level_flags(level, cert)}};
    if (cert)
      entry["generation_certificate"] = {{"status", cert->status},
                                         {"index", cert->index},
                                         {"generator_count", cert->generator_count},
                                         {"l1", cert->l1.str()}};
    levels.push_back(std::move(entry));
  }
  return {{"schema_version", kReportSchemaVersion},
          {"config", config_to_json(r.config)},
          {"base",
           {{"dimension", r.model.triangulation.dimension()},
            {"facets", facets_json(r.model.triangulation)},
            {"working_generators", r.model.working().generator_count}}},
          {"chain", {{"truncated", r.chain.truncated}, {"truncation_reason", r.chain.truncation_reason}}},
          {"levels", levels},
          {"summary",
           {{"best_volume_ratio", ratio_json(r.best_volume_ratio)},
            {"best_rank_lower_ratio", ratio_json(r.best_rank_lower_ratio)},
            {"best_volume_is_upper_approximation", true},
            {"partial", r.partial()},
            {"sound", r.sound()},
            {"violations", r.violations}}}};
}

std::string report_to_csv(const TheoremReport& r) {
  std::ostringstream out;
  out << "index,volume_upper,volume_upper/index,rank_lower,rank_upper,(rank_lower-1)/index,flags\n";
  for (std::size_t k = 0; k < r.sequence.levels.size(); ++k) {
    const auto& level = r.sequence.levels[k];
    auto flags = level_flags(level, r.certificates.empty() ? nullptr : &r.certificates[k]);
    std::string joined;
    for (const auto& f : flags) joined += (joined.empty() ? "" : ";") + f;
    out << level.index << ',' << level.volume.upper << ',' << fixed(level.volume_ratio.value(), 6) << ','
        << level.rank.lower << ',' << level.rank.upper << ',' << fixed(displayed_rank_ratio(level.rank_lower_ratio), 6)
        << ',' << joined << '\n';
  }
  return out.str();
}

std::string report_to_text(const TheoremReport& r) {
  std::ostringstream out;
  out << r.config.manifold << "  chain " << r.config.chain << " depth " << r.config.depth << "  seed " << r.config.seed
      << "\n";
  out << std::setw(7) << "index" << std::setw(9) << "cover" << std::setw(9) << "vol" << std::setw(10) << "vol/idx"
      << std::setw(7) << "d_lo" << std::setw(7) << "d_hi" << std::setw(12) << "(d_lo-1)/i" << std::setw(8) << "rk<=vol"
      << "  certificate\n";
  for (std::size_t k = 0; k < r.sequence.levels.size(); ++k) {
    const auto& l = r.sequence.levels[k];
    out << std::setw(7) << l.index << std::setw(9) << l.cover_facets << std::setw(9) << l.volume.upper << std::setw(10)
        << fixed(l.volume_ratio.value()) << std::setw(7) << l.rank.lower << std::setw(7) << l.rank.upper
        << std::setw(12) << fixed(displayed_rank_ratio(l.rank_lower_ratio)) << std::setw(8)
        << (l.rank_lower_ratio <= l.volume_ratio ? "yes" : "NO") << "  "
        << (r.certificates.empty() ? "-" : r.certificates[k].status) << "\n";
  }
  if (r.chain.truncated) out << "chain truncated: " << r.chain.truncation_reason << "\n";
  out << "best (d-1)/index " << fixed(displayed_rank_ratio(r.best_rank_lower_ratio)) << " <= best volume/index "
      << fixed(r.best_volume_ratio.value()) << " (upper approximation over explored subgroups)\n";
  out << (r.sound() ? "sound" : "SOUNDNESS VIOLATION") << "\n";
  for (const auto& v : r.violations) out << "  " << v << "\n";
  return out.str();
}

std::vector<std::string> validate_report(const json& report, const Budgets& budgets) {
  std::vector<std::string> problems;
  auto fail = [&](const std::string& what) { problems.push_back(what); };
  try {
    if (report.at("schema_version") != kReportSchemaVersion) {
      fail("unsupported schema_version");
      return problems;
    }
    auto base = facets_from(report.at("base").at("facets"));
    auto model = group_model(base, budgets.tietze_budget);
    const auto& working = model.working();
    if (report.at("base").at("working_generators") != working.generator_count)
      fail("working presentation does not match the base triangulation");

    std::vector<CosetTable> tables;
    std::vector<std::size_t> vol_lower, vol_upper;
    std::vector<int> index;
    Ratio best_vol{1, 0}, best_rank{1, 0};
    for (const auto& level : report.at("levels")) {
      const std::string where = "level " + std::to_string(level.at("level").get<int>()) + ": ";
      CosetTable table(working.generator_count, level.at("table").get<std::vector<std::vector<int>>>());
      if (!is_valid_coset_table(table, working)) fail(where + "table is not a coset table of the group");
      if (!tables.empty() && !refinement_map(table, tables.back())) fail(where + "chain is not descending");
      if (level.at("index") != table.degree()) fail(where + "index differs from table degree");
      tables.push_back(table);
      const int d = table.degree();

      auto cover = build_cover(base, model.complex, extend_table(table, model.simplified.generator_images));
      if (level.at("cover_facets") != cover.total.facet_count()) fail(where + "cover facet count differs");
      auto cover_homology = homology_all(cover.total);

      // Volume upper: the witness is a valid triangulation with the cover's
      // homology and the claimed facet count.
      const auto& vol = level.at("volume");
      auto witness = facets_from(vol.at("upper_witness_facets"));
      if (vol.at("upper") != witness.facet_count()) fail(where + "volume upper differs from witness facet count");
      if (homology_all(witness) != cover_homology) fail(where + "witness homology differs from the cover");
      if (witness.dimension() != base.dimension()) fail(where + "witness dimension differs");

      // Rank: lower from the subgroup abelianization, upper from generating
      // words that lie in the subgroup and generate a subgroup of equal index.
      auto rs = reidemeister_schreier(working, table);
      auto ab = abelianization(rs.presentation);
      const auto& rank = level.at("rank");
      if (rank.at("lower") != ab.min_generators()) fail(where + "rank lower differs from abelianization");
      auto words = rank.at("generators").get<std::vector<Word>>();
      if (rank.at("upper") != words.size()) fail(where + "rank upper differs from generator count");
      for (const auto& w : words)
        if (table.act(0, w) != 0) fail(where + "rank generator outside the subgroup");
      auto span = todd_coxeter(working, words, budgets.max_cosets);
      if (span.overflow() || span.index() != d) fail(where + "rank generators do not generate the subgroup");

      std::size_t lower = ab.min_generators();
      for (const auto& h : cover_homology) lower = std::max(lower, h.betti);
      if (vol.at("lower") != lower) fail(where + "volume lower differs from recomputation");
      if (lower > vol.at("upper").get<std::size_t>()) fail(where + "volume lower exceeds upper");
      if (rank.at("lower").get<std::size_t>() > rank.at("upper").get<std::size_t>())
        fail(where + "rank lower exceeds upper");

      const auto& ratios = level.at("ratios");
      Ratio v{vol.at("upper").get<long long>(), d}, rl{rank.at("lower").get<long long>() - 1, d};
      if (!same(ratio_from(ratios.at("volume_upper")), v)) fail(where + "volume ratio differs");
      if (!same(ratio_from(ratios.at("rank_lower")), rl)) fail(where + "rank ratio differs");
      if (!(rl <= v)) fail(where + "rank gradient ratio exceeds volume ratio");
      best_vol = best_vol.den == 0 ? v : min_ratio(best_vol, v);
      best_rank = best_rank.den == 0 ? rl : min_ratio(best_rank, rl);
      if (!same(ratio_from(ratios.at("running_min_volume")), best_vol)) fail(where + "running volume minimum differs");
      if (!same(ratio_from(ratios.at("running_min_rank_lower")), best_rank)) fail(where + "running rank minimum differs");

      for (std::size_t j = 0; j < vol_upper.size(); ++j)
        if (static_cast<long long>(lower) * index[j] > static_cast<long long>(vol_upper[j]) * d)
          fail(where + "volume lower contradicts the transfer bound from level " + std::to_string(j));
      vol_lower.push_back(lower);
      vol_upper.push_back(vol.at("upper").get<std::size_t>());
      index.push_back(d);

      if (level.contains("generation_certificate")) {
        const auto& cert = level.at("generation_certificate");
        auto cycle = fundamental_cycle(witness);
        auto extraction = extract_generators(witness, cycle.chain);
        auto again = verify_generation(witness, cycle.chain, extraction, {budgets.tietze_budget, budgets.max_cosets});
        if (cert.at("status") != again.status) fail(where + "generation certificate status differs on re-check");
      }
    }
    const auto& summary = report.at("summary");
    if (best_vol.den != 0) {
      if (!same(ratio_from(summary.at("best_volume_ratio")), best_vol)) fail("best volume ratio differs");
      if (!same(ratio_from(summary.at("best_rank_lower_ratio")), best_rank)) fail("best rank ratio differs");
    }
    if (summary.at("sound") != true) fail("report declares a soundness violation");
  } catch (const Error& e) {
    fail(std::string("rejected witness: ") + e.what());
  } catch (const json::exception& e) {
    fail(std::string("malformed report: ") + e.what());
  }
  return problems;
}

}  // namespace rgsv
