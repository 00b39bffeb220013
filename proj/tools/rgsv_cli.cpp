// rgsv: command-line front end.
//
//   rgsv analyze surface:2
//   rgsv gradient surface:2 --chain cyclic:2 --depth 6 --format csv
//   rgsv verify-lemmas torus:3
//   rgsv simplify cover.tri --seed 3 --budget 100000 --out small.tri
//   rgsv report --config run.json --format machine > report.json
//   rgsv validate report.json
//
// Exit status: 0 ok, 1 soundness violation or failed check, 2 bad input.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rgsv/catalog.hpp"
#include "rgsv/constructions.hpp"
#include "rgsv/error.hpp"
#include "rgsv/homology.hpp"
#include "rgsv/pachner.hpp"
#include "rgsv/report.hpp"
#include "rgsv/volume.hpp"

using namespace rgsv;
using nlohmann::json;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

int analyze(const std::string& name, const PachnerOptions& pachner) {
  auto entry = catalog_entry(name);
  const auto& t = entry.triangulation;
  std::cout << entry.name << ": dimension " << t.dimension() << ", " << t.vertex_count() << " vertices, "
            << t.facet_count() << " facets, euler characteristic " << t.euler_characteristic() << "\n";
  auto groups = homology_all(t);
  for (std::size_t k = 0; k < groups.size(); ++k) std::cout << "  H_" << k << " = " << groups[k].to_string() << "\n";
  auto model = group_model(t, 1000000);
  std::cout << "  edge-path presentation: " << model.complex.presentation.generator_count << " generators, "
            << model.complex.presentation.relators.size() << " relators; simplified to "
            << model.working().generator_count << " generators, " << model.working().relators.size() << " relators\n";
  auto rank = rank_bounds(model.working(), 1000000);
  std::cout << "  rank d(pi_1) in [" << rank.lower << ", " << rank.upper << "], abelianization "
            << rank.abelianization.to_string() << "\n";
  auto vol = volume_bounds(t, model.working(), pachner);
  std::cout << "  integral simplicial volume in [" << vol.lower << ", " << vol.upper << "] (lower from "
            << vol.lower_witness << ", upper after " << vol.moves << " moves)\n";
  for (const auto& k : entry.known) std::cout << "  known " << k.quantity << " = " << k.value << "  [" << k.provenance << "]\n";
  return 0;
}

int verify_lemmas(const std::string& name) {
  auto entry = catalog_entry(name);
  const auto& t = entry.triangulation;
  auto cycle = fundamental_cycle(t);
  auto glued = build_glued_complex(t, cycle.chain);
  auto gc = verify_glued_complex(t, glued, cycle.chain);
  std::cout << entry.name << " glued complex: " << gc.status << ", " << glued.cell_count() << " cells, rank "
            << gc.achieved_rank << " / n*m = " << gc.target_rank << ", image index " << gc.image_index
            << (gc.rank_stalled ? " [rank_stalled]" : "") << "\n";
  for (const auto& f : gc.failures) std::cout << "  " << f << "\n";
  auto ex = extract_generators(t, cycle.chain);
  auto gen = verify_generation(t, cycle.chain, ex);
  std::cout << entry.name << " generation: " << gen.status << ", |S| = " << gen.generator_count << " <= l1 = " << gen.l1
            << ", index " << gen.index << ", lift multiple " << gen.lift_multiple << "\n";
  for (const auto& f : gen.failures) std::cout << "  " << f << "\n";
  return gc.passed && gen.passed ? 0 : 1;
}

int simplify(const std::string& path, const PachnerOptions& options, const std::string& out) {
  auto t = read_triangulation_file(path);
  auto result = pachner_simplify(t, options);
  std::cerr << result.initial_facets << " -> " << result.triangulation.facet_count() << " facets, "
            << result.moves_applied << " moves" << (result.budget_exhausted ? " [budget exhausted]" : "")
            << (result.unsupported_dimension ? " [unsupported dimension: unchanged]" : "") << "\n";
  std::ostringstream text;
  write_triangulation(text, result.triangulation);
  emit(text.str(), out);
  return 0;
}

int run_report(const RunConfig& config, const std::string& format, const std::string& out) {
  auto cache = CoverCache::from_environment();
  auto report = run_theorem_report(config, cache ? &*cache : nullptr);
  if (format == "machine" || format == "json")
    emit(report_to_json(report).dump(1) + "\n", out);
  else if (format == "table" || format == "csv")
    emit(report_to_csv(report), out);
  else
    emit(report_to_text(report), out);
  if (!report.sound()) {
    for (const auto& v : report.violations) std::cerr << "soundness violation: " << v << "\n";
    return 1;
  }
  return 0;
}

int validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  auto problems = validate_report(j);
  for (const auto& p : problems) std::cout << "FAIL " << p << "\n";
  std::cout << (problems.empty() ? "report verified\n" : "report rejected\n");
  return problems.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank gradient versus stable integral simplicial volume on triangulated manifolds"};
  app.require_subcommand(1);

  RunConfig config;
  std::string config_path, format, out, name, file;
  std::uint64_t seed = 1;
  std::size_t budget = 100000;
  int restarts = 1;
  bool no_certificates = false;

  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "seed for all randomized search")->capture_default_str();
    sub->add_option("--budget", budget, "Pachner move budget per restart")->capture_default_str();
    sub->add_option("--restarts", restarts, "annealing restarts")->capture_default_str();
  };

  auto* an = app.add_subcommand("analyze", "homology, rank and volume bounds of a catalog manifold");
  an->add_option("name", name, "circle | sphere:N | torus:N | surface:G | file:PATH")->required();
  add_search_flags(an);

  auto* gr = app.add_subcommand("gradient", "stable sequence along a chain of covers");
  gr->add_option("name", name, "manifold")->required();
  gr->add_option("--chain", config.chain, "constant | sublattice:m | modp:p | cyclic:p | lowindex:e")->capture_default_str();
  gr->add_option("--depth", config.depth, "levels after the whole group")->capture_default_str();
  gr->add_option("--config", config_path, "JSON run description; flags given explicitly override it");
  gr->add_option("--format", format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  gr->add_option("--out", out, "output file (default stdout)");
  gr->add_flag("--no-certificates", no_certificates, "skip per-level generation certificates");
  add_search_flags(gr);

  auto* vl = app.add_subcommand("verify-lemmas", "glued-complex and generator certificates");
  vl->add_option("name", name, "manifold")->required();

  auto* si = app.add_subcommand("simplify", "bistellar simplification of a triangulation file");
  si->add_option("file", file, "triangulation file")->required()->check(CLI::ExistingFile);
  si->add_option("--out", out, "output file (default stdout)");
  add_search_flags(si);

  auto* re = app.add_subcommand("report", "run a declarative config and emit the report");
  re->add_option("--config", config_path, "JSON run description")->required()->check(CLI::ExistingFile);
  re->add_option("--format", format, "table (flat CSV) | machine (JSON)")
      ->check(CLI::IsMember({"table", "machine"}));
  re->add_option("--out", out, "output file (default stdout)");

  auto* va = app.add_subcommand("validate", "re-check a machine report from its witnesses");
  va->add_option("file", file, "report JSON")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  if (format.empty()) format = re->parsed() ? "table" : "text";

  PachnerOptions pachner;
  pachner.seed = seed;
  pachner.move_budget = budget;
  pachner.restarts = restarts;

  try {
    if (an->parsed()) return analyze(name, pachner);
    if (vl->parsed()) return verify_lemmas(name);
    if (si->parsed()) return simplify(file, pachner, out);
    if (va->parsed()) return validate(file);
    if (re->parsed()) return run_report(load_config(config_path), format, out);
    if (gr->parsed()) {
      RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
      c.manifold = name;
      if (config_path.empty() || gr->count("--chain")) c.chain = config.chain;
      if (config_path.empty() || gr->count("--depth")) c.depth = config.depth;
      if (config_path.empty() || gr->count("--seed")) c.seed = seed;
      if (config_path.empty() || gr->count("--budget")) c.budgets.pachner.move_budget = budget;
      if (config_path.empty() || gr->count("--restarts")) c.budgets.pachner.restarts = restarts;
      if (no_certificates) c.certificates = false;
      c.budgets.pachner.seed = c.seed;
      return run_report(c, format, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
