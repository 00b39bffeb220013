#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rgsv/chain.hpp"
#include "rgsv/constructions.hpp"
#include "rgsv/cover.hpp"
#include "rgsv/volume.hpp"

namespace rgsv {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kConfigSchemaVersion = 1;

// One declarative run description. All randomness flows from `seed`.
struct RunConfig {
  std::string manifold = "torus:2";
  std::string chain = "constant";
  int depth = 0;
  std::uint64_t seed = 1;
  Budgets budgets;
  bool certificates = true;  // per-level generation certificates on the witnesses
};

// Throws Error(ParseError) on a wrong schema version, unknown keys or bad types.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);
RunConfig load_config(const std::string& path);

struct TheoremReport {
  RunConfig config;
  GroupModel model;
  Chain chain;
  StableSequence sequence;
  std::vector<GenerationCertificate> certificates;  // per level, empty when disabled
  Ratio best_volume_ratio;
  Ratio best_rank_lower_ratio;
  std::vector<std::string> violations;  // soundness failures across the whole run

  bool sound() const { return violations.empty(); }
  bool partial() const { return chain.truncated; }
};

// catalog -> presentation -> chain -> stable sequence -> per-level
// certificates. Never swallows errors; soundness failures end up in
// `violations` (and make the CLI exit nonzero).
TheoremReport run_theorem_report(const RunConfig& config, const CoverCache* cache = nullptr);

// Machine report with every witness needed for offline re-checking.
nlohmann::json report_to_json(const TheoremReport& r);
// Flat table, one row per level:
// index,volume_upper,volume_upper/index,rank_lower,rank_upper,(rank_lower-1)/index,flags
std::string report_to_csv(const TheoremReport& r);
// Aligned human-readable table with a summary line.
std::string report_to_text(const TheoremReport& r);

// (rank_lower - 1)/index as displayed: floored at 0.
double displayed_rank_ratio(const Ratio& raw);

// Re-derives every number of a machine report from its witnesses (base
// triangulation, coset tables, witness triangulations, generating words).
// Returns the list of discrepancies; empty means the report checks out.
std::vector<std::string> validate_report(const nlohmann::json& report, const Budgets& budgets = {});

}  // namespace rgsv
