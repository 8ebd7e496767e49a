#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace sasver {

enum class CheckStatus { Pass, Fail, Inconclusive };

// Residual rows pass when value <= threshold (max over sample points).
// Witness rows pass when some sampled point reaches value >= threshold;
// until then they are inconclusive, never failing.
// Flag rows are boolean facts (1 pass / 0 fail), AND-ed over points.
enum class RowKind { Residual, Witness, Flag };

struct CheckRow {
  std::string name;
  RowKind kind = RowKind::Residual;
  double value = 0.0;
  double threshold = 0.0;
  CheckStatus status = CheckStatus::Pass;
  std::string note;
};

CheckRow make_residual(const std::string& name, double value, double threshold,
                       const std::string& note = "");
CheckRow make_witness(const std::string& name, double value, double threshold,
                      const std::string& note = "");
CheckRow make_flag(const std::string& name, bool ok, const std::string& note = "");

struct SuiteReport {
  std::string suite;
  std::vector<CheckRow> rows;
  CheckStatus status() const;
};

// Accumulate a per-point report into a running one. Row layouts must match
// (same names in the same order); notes from the worst point are kept.
void merge_into(SuiteReport& acc, const SuiteReport& point_report);

struct RunReport {
  std::string model;
  std::uint64_t seed = 0;
  int points = 0;
  double tol_scale = 1.0;
  std::vector<SuiteReport> suites;
  CheckStatus verdict() const;
};

std::string status_word(CheckStatus s);
std::string emit_text(const RunReport& r);
nlohmann::ordered_json emit_json(const RunReport& r);

// 0 all pass, 1 some check failed, 2 pass-or-inconclusive with at least one
// inconclusive witness.
int exit_code(const RunReport& r);

}  // namespace sasver
