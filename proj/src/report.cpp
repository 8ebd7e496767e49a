#include "sasver/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sasver {

CheckRow make_residual(const std::string& name, double value, double threshold,
                       const std::string& note) {
  CheckRow r{name, RowKind::Residual, value, threshold,
             value <= threshold ? CheckStatus::Pass : CheckStatus::Fail, note};
  return r;
}

CheckRow make_witness(const std::string& name, double value, double threshold,
                      const std::string& note) {
  CheckRow r{name, RowKind::Witness, value, threshold,
             value >= threshold ? CheckStatus::Pass : CheckStatus::Inconclusive, note};
  return r;
}

CheckRow make_flag(const std::string& name, bool ok, const std::string& note) {
  CheckRow r{name, RowKind::Flag, ok ? 1.0 : 0.0, 0.5,
             ok ? CheckStatus::Pass : CheckStatus::Fail, note};
  return r;
}

CheckStatus SuiteReport::status() const {
  bool inconclusive = false;
  for (const CheckRow& r : rows) {
    if (r.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (r.status == CheckStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
}

void merge_into(SuiteReport& acc, const SuiteReport& point_report) {
  if (acc.rows.empty()) {
    acc = point_report;
    return;
  }
  if (acc.rows.size() != point_report.rows.size())
    throw std::logic_error("per-point report layout mismatch in suite " + acc.suite);
  for (size_t i = 0; i < acc.rows.size(); ++i) {
    CheckRow& a = acc.rows[i];
    const CheckRow& b = point_report.rows[i];
    if (a.name != b.name)
      throw std::logic_error("per-point report row mismatch: " + a.name + " vs " + b.name);
    switch (a.kind) {
      case RowKind::Residual:
        if (b.value > a.value) {
          a.value = b.value;
          a.note = b.note;
        }
        if (b.status == CheckStatus::Fail) a.status = CheckStatus::Fail;
        break;
      case RowKind::Witness:
        if (b.value > a.value) {
          a.value = b.value;
          a.note = b.note;
        }
        if (b.status == CheckStatus::Pass) a.status = CheckStatus::Pass;
        break;
      case RowKind::Flag:
        if (b.value < a.value) {
          a.value = b.value;
          a.note = b.note;
        }
        if (b.status == CheckStatus::Fail) a.status = CheckStatus::Fail;
        break;
    }
  }
}

CheckStatus RunReport::verdict() const {
  bool inconclusive = false;
  for (const SuiteReport& s : suites) {
    CheckStatus st = s.status();
    if (st == CheckStatus::Fail) return CheckStatus::Fail;
    if (st == CheckStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
}

std::string status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {
std::string kind_word(RowKind k) {
  switch (k) {
    case RowKind::Residual:
      return "residual";
    case RowKind::Witness:
      return "witness";
    case RowKind::Flag:
      return "flag";
  }
  return "?";
}
}  // namespace

std::string emit_text(const RunReport& r) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific;
  os << "model: " << r.model << "  points: " << r.points << "  seed: " << r.seed;
  if (r.tol_scale != 1.0) os << "  tol-scale: " << r.tol_scale;
  os << "\n";
  for (const SuiteReport& s : r.suites) {
    os << "[" << s.suite << "] " << status_word(s.status()) << "\n";
    size_t width = 0;
    for (const CheckRow& row : s.rows) width = std::max(width, row.name.size());
    for (const CheckRow& row : s.rows) {
      os << "  " << row.name << std::string(width - row.name.size() + 2, ' ');
      if (row.kind == RowKind::Flag)
        os << (row.value >= 0.5 ? "true " : "false") << "                          ";
      else
        os << kind_word(row.kind) << " " << row.value << " vs " << row.threshold;
      os << "  " << status_word(row.status);
      if (!row.note.empty()) os << "  (" << row.note << ")";
      os << "\n";
    }
  }
  os << "verdict: " << status_word(r.verdict()) << "\n";
  return os.str();
}

nlohmann::ordered_json emit_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "verify-report/1";
  j["model"] = r.model;
  j["points"] = r.points;
  j["seed"] = r.seed;
  j["tol_scale"] = r.tol_scale;
  j["suites"] = nlohmann::ordered_json::array();
  for (const SuiteReport& s : r.suites) {
    nlohmann::ordered_json js;
    js["suite"] = s.suite;
    js["status"] = status_word(s.status());
    js["rows"] = nlohmann::ordered_json::array();
    for (const CheckRow& row : s.rows) {
      nlohmann::ordered_json jr;
      jr["name"] = row.name;
      jr["kind"] = kind_word(row.kind);
      jr["value"] = row.value;
      jr["threshold"] = row.threshold;
      jr["status"] = status_word(row.status);
      if (!row.note.empty()) jr["note"] = row.note;
      js["rows"].push_back(jr);
    }
    j["suites"].push_back(js);
  }
  j["verdict"] = status_word(r.verdict());
  return j;
}

int exit_code(const RunReport& r) {
  switch (r.verdict()) {
    case CheckStatus::Pass:
      return 0;
    case CheckStatus::Fail:
      return 1;
    case CheckStatus::Inconclusive:
      return 2;
  }
  return 1;
}

}  // namespace sasver
