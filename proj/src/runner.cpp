#include "sasver/runner.hpp"

#include <algorithm>

#include "sasver/contact.hpp"
#include "sasver/harmonic.hpp"
#include "sasver/oneill.hpp"

namespace sasver {

std::vector<std::string> suite_names() {
  return {"all", "almost_contact", "sasakian", "axioms", "lemmas", "criteria",
          "harmonic"};
}

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Point> sample_points(const SubmersionSpec& F, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(n));
  const int dim = F.src_dim();
  long attempts = 0;
  const long max_attempts = std::max(100000L, 2000L * n);
  while (static_cast<int>(out.size()) < n) {
    if (++attempts > max_attempts)
      throw ModelError(F.name + ": guards rejected " + std::to_string(attempts - 1) +
                       " draws; domain box looks incompatible with the guards");
    Point p(dim);
    for (int i = 0; i < dim; ++i)
      p(i) = F.box_lo + (F.box_hi - F.box_lo) * unit_double(rng);
    bool ok = true;
    for (const auto& guard : F.guards)
      if (evaluate_value(guard, p) <= 0.0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

namespace {

enum class LemmaVariant { None, VerticalXi, HorizontalXi };

}  // namespace

RunReport run_suite(const SubmersionSpec& F, const RunOptions& opt) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), opt.suite) == names.end())
    throw UsageError("unknown suite '" + opt.suite + "'");

  const bool all = opt.suite == "all";
  auto requested = [&](const char* s) { return all || opt.suite == s; };

  const bool structure_suite_possible = F.has_structure();
  const bool map_suite_possible = F.has_map();
  if (!all) {
    bool needs_structure = opt.suite == "almost_contact" || opt.suite == "sasakian" ||
                           opt.suite == "lemmas";
    bool needs_map = opt.suite == "axioms" || opt.suite == "lemmas" ||
                     opt.suite == "criteria" || opt.suite == "harmonic";
    if (needs_structure && !structure_suite_possible)
      throw UsageError("suite '" + opt.suite + "' needs an almost contact structure, "
                       "which model '" + F.name + "' does not declare");
    if (needs_map && !map_suite_possible)
      throw UsageError("suite '" + opt.suite + "' needs a map, which model '" +
                       F.name + "' does not declare");
  }

  const int n = opt.points > 0 ? opt.points : F.default_points;
  const std::uint64_t seed = opt.seed_set ? opt.seed : F.default_seed;
  Tolerances tol = Tolerances{}.scaled(opt.tol_scale);

  RunReport out;
  out.model = F.name;
  out.seed = seed;
  out.points = n;
  out.tol_scale = opt.tol_scale;

  std::vector<Point> pts = sample_points(F, n, seed);

  bool run_contact = requested("almost_contact") && structure_suite_possible;
  bool run_sasakian = requested("sasakian") && structure_suite_possible;
  bool run_axioms = requested("axioms") && map_suite_possible;
  bool run_criteria = requested("criteria") && map_suite_possible;
  bool run_harmonic = requested("harmonic") && map_suite_possible;
  bool want_lemmas =
      requested("lemmas") && map_suite_possible && structure_suite_possible;

  // The lemma inventory depends on where the structure vector sits relative
  // to the splitting; decide once from the first sample.
  LemmaVariant variant = LemmaVariant::None;
  if (want_lemmas) {
    PointSplit s0 = split_at(F, pts.front());
    AntiInvarianceReport air = classify_anti_invariance(F, s0, tol);
    if (air.xi_vertical)
      variant = LemmaVariant::VerticalXi;
    else if (air.xi_horizontal)
      variant = LemmaVariant::HorizontalXi;
    else if (!all)
      throw UsageError("suite 'lemmas' needs the structure vector to be vertical or "
                       "horizontal; on '" + F.name + "' it is neither");
  }
  bool run_lemmas = want_lemmas && variant != LemmaVariant::None;

  struct Acc {
    SuiteReport rep;
    bool first = true;
  };
  Acc contact_acc, sasakian_acc, axioms_acc, lemmas_acc, criteria_acc, harmonic_acc;
  auto fold = [](Acc& acc, const SuiteReport& r) {
    if (acc.first) {
      acc.rep = r;
      acc.first = false;
    } else {
      merge_into(acc.rep, r);
    }
  };
  auto append_rows = [](SuiteReport& dst, const SuiteReport& src) {
    dst.rows.insert(dst.rows.end(), src.rows.begin(), src.rows.end());
  };

  for (size_t k = 0; k < pts.size(); ++k) {
    const Point& p = pts[k];
    const std::uint64_t salt =
        seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(k + 1));

    if (run_contact) {
      SuiteReport r = check_almost_contact(F.source, p, tol);
      append_rows(r, check_contact_form(F.source, p, tol));
      fold(contact_acc, r);
    }
    if (run_sasakian) {
      SuiteReport r = check_sasakian(F.source, p, tol);
      append_rows(r, check_sasakian_curvature(F.source, p, tol));
      fold(sasakian_acc, r);
    }

    if (run_axioms || run_lemmas || run_criteria || run_harmonic) {
      PointSplit s = split_at(F, p);
      if (run_axioms) {
        SuiteReport r = check_submersion_axioms(F, s, tol);
        if (F.has_structure()) append_rows(r, classification_rows(F, s, tol));
        fold(axioms_acc, r);
      }
      if (run_lemmas) {
        SuiteReport r = variant == LemmaVariant::VerticalXi
                            ? lemma_suite_vertical_xi(F, s, tol, salt)
                            : lemma_suite_horizontal_xi(F, s, tol, salt);
        fold(lemmas_acc, r);
      }
      if (run_criteria) {
        SuiteReport r = fundamental_equations_check(F, s, tol, salt);
        append_rows(r, distribution_criteria(F, s, tol, salt));
        fold(criteria_acc, r);
      }
      if (run_harmonic) {
        SuiteReport r = check_harmonicity(F, s, tol);
        append_rows(r, check_totally_geodesic_map(F, s, tol, salt));
        fold(harmonic_acc, r);
      }
    }
  }

  for (Acc* acc : {&contact_acc, &sasakian_acc, &axioms_acc, &lemmas_acc,
                   &criteria_acc, &harmonic_acc})
    if (!acc->first) out.suites.push_back(std::move(acc->rep));
  return out;
}

}  // namespace sasver
