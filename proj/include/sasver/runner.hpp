#pragma once

#include <random>

#include "sasver/report.hpp"
#include "sasver/submersion.hpp"

namespace sasver {

// Raised for usage-level problems (unknown or inapplicable suite); maps to
// exit code 4 in the CLI.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunOptions {
  std::string suite = "all";
  int points = -1;              // -1: model default
  std::uint64_t seed = 0;
  bool seed_set = false;        // when false, model default
  double tol_scale = 1.0;
};

std::vector<std::string> suite_names();

// Uniform double in [0,1) from the top 53 bits; fixed mapping so reports are
// reproducible across standard library implementations.
double unit_double(std::mt19937_64& rng);

// Guard-respecting uniform sampling from the model box. Throws ModelError
// when the guards reject too many draws.
std::vector<Point> sample_points(const SubmersionSpec& F, int n, std::uint64_t seed);

// Runs the selected suites over sampled points and merges per-point reports.
RunReport run_suite(const SubmersionSpec& F, const RunOptions& opt);

}  // namespace sasver
