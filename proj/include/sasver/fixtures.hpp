#pragma once

#include <string>
#include <vector>

#include "sasver/submersion.hpp"

namespace sasver {

// Built-in models. Structure fixtures: example1 (dim 5), example1-r7 (dim 7),
// example1-printed (dim 5, with the inconsistent metric normalization kept
// as published). Map fixtures: example2, example3, example4, flat-r2-r1,
// poly-r3-r2.
std::vector<std::string> fixture_names();
bool is_fixture(const std::string& name);
std::string fixture_text(const std::string& name);
SubmersionSpec load_fixture(const std::string& name);

}  // namespace sasver
