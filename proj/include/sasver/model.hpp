#pragma once

#include "sasver/submersion.hpp"

namespace sasver {

// Parses the sectioned key/value model format:
//
//   [source]            # chart and metric of the domain
//   vars = x y z
//   g[1][1] = 1 + y^2   # 1-based indices, symmetric entries mirrored
//   [structure]         # optional almost contact data on the source
//   phi[1][2] = 1
//   xi[3] = 2
//   eta[3] = 1/2
//   [target]            # optional; same keys as [source], no structure
//   vars = u v
//   g[1][1] = 1/8
//   [map]               # required when [target] is present
//   F[1] = x + y
//   guard = 2 - x^2     # repeatable; sample points must satisfy guard > 0
//   [domain]
//   box = -0.9 0.9
//   [sample]
//   points = 50
//   seed = 42
//
// '#' starts a comment. Unset metric entries are zero. Giving both g[i][j]
// and g[j][i] with different raw text is an error. Throws ModelError with
// line information on any defect.
SubmersionSpec load_model(const std::string& text, const std::string& origin);
SubmersionSpec load_model_file(const std::string& path);

}  // namespace sasver
