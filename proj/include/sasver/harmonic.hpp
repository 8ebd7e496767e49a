#pragma once

#include "sasver/submersion.hpp"

namespace sasver {

// Second fundamental form of the map at s.p on tangent vectors x, y, in
// target components:
//   (nabla dF)(x,y)^a = Hess(F^a)(x,y) + Gamma_N^a(dF x, dF y) - dF(Gamma_M(x,y))^a.
// Independent of how x and y are extended to fields; symmetric in (x,y).
Eigen::VectorXd second_fundamental_form_at(const PointSplit& s, const Eigen::VectorXd& x,
                                           const Eigen::VectorXd& y);

// Tension field tau = trace_g (nabla dF) over a full orthonormal frame, in
// target components. vertical_only restricts the trace to the fiber frame.
Eigen::VectorXd tension_at(const PointSplit& s, bool vertical_only = false);

// Harmonicity rows: trace identity for the structure trace of phi T, fiber
// minimality, tension, and coherence of the three verdicts.
SuiteReport check_harmonicity(const SubmersionSpec& F, const PointSplit& s,
                              const Tolerances& tol);

// Totally geodesic map rows: sff symmetry, extension independence spot check,
// vanishing (flag) or non-vanishing (witness) of nabla dF.
SuiteReport check_totally_geodesic_map(const SubmersionSpec& F, const PointSplit& s,
                                       const Tolerances& tol, std::uint64_t salt);

}  // namespace sasver
