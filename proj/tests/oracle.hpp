#pragma once

// Finite-difference oracles used to cross-check the analytic derivative
// machinery. Everything here differentiates point VALUES with central
// differences; none of it calls the jet-based Christoffel / curvature /
// projector-derivative code paths it is checking. The projected-field
// oracles (fd_T, fd_A) evaluate the projectors at shifted points from the
// exact metric and Jacobian values there, so their difference quotients
// never touch the analytic d(projector) assembly.

#include <functional>

#include "sasver/submersion.hpp"

namespace oracle {

using MatFun = std::function<Eigen::MatrixXd(const sasver::Point&)>;

// Value-only evaluator for an expression-valued symmetric matrix field.
MatFun metric_fun(const sasver::MetricField& m);

// Christoffel symbols from metric values alone; Gamma[k](i,j).
std::vector<Eigen::MatrixXd> fd_christoffel(const MatFun& g, const sasver::Point& p,
                                            double h = 1e-5);

// R(x,y)z from nested finite differences of the Christoffel symbols.
Eigen::VectorXd fd_riemann_apply(const MatFun& g, const sasver::Point& p,
                                 const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                 const Eigen::VectorXd& z, double h_outer = 1e-4,
                                 double h_inner = 1e-5);

// O'Neill tensors from difference quotients of the projected constant
// extensions of e2 along e1's projection.
Eigen::VectorXd fd_T(const sasver::SubmersionSpec& F, const sasver::Point& p,
                     const Eigen::VectorXd& e1, const Eigen::VectorXd& e2,
                     double h = 1e-4);
Eigen::VectorXd fd_A(const sasver::SubmersionSpec& F, const sasver::Point& p,
                     const Eigen::VectorXd& e1, const Eigen::VectorXd& e2,
                     double h = 1e-4);

// Second fundamental form of the map from value-level finite differences:
// map Hessians, map Jacobian, and both metrics' fd_christoffel.
Eigen::VectorXd fd_sff(const sasver::SubmersionSpec& F, const sasver::Point& p,
                       const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                       double h = 1e-4);

}  // namespace oracle
