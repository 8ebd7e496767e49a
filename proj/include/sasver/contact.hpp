#pragma once

#include <optional>

#include "sasver/geometry.hpp"
#include "sasver/report.hpp"

namespace sasver {

// (phi, xi, eta) given as expression fields over the chart. phi acts on
// columns: (phi X)^i = phi(i,j) X^j.
struct AlmostContactStructure {
  MatrixFieldExpr phi;
  VectorFieldExpr xi;
  CovectorFieldExpr eta;
};

struct StructuredManifold {
  std::string name;
  Chart chart;
  MetricField metric;
  std::optional<AlmostContactStructure> structure;

  int dim() const { return chart.dim(); }
};

// Structure tensors evaluated at a point, with first derivatives.
struct ContactEval {
  Eigen::MatrixXd phi;
  std::vector<Eigen::MatrixXd> dphi;  // dphi[k] = d_k phi
  Eigen::VectorXd xi;
  Eigen::MatrixXd dxi;                // dxi(i,k) = d_k xi^i
  Eigen::VectorXd eta;
  Eigen::MatrixXd deta;               // deta(j,k) = d_k eta_j
};

ContactEval contact_eval(const AlmostContactStructure& s, const Point& p);

// Tolerance bundle shared by the check suites. residual/derivative/curvature
// are scaled by tol_scale in the runner; witness thresholds are not.
struct Tolerances {
  double residual = 1e-9;    // first-order/pointwise identities
  double derivative = 1e-8;  // identities involving one covariant derivative
  double curvature = 1e-7;   // identities involving curvature
  double frame = 1e-10;      // orthonormal frame Gram residual
  double witness = 0.1;      // lower bound for impossibility witnesses
  double harmonic = 1e-6;    // decision threshold for the harmonicity verdict

  Tolerances scaled(double s) const {
    Tolerances t = *this;
    t.residual *= s;
    t.derivative *= s;
    t.curvature *= s;
    t.frame *= s;
    return t;
  }
};

// Almost contact metric axioms at p: phi^2 = -I + eta (x) xi, eta(xi) = 1,
// phi xi = 0, eta o phi = 0, compatibility g(phi X, phi Y) = g(X,Y) -
// eta(X)eta(Y), and eta(X) = g(X, xi). Residual rows over the coordinate
// basis extended by xi itself.
SuiteReport check_almost_contact(const StructuredManifold& M, const Point& p,
                                 const Tolerances& tol);

// Contact condition: the fundamental 2-form Phi(X,Y) = g(X, phi Y) equals
// d eta with d eta(X,Y) = (1/2)(d_i eta_j - d_j eta_i) X^i Y^j.
SuiteReport check_contact_form(const StructuredManifold& M, const Point& p,
                               const Tolerances& tol);

// Normality/Sasakian condition (nabla_X phi)Y = g(X,Y) xi - eta(Y) X together
// with nabla_X xi = -phi X, over the coordinate basis.
SuiteReport check_sasakian(const StructuredManifold& M, const Point& p, const Tolerances& tol);

// Curvature identities of a Sasakian metric: R(X,Y)xi = eta(Y)X - eta(X)Y
// and S(X, xi) = (dim-1) eta(X).
SuiteReport check_sasakian_curvature(const StructuredManifold& M, const Point& p,
                                     const Tolerances& tol);

}  // namespace sasver
