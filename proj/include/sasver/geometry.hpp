#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sasver/expr.hpp"

namespace sasver {

// Expression-valued fields over one chart.
struct VectorFieldExpr {
  std::vector<Expr> comp;  // dim entries, contravariant components
};

struct CovectorFieldExpr {
  std::vector<Expr> comp;  // dim entries
};

struct MatrixFieldExpr {
  std::vector<std::vector<Expr>> entry;  // dim x dim
};

// Metric as an expression-valued symmetric matrix field over a chart.
struct MetricField {
  Chart chart;
  MatrixFieldExpr g;
};

// Point evaluation of a vector field with derivatives.
struct VecEval {
  Eigen::VectorXd v;                  // components
  Eigen::MatrixXd J;                  // J(a,k) = d_k v^a
  std::vector<Eigen::MatrixXd> H;     // H[a](i,j) = d_i d_j v^a
};

VecEval evaluate_vector_field(const std::vector<Expr>& comp, const Point& p);
Eigen::VectorXd evaluate_vector_value(const std::vector<Expr>& comp, const Point& p);

// Point evaluation of a matrix field with first and second derivatives.
struct MatEval {
  Eigen::MatrixXd M;
  std::vector<Eigen::MatrixXd> d;                    // d[k] = d_k M
  std::vector<std::vector<Eigen::MatrixXd>> dd;      // dd[k][l] = d_k d_l M
};

MatEval evaluate_matrix_field(const MatrixFieldExpr& f, const Point& p, bool second_order);
Eigen::MatrixXd evaluate_matrix_value(const MatrixFieldExpr& f, const Point& p);

struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Metric data at a point: value, inverse, first (and on request, second)
// coordinate derivatives. The inverse is validated to 1e-12 residual and the
// value is required to be symmetric positive definite.
struct MetricJet {
  Eigen::MatrixXd G;
  Eigen::MatrixXd Ginv;
  std::vector<Eigen::MatrixXd> dG;
  std::vector<std::vector<Eigen::MatrixXd>> ddG;  // empty unless second_order
  std::vector<Eigen::MatrixXd> dGinv;             // d_k G^{-1} = -G^{-1} (d_k G) G^{-1}
};

MetricJet metric_jet(const MetricField& m, const Point& p, bool second_order);

Eigen::MatrixXd metric_at(const MetricField& m, const Point& p);
Eigen::MatrixXd inverse_metric_at(const MetricField& m, const Point& p);

// Christoffel symbols of the Levi-Civita connection. Gamma[k](i,j) is the
// k-th component of nabla_{d_i} d_j; symmetric in (i,j).
std::vector<Eigen::MatrixXd> christoffel_from(const MetricJet& g);
std::vector<Eigen::MatrixXd> christoffel_at(const MetricField& m, const Point& p);

struct ConnectionJet {
  std::vector<Eigen::MatrixXd> Gamma;                   // Gamma[k](i,j)
  std::vector<std::vector<Eigen::MatrixXd>> dGamma;     // dGamma[m][k](i,j) = d_m Gamma[k](i,j)
};

ConnectionJet connection_jet_from(const MetricJet& g);
ConnectionJet connection_jet(const MetricField& m, const Point& p);

// Gamma(a,b)^k = Gamma[k](i,j) a^i b^j.
Eigen::VectorXd gamma_bilinear(const std::vector<Eigen::MatrixXd>& Gamma,
                               const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Covariant derivative of an expression field Y along an expression field X
// at p: (nabla_X Y)^k = X^i d_i Y^k + Gamma^k_ij X^i Y^j.
Eigen::VectorXd covariant_derivative_at(const MetricField& m, const VectorFieldExpr& X,
                                        const VectorFieldExpr& Y, const Point& p);

// [X, Y]^k = X^i d_i Y^k - Y^i d_i X^k.
Eigen::VectorXd lie_bracket_at(const VectorFieldExpr& X, const VectorFieldExpr& Y, const Point& p);

// Curvature with the convention R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
// - nabla_[X,Y] Z, evaluated on constant-coefficient directions.
Eigen::VectorXd riemann_value(const ConnectionJet& c, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& y, const Eigen::VectorXd& z);

// Field version (directions may vary over the chart).
Eigen::VectorXd riemann_at(const MetricField& m, const VectorFieldExpr& X,
                           const VectorFieldExpr& Y, const VectorFieldExpr& Z, const Point& p);

// Columns form a g-orthonormal frame: E^T G E = I. Built from the Cholesky
// factorization G = L L^T as E = L^{-T}.
Eigen::MatrixXd orthonormal_frame(const Eigen::MatrixXd& G);

// Ricci as the trace of V -> R(V,X)Y over a g-orthonormal frame.
double ricci_value(const MetricJet& g, const ConnectionJet& c, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y);
double ricci_at(const MetricField& m, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                const Point& p);

}  // namespace sasver
