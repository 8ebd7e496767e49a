#pragma once

#include <cstdint>

#include "sasver/contact.hpp"

namespace sasver {

struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// A verification model: a source manifold, optionally a target manifold with
// a smooth map between them, plus the sampling domain. Structure-only models
// leave map empty.
struct SubmersionSpec {
  std::string name;
  StructuredManifold source;
  StructuredManifold target;
  std::vector<Expr> map;     // target.dim() components in source coordinates
  std::vector<Expr> guards;  // point admissible iff every guard evaluates > 0
  double box_lo = -0.9;
  double box_hi = 0.9;
  int default_points = 50;
  std::uint64_t default_seed = 42;

  bool has_map() const { return !map.empty(); }
  bool has_structure() const { return source.structure.has_value(); }
  int src_dim() const { return source.dim(); }
  int tgt_dim() const { return target.dim(); }
};

// Matrix field germ at a point: value and first coordinate derivatives.
struct MatField {
  Eigen::MatrixXd M;
  std::vector<Eigen::MatrixXd> d;
};

MatField mf_mul(const MatField& a, const MatField& b);
MatField mf_neg(const MatField& a);

// Everything the tensor calculus needs at one source point: metric and
// connection jets, the differential of the map with its derivative, the
// vertical/horizontal projectors with their derivatives, orthonormal frames
// for both distributions, target metric data at the image point, and the
// contact tensors when the source carries a structure.
struct PointSplit {
  Point p;
  MetricJet g;
  ConnectionJet conn;

  // map data (only when the model has a map)
  Eigen::VectorXd image;
  Eigen::MatrixXd J;                // J(a,i) = d_i F^a, size n x m
  std::vector<Eigen::MatrixXd> dJ;  // dJ[i](a,j) = d_i d_j F^a
  MatField PV, PH;                  // projectors onto ker dF and its g-orthogonal complement
  std::vector<Eigen::VectorXd> vert, horiz;  // g-orthonormal frames
  MetricJet gN;                     // target metric at image
  std::vector<Eigen::MatrixXd> GammaN;

  // contact data (only when the source has a structure)
  bool has_contact = false;
  ContactEval ct;
  MatField phi;

  // phi(vertical) inside the horizontal space, and its orthogonal complement
  // mu within horizontal (empty without structure or map)
  std::vector<Eigen::VectorXd> phiV;
  std::vector<Eigen::VectorXd> mu;

  int dim() const { return static_cast<int>(p.size()); }
  double ip(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const { return a.dot(g.G * b); }
  Eigen::VectorXd project_v(const Eigen::VectorXd& x) const { return PV.M * x; }
  Eigen::VectorXd project_h(const Eigen::VectorXd& x) const { return PH.M * x; }
  double eta_of(const Eigen::VectorXd& x) const { return ct.eta.dot(x); }
};

// Builds the full point package. Throws ModelError when dF is rank deficient
// at p or the metrics fail to be positive definite.
PointSplit split_at(const SubmersionSpec& F, const Point& p);

Eigen::MatrixXd differential_at(const SubmersionSpec& F, const Point& p);

struct SplitFrame {
  std::vector<Eigen::VectorXd> vertical, horizontal;
};
SplitFrame split_frame_at(const SubmersionSpec& F, const Point& p);

// Unique horizontal vector mapped to w by dF.
Eigen::VectorXd horizontal_lift(const PointSplit& s, const Eigen::VectorXd& w);

// x projected onto the vertical (true) or horizontal (false) distribution.
Eigen::VectorXd project(const PointSplit& s, const Eigen::VectorXd& x, bool vertical);

// phi restricted to horizontal vectors, split into vertical part B and
// horizontal part C: for horizontal X, phi X = B X + C X.
MatField bc_B(const PointSplit& s);
MatField bc_C(const PointSplit& s);

// Rank, frame health, projector algebra, kernel containment and length
// preservation on horizontal vectors.
SuiteReport check_submersion_axioms(const SubmersionSpec& F, const PointSplit& s,
                                    const Tolerances& tol);

struct AntiInvarianceReport {
  double max_overlap = 0.0;  // max |g(phi v, w)| over the vertical frame
  bool anti_invariant = false;
  int phiV_dim = 0;
  int mu_dim = 0;
  int def1_intersection_dim = 0;  // dim of phi(V) inside V
  bool xi_vertical = false;
  bool xi_horizontal = false;
};

AntiInvarianceReport classify_anti_invariance(const SubmersionSpec& F, const PointSplit& s,
                                              const Tolerances& tol);

// Classification facts as report rows (appended to the axioms suite).
SuiteReport classification_rows(const SubmersionSpec& F, const PointSplit& s,
                                const Tolerances& tol);

}  // namespace sasver
