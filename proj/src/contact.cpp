#include "sasver/contact.hpp"

namespace sasver {

ContactEval contact_eval(const AlmostContactStructure& s, const Point& p) {
  ContactEval out;
  MatEval phi = evaluate_matrix_field(s.phi, p, false);
  out.phi = std::move(phi.M);
  out.dphi = std::move(phi.d);
  VecEval xi = evaluate_vector_field(s.xi.comp, p);
  out.xi = std::move(xi.v);
  out.dxi = std::move(xi.J);
  VecEval eta = evaluate_vector_field(s.eta.comp, p);
  out.eta = std::move(eta.v);
  out.deta = std::move(eta.J);
  return out;
}

namespace {

const AlmostContactStructure& structure_of(const StructuredManifold& M) {
  if (!M.structure)
    throw GeometryError("model " + M.name + " carries no almost contact structure");
  return *M.structure;
}

// Coordinate basis extended by xi itself; the duality and compatibility
// checks must see xi as a direction to catch scale mistakes in the metric.
std::vector<Eigen::VectorXd> directions_with_xi(int n, const Eigen::VectorXd& xi) {
  std::vector<Eigen::VectorXd> dirs;
  for (int i = 0; i < n; ++i) dirs.push_back(Eigen::VectorXd::Unit(n, i));
  dirs.push_back(xi);
  return dirs;
}

}  // namespace

SuiteReport check_almost_contact(const StructuredManifold& M, const Point& p,
                                 const Tolerances& tol) {
  const AlmostContactStructure& st = structure_of(M);
  ContactEval ct = contact_eval(st, p);
  Eigen::MatrixXd G = metric_at(M.metric, p);
  const int n = M.dim();

  SuiteReport rep;
  rep.suite = "almost_contact";

  double r_phi2 = (ct.phi * ct.phi + Eigen::MatrixXd::Identity(n, n) -
                   ct.xi * ct.eta.transpose())
                      .cwiseAbs()
                      .maxCoeff();
  rep.rows.push_back(make_residual("phi_squared", r_phi2, tol.residual));

  rep.rows.push_back(
      make_residual("eta_of_xi", std::abs(ct.eta.dot(ct.xi) - 1.0), tol.residual));
  rep.rows.push_back(
      make_residual("phi_of_xi", (ct.phi * ct.xi).cwiseAbs().maxCoeff(), tol.residual));
  rep.rows.push_back(make_residual(
      "eta_after_phi", (ct.eta.transpose() * ct.phi).cwiseAbs().maxCoeff(), tol.residual));

  std::vector<Eigen::VectorXd> dirs = directions_with_xi(n, ct.xi);
  double r_compat = 0.0;
  double r_dual = 0.0;
  for (const auto& x : dirs) {
    r_dual = std::max(r_dual, std::abs(ct.eta.dot(x) - x.dot(G * ct.xi)));
    for (const auto& y : dirs) {
      double lhs = (ct.phi * x).dot(G * (ct.phi * y));
      double rhs = x.dot(G * y) - ct.eta.dot(x) * ct.eta.dot(y);
      r_compat = std::max(r_compat, std::abs(lhs - rhs));
    }
  }
  rep.rows.push_back(make_residual("metric_compatibility", r_compat, tol.residual));
  rep.rows.push_back(make_residual("eta_metric_duality", r_dual, tol.residual));
  return rep;
}

SuiteReport check_contact_form(const StructuredManifold& M, const Point& p,
                               const Tolerances& tol) {
  const AlmostContactStructure& st = structure_of(M);
  ContactEval ct = contact_eval(st, p);
  Eigen::MatrixXd G = metric_at(M.metric, p);
  const int n = M.dim();

  // d eta(X,Y) = (1/2)(d_i eta_j - d_j eta_i) X^i Y^j against
  // Phi(X,Y) = g(X, phi Y)
  Eigen::MatrixXd Phi = G * ct.phi;
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double deta_ij = 0.5 * (ct.deta(j, i) - ct.deta(i, j));
      r = std::max(r, std::abs(deta_ij - Phi(i, j)));
    }
  SuiteReport rep;
  rep.suite = "almost_contact";
  rep.rows.push_back(make_residual("contact_form_deta", r, tol.residual));
  return rep;
}

SuiteReport check_sasakian(const StructuredManifold& M, const Point& p,
                           const Tolerances& tol) {
  const AlmostContactStructure& st = structure_of(M);
  ContactEval ct = contact_eval(st, p);
  MetricJet g = metric_jet(M.metric, p, false);
  std::vector<Eigen::MatrixXd> Gamma = christoffel_from(g);
  const int n = M.dim();

  auto gamma_dir = [&](int i, const Eigen::VectorXd& v) {
    Eigen::VectorXd w(n);
    for (int k = 0; k < n; ++k) w(k) = Gamma[k].row(i).dot(v);
    return w;
  };

  double r_phi = 0.0;
  double r_xi = 0.0;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
    Eigen::VectorXd nxi = ct.dxi.col(i) + gamma_dir(i, ct.xi);
    r_xi = std::max(r_xi, (nxi + ct.phi * ei).cwiseAbs().maxCoeff());
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      Eigen::VectorXd phi_ej = ct.phi.col(j);
      // (nabla_{e_i} phi) e_j = d_i(phi e_j) + Gamma(e_i, phi e_j) - phi Gamma(e_i, e_j)
      Eigen::VectorXd lhs =
          ct.dphi[i].col(j) + gamma_dir(i, phi_ej) - ct.phi * gamma_dir(i, ej);
      Eigen::VectorXd rhs = g.G(i, j) * ct.xi - ct.eta(j) * ei;
      r_phi = std::max(r_phi, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }

  SuiteReport rep;
  rep.suite = "sasakian";
  rep.rows.push_back(make_residual("nabla_phi_sasakian", r_phi, tol.derivative));
  rep.rows.push_back(make_residual("nabla_xi_antiphi", r_xi, tol.derivative));
  return rep;
}

SuiteReport check_sasakian_curvature(const StructuredManifold& M, const Point& p,
                                     const Tolerances& tol) {
  const AlmostContactStructure& st = structure_of(M);
  ContactEval ct = contact_eval(st, p);
  MetricJet g = metric_jet(M.metric, p, true);
  ConnectionJet c = connection_jet(M.metric, p);
  const int n = M.dim();

  double r_curv = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
      Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      Eigen::VectorXd lhs = riemann_value(c, ei, ej, ct.xi);
      Eigen::VectorXd rhs = ct.eta(j) * ei - ct.eta(i) * ej;
      r_curv = std::max(r_curv, (lhs - rhs).cwiseAbs().maxCoeff());
    }

  double r_ric = 0.0;
  std::vector<Eigen::VectorXd> dirs;
  for (int i = 0; i < n; ++i) dirs.push_back(Eigen::VectorXd::Unit(n, i));
  dirs.push_back(ct.xi);
  for (const auto& x : dirs) {
    double s = ricci_value(g, c, x, ct.xi);
    r_ric = std::max(r_ric, std::abs(s - (n - 1) * ct.eta.dot(x)));
  }

  SuiteReport rep;
  rep.suite = "sasakian";
  rep.rows.push_back(make_residual("curvature_r_xy_xi", r_curv, tol.curvature));
  rep.rows.push_back(make_residual("ricci_xi_direction", r_ric, tol.curvature));
  return rep;
}

}  // namespace sasver
