#include "sasver/geometry.hpp"

#include <Eigen/Cholesky>

namespace sasver {

VecEval evaluate_vector_field(const std::vector<Expr>& comp, const Point& p) {
  const int n = static_cast<int>(comp.size());
  const int m = static_cast<int>(p.size());
  VecEval out;
  out.v = Eigen::VectorXd::Zero(n);
  out.J = Eigen::MatrixXd::Zero(n, m);
  out.H.assign(n, Eigen::MatrixXd::Zero(m, m));
  for (int a = 0; a < n; ++a) {
    if (comp[a].empty()) continue;
    Jet j = evaluate_jet(comp[a], p);
    out.v(a) = j.v;
    out.J.row(a) = j.g.transpose();
    out.H[a] = j.h;
  }
  return out;
}

Eigen::VectorXd evaluate_vector_value(const std::vector<Expr>& comp, const Point& p) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<int>(comp.size()));
  for (int a = 0; a < v.size(); ++a)
    if (!comp[a].empty()) v(a) = evaluate_value(comp[a], p);
  return v;
}

MatEval evaluate_matrix_field(const MatrixFieldExpr& f, const Point& p, bool second_order) {
  const int n = static_cast<int>(f.entry.size());
  const int m = static_cast<int>(p.size());
  MatEval out;
  out.M = Eigen::MatrixXd::Zero(n, n);
  out.d.assign(m, Eigen::MatrixXd::Zero(n, n));
  if (second_order)
    out.dd.assign(m, std::vector<Eigen::MatrixXd>(m, Eigen::MatrixXd::Zero(n, n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f.entry[i][j].empty()) continue;
      Jet jet = evaluate_jet(f.entry[i][j], p);
      out.M(i, j) = jet.v;
      for (int k = 0; k < m; ++k) {
        out.d[k](i, j) = jet.g(k);
        if (second_order)
          for (int l = 0; l < m; ++l) out.dd[k][l](i, j) = jet.h(k, l);
      }
    }
  }
  return out;
}

Eigen::MatrixXd evaluate_matrix_value(const MatrixFieldExpr& f, const Point& p) {
  const int n = static_cast<int>(f.entry.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!f.entry[i][j].empty()) M(i, j) = evaluate_value(f.entry[i][j], p);
  return M;
}

MetricJet metric_jet(const MetricField& m, const Point& p, bool second_order) {
  MatEval ev = evaluate_matrix_field(m.g, p, second_order);
  const int n = static_cast<int>(ev.M.rows());
  MetricJet out;
  out.G = ev.M;
  if (!out.G.isApprox(out.G.transpose(), 1e-13))
    throw GeometryError("metric is not symmetric at the evaluation point");
  Eigen::LLT<Eigen::MatrixXd> llt(out.G);
  if (llt.info() != Eigen::Success)
    throw GeometryError("metric is not positive definite at the evaluation point");
  out.Ginv = llt.solve(Eigen::MatrixXd::Identity(n, n));
  double resid = (out.G * out.Ginv - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (resid > 1e-12)
    throw GeometryError("metric inverse residual " + std::to_string(resid) + " exceeds 1e-12");
  out.dG = std::move(ev.d);
  out.ddG = std::move(ev.dd);
  out.dGinv.resize(out.dG.size());
  for (size_t k = 0; k < out.dG.size(); ++k)
    out.dGinv[k] = -out.Ginv * out.dG[k] * out.Ginv;
  return out;
}

Eigen::MatrixXd metric_at(const MetricField& m, const Point& p) {
  return metric_jet(m, p, false).G;
}

Eigen::MatrixXd inverse_metric_at(const MetricField& m, const Point& p) {
  return metric_jet(m, p, false).Ginv;
}

std::vector<Eigen::MatrixXd> christoffel_from(const MetricJet& g) {
  const int n = static_cast<int>(g.G.rows());
  std::vector<Eigen::MatrixXd> Gamma(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += g.Ginv(k, l) * (g.dG[i](j, l) + g.dG[j](i, l) - g.dG[l](i, j));
        Gamma[k](i, j) = 0.5 * s;
        Gamma[k](j, i) = Gamma[k](i, j);
      }
  return Gamma;
}

std::vector<Eigen::MatrixXd> christoffel_at(const MetricField& m, const Point& p) {
  return christoffel_from(metric_jet(m, p, false));
}

ConnectionJet connection_jet_from(const MetricJet& g) {
  if (g.ddG.empty())
    throw GeometryError("connection jet needs second-order metric data");
  const int n = static_cast<int>(g.G.rows());
  ConnectionJet c;
  c.Gamma = christoffel_from(g);
  c.dGamma.assign(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
  // d_m Gamma^k_ij = (1/2) d_m(G^kl) (d_i g_jl + d_j g_il - d_l g_ij)
  //               + (1/2) G^kl (d_m d_i g_jl + d_m d_j g_il - d_m d_l g_ij)
  for (int mm = 0; mm < n; ++mm)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
          double s = 0.0;
          for (int l = 0; l < n; ++l) {
            s += g.dGinv[mm](k, l) * (g.dG[i](j, l) + g.dG[j](i, l) - g.dG[l](i, j));
            s += g.Ginv(k, l) *
                 (g.ddG[mm][i](j, l) + g.ddG[mm][j](i, l) - g.ddG[mm][l](i, j));
          }
          c.dGamma[mm][k](i, j) = 0.5 * s;
          c.dGamma[mm][k](j, i) = c.dGamma[mm][k](i, j);
        }
  return c;
}

ConnectionJet connection_jet(const MetricField& m, const Point& p) {
  return connection_jet_from(metric_jet(m, p, true));
}

Eigen::VectorXd gamma_bilinear(const std::vector<Eigen::MatrixXd>& Gamma,
                               const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(static_cast<int>(Gamma.size()));
  for (size_t k = 0; k < Gamma.size(); ++k) out(static_cast<int>(k)) = a.dot(Gamma[k] * b);
  return out;
}

Eigen::VectorXd covariant_derivative_at(const MetricField& m, const VectorFieldExpr& X,
                                        const VectorFieldExpr& Y, const Point& p) {
  std::vector<Eigen::MatrixXd> Gamma = christoffel_at(m, p);
  VecEval xe = evaluate_vector_field(X.comp, p);
  VecEval ye = evaluate_vector_field(Y.comp, p);
  return ye.J * xe.v + gamma_bilinear(Gamma, xe.v, ye.v);
}

Eigen::VectorXd lie_bracket_at(const VectorFieldExpr& X, const VectorFieldExpr& Y,
                               const Point& p) {
  VecEval xe = evaluate_vector_field(X.comp, p);
  VecEval ye = evaluate_vector_field(Y.comp, p);
  return ye.J * xe.v - xe.J * ye.v;
}

Eigen::VectorXd riemann_value(const ConnectionJet& c, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& y, const Eigen::VectorXd& z) {
  const int n = static_cast<int>(c.Gamma.size());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  // R^l_kij = d_i Gamma^l_jk - d_j Gamma^l_ik + Gamma^l_ia Gamma^a_jk
  //         - Gamma^l_ja Gamma^a_ik, contracted with x^i y^j z^k
  for (int l = 0; l < n; ++l) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double xy = x(i) * y(j);
        if (xy == 0.0) continue;
        for (int k = 0; k < n; ++k) {
          double term = c.dGamma[i][l](j, k) - c.dGamma[j][l](i, k);
          for (int a = 0; a < n; ++a)
            term += c.Gamma[l](i, a) * c.Gamma[a](j, k) -
                    c.Gamma[l](j, a) * c.Gamma[a](i, k);
          s += xy * z(k) * term;
        }
      }
    out(l) = s;
  }
  return out;
}

Eigen::VectorXd riemann_at(const MetricField& m, const VectorFieldExpr& X,
                           const VectorFieldExpr& Y, const VectorFieldExpr& Z,
                           const Point& p) {
  // For expression fields: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
  // - nabla_[X,Y] Z. Expand through the coordinate formula so only first
  // derivatives of the field components and dGamma are needed:
  // (R(X,Y)Z)^l = R^l_kij X^i Y^j Z^k with the same convention as above.
  ConnectionJet c = connection_jet(m, p);
  VecEval xe = evaluate_vector_field(X.comp, p);
  VecEval ye = evaluate_vector_field(Y.comp, p);
  VecEval ze = evaluate_vector_field(Z.comp, p);
  return riemann_value(c, xe.v, ye.v, ze.v);
}

Eigen::MatrixXd orthonormal_frame(const Eigen::MatrixXd& G) {
  Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success)
    throw GeometryError("metric is not positive definite; no orthonormal frame");
  Eigen::MatrixXd L = llt.matrixL();
  const int n = static_cast<int>(G.rows());
  // E = L^{-T}: solve L^T E = I
  return L.transpose().triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(n, n));
}

double ricci_value(const MetricJet& g, const ConnectionJet& c, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y) {
  Eigen::MatrixXd E = orthonormal_frame(g.G);
  double s = 0.0;
  for (int a = 0; a < E.cols(); ++a) {
    Eigen::VectorXd ea = E.col(a);
    s += ea.dot(g.G * riemann_value(c, ea, x, y));
  }
  return s;
}

double ricci_at(const MetricField& m, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                const Point& p) {
  MetricJet g = metric_jet(m, p, true);
  ConnectionJet c = connection_jet(m, p);
  return ricci_value(g, c, x, y);
}

}  // namespace sasver
