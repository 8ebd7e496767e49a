#include "oracle.hpp"

namespace oracle {

using sasver::Point;

MatFun metric_fun(const sasver::MetricField& m) {
  return [&m](const Point& p) { return evaluate_matrix_value(m.g, p); };
}

std::vector<Eigen::MatrixXd> fd_christoffel(const MatFun& g, const Point& p, double h) {
  const int n = static_cast<int>(p.size());
  Eigen::MatrixXd G = g(p);
  Eigen::MatrixXd Ginv = G.inverse();

  std::vector<Eigen::MatrixXd> dG(n);
  for (int k = 0; k < n; ++k) {
    Point pp = p, pm = p;
    pp(k) += h;
    pm(k) -= h;
    dG[k] = (g(pp) - g(pm)) / (2.0 * h);
  }

  std::vector<Eigen::MatrixXd> Gamma(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += Ginv(k, l) * (dG[i](j, l) + dG[j](i, l) - dG[l](i, j));
        Gamma[k](i, j) = 0.5 * s;
      }
  return Gamma;
}

Eigen::VectorXd fd_riemann_apply(const MatFun& g, const Point& p,
                                 const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                 const Eigen::VectorXd& z, double h_outer,
                                 double h_inner) {
  const int n = static_cast<int>(p.size());
  // dGamma[m][k](i,j) = d_m Gamma^k_ij by an outer difference of the inner
  // finite-difference Christoffels
  std::vector<std::vector<Eigen::MatrixXd>> dGamma(n);
  for (int m = 0; m < n; ++m) {
    Point pp = p, pm = p;
    pp(m) += h_outer;
    pm(m) -= h_outer;
    auto Gp = fd_christoffel(g, pp, h_inner);
    auto Gm = fd_christoffel(g, pm, h_inner);
    dGamma[m].resize(n);
    for (int k = 0; k < n; ++k) dGamma[m][k] = (Gp[k] - Gm[k]) / (2.0 * h_outer);
  }
  auto Gamma = fd_christoffel(g, p, h_inner);

  // R(x,y)z^l = x^i y^j z^k (d_i Gamma^l_jk - d_j Gamma^l_ik
  //                          + Gamma^l_ia Gamma^a_jk - Gamma^l_ja Gamma^a_ik)
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int l = 0; l < n; ++l) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      if (x(i) == 0.0 && y(i) == 0.0) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double w = x(i) * y(j) * z(k);
          if (w == 0.0) continue;
          double term = dGamma[i][l](j, k) - dGamma[j][l](i, k);
          for (int a = 0; a < n; ++a)
            term += Gamma[l](i, a) * Gamma[a](j, k) - Gamma[l](j, a) * Gamma[a](i, k);
          acc += w * term;
        }
    }
    out(l) = acc;
  }
  return out;
}

namespace {

// Vertical and horizontal projectors at q from exact metric and map
// Jacobian values there.
void projectors_at(const sasver::SubmersionSpec& F, const Point& q,
                   Eigen::MatrixXd& PV, Eigen::MatrixXd& PH) {
  const int m = F.src_dim();
  const int n = F.tgt_dim();
  Eigen::MatrixXd G = evaluate_matrix_value(F.source.metric.g, q);
  Eigen::MatrixXd J(n, m);
  for (int a = 0; a < n; ++a) {
    sasver::VecEval fe = evaluate_vector_field(std::vector<sasver::Expr>{F.map[a]}, q);
    J.row(a) = fe.J.row(0);
  }
  Eigen::MatrixXd Ginv = G.inverse();
  Eigen::MatrixXd M = J * Ginv * J.transpose();
  PH = Ginv * J.transpose() * M.inverse() * J;
  PV = Eigen::MatrixXd::Identity(m, m) - PH;
}

Eigen::VectorXd fd_mixed(const sasver::SubmersionSpec& F, const Point& p,
                         const Eigen::VectorXd& e1, const Eigen::VectorXd& e2,
                         bool vertical_argument, double h) {
  const int m = F.src_dim();
  MatFun g = metric_fun(F.source.metric);
  auto Gamma = fd_christoffel(g, p, 1e-5);
  Eigen::MatrixXd PV, PH;
  projectors_at(F, p, PV, PH);
  Eigen::VectorXd a = vertical_argument ? Eigen::VectorXd(PV * e1)
                                        : Eigen::VectorXd(PH * e1);

  // d/dt at 0 of t -> P(p + t a) e2, for both projector fields
  Eigen::MatrixXd PVp, PHp, PVm, PHm;
  projectors_at(F, p + h * a, PVp, PHp);
  projectors_at(F, p - h * a, PVm, PHm);
  Eigen::VectorXd dPVe2 = ((PVp - PVm) / (2.0 * h)) * e2;
  Eigen::VectorXd dPHe2 = ((PHp - PHm) / (2.0 * h)) * e2;

  auto gamma_of = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
    for (int k = 0; k < m; ++k) out(k) = u.dot(Gamma[k] * v);
    return out;
  };
  Eigen::VectorXd covV = dPVe2 + gamma_of(a, PV * e2);
  Eigen::VectorXd covH = dPHe2 + gamma_of(a, PH * e2);
  return PH * covV + PV * covH;
}

}  // namespace

Eigen::VectorXd fd_T(const sasver::SubmersionSpec& F, const Point& p,
                     const Eigen::VectorXd& e1, const Eigen::VectorXd& e2, double h) {
  return fd_mixed(F, p, e1, e2, true, h);
}

Eigen::VectorXd fd_A(const sasver::SubmersionSpec& F, const Point& p,
                     const Eigen::VectorXd& e1, const Eigen::VectorXd& e2, double h) {
  return fd_mixed(F, p, e1, e2, false, h);
}

Eigen::VectorXd fd_sff(const sasver::SubmersionSpec& F, const Point& p,
                       const Eigen::VectorXd& x, const Eigen::VectorXd& y, double h) {
  const int m = F.src_dim();
  const int n = F.tgt_dim();

  auto fval = [&](const Point& q) {
    Eigen::VectorXd out(n);
    for (int a = 0; a < n; ++a) out(a) = evaluate_value(F.map[a], q);
    return out;
  };

  // Jacobian and full Hessians of the map components from values
  Eigen::MatrixXd J(n, m);
  const double hj = 1e-5;
  for (int j = 0; j < m; ++j) {
    Point pp = p, pm = p;
    pp(j) += hj;
    pm(j) -= hj;
    J.col(j) = (fval(pp) - fval(pm)) / (2.0 * hj);
  }
  std::vector<Eigen::MatrixXd> H(n, Eigen::MatrixXd::Zero(m, m));
  Eigen::VectorXd f0 = fval(p);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        Point qp = p, qm = p;
        qp(i) += h;
        qm(i) -= h;
        Eigen::VectorXd d = (fval(qp) - 2.0 * f0 + fval(qm)) / (h * h);
        for (int a = 0; a < n; ++a) H[a](i, i) = d(a);
      } else {
        Point qpp = p, qpm = p, qmp = p, qmm = p;
        qpp(i) += h, qpp(j) += h;
        qpm(i) += h, qpm(j) -= h;
        qmp(i) -= h, qmp(j) += h;
        qmm(i) -= h, qmm(j) -= h;
        Eigen::VectorXd d = (fval(qpp) - fval(qpm) - fval(qmp) + fval(qmm)) / (4.0 * h * h);
        for (int a = 0; a < n; ++a) H[a](i, j) = d(a);
      }
    }

  auto GammaM = fd_christoffel(metric_fun(F.source.metric), p, 1e-5);
  Point image = f0;
  auto GammaN = fd_christoffel(metric_fun(F.target.metric), image, 1e-5);

  Eigen::VectorXd jx = J * x, jy = J * y;
  Eigen::VectorXd gm(m);
  for (int k = 0; k < m; ++k) gm(k) = x.dot(GammaM[k] * y);

  Eigen::VectorXd out(n);
  for (int a = 0; a < n; ++a)
    out(a) = x.dot(H[a] * y) + jx.dot(GammaN[a] * jy) - (J * gm)(a);
  return out;
}

}  // namespace oracle
