#include "sasver/submersion.hpp"

#include <algorithm>

#include <Eigen/SVD>

namespace sasver {

MatField mf_mul(const MatField& a, const MatField& b) {
  MatField r;
  r.M = a.M * b.M;
  r.d.resize(a.d.size());
  for (size_t k = 0; k < a.d.size(); ++k) r.d[k] = a.d[k] * b.M + a.M * b.d[k];
  return r;
}

MatField mf_neg(const MatField& a) {
  MatField r;
  r.M = -a.M;
  r.d.resize(a.d.size());
  for (size_t k = 0; k < a.d.size(); ++k) r.d[k] = -a.d[k];
  return r;
}

namespace {

// Modified Gram-Schmidt in the metric G with one re-orthogonalization pass.
// Vectors whose residual norm falls below drop_tol are discarded.
std::vector<Eigen::VectorXd> g_orthonormalize(const Eigen::MatrixXd& G,
                                              const std::vector<Eigen::VectorXd>& in,
                                              double drop_tol = 1e-8) {
  std::vector<Eigen::VectorXd> out;
  for (Eigen::VectorXd w : in) {
    for (int pass = 0; pass < 2; ++pass)
      for (const Eigen::VectorXd& u : out) w -= u.dot(G * w) * u;
    double n = std::sqrt(w.dot(G * w));
    if (n > drop_tol) out.push_back(w / n);
  }
  return out;
}

}  // namespace

PointSplit split_at(const SubmersionSpec& F, const Point& p) {
  PointSplit s;
  s.p = p;
  try {
    s.g = metric_jet(F.source.metric, p, true);
  } catch (const GeometryError& e) {
    throw ModelError(std::string("source metric: ") + e.what());
  }
  s.conn = connection_jet_from(s.g);
  const int m = F.src_dim();

  if (F.has_map()) {
    const int n = F.tgt_dim();
    VecEval fe = evaluate_vector_field(F.map, p);
    s.image = fe.v;
    s.J = fe.J;
    s.dJ.assign(m, Eigen::MatrixXd::Zero(n, m));
    for (int i = 0; i < m; ++i)
      for (int a = 0; a < n; ++a)
        for (int j = 0; j < m; ++j) s.dJ[i](a, j) = fe.H[a](i, j);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(s.J, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv.size() < n || sv(n - 1) <= 1e-10 * sv(0))
      throw ModelError("map differential is rank deficient at a sample point");

    // projectors: M = J G^{-1} J^T, P_H = G^{-1} J^T M^{-1} J
    Eigen::MatrixXd M = s.J * s.g.Ginv * s.J.transpose();
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success)
      throw ModelError("J g^{-1} J^T is not positive definite at a sample point");
    Eigen::MatrixXd Minv = llt.solve(Eigen::MatrixXd::Identity(n, n));
    s.PH.M = s.g.Ginv * s.J.transpose() * Minv * s.J;
    s.PV.M = Eigen::MatrixXd::Identity(m, m) - s.PH.M;

    s.PH.d.resize(m);
    s.PV.d.resize(m);
    for (int i = 0; i < m; ++i) {
      Eigen::MatrixXd dM = s.dJ[i] * s.g.Ginv * s.J.transpose() +
                           s.J * s.g.dGinv[i] * s.J.transpose() +
                           s.J * s.g.Ginv * s.dJ[i].transpose();
      Eigen::MatrixXd dMinv = -Minv * dM * Minv;
      s.PH.d[i] = s.g.dGinv[i] * s.J.transpose() * Minv * s.J +
                  s.g.Ginv * s.dJ[i].transpose() * Minv * s.J +
                  s.g.Ginv * s.J.transpose() * dMinv * s.J +
                  s.g.Ginv * s.J.transpose() * Minv * s.dJ[i];
      s.PV.d[i] = -s.PH.d[i];
    }

    // vertical frame from the kernel of J, horizontal from G^{-1} J^T
    std::vector<Eigen::VectorXd> vraw;
    for (int c = n; c < m; ++c) vraw.push_back(svd.matrixV().col(c));
    s.vert = g_orthonormalize(s.g.G, vraw);
    if (static_cast<int>(s.vert.size()) != m - n)
      throw ModelError("vertical frame construction lost rank");
    std::vector<Eigen::VectorXd> hraw;
    Eigen::MatrixXd lift = s.g.Ginv * s.J.transpose();
    for (int c = 0; c < n; ++c) hraw.push_back(lift.col(c));
    s.horiz = g_orthonormalize(s.g.G, hraw);
    if (static_cast<int>(s.horiz.size()) != n)
      throw ModelError("horizontal frame construction lost rank");

    try {
      s.gN = metric_jet(F.target.metric, s.image, false);
    } catch (const GeometryError& e) {
      throw ModelError(std::string("target metric at image point: ") + e.what());
    }
    s.GammaN = christoffel_from(s.gN);
  }

  if (F.has_structure()) {
    s.has_contact = true;
    s.ct = contact_eval(*F.source.structure, p);
    s.phi.M = s.ct.phi;
    s.phi.d = s.ct.dphi;
    if (F.has_map()) {
      // Re-shape the frames so that when xi lies in one distribution, it is
      // exactly the last frame vector there; slot-restricted identity checks
      // rely on the remaining vectors being eta-orthogonal.
      double xin = std::sqrt(s.ct.xi.dot(s.g.G * s.ct.xi));
      auto adapt = [&](std::vector<Eigen::VectorXd>& frame) {
        std::vector<Eigen::VectorXd> seed{s.ct.xi};
        seed.insert(seed.end(), frame.begin(), frame.end());
        std::vector<Eigen::VectorXd> adapted = g_orthonormalize(s.g.G, seed);
        if (adapted.size() != frame.size()) return;  // keep original on rank loss
        std::rotate(adapted.begin(), adapted.begin() + 1, adapted.end());
        frame = adapted;
      };
      if ((s.PH.M * s.ct.xi).cwiseAbs().maxCoeff() <= 1e-9 * xin)
        adapt(s.vert);
      else if ((s.PV.M * s.ct.xi).cwiseAbs().maxCoeff() <= 1e-9 * xin)
        adapt(s.horiz);
      std::vector<Eigen::VectorXd> craw;
      for (const auto& v : s.vert) craw.push_back(s.PH.M * (s.ct.phi * v));
      s.phiV = g_orthonormalize(s.g.G, craw);
      std::vector<Eigen::VectorXd> mraw;
      for (const auto& h : s.horiz) {
        Eigen::VectorXd w = h;
        for (int pass = 0; pass < 2; ++pass)
          for (const auto& u : s.phiV) w -= u.dot(s.g.G * w) * u;
        mraw.push_back(w);
      }
      s.mu = g_orthonormalize(s.g.G, mraw);
    }
  }
  return s;
}

Eigen::MatrixXd differential_at(const SubmersionSpec& F, const Point& p) {
  if (!F.has_map()) throw ModelError("model " + F.name + " has no map");
  VecEval fe = evaluate_vector_field(F.map, p);
  return fe.J;
}

SplitFrame split_frame_at(const SubmersionSpec& F, const Point& p) {
  PointSplit s = split_at(F, p);
  return SplitFrame{s.vert, s.horiz};
}

Eigen::VectorXd horizontal_lift(const PointSplit& s, const Eigen::VectorXd& w) {
  Eigen::MatrixXd M = s.J * s.g.Ginv * s.J.transpose();
  return s.g.Ginv * s.J.transpose() * M.llt().solve(w);
}

Eigen::VectorXd project(const PointSplit& s, const Eigen::VectorXd& x, bool vertical) {
  return vertical ? s.PV.M * x : s.PH.M * x;
}

MatField bc_B(const PointSplit& s) { return mf_mul(s.PV, mf_mul(s.phi, s.PH)); }
MatField bc_C(const PointSplit& s) { return mf_mul(s.PH, mf_mul(s.phi, s.PH)); }

SuiteReport check_submersion_axioms(const SubmersionSpec& F, const PointSplit& s,
                                    const Tolerances& tol) {
  const int m = F.src_dim();
  SuiteReport rep;
  rep.suite = "axioms";

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s.J);
  const auto& sv = svd.singularValues();
  double cond = sv(sv.size() - 1) / sv(0);
  rep.rows.push_back(make_flag("differential_full_rank", cond > 1e-10,
                               "sigma_min/sigma_max = " + std::to_string(cond)));

  double r_ker = 0.0;
  for (const auto& v : s.vert) r_ker = std::max(r_ker, (s.J * v).cwiseAbs().maxCoeff());
  rep.rows.push_back(make_residual("vertical_frame_in_kernel", r_ker, tol.residual));

  std::vector<Eigen::VectorXd> frame = s.vert;
  frame.insert(frame.end(), s.horiz.begin(), s.horiz.end());
  double r_gram = 0.0;
  for (size_t a = 0; a < frame.size(); ++a)
    for (size_t b = 0; b < frame.size(); ++b) {
      double want = a == b ? 1.0 : 0.0;
      r_gram = std::max(r_gram, std::abs(s.ip(frame[a], frame[b]) - want));
    }
  rep.rows.push_back(make_residual("split_frame_orthonormal", r_gram, tol.frame));

  Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);
  double r_proj = (s.PH.M * s.PH.M - s.PH.M).cwiseAbs().maxCoeff();
  r_proj = std::max(r_proj, (s.PV.M * s.PV.M - s.PV.M).cwiseAbs().maxCoeff());
  r_proj = std::max(r_proj, (s.PV.M * s.PH.M).cwiseAbs().maxCoeff());
  r_proj = std::max(r_proj, (s.PV.M + s.PH.M - I).cwiseAbs().maxCoeff());
  r_proj = std::max(
      r_proj, (s.g.G * s.PH.M - s.PH.M.transpose() * s.g.G).cwiseAbs().maxCoeff());
  rep.rows.push_back(make_residual("projector_algebra", r_proj, tol.residual));

  // length preservation on horizontal vectors: g_N(dF X, dF Y) = g(X, Y)
  double r_len = 0.0;
  for (size_t a = 0; a < s.horiz.size(); ++a)
    for (size_t b = a; b < s.horiz.size(); ++b) {
      double want = a == b ? 1.0 : 0.0;
      double got = (s.J * s.horiz[a]).dot(s.gN.G * (s.J * s.horiz[b]));
      r_len = std::max(r_len, std::abs(got - want));
    }
  rep.rows.push_back(make_residual("horizontal_length_preservation", r_len, tol.residual));
  return rep;
}

AntiInvarianceReport classify_anti_invariance(const SubmersionSpec& F, const PointSplit& s,
                                              const Tolerances& tol) {
  if (!s.has_contact || !F.has_map())
    throw ModelError("anti-invariance classification needs a structure and a map");
  AntiInvarianceReport rep;
  for (const auto& v : s.vert)
    for (const auto& w : s.vert)
      rep.max_overlap = std::max(rep.max_overlap, std::abs(s.ip(s.ct.phi * v, w)));
  rep.anti_invariant = rep.max_overlap <= tol.residual;
  rep.phiV_dim = static_cast<int>(s.phiV.size());
  rep.mu_dim = static_cast<int>(s.mu.size());

  std::vector<Eigen::VectorXd> inter;
  for (const auto& v : s.vert) inter.push_back(s.PV.M * (s.ct.phi * v));
  rep.def1_intersection_dim = static_cast<int>(g_orthonormalize(s.g.G, inter).size());

  double xin = std::sqrt(s.ip(s.ct.xi, s.ct.xi));
  double hv = std::sqrt(s.ip(s.PH.M * s.ct.xi, s.PH.M * s.ct.xi));
  double vv = std::sqrt(s.ip(s.PV.M * s.ct.xi, s.PV.M * s.ct.xi));
  rep.xi_vertical = hv <= 1e-9 * xin;
  rep.xi_horizontal = vv <= 1e-9 * xin;
  return rep;
}

SuiteReport classification_rows(const SubmersionSpec& F, const PointSplit& s,
                                const Tolerances& tol) {
  AntiInvarianceReport c = classify_anti_invariance(F, s, tol);
  SuiteReport rep;
  rep.suite = "axioms";
  rep.rows.push_back(
      make_residual("anti_invariance_overlap", c.max_overlap, tol.residual));
  std::string pos = c.xi_vertical ? "vertical" : (c.xi_horizontal ? "horizontal" : "mixed");
  rep.rows.push_back(
      make_flag("reeb_position", c.xi_vertical || c.xi_horizontal, "xi is " + pos));
  bool decomp = c.phiV_dim + c.mu_dim == static_cast<int>(s.horiz.size()) &&
                c.def1_intersection_dim == 0;
  rep.rows.push_back(make_flag(
      "horizontal_decomposition", decomp,
      "phiV=" + std::to_string(c.phiV_dim) + " mu=" + std::to_string(c.mu_dim) +
          " fiber=" + std::to_string(s.vert.size()) +
          " vertical_overlap_dim=" + std::to_string(c.def1_intersection_dim)));
  return rep;
}

}  // namespace sasver
