#include "sasver/oneill.hpp"

#include <random>

#include "sasver/harmonic.hpp"
#include "sasver/runner.hpp"

namespace sasver {

Eigen::VectorXd cov_of_matrix_field(const PointSplit& s, const Eigen::VectorXd& dir,
                                    const MatField& M, const Eigen::VectorXd& c) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(s.dim());
  for (int i = 0; i < s.dim(); ++i)
    if (dir(i) != 0.0) w += dir(i) * (M.d[i] * c);
  return w + gamma_bilinear(s.conn.Gamma, dir, M.M * c);
}

Eigen::VectorXd cov_of_constant(const PointSplit& s, const Eigen::VectorXd& dir,
                                const Eigen::VectorXd& c) {
  return gamma_bilinear(s.conn.Gamma, dir, c);
}

Eigen::VectorXd lie_bracket_of_fields(const PointSplit& s, const MatField& A,
                                      const Eigen::VectorXd& a, const MatField& B,
                                      const Eigen::VectorXd& b) {
  Eigen::VectorXd f = A.M * a;
  Eigen::VectorXd h = B.M * b;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(s.dim());
  for (int i = 0; i < s.dim(); ++i) out += f(i) * (B.d[i] * b) - h(i) * (A.d[i] * a);
  return out;
}

Eigen::VectorXd tensor_T_at(const PointSplit& s, const Eigen::VectorXd& e1,
                            const Eigen::VectorXd& e2) {
  Eigen::VectorXd a = s.PV.M * e1;
  return s.PH.M * cov_of_matrix_field(s, a, s.PV, e2) +
         s.PV.M * cov_of_matrix_field(s, a, s.PH, e2);
}

Eigen::VectorXd tensor_A_at(const PointSplit& s, const Eigen::VectorXd& e1,
                            const Eigen::VectorXd& e2) {
  Eigen::VectorXd b = s.PH.M * e1;
  return s.PH.M * cov_of_matrix_field(s, b, s.PV, e2) +
         s.PV.M * cov_of_matrix_field(s, b, s.PH, e2);
}

namespace {

std::mt19937_64 rng_for(std::uint64_t salt, const char* tag) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char* c = tag; *c; ++c) {
    h ^= static_cast<unsigned char>(*c);
    h *= 1099511628211ull;
  }
  return std::mt19937_64(salt ^ h);
}

double gnorm(const PointSplit& s, const Eigen::VectorXd& v) {
  return std::sqrt(std::max(0.0, v.dot(s.g.G * v)));
}

double gNnorm(const PointSplit& s, const Eigen::VectorXd& w) {
  return std::sqrt(std::max(0.0, w.dot(s.gN.G * w)));
}

// Unit-norm random combinations of the given orthonormal frame.
std::vector<Eigen::VectorXd> random_combos(const PointSplit& s,
                                           const std::vector<Eigen::VectorXd>& frame,
                                           int count, std::mt19937_64& rng) {
  std::vector<Eigen::VectorXd> out;
  if (frame.empty()) return out;
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(s.dim());
    for (const auto& f : frame) v += (2.0 * unit_double(rng) - 1.0) * f;
    double n = gnorm(s, v);
    if (n > 1e-6) out.push_back(v / n);
  }
  return out;
}

std::vector<Eigen::VectorXd> with_randoms(const PointSplit& s,
                                          const std::vector<Eigen::VectorXd>& frame,
                                          int count, std::mt19937_64& rng) {
  std::vector<Eigen::VectorXd> out = frame;
  std::vector<Eigen::VectorXd> r = random_combos(s, frame, count, rng);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool xi_is_vertical(const PointSplit& s) {
  double xin = gnorm(s, s.ct.xi);
  return (s.PH.M * s.ct.xi).cwiseAbs().maxCoeff() <= 1e-9 * xin;
}

bool xi_is_horizontal(const PointSplit& s) {
  double xin = gnorm(s, s.ct.xi);
  return (s.PV.M * s.ct.xi).cwiseAbs().maxCoeff() <= 1e-9 * xin;
}

}  // namespace

SuiteReport fundamental_equations_check(const SubmersionSpec& F, const PointSplit& s,
                                        const Tolerances& tol, std::uint64_t salt) {
  (void)F;
  SuiteReport rep;
  rep.suite = "criteria";
  std::mt19937_64 rng = rng_for(salt, "fundamental");

  std::vector<Eigen::VectorXd> vert = with_randoms(s, s.vert, 4, rng);
  std::vector<Eigen::VectorXd> horiz = with_randoms(s, s.horiz, 4, rng);
  std::vector<Eigen::VectorXd> all = vert;
  all.insert(all.end(), horiz.begin(), horiz.end());

  // covariant derivative reconstruction: the projected pieces of
  // nabla along vertical/horizontal directions against T and A
  double r_rec = 0.0;
  for (const auto& u : s.vert)
    for (const auto& e : all) {
      Eigen::VectorXd t = tensor_T_at(s, u, e);
      Eigen::VectorXd full = cov_of_matrix_field(s, u, s.PV, e) +
                             cov_of_matrix_field(s, u, s.PH, e);
      Eigen::VectorXd rest = s.PV.M * cov_of_matrix_field(s, u, s.PV, e) +
                             s.PH.M * cov_of_matrix_field(s, u, s.PH, e);
      r_rec = std::max(r_rec, gnorm(s, full - t - rest));
    }
  for (const auto& x : s.horiz)
    for (const auto& e : all) {
      Eigen::VectorXd a = tensor_A_at(s, x, e);
      Eigen::VectorXd full = cov_of_matrix_field(s, x, s.PV, e) +
                             cov_of_matrix_field(s, x, s.PH, e);
      Eigen::VectorXd rest = s.PV.M * cov_of_matrix_field(s, x, s.PV, e) +
                             s.PH.M * cov_of_matrix_field(s, x, s.PH, e);
      r_rec = std::max(r_rec, gnorm(s, full - a - rest));
    }
  rep.rows.push_back(make_residual("oneill_reconstruction", r_rec, tol.derivative));

  double r_tsym = 0.0;
  for (const auto& u : vert)
    for (const auto& w : vert)
      r_tsym = std::max(r_tsym, gnorm(s, tensor_T_at(s, u, w) - tensor_T_at(s, w, u)));
  rep.rows.push_back(make_residual("t_vertical_symmetry", r_tsym, tol.derivative));

  double r_4b = 0.0;
  for (const auto& d : vert)
    for (const auto& e : all)
      for (const auto& g : all) {
        double v = tensor_T_at(s, d, e).dot(s.g.G * g) +
                   tensor_T_at(s, d, g).dot(s.g.G * e);
        r_4b = std::max(r_4b, std::abs(v));
      }
  rep.rows.push_back(make_residual("t_skew_adjoint", r_4b, tol.derivative));

  double r_4c = 0.0;
  for (const auto& d : horiz)
    for (const auto& e : all)
      for (const auto& g : all) {
        double v = tensor_A_at(s, d, e).dot(s.g.G * g) +
                   tensor_A_at(s, d, g).dot(s.g.G * e);
        r_4c = std::max(r_4c, std::abs(v));
      }
  rep.rows.push_back(make_residual("a_skew_adjoint", r_4c, tol.derivative));

  // alternation and the bracket identity hold on horizontal pairs only;
  // both need length preservation, so they are expected to fail on models
  // that merely carry an orthogonal splitting
  double r_alt = 0.0;
  double r_br = 0.0;
  for (const auto& x : horiz)
    for (const auto& y : horiz) {
      r_alt = std::max(r_alt, gnorm(s, tensor_A_at(s, x, y) + tensor_A_at(s, y, x)));
      Eigen::VectorXd br = lie_bracket_of_fields(s, s.PH, x, s.PH, y);
      r_br = std::max(r_br, gnorm(s, tensor_A_at(s, x, y) - 0.5 * (s.PV.M * br)));
    }
  rep.rows.push_back(make_residual("a_horizontal_alternation", r_alt, tol.derivative));
  rep.rows.push_back(make_residual("a_half_vertical_bracket", r_br, tol.derivative));

  // extension-independent facts about the map hessian
  double r_svt = 0.0;
  for (const auto& u : s.vert)
    for (const auto& w : s.vert) {
      Eigen::VectorXd lhs = second_fundamental_form_at(s, u, w);
      Eigen::VectorXd rhs = -(s.J * tensor_T_at(s, u, w));
      r_svt = std::max(r_svt, gNnorm(s, lhs - rhs));
    }
  rep.rows.push_back(make_residual("sff_vertical_vs_t", r_svt, tol.derivative));

  double r_sva = 0.0;
  for (const auto& x : s.horiz)
    for (const auto& w : s.vert) {
      Eigen::VectorXd lhs = second_fundamental_form_at(s, x, w);
      Eigen::VectorXd rhs = -(s.J * tensor_A_at(s, x, w));
      r_sva = std::max(r_sva, gNnorm(s, lhs - rhs));
    }
  rep.rows.push_back(make_residual("sff_mixed_vs_a", r_sva, tol.derivative));
  return rep;
}

SuiteReport fiber_geometry_at(const SubmersionSpec& F, const PointSplit& s,
                              const Tolerances& tol, std::uint64_t salt) {
  (void)F;
  SuiteReport rep;
  rep.suite = "criteria";
  std::mt19937_64 rng = rng_for(salt, "fiber");
  std::vector<Eigen::VectorXd> vert = with_randoms(s, s.vert, 8, rng);

  double t_max = 0.0;
  for (const auto& u : vert)
    for (const auto& w : vert) t_max = std::max(t_max, gnorm(s, tensor_T_at(s, u, w)));
  rep.rows.push_back(make_witness("fibers_not_geodesic_witness", t_max, tol.witness));

  const int r = static_cast<int>(s.vert.size());
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(s.dim());
  for (const auto& u : s.vert) mean += tensor_T_at(s, u, u);
  mean /= static_cast<double>(r);
  double u_max = 0.0;
  for (const auto& u : vert)
    for (const auto& w : vert) {
      Eigen::VectorXd defect = tensor_T_at(s, u, w) - s.ip(u, w) * mean;
      u_max = std::max(u_max, gnorm(s, defect));
    }
  rep.rows.push_back(make_witness("fibers_not_umbilical_witness", u_max, tol.witness));

  char note[128];
  std::snprintf(note, sizeof(note), "max |T| = %.3e, mean curvature norm = %.3e", t_max,
                gnorm(s, mean));
  rep.rows.push_back(make_flag("fiber_geometry_note", true, note));
  return rep;
}

SuiteReport lemma_suite_vertical_xi(const SubmersionSpec& F, const PointSplit& s,
                                    const Tolerances& tol, std::uint64_t salt) {
  (void)F;
  SuiteReport rep;
  rep.suite = "lemmas";
  std::mt19937_64 rng = rng_for(salt, "lemmas_v");
  std::vector<Eigen::VectorXd> vert = with_randoms(s, s.vert, 3, rng);
  std::vector<Eigen::VectorXd> horiz = with_randoms(s, s.horiz, 3, rng);
  const Eigen::MatrixXd& G = s.g.G;
  const Eigen::MatrixXd& phi = s.ct.phi;
  const Eigen::VectorXd& xi = s.ct.xi;
  MatField Bf = bc_B(s);
  MatField Cf = bc_C(s);
  MatField phiH = mf_mul(s.phi, s.PH);
  MatField axifield = mf_neg(mf_mul(s.PH, phiH));  // X -> A_X xi when xi is vertical

  double r = 0.0;
  for (const auto& u : vert) r = std::max(r, gnorm(s, tensor_T_at(s, u, xi) + phi * u));
  rep.rows.push_back(make_residual("t1_t_u_xi", r, tol.derivative));

  r = 0.0;
  for (const auto& x : horiz) r = std::max(r, gnorm(s, Bf.M * (Cf.M * x)));
  rep.rows.push_back(make_residual("bc_b_after_c", r, tol.residual));

  r = 0.0;
  for (const auto& x : horiz)
    r = std::max(r, gnorm(s, Cf.M * (Cf.M * x) + phi * (Bf.M * x) + x));
  rep.rows.push_back(make_residual("bc_c2_phib_identity", r, tol.residual));

  r = 0.0;
  for (const auto& x : horiz)
    r = std::max(r, gnorm(s, Cf.M * x + tensor_A_at(s, x, xi)));
  rep.rows.push_back(make_residual("c1_c_vs_a_xi", r, tol.derivative));

  r = 0.0;
  for (const auto& x : horiz)
    for (const auto& u : vert)
      r = std::max(r, std::abs(tensor_A_at(s, x, xi).dot(G * (phi * u))));
  rep.rows.push_back(make_residual("c2_a_xi_orthogonality", r, tol.derivative));

  r = 0.0;
  for (const auto& x : s.horiz)
    for (const auto& y : s.horiz)
      for (const auto& u : s.vert) {
        Eigen::VectorXd axi = tensor_A_at(s, x, xi);
        double lhs = cov_of_matrix_field(s, y, axifield, x).dot(G * (phi * u));
        double rhs = -axi.dot(G * (phi * tensor_A_at(s, y, u))) +
                     s.eta_of(u) * axi.dot(G * y);
        r = std::max(r, std::abs(lhs - rhs));
      }
  rep.rows.push_back(make_residual("c3_nabla_a_xi_pairing", r, tol.derivative));

  r = 0.0;
  for (const auto& x : horiz)
    for (const auto& y : horiz)
      r = std::max(r, std::abs(x.dot(G * tensor_A_at(s, y, xi)) +
                               y.dot(G * tensor_A_at(s, x, xi))));
  rep.rows.push_back(make_residual("c4_a_xi_alternation", r, tol.derivative));

  r = 0.0;
  for (const auto& v : vert)
    for (const auto& w : vert) {
      Eigen::VectorXd lhs = tensor_T_at(s, v, phi * w);
      Eigen::VectorXd rhs =
          phi * tensor_T_at(s, v, w) - s.eta_of(w) * v + s.ip(v, w) * xi;
      r = std::max(r, gnorm(s, lhs - rhs));
    }
  rep.rows.push_back(make_residual("s15_t_phi_full", r, tol.derivative));

  // nabla_X Y = -phi nabla_X phi Y + g(Y, phi X) xi through projected fields
  r = 0.0;
  for (const auto& x : horiz)
    for (const auto& ybar : horiz) {
      Eigen::VectorXd y = s.PH.M * ybar;
      Eigen::VectorXd nxy = cov_of_matrix_field(s, x, s.PH, ybar);
      Eigen::VectorXd nxphiy = cov_of_matrix_field(s, x, phiH, ybar);
      Eigen::VectorXd resid = nxy + phi * nxphiy - y.dot(G * (phi * x)) * xi;
      r = std::max(r, gnorm(s, resid));
    }
  rep.rows.push_back(make_residual("namblafi_horizontal_fields", r, tol.derivative));

  r = 0.0;
  for (const auto& x : s.horiz)
    for (const auto& ybar : s.horiz)
      for (const auto& v : s.vert) {
        Eigen::VectorXd y = s.PH.M * ybar;
        double lhs = cov_of_matrix_field(s, x, s.PH, ybar).dot(G * v);
        Eigen::VectorXd ayxi = tensor_A_at(s, y, xi);
        Eigen::VectorXd axxi = tensor_A_at(s, x, xi);
        double rhs = tensor_A_at(s, x, Bf.M * ybar).dot(G * (phi * v)) +
                     ayxi.dot(G * (phi * tensor_A_at(s, x, v))) -
                     (ayxi.dot(G * x) + axxi.dot(G * y)) * s.eta_of(v);
        r = std::max(r, std::abs(lhs - rhs));
      }
  rep.rows.push_back(make_residual("c6_vertical_pairing", r, tol.derivative));

  // map hessian on vertical pairs via T; xi-orthogonal slots only (the
  // identity needs eta to vanish on both arguments when xi is vertical)
  r = 0.0;
  std::vector<Eigen::VectorXd> vperp(s.vert.begin(), s.vert.end() - 1);
  for (const auto& w : vperp)
    for (const auto& v : vperp) {
      Eigen::VectorXd lhs = second_fundamental_form_at(s, w, v);
      Eigen::VectorXd rhs = s.J * (phi * tensor_T_at(s, w, phi * v));
      r = std::max(r, gNnorm(s, lhs - rhs));
    }
  rep.rows.push_back(make_residual("s3_sff_vertical_pairs", r, tol.derivative));
  return rep;
}

SuiteReport lemma_suite_horizontal_xi(const SubmersionSpec& F, const PointSplit& s,
                                      const Tolerances& tol, std::uint64_t salt) {
  (void)F;
  SuiteReport rep;
  rep.suite = "lemmas";
  std::mt19937_64 rng = rng_for(salt, "lemmas_h");
  std::vector<Eigen::VectorXd> vert = with_randoms(s, s.vert, 3, rng);
  std::vector<Eigen::VectorXd> horiz = with_randoms(s, s.horiz, 3, rng);
  const Eigen::MatrixXd& G = s.g.G;
  const Eigen::MatrixXd& phi = s.ct.phi;
  const Eigen::VectorXd& xi = s.ct.xi;
  MatField Bf = bc_B(s);
  MatField Cf = bc_C(s);
  MatField phiH = mf_mul(s.phi, s.PH);
  MatField axifield = mf_neg(mf_mul(s.PV, phiH));  // X -> A_X xi when xi is horizontal
  MatField cfield = mf_mul(s.PH, phiH);            // X -> C X

  double r = 0.0;
  for (const auto& x : horiz)
    r = std::max(r, gnorm(s, Bf.M * x + tensor_A_at(s, x, xi)));
  rep.rows.push_back(make_residual("ike1_b_vs_a_xi", r, tol.derivative));

  r = 0.0;
  for (const auto& u : vert) r = std::max(r, gnorm(s, tensor_T_at(s, u, xi)));
  rep.rows.push_back(make_residual("ike2_t_u_xi_zero", r, tol.derivative));

  r = 0.0;
  for (const auto& x : horiz)
    for (const auto& u : vert)
      r = std::max(r, std::abs(tensor_A_at(s, x, xi).dot(G * (phi * u))));
  rep.rows.push_back(make_residual("ike3_a_xi_orthogonality", r, tol.derivative));

  r = 0.0;
  for (const auto& x : s.horiz)
    for (const auto& y : s.horiz)
      for (const auto& u : s.vert) {
        double lhs = cov_of_matrix_field(s, y, axifield, x).dot(G * (phi * u));
        double rhs = -tensor_A_at(s, x, xi).dot(G * (phi * tensor_A_at(s, y, u)));
        r = std::max(r, std::abs(lhs - rhs));
      }
  rep.rows.push_back(make_residual("ike4_nabla_a_xi_pairing", r, tol.derivative));

  r = 0.0;
  for (const auto& x : s.horiz)
    for (const auto& ybar : s.horiz)
      for (const auto& u : s.vert) {
        double lhs = cov_of_matrix_field(s, x, cfield, ybar).dot(G * (phi * u));
        double rhs = -(Cf.M * ybar).dot(G * (phi * tensor_A_at(s, x, u)));
        r = std::max(r, std::abs(lhs - rhs));
      }
  rep.rows.push_back(make_residual("ike6_nabla_c_pairing", r, tol.derivative));

  r = 0.0;
  for (const auto& x : horiz) r = std::max(r, gnorm(s, Bf.M * (Cf.M * x)));
  rep.rows.push_back(make_residual("bc_b_after_c", r, tol.residual));

  r = 0.0;
  for (const auto& x : horiz)
    r = std::max(r, gnorm(s, phi * (phi * x) - Cf.M * (Cf.M * x) - phi * (Bf.M * x)));
  rep.rows.push_back(make_residual("bc_phi2_c2_phib_identity", r, tol.residual));

  r = 0.0;
  for (const auto& v : vert)
    for (const auto& w : vert)
      r = std::max(
          r, gnorm(s, tensor_T_at(s, v, phi * w) - phi * tensor_T_at(s, v, w)));
  rep.rows.push_back(make_residual("s5_t_phi_commute", r, tol.derivative));

  // nabla_X Y = -phi nabla_X phi Y + eta(nabla_X Y) xi - eta(Y) phi X
  r = 0.0;
  for (const auto& x : horiz)
    for (const auto& ybar : horiz) {
      Eigen::VectorXd y = s.PH.M * ybar;
      Eigen::VectorXd nxy = cov_of_matrix_field(s, x, s.PH, ybar);
      Eigen::VectorXd nxphiy = cov_of_matrix_field(s, x, phiH, ybar);
      Eigen::VectorXd resid =
          nxy + phi * nxphiy - s.eta_of(nxy) * xi + s.eta_of(y) * (phi * x);
      r = std::max(r, gnorm(s, resid));
    }
  rep.rows.push_back(make_residual("namblafi3_horizontal_fields", r, tol.derivative));

  r = 0.0;
  for (const auto& x : s.horiz)
    for (const auto& ybar : s.horiz)
      for (const auto& v : s.vert) {
        Eigen::VectorXd y = s.PH.M * ybar;
        double lhs = cov_of_matrix_field(s, x, s.PH, ybar).dot(G * v);
        double rhs = cov_of_matrix_field(s, x, cfield, ybar).dot(G * (phi * v)) -
                     cov_of_matrix_field(s, x, axifield, ybar).dot(G * (phi * v)) +
                     tensor_A_at(s, x, xi).dot(G * v) * s.eta_of(y);
        r = std::max(r, std::abs(lhs - rhs));
      }
  rep.rows.push_back(make_residual("cm1_vertical_pairing", r, tol.derivative));

  r = 0.0;
  for (const auto& w : vert)
    for (const auto& v : vert) {
      Eigen::VectorXd lhs = second_fundamental_form_at(s, w, v);
      Eigen::VectorXd rhs = s.J * (phi * tensor_T_at(s, w, phi * v));
      r = std::max(r, gNnorm(s, lhs - rhs));
    }
  rep.rows.push_back(make_residual("s3_sff_vertical_pairs", r, tol.derivative));

  // (nabla F)(X, W) = F_*(phi A_X phi W - g(W, phi X) xi) needs mu = span{xi}
  bool mu_is_xi_line = s.mu.size() == 1 && xi_is_horizontal(s);
  if (mu_is_xi_line) {
    r = 0.0;
    for (const auto& x : horiz)
      for (const auto& w : vert) {
        Eigen::VectorXd lhs = second_fundamental_form_at(s, x, w);
        Eigen::VectorXd inner =
            phi * tensor_A_at(s, x, phi * w) - w.dot(G * (phi * x)) * xi;
        r = std::max(r, gNnorm(s, lhs - s.J * inner));
      }
    rep.rows.push_back(make_residual("s4_sff_mixed_pairs", r, tol.derivative));
  } else {
    rep.rows.push_back(make_flag("s4_sff_mixed_pairs", true,
                                 "not asserted: mu is not the xi line"));
  }
  return rep;
}

SuiteReport distribution_criteria(const SubmersionSpec& F, const PointSplit& s,
                                  const Tolerances& tol, std::uint64_t salt) {
  SuiteReport rep;
  rep.suite = "criteria";
  std::mt19937_64 rng = rng_for(salt, "criteria");
  std::vector<Eigen::VectorXd> horiz = with_randoms(s, s.horiz, 4, rng);

  double br_max = 0.0;
  double a_hh_max = 0.0;
  for (const auto& x : horiz)
    for (const auto& y : horiz) {
      Eigen::VectorXd br = lie_bracket_of_fields(s, s.PH, x, s.PH, y);
      br_max = std::max(br_max, gnorm(s, s.PV.M * br));
      a_hh_max = std::max(a_hh_max, gnorm(s, tensor_A_at(s, x, y)));
    }
  bool int_by_bracket = br_max <= tol.harmonic;
  bool int_by_a = a_hh_max <= tol.harmonic;
  char note[160];
  std::snprintf(note, sizeof(note),
                "max |V[X,Y]| = %.3e, max |A_X Y| = %.3e on horizontal pairs", br_max,
                a_hh_max);
  rep.rows.push_back(
      make_flag("h_integrability_consistency", int_by_bracket == int_by_a, note));

  if (!s.has_contact) return rep;

  const Eigen::MatrixXd& G = s.g.G;
  const Eigen::MatrixXd& phi = s.ct.phi;
  const Eigen::VectorXd& xi = s.ct.xi;
  MatField Bf = bc_B(s);

  if (xi_is_vertical(s)) {
    // underlying identity of the horizontal integrability equivalences:
    // g([X,Y],V) = g_N(sff(Y,BX) - sff(X,BY), F phi V)
    //            + g(A_Y xi, phi A_X V) - g(A_X xi, phi A_Y V)
    double r = 0.0;
    for (const auto& x : s.horiz)
      for (const auto& y : s.horiz)
        for (const auto& v : s.vert) {
          Eigen::VectorXd br = lie_bracket_of_fields(s, s.PH, x, s.PH, y);
          double lhs = br.dot(G * v);
          Eigen::VectorXd sffd = second_fundamental_form_at(s, y, Bf.M * x) -
                                 second_fundamental_form_at(s, x, Bf.M * y);
          double rhs = sffd.dot(s.gN.G * (s.J * (phi * v))) +
                       tensor_A_at(s, y, xi).dot(G * (phi * tensor_A_at(s, x, v))) -
                       tensor_A_at(s, x, xi).dot(G * (phi * tensor_A_at(s, y, v)));
          r = std::max(r, std::abs(lhs - rhs));
        }
    rep.rows.push_back(make_residual("h_integrability_identity", r, tol.derivative));
  } else {
    // g([X,Y],V) = g_N(sff(X,A_Y xi) - sff(Y,A_X xi), F phi V)
    //            + g(CX, phi A_Y V) - g(CY, phi A_X V)
    //            + g(A_X xi, V) eta(Y) - g(A_Y xi, V) eta(X)
    MatField Cf = bc_C(s);
    double r = 0.0;
    for (const auto& x : s.horiz)
      for (const auto& y : s.horiz)
        for (const auto& v : s.vert) {
          Eigen::VectorXd br = lie_bracket_of_fields(s, s.PH, x, s.PH, y);
          double lhs = br.dot(G * v);
          Eigen::VectorXd axxi = tensor_A_at(s, x, xi);
          Eigen::VectorXd ayxi = tensor_A_at(s, y, xi);
          Eigen::VectorXd sffd = second_fundamental_form_at(s, x, ayxi) -
                                 second_fundamental_form_at(s, y, axxi);
          double rhs = sffd.dot(s.gN.G * (s.J * (phi * v))) +
                       (Cf.M * x).dot(G * (phi * tensor_A_at(s, y, v))) -
                       (Cf.M * y).dot(G * (phi * tensor_A_at(s, x, v))) +
                       axxi.dot(G * v) * s.eta_of(y) - ayxi.dot(G * v) * s.eta_of(x);
          r = std::max(r, std::abs(lhs - rhs));
        }
    rep.rows.push_back(make_residual("h_integrability_identity", r, tol.derivative));
  }

  if (xi_is_vertical(s)) {
    SuiteReport fib = fiber_geometry_at(F, s, tol, salt);
    rep.rows.insert(rep.rows.end(), fib.rows.begin(), fib.rows.end());
  } else {
    // the horizontal distribution cannot be integrable: search for a bracket
    // witness, and for the foliation obstruction A_X xi = -V phi X != 0
    std::vector<Eigen::VectorXd> hw = with_randoms(s, s.horiz, 16, rng);
    double w_br = 0.0;
    for (const auto& x : hw)
      for (const auto& y : hw) {
        Eigen::VectorXd br = lie_bracket_of_fields(s, s.PH, x, s.PH, y);
        w_br = std::max(w_br, gnorm(s, s.PV.M * br));
      }
    rep.rows.push_back(make_witness("h_not_integrable_witness", w_br, tol.witness));

    double w_fol = 0.0;
    for (const auto& x : hw) w_fol = std::max(w_fol, gnorm(s, tensor_A_at(s, x, xi)));
    rep.rows.push_back(
        make_witness("h_foliation_obstruction_witness", w_fol, tol.witness));

    // fiber geometry note (no umbilic theorem in the horizontal case)
    double t_max = 0.0;
    for (const auto& u : s.vert)
      for (const auto& w : s.vert) t_max = std::max(t_max, gnorm(s, tensor_T_at(s, u, w)));
    std::snprintf(note, sizeof(note), "max |T(U,W)| over the fiber frame = %.3e", t_max);
    rep.rows.push_back(make_flag("fiber_geometry_note", true, note));
  }
  return rep;
}

}  // namespace sasver
