#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sasver/fixtures.hpp"
#include "sasver/model.hpp"
#include "sasver/oneill.hpp"
#include "sasver/runner.hpp"

using namespace sasver;

namespace {

Point sample(const SubmersionSpec& F, int k) { return sample_points(F, k + 1, 42)[k]; }

// genuine submersion with diagonal polynomial data: nonzero T, A only in
// mixed slots
const char* kDiagModel =
    "[source]\n"
    "vars = x y z\n"
    "g[1][1] = 1 + y^2\n"
    "g[2][2] = 1 + x^2\n"
    "g[3][3] = 1 + x^2 + y^2\n"
    "[target]\n"
    "vars = u v\n"
    "g[1][1] = 1 + v^2\n"
    "g[2][2] = 1 + u^2\n"
    "[map]\n"
    "F[1] = x\n"
    "F[2] = y\n";

std::vector<Eigen::VectorXd> random_directions(int dim, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> out;
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i)
      v(i) = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_SUITE("oneill") {

TEST_CASE("both tensors vanish on the flat projection") {
  SubmersionSpec F = load_fixture("flat-r2-r1");
  PointSplit s = split_at(F, sample(F, 0));
  for (const auto& a : random_directions(2, 4, 11))
    for (const auto& b : random_directions(2, 4, 12)) {
      CHECK(tensor_T_at(s, a, b).cwiseAbs().maxCoeff() <= 1e-14);
      CHECK(tensor_A_at(s, a, b).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("tensors agree with the finite-difference oracle") {
  SubmersionSpec diag = load_model(kDiagModel, "diag");
  SubmersionSpec poly = load_fixture("poly-r3-r2");
  SubmersionSpec ex2 = load_fixture("example2");
  for (const SubmersionSpec* F : {&diag, &poly, &ex2}) {
    CAPTURE(F->name);
    for (int k = 0; k < 3; ++k) {
      Point p = sample(*F, k);
      PointSplit s = split_at(*F, p);
      auto dirs = random_directions(F->src_dim(), 3, 100 + k);
      for (const auto& a : dirs)
        for (const auto& b : dirs) {
          Eigen::VectorXd t = tensor_T_at(s, a, b);
          Eigen::VectorXd t_fd = oracle::fd_T(*F, p, a, b);
          CHECK((t - t_fd).cwiseAbs().maxCoeff() <= 1e-6);
          Eigen::VectorXd aa = tensor_A_at(s, a, b);
          Eigen::VectorXd a_fd = oracle::fd_A(*F, p, a, b);
          CHECK((aa - a_fd).cwiseAbs().maxCoeff() <= 1e-6);
        }
    }
  }
}

TEST_CASE("tensor slots behave like the defining projections") {
  SubmersionSpec F = load_fixture("poly-r3-r2");
  PointSplit s = split_at(F, sample(F, 1));
  auto dirs = random_directions(3, 4, 5);
  for (const auto& a : dirs)
    for (const auto& b : dirs) {
      // first slot projections: T kills horizontal first args, A vertical ones
      Eigen::VectorXd th = tensor_T_at(s, s.PH.M * a, b);
      CHECK(th.cwiseAbs().maxCoeff() <= 1e-12);
      Eigen::VectorXd av = tensor_A_at(s, s.PV.M * a, b);
      CHECK(av.cwiseAbs().maxCoeff() <= 1e-12);
      // tensoriality in the first slot
      Eigen::VectorXd sum = tensor_T_at(s, a + b, a) - tensor_T_at(s, a, a) -
                            tensor_T_at(s, b, a);
      CHECK(sum.cwiseAbs().maxCoeff() <= 1e-12);
      // T swaps the distributions
      Eigen::VectorXd tv = tensor_T_at(s, a, s.PV.M * b);
      CHECK((s.PV.M * tv).cwiseAbs().maxCoeff() <= 1e-10);
      Eigen::VectorXd th2 = tensor_T_at(s, a, s.PH.M * b);
      CHECK((s.PH.M * th2).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("vertical fiber tensor reproduces the structure rotation") {
  // T_{V1} xi = -phi V1 = -H1 on the vertical-xi fixture
  SubmersionSpec F = load_fixture("example2");
  for (int k = 0; k < 3; ++k) {
    Point p = sample(F, k);
    PointSplit s = split_at(F, p);
    Eigen::VectorXd v1 = Eigen::VectorXd::Zero(5);  // V1 = 2 d/dy1 - 2(d/dx1 + y1 d/dz)
    v1(2) = 2.0;
    v1(0) = -2.0;
    v1(4) = -2.0 * p(2);
    Eigen::VectorXd h1 = Eigen::VectorXd::Zero(5);  // H1 = phi V1
    h1(0) = 2.0;
    h1(2) = 2.0;
    h1(4) = 2.0 * p(2);
    CHECK((s.ct.phi * v1 - h1).cwiseAbs().maxCoeff() <= 1e-13);
    Eigen::VectorXd t = tensor_T_at(s, v1, s.ct.xi);
    CHECK((t + h1).cwiseAbs().maxCoeff() <= 1e-12);
    // norm of T_{V1} xi is sqrt(2): the promised obstruction witness
    CHECK(std::sqrt(s.ip(t, t)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("a tensor is half the vertical bracket on the designed control") {
  SubmersionSpec F = load_fixture("poly-r3-r2");
  Point p = sample(F, 2);
  PointSplit s = split_at(F, p);
  Eigen::VectorXd x1 = Eigen::VectorXd::Unit(3, 0);          // d/dx
  Eigen::VectorXd x2(3);                                     // lift of d/dv
  x2 << 0.0, 1.0, p(0);
  CHECK((s.PV.M * x1).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((s.PV.M * x2).cwiseAbs().maxCoeff() <= 1e-12);
  // [X1, X2] = d/dz which is vertical
  Eigen::VectorXd a = tensor_A_at(s, x1, x2);
  Eigen::VectorXd expect = Eigen::VectorXd::Unit(3, 2) * 0.5;
  CHECK((a - expect).cwiseAbs().maxCoeff() <= 1e-12);
  // antisymmetry on horizontal pairs
  Eigen::VectorXd a21 = tensor_A_at(s, x2, x1);
  CHECK((a + a21).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("frame choice does not leak into the suite results") {
  // running the same point twice gives identical rows; and the tensors are
  // honest tensors, so any frame rotation leaves the row residuals stable
  SubmersionSpec F = load_fixture("example2");
  Point p = sample(F, 1);
  PointSplit s = split_at(F, p);
  Tolerances tol;
  SuiteReport r1 = fundamental_equations_check(F, s, tol, 99);
  SuiteReport r2 = fundamental_equations_check(F, s, tol, 99);
  REQUIRE(r1.rows.size() == r2.rows.size());
  for (size_t i = 0; i < r1.rows.size(); ++i) {
    CHECK(r1.rows[i].name == r2.rows[i].name);
    CHECK(r1.rows[i].value == r2.rows[i].value);
  }
  // different salt draws different random combinations, but pass/fail and
  // order of rows stay put
  SuiteReport r3 = fundamental_equations_check(F, s, tol, 7);
  for (size_t i = 0; i < r1.rows.size(); ++i) {
    CHECK(r1.rows[i].name == r3.rows[i].name);
    CHECK((r1.rows[i].status == CheckStatus::Pass) ==
          (r3.rows[i].status == CheckStatus::Pass));
  }
}

TEST_CASE("covariant field helpers obey the product structure") {
  SubmersionSpec F = load_fixture("poly-r3-r2");
  PointSplit s = split_at(F, sample(F, 0));
  auto dirs = random_directions(3, 3, 42);
  for (const auto& dir : dirs)
    for (const auto& c : dirs) {
      // nabla_dir of (PV + PH) c-field = nabla_dir of the constant extension
      Eigen::VectorXd lhs = cov_of_matrix_field(s, dir, s.PV, c) +
                            cov_of_matrix_field(s, dir, s.PH, c);
      Eigen::VectorXd rhs = cov_of_constant(s, dir, c);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("mixed-slot brackets of projected fields close the reconstruction") {
  // [V e1-field, H e2-field] evaluated two ways: via lie_bracket_of_fields
  // and via the torsion-free connection
  SubmersionSpec F = load_fixture("example2");
  PointSplit s = split_at(F, sample(F, 2));
  auto dirs = random_directions(5, 3, 17);
  for (const auto& a : dirs)
    for (const auto& b : dirs) {
      Eigen::VectorXd br = lie_bracket_of_fields(s, s.PV, a, s.PH, b);
      Eigen::VectorXd cov = cov_of_matrix_field(s, s.PV.M * a, s.PH, b) -
                            cov_of_matrix_field(s, s.PH.M * b, s.PV, a);
      CHECK((br - cov).cwiseAbs().maxCoeff() <= 1e-11);
    }
}

}  // TEST_SUITE
