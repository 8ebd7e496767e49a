#include <doctest.h>

#include "sasver/jet.hpp"

using sasver::Jet;

namespace {

Jet var(double x, int i, int dim) { return Jet::variable(x, i, dim); }

double max_abs_diff(const Jet& a, const Jet& b) {
  double m = std::abs(a.v - b.v);
  m = std::max(m, (a.g - b.g).cwiseAbs().maxCoeff());
  m = std::max(m, (a.h - b.h).cwiseAbs().maxCoeff());
  return m;
}

}  // namespace

TEST_SUITE("jet") {

TEST_CASE("square of a variable carries value, gradient and hessian") {
  Jet x = var(3.0, 0, 1);
  Jet y = x * x;
  CHECK(y.v == 9.0);
  CHECK(y.g(0) == 6.0);
  CHECK(y.h(0, 0) == 2.0);
}

TEST_CASE("product rule fills the mixed hessian entry") {
  Jet x = var(1.0, 0, 2);
  Jet y = var(-1.0, 1, 2);
  Jet p = x * y;
  CHECK(p.v == -1.0);
  CHECK(p.g(0) == -1.0);
  CHECK(p.g(1) == 1.0);
  CHECK(p.h(0, 1) == 1.0);
  CHECK(p.h(1, 0) == 1.0);
  CHECK(p.h(0, 0) == 0.0);
  CHECK(p.h(1, 1) == 0.0);
}

TEST_CASE("field axioms hold to machine precision") {
  Jet x = var(0.7, 0, 3);
  Jet y = var(-1.3, 1, 3);
  Jet z = var(0.21, 2, 3);
  Jet c = Jet::constant(2.5, 3);

  CHECK(max_abs_diff((x + y) * z, x * z + y * z) <= 1e-14);
  CHECK(max_abs_diff(x * (y * z), (x * y) * z) <= 1e-14);
  CHECK(max_abs_diff(x - y, x + (-y)) <= 1e-14);
  CHECK(max_abs_diff((x * y) / y, x) <= 1e-14);
  CHECK(max_abs_diff(c * (x / c), x) <= 1e-14);
}

TEST_CASE("division tracks the quotient rule") {
  // d/dx (x/y) = 1/y, d/dy = -x/y^2, d2/dxdy = -1/y^2, d2/dy2 = 2x/y^3
  Jet x = var(2.0, 0, 2);
  Jet y = var(4.0, 1, 2);
  Jet q = x / y;
  CHECK(q.v == doctest::Approx(0.5));
  CHECK(q.g(0) == doctest::Approx(0.25));
  CHECK(q.g(1) == doctest::Approx(-0.125));
  CHECK(q.h(0, 1) == doctest::Approx(-1.0 / 16.0));
  CHECK(q.h(1, 1) == doctest::Approx(2.0 * 2.0 / 64.0));
  CHECK(q.h(0, 0) == 0.0);
}

TEST_CASE("division by zero raises") {
  Jet x = var(1.0, 0, 1);
  Jet z = Jet::constant(0.0, 1);
  CHECK_THROWS_AS(x / z, sasver::EvalError);
}

TEST_CASE("integer powers, including negative exponents") {
  Jet x = var(2.0, 0, 1);
  Jet p3 = pow_int(x, 3);
  CHECK(p3.v == 8.0);
  CHECK(p3.g(0) == 12.0);
  CHECK(p3.h(0, 0) == 12.0);

  Jet pm2 = pow_int(x, -2);
  CHECK(pm2.v == doctest::Approx(0.25));
  CHECK(pm2.g(0) == doctest::Approx(-2.0 / 8.0));
  CHECK(pm2.h(0, 0) == doctest::Approx(6.0 / 16.0));

  Jet p0 = pow_int(x, 0);
  CHECK(p0.v == 1.0);
  CHECK(p0.g(0) == 0.0);

  Jet zero = Jet::constant(0.0, 1);
  CHECK_THROWS_AS(pow_int(zero, -1), sasver::EvalError);
}

TEST_CASE("hessians stay bit-exactly symmetric through long chains") {
  Jet x = var(0.9, 0, 3);
  Jet y = var(-0.4, 1, 3);
  Jet z = var(1.7, 2, 3);
  Jet w = (x * y - z) * (x + y * z) / (x * x + Jet::constant(1.0, 3)) + pow_int(y, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) CHECK(w.h(i, j) == w.h(j, i));
}

}  // TEST_SUITE
