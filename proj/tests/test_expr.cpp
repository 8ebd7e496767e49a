#include <doctest.h>

#include "sasver/expr.hpp"

using sasver::Chart;
using sasver::Expr;
using sasver::ParseError;
using sasver::Point;

namespace {

const Chart kChart{{"y1", "y2"}};

double value(const std::string& text, double a, double b) {
  Point p(2);
  p << a, b;
  return evaluate_value(parse_expression(text, kChart), p);
}

int offset_of(const std::string& text) {
  try {
    parse_expression(text, kChart);
  } catch (const ParseError& e) {
    return e.offset;
  }
  return -1;
}

}  // namespace

TEST_SUITE("expr") {

TEST_CASE("precedence and grouping") {
  CHECK(value("1 + 2*3", 0, 0) == 7.0);
  CHECK(value("(1 + 2)*3", 0, 0) == 9.0);
  CHECK(value("2*y1^2", 3, 0) == 18.0);
  CHECK(value("-y1^2", 2, 0) == -4.0);          // unary minus binds outside ^
  CHECK(value("6/2/3", 0, 0) == 1.0);           // left associative
  CHECK(value("1 - 2 - 3", 0, 0) == -4.0);
  CHECK(value("-(1/2)*y1", 6, 0) == -3.0);
  CHECK(value("2^-2", 0, 0) == 0.25);
  CHECK(value("y1*y2/4", 2, 6) == 3.0);
}

TEST_CASE("truncated input reports the offset past the operator") {
  CHECK(offset_of("y1 +") == 4);
}

TEST_CASE("undeclared identifiers are parse errors with their own offset") {
  CHECK(offset_of("y1 + q2") == 5);
  CHECK_THROWS_WITH_AS(parse_expression("y1 + q2", kChart),
                       doctest::Contains("q2"), ParseError);
}

TEST_CASE("non-integer exponents are rejected") {
  CHECK_THROWS_WITH_AS(parse_expression("y1^2.5", kChart),
                       doctest::Contains("integer exponent"), ParseError);
  CHECK_THROWS_AS(parse_expression("y1^y2", kChart), ParseError);
}

TEST_CASE("other malformed inputs") {
  CHECK(offset_of("") >= 0);
  CHECK(offset_of("(y1") >= 0);
  CHECK(offset_of("y1 y2") >= 0);      // trailing garbage
  CHECK(offset_of("* y1") == 0);
}

TEST_CASE("jet gradients match central differences") {
  auto e = parse_expression("(y1^2 - y2)*(y1 + 3)/(y2^2 + 1) + y1*y2", kChart);
  Point p(2);
  p << 0.37, -1.21;
  sasver::Jet j = evaluate_jet(e, p);
  CHECK(j.v == doctest::Approx(evaluate_value(e, p)).epsilon(1e-15));

  const double h = 1e-5;
  for (int i = 0; i < 2; ++i) {
    Point pp = p, pm = p;
    pp(i) += h;
    pm(i) -= h;
    double fd = (evaluate_value(e, pp) - evaluate_value(e, pm)) / (2 * h);
    CHECK(j.g(i) == doctest::Approx(fd).epsilon(1e-6));
    for (int k = 0; k <= i; ++k) {
      Point qpp = pp, qpm = pm, qmp = pp, qmm = pm;
      qpp(k) += h;
      qpm(k) += h;
      qmp(k) -= h;
      qmm(k) -= h;
      double fd2 = (evaluate_value(e, qpp) - evaluate_value(e, qpm) -
                    evaluate_value(e, qmp) + evaluate_value(e, qmm)) /
                   (4 * h * h);
      CHECK(j.h(i, k) == doctest::Approx(fd2).epsilon(1e-4));
    }
  }
}

TEST_CASE("evaluation at the wrong dimension raises") {
  auto e = parse_expression("y1 + y2", kChart);
  Point p(3);
  p << 1, 2, 3;
  CHECK_THROWS_AS(evaluate_jet(e, p), sasver::EvalError);
}

TEST_CASE("division by zero during evaluation raises") {
  auto e = parse_expression("1/y1", kChart);
  Point p(2);
  p << 0.0, 1.0;
  CHECK_THROWS_AS(evaluate_value(e, p), sasver::EvalError);
}

}  // TEST_SUITE
