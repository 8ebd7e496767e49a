#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace sasver {

// Order-2 forward-mode jet: value, gradient and symmetric Hessian with
// respect to the chart coordinates. All arithmetic keeps the Hessian
// bit-exactly symmetric (lower triangle is computed, upper is mirrored).
struct Jet {
  double v = 0.0;
  Eigen::VectorXd g;
  Eigen::MatrixXd h;

  Jet() = default;
  explicit Jet(int dim) : v(0.0), g(Eigen::VectorXd::Zero(dim)), h(Eigen::MatrixXd::Zero(dim, dim)) {}

  int dim() const { return static_cast<int>(g.size()); }

  static Jet constant(double c, int dim);
  static Jet variable(double x, int index, int dim);
};

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);  // throws EvalError when b.v == 0
Jet pow_int(const Jet& a, int n);           // integer exponent, n < 0 goes through 1/a^(-n)

}  // namespace sasver
