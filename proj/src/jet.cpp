#include "sasver/jet.hpp"

namespace sasver {

namespace {

// Fill the upper triangle from the lower one so results stay bit-exactly
// symmetric regardless of the accumulation order above.
void mirror_lower(Eigen::MatrixXd& h) {
  const int n = static_cast<int>(h.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h(i, j) = h(j, i);
}

}  // namespace

Jet Jet::constant(double c, int dim) {
  Jet j(dim);
  j.v = c;
  return j;
}

Jet Jet::variable(double x, int index, int dim) {
  Jet j(dim);
  j.v = x;
  j.g(index) = 1.0;
  return j;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r(a.dim());
  r.v = a.v + b.v;
  r.g = a.g + b.g;
  r.h = a.h + b.h;
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r(a.dim());
  r.v = a.v - b.v;
  r.g = a.g - b.g;
  r.h = a.h - b.h;
  return r;
}

Jet operator-(const Jet& a) {
  Jet r(a.dim());
  r.v = -a.v;
  r.g = -a.g;
  r.h = -a.h;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.dim());
  r.v = a.v * b.v;
  r.g = a.g * b.v + b.g * a.v;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      r.h(i, j) = a.h(i, j) * b.v + b.h(i, j) * a.v + a.g(i) * b.g(j) + a.g(j) * b.g(i);
  mirror_lower(r.h);
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.v == 0.0) throw EvalError("division by zero");
  Jet r(a.dim());
  r.v = a.v / b.v;
  r.g = (a.g - r.v * b.g) / b.v;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      r.h(i, j) =
          (a.h(i, j) - r.v * b.h(i, j) - r.g(i) * b.g(j) - r.g(j) * b.g(i)) / b.v;
  mirror_lower(r.h);
  return r;
}

Jet pow_int(const Jet& a, int n) {
  if (n < 0) return Jet::constant(1.0, a.dim()) / pow_int(a, -n);
  Jet acc = Jet::constant(1.0, a.dim());
  Jet base = a;
  // binary exponentiation; n == 0 yields the constant 1 jet
  unsigned e = static_cast<unsigned>(n);
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

}  // namespace sasver
