#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sasver/chart.hpp"
#include "sasver/jet.hpp"

namespace sasver {

// Parse error with a 0-based character offset into the source text.
struct ParseError : std::runtime_error {
  int offset;
  ParseError(const std::string& what, int off) : std::runtime_error(what), offset(off) {}
};

namespace detail {
struct Node;
}

// Immutable handle to a parsed coordinate expression. Copies share the tree.
class Expr {
 public:
  Expr() = default;

  bool empty() const { return !root_; }
  const std::string& text() const { return text_; }

  friend Expr parse_expression(const std::string& text, const Chart& chart);
  friend Jet evaluate_jet(const Expr& e, const Point& p);
  friend double evaluate_value(const Expr& e, const Point& p);

 private:
  std::shared_ptr<const detail::Node> root_;
  std::string text_;
  int dim_ = 0;
};

// Grammar: +,- < *,/ < unary minus < ^ with a literal (possibly negative)
// integer exponent. Identifiers must be coordinates of the chart; anything
// else is a ParseError carrying the offset of the offending token.
Expr parse_expression(const std::string& text, const Chart& chart);

// Value plus first and second derivatives at p. Division by zero anywhere in
// the tree raises EvalError.
Jet evaluate_jet(const Expr& e, const Point& p);

// Value only (cheaper; used for guards and sampling).
double evaluate_value(const Expr& e, const Point& p);

}  // namespace sasver
