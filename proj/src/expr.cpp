#include "sasver/expr.hpp"

#include <cctype>
#include <charconv>

namespace sasver {

namespace detail {

struct Node {
  enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  double value = 0.0;  // Const
  int var = -1;        // Var
  int expo = 0;        // Pow
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

struct Parser {
  const std::string& text;
  const Chart& chart;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, size_t at) {
    throw ParseError(msg + " at offset " + std::to_string(at), static_cast<int>(at));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos != text.size())
      fail(std::string("unexpected character '") + text[pos] + "'", pos);
    return e;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (consume('+'))
        lhs = make({Node::Kind::Add, 0.0, -1, 0, lhs, term()});
      else if (consume('-'))
        lhs = make({Node::Kind::Sub, 0.0, -1, 0, lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      if (consume('*'))
        lhs = make({Node::Kind::Mul, 0.0, -1, 0, lhs, factor()});
      else if (consume('/'))
        lhs = make({Node::Kind::Div, 0.0, -1, 0, lhs, factor()});
      else
        return lhs;
    }
  }

  NodePtr factor() {
    if (consume('-')) return make({Node::Kind::Neg, 0.0, -1, 0, factor(), nullptr});
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (consume('^')) {
      skip_ws();
      size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) fail("expected integer exponent", start);
      if (pos < text.size() && text[pos] == '.') fail("expected integer exponent", start);
      int e = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, e);
      if (ec != std::errc() || ptr != text.data() + pos)
        fail("expected integer exponent", start);
      return make({Node::Kind::Pow, 0.0, -1, e, base, nullptr});
    }
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos >= text.size()) fail("expected operand", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      NodePtr e = expr();
      skip_ws();
      if (!consume(')')) fail("expected ')'", pos);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos;
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + text.size(), v);
      if (ec != std::errc()) fail("bad numeric literal", start);
      pos = static_cast<size_t>(ptr - text.data());
      return make({Node::Kind::Const, v, -1, 0, nullptr, nullptr});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      int idx = chart.index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'", start);
      return make({Node::Kind::Var, 0.0, idx, 0, nullptr, nullptr});
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }
};

Jet eval_jet(const Node& n, const Point& p) {
  const int dim = static_cast<int>(p.size());
  switch (n.kind) {
    case Node::Kind::Const:
      return Jet::constant(n.value, dim);
    case Node::Kind::Var:
      return Jet::variable(p(n.var), n.var, dim);
    case Node::Kind::Add:
      return eval_jet(*n.a, p) + eval_jet(*n.b, p);
    case Node::Kind::Sub:
      return eval_jet(*n.a, p) - eval_jet(*n.b, p);
    case Node::Kind::Mul:
      return eval_jet(*n.a, p) * eval_jet(*n.b, p);
    case Node::Kind::Div:
      return eval_jet(*n.a, p) / eval_jet(*n.b, p);
    case Node::Kind::Neg:
      return -eval_jet(*n.a, p);
    case Node::Kind::Pow:
      return pow_int(eval_jet(*n.a, p), n.expo);
  }
  throw EvalError("corrupt expression node");
}

double eval_value(const Node& n, const Point& p) {
  switch (n.kind) {
    case Node::Kind::Const:
      return n.value;
    case Node::Kind::Var:
      return p(n.var);
    case Node::Kind::Add:
      return eval_value(*n.a, p) + eval_value(*n.b, p);
    case Node::Kind::Sub:
      return eval_value(*n.a, p) - eval_value(*n.b, p);
    case Node::Kind::Mul:
      return eval_value(*n.a, p) * eval_value(*n.b, p);
    case Node::Kind::Div: {
      double denom = eval_value(*n.b, p);
      if (denom == 0.0) throw EvalError("division by zero");
      return eval_value(*n.a, p) / denom;
    }
    case Node::Kind::Neg:
      return -eval_value(*n.a, p);
    case Node::Kind::Pow: {
      double base = eval_value(*n.a, p);
      int e = n.expo;
      if (e < 0) {
        if (base == 0.0) throw EvalError("division by zero");
        base = 1.0 / base;
        e = -e;
      }
      double acc = 1.0;
      while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
      }
      return acc;
    }
  }
  throw EvalError("corrupt expression node");
}

}  // namespace
}  // namespace detail

Expr parse_expression(const std::string& text, const Chart& chart) {
  detail::Parser parser{text, chart};
  Expr e;
  e.root_ = parser.parse();
  e.text_ = text;
  e.dim_ = chart.dim();
  return e;
}

Jet evaluate_jet(const Expr& e, const Point& p) {
  if (e.empty()) throw EvalError("empty expression");
  if (static_cast<int>(p.size()) != e.dim_)
    throw EvalError("point dimension " + std::to_string(p.size()) +
                    " does not match chart dimension " + std::to_string(e.dim_));
  return detail::eval_jet(*e.root_, p);
}

double evaluate_value(const Expr& e, const Point& p) {
  if (e.empty()) throw EvalError("empty expression");
  if (static_cast<int>(p.size()) != e.dim_)
    throw EvalError("point dimension " + std::to_string(p.size()) +
                    " does not match chart dimension " + std::to_string(e.dim_));
  return detail::eval_value(*e.root_, p);
}

}  // namespace sasver
