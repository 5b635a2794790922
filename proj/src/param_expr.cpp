#include "homlie/param_expr.hpp"

#include <cctype>
#include <vector>

namespace homlie {

struct ParamExpr::Node {
  enum class Op { Literal, Name, Neg, Add, Sub, Mul, Div };
  Op op = Op::Literal;
  Rational value;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = ParamExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
public:
  explicit Parser(std::string_view text) : m_text(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (m_pos != m_text.size()) fail("unexpected '" + std::string(1, m_text[m_pos]) + "'");
    return root;
  }

private:
  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      skip_space();
      if (accept('+')) left = make(Node::Op::Add, left, term());
      else if (accept('-')) left = make(Node::Op::Sub, left, term());
      else return left;
    }
  }

  NodePtr term() {
    NodePtr left = factor();
    for (;;) {
      skip_space();
      if (accept('*')) left = make(Node::Op::Mul, left, factor());
      else if (accept('/')) left = make(Node::Op::Div, left, factor());
      else return left;
    }
  }

  NodePtr factor() {
    skip_space();
    if (m_pos == m_text.size()) fail("unexpected end of expression");
    const char c = m_text[m_pos];
    if (accept('-')) return make(Node::Op::Neg, factor());
    if (accept('(')) {
      NodePtr inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = m_pos;
    while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
    std::string digits(m_text.substr(start, m_pos - start));
    std::string denominator = "1";
    if (m_pos < m_text.size() && m_text[m_pos] == '.') {
      ++m_pos;
      const std::size_t frac = m_pos;
      while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
      if (m_pos == frac) fail("expected digits after '.'");
      digits += m_text.substr(frac, m_pos - frac);
      denominator += std::string(m_pos - frac, '0');
    }
    auto n = std::make_shared<Node>();
    n->value = Rational::parse(digits + "/" + denominator);
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = m_pos;
    while (m_pos < m_text.size() &&
           (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) || m_text[m_pos] == '_'))
      ++m_pos;
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Name;
    n->name = std::string(m_text.substr(start, m_pos - start));
    return n;
  }

  void skip_space() {
    while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
  }

  bool accept(char c) {
    if (m_pos < m_text.size() && m_text[m_pos] == c) {
      ++m_pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("in expression '" + std::string(m_text) + "': " + what, 0, m_pos + 1);
  }

  std::string_view m_text;
  std::size_t m_pos = 0;
};

Rational eval(const Node& n, const Bindings& b) {
  switch (n.op) {
    case Node::Op::Literal:
      return n.value;
    case Node::Op::Name: {
      const auto it = b.find(n.name);
      if (it == b.end()) throw MissingBinding("no value bound for parameter '" + n.name + "'");
      return it->second;
    }
    case Node::Op::Neg:
      return -eval(*n.lhs, b);
    case Node::Op::Add:
      return eval(*n.lhs, b) + eval(*n.rhs, b);
    case Node::Op::Sub:
      return eval(*n.lhs, b) - eval(*n.rhs, b);
    case Node::Op::Mul:
      return eval(*n.lhs, b) * eval(*n.rhs, b);
    case Node::Op::Div: {
      const Rational divisor = eval(*n.rhs, b);
      if (divisor.is_zero()) throw DivisionByZero("division by zero");
      return eval(*n.lhs, b) / divisor;
    }
  }
  return {};
}

void collect(const Node& n, std::set<std::string>& out) {
  if (n.op == Node::Op::Name) out.insert(n.name);
  if (n.lhs) collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

}  // namespace

SyntaxError::SyntaxError(const std::string& message, std::size_t line, std::size_t column)
    : Error(message + (line ? " (line " + std::to_string(line) + ", column " : " (column ") + std::to_string(column) + ")"),
      m_line(line),
      m_column(column) {}

ParamExpr::ParamExpr() : m_source("0"), m_root(std::make_shared<Node>()) {}

ParamExpr ParamExpr::parse(std::string_view text) {
  ParamExpr e;
  e.m_source = std::string(text);
  e.m_root = Parser(text).parse();
  return e;
}

ParamExpr ParamExpr::constant(const Rational& value) {
  return parse(value.str());
}

Rational ParamExpr::evaluate(const Bindings& bindings) const {
  try {
    return eval(*m_root, bindings);
  } catch (const DivisionByZero&) {
    throw DivisionByZero("division by zero in '" + m_source + "'");
  }
}

std::set<std::string> ParamExpr::names() const {
  std::set<std::string> out;
  collect(*m_root, out);
  return out;
}

std::pair<std::string, Rational> parse_binding(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw SyntaxError("binding must look like name=value", 0, 1);
  std::string name(text.substr(0, eq));
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
  const ParamExpr value = ParamExpr::parse(text.substr(eq + 1));
  if (!value.names().empty()) throw SyntaxError("binding value for '" + name + "' must be a number", 0, eq + 2);
  return {name, value.evaluate({})};
}

}  // namespace homlie
