#pragma once

#include "homlie/errors.hpp"
#include "homlie/rational.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace homlie {

using Bindings = std::map<std::string, Rational>;

/// Malformed input. line/column are 1-based; line is 0 when the position is inside a single expression.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return m_line; }
  std::size_t column() const { return m_column; }

private:
  std::size_t m_line;
  std::size_t m_column;
};

class UndeclaredParameter : public Error {
public:
  using Error::Error;
};

class MissingBinding : public Error {
public:
  using Error::Error;
};

class UnusedBinding : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Arithmetic expression over rational literals and parameter names.
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := number | ident | '-' factor | '(' expr ')'
/// Numbers are integers or decimals ("0.25" is exactly 1/4).
class ParamExpr {
public:
  ParamExpr();
  /// Throws SyntaxError with the 1-based column of the offending character.
  static ParamExpr parse(std::string_view text);
  static ParamExpr constant(const Rational& value);

  /// Throws MissingBinding for an unbound name and DivisionByZero when a divisor evaluates to 0.
  Rational evaluate(const Bindings& bindings) const;
  std::set<std::string> names() const;

  /// The text the expression was parsed from.
  const std::string& source() const { return m_source; }

  friend bool operator==(const ParamExpr& a, const ParamExpr& b) { return a.m_source == b.m_source; }

  struct Node;

private:
  std::string m_source;
  std::shared_ptr<const Node> m_root;
};

/// "name=value" with value an expression without names.
std::pair<std::string, Rational> parse_binding(std::string_view text);

}  // namespace homlie
