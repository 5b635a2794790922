#pragma once

#include "homlie/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlie {

/// A counterexample to an axiom: the first failing basis combination with both sides evaluated.
/// Witness indices are 1-based to match the e_1..e_n labelling.
template <class S>
struct BasicViolation {
  std::string kind;
  std::vector<std::size_t> witness;
  Vector<S> lhs;
  Vector<S> rhs;

  /// "kind at (i,j,k): lhs != rhs"
  std::string describe() const {
    std::string out = kind + " at (";
    for (std::size_t k = 0; k < witness.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(witness[k]);
    }
    return out + "): " + to_string(lhs) + " != " + to_string(rhs);
  }
};

/// Outcome of an axiom checker: passes, or carries the first violation found.
template <class S>
class BasicCheck {
public:
  BasicCheck() = default;
  BasicCheck(BasicViolation<S> v) : m_violation(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static BasicCheck pass() { return {}; }

  bool passed() const { return !m_violation.has_value(); }
  explicit operator bool() const { return passed(); }

  const BasicViolation<S>& violation() const { return m_violation.value(); }
  const std::optional<BasicViolation<S>>& maybe_violation() const { return m_violation; }

private:
  std::optional<BasicViolation<S>> m_violation;
};

using Violation = BasicViolation<Rational>;
using Check = BasicCheck<Rational>;

/// Zero-based indices in, 1-based witness out.
template <class S>
BasicViolation<S> make_violation(std::string kind, std::vector<std::size_t> zero_based, Vector<S> lhs,
                                 Vector<S> rhs) {
  for (auto& i : zero_based) ++i;
  return {std::move(kind), std::move(zero_based), std::move(lhs), std::move(rhs)};
}

}  // namespace homlie
