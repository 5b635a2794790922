#pragma once

#include "homlie/instance_file.hpp"
#include "homlie/violation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlie {

/// The instance lacks a structure that a requested check or target needs, or the request is unknown.
class InputError : public Error {
public:
  using Error::Error;
};

struct Report {
  std::string instance;
  Bindings bindings;
  std::vector<std::pair<std::string, bool>> verdicts;
  nlohmann::ordered_json counterexamples = nlohmann::ordered_json::array();
  nlohmann::ordered_json derived = nlohmann::ordered_json::object();
  /// Human-readable lines for derived objects, printed after the verdicts.
  std::vector<std::string> notes;

  void add(const std::string& check, const Check& result);
  void add(const std::string& check, bool passed);
  bool all_pass() const;

  /// {"instance", "bindings", "verdicts", "counterexamples", "derived"}
  nlohmann::ordered_json to_json() const;
  std::string to_text(bool color) const;
};

/// Checks usable with cmd_verify, in report order.
const std::vector<std::string>& verify_check_names();
/// Checks run when none are requested: every check whose structures are present, except plain jacobi.
std::vector<std::string> default_checks(const BoundInstance& inst);

Report cmd_verify(const InstanceFile& file, const Bindings& bindings, const std::vector<std::string>& checks);

/// levi-civita | left-symmetric | phase-space | complexify | induced-omega
Report cmd_build(const InstanceFile& file, const Bindings& bindings, const std::string& target);

/// twist: hat | bar | tilde (B required for tilde).
Report cmd_classify2(const std::string& twist, const std::optional<Rational>& B);

/// "a e1 + 1/2 e3", "0" for the zero vector.
std::string format_combination(const RationalVector& v, const std::vector<std::string>& names);

nlohmann::ordered_json matrix_to_json(const RationalMatrix& m);
/// Nonzero products as [{i, j, coeffs}] with 1-based indices, the instance-file layout.
nlohmann::ordered_json tensor_to_json(const RationalTensor& t);

}  // namespace homlie
