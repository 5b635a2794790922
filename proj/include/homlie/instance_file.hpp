#pragma once

#include "homlie/param_expr.hpp"
#include "homlie/tensor3.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homlie {

/// Structurally invalid instance (duplicate entries, bad indices, missing required fields).
class InvalidInstance : public Error {
public:
  using Error::Error;
};

/// e_i ∘ e_j = sum coeffs[k] e_k, indices 1-based.
struct SparseEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<ParamExpr> coeffs;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Row-major operator matrix: entry (r,c) is the e_r coefficient of the image of e_c.
using ExprMatrix = std::vector<std::vector<ParamExpr>>;

/// One algebra with symbolic parameters, stored as JSON.
struct InstanceFile {
  std::string name;
  std::size_t dimension = 0;
  std::vector<std::string> params;
  ExprMatrix phi;
  std::vector<SparseEntry> bracket;  // only i < j
  std::optional<std::vector<SparseEntry>> product;
  std::optional<ExprMatrix> metric;
  std::optional<ExprMatrix> omega;
  std::optional<ExprMatrix> J;
  std::vector<std::string> basis_names;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws SyntaxError (with line and column), UndeclaredParameter, DimensionMismatch or InvalidInstance.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& inst);

/// Reads and parses a file; throws InvalidInstance when it cannot be read.
InstanceFile load_instance(const std::string& path);

/// All expressions evaluated. With an empty bracket and a product, the bracket is the commutator.
struct BoundInstance {
  std::string name;
  std::size_t dimension = 0;
  Bindings bindings;
  RationalMatrix phi;
  RationalTensor bracket;
  std::optional<RationalTensor> product;
  std::optional<RationalMatrix> metric;
  std::optional<RationalMatrix> omega;
  std::optional<RationalMatrix> J;
  std::vector<std::string> basis_names;  // always dimension entries, defaulting to e1..en
};

/// Throws MissingBinding, UnusedBinding or DivisionByZero.
BoundInstance bind_params(const InstanceFile& inst, const Bindings& bindings);

}  // namespace homlie
