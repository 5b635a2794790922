#pragma once

#include "homlie/complex_kahler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homlie {

enum class TwistKind { Hat, Bar, Tilde };

/// The twists admitted by the 2D algebra [e1,e2] = e2: hat = Id, bar = diag(1,-1),
/// tilde: e1 -> e1 + B e2, e2 -> -e2 (B != 0).
struct TwistFamily2D {
  TwistKind tag = TwistKind::Hat;
  Rational B;

  static TwistFamily2D hat() { return {TwistKind::Hat, Rational(0)}; }
  static TwistFamily2D bar() { return {TwistKind::Bar, Rational(0)}; }
  /// Throws PreconditionFailed when B = 0.
  static TwistFamily2D tilde(const Rational& B);

  TwistMap matrix() const;
  std::string name() const;
};

/// [e1,e2] = e2.
RationalTensor canonical_bracket_2d();

/// Converts a matrix listing the images J(e_i) in its rows to the operator matrix.
RationalMatrix from_row_presentation(const RationalMatrix& rows);

struct SolutionFamily {
  enum class Kind { None, Constrained };

  Kind kind = Kind::None;
  std::vector<std::string> free_params;
  std::vector<std::string> constraints;
  std::optional<RationalMatrix> sample_J;
  std::optional<MetricForm> sample_metric;
  std::optional<RationalTensor> sample_product;
  std::vector<std::string> derivation;
};

std::string to_string(SolutionFamily::Kind kind);

/// Solves J phi = phi J exactly, then J^2 = -Id on the commutant.
SolutionFamily solve_almost_complex_2d(const TwistFamily2D& twist);

/// Metrics making (J, phi) Hermitian: the kernel of the linear conditions <Ke_i,Ke_j> = <e_i,e_j>.
/// The sample is normalised to <e1,e1> = -d/a when J e1 = a e1 + d e2 with a != 0, else <e1,e1> = 1.
/// Throws NoComplexStructure when J is not almost complex for the twist.
SolutionFamily solve_hermitian_2d(const TwistFamily2D& twist, const RationalMatrix& J);

/// Levi-Civita product of (canonical bracket, phi, g) and the Kähler verdict for J.
/// Throws NoComplexStructure, or PreconditionFailed when g is not Hermitian for J.
SolutionFamily solve_kahler_2d(const TwistFamily2D& twist, const RationalMatrix& J, const MetricForm& g);

struct NonexistenceEntry {
  TwistFamily2D twist;
  SolutionFamily family;
};

struct NonexistenceReport {
  std::vector<NonexistenceEntry> entries;

  bool all_none() const;
};

/// solve_almost_complex_2d on bar and tilde(B), B in {1, 2, -1, 1/2, 7}.
NonexistenceReport proper_nonexistence_report();

}  // namespace homlie
