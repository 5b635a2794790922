#pragma once

#include "homlie/hom_structures.hpp"

namespace homlie {

/// Symmetric nondegenerate bilinear form <,> given by its Gram matrix.
class MetricForm {
public:
  /// Throws DimensionMismatch (non-square), PreconditionFailed (not symmetric) or DegenerateForm.
  explicit MetricForm(RationalMatrix gram);

  static MetricForm identity(std::size_t n) { return MetricForm(RationalMatrix::identity(n)); }

  const RationalMatrix& gram() const { return m_gram; }
  std::size_t dim() const { return m_gram.rows(); }
  Rational operator()(const RationalVector& u, const RationalVector& v) const;

private:
  RationalMatrix m_gram;
};

/// Antisymmetric nondegenerate bilinear form omega.
class SymplecticForm {
public:
  /// Throws DimensionMismatch (non-square), PreconditionFailed (not antisymmetric) or DegenerateForm.
  explicit SymplecticForm(RationalMatrix omega);

  const RationalMatrix& matrix() const { return m_omega; }
  std::size_t dim() const { return m_omega.rows(); }
  Rational operator()(const RationalVector& u, const RationalVector& v) const;

private:
  RationalMatrix m_omega;
};

/// <phi e_i, phi e_j> = <e_i, e_j> for all pairs.
Check check_pseudo_riemannian(const MetricForm& g, const TwistMap& phi);

/// gram·phi = phi^T·gram. Requires phi^2 = Id (throws NonInvolutiveTwist).
Check check_phi_selfadjoint(const MetricForm& g, const TwistMap& phi);

/// Hom-Levi-Civita product from the twisted Koszul formula
///   2<u·v, phi w> = <[u,v], phi w> + <[w,v], phi u> + <[w,u], phi v>.
/// For each pair (i,j) the unknown u·v solves (gram·phi)^T x = rhs; the inverse is computed once.
/// Throws SingularTwist when phi is not invertible.
RationalTensor levi_civita_product(const RationalTensor& bracket, const TwistMap& phi, const MetricForm& g);

/// The commutator of the product equals the bracket.
Check check_torsion(const RationalTensor& product, const RationalTensor& bracket);

/// <e_i·e_j, phi e_k> = -<phi e_j, e_i·e_k> for all triples.
Check check_metric_compatibility(const RationalTensor& product, const MetricForm& g, const TwistMap& phi);

/// 2-hom-cocycle condition on all triples, then phi-invariance on all pairs.
/// Throws SingularTwist when phi is not invertible.
Check check_symplectic(const SymplecticForm& omega, const RationalTensor& bracket, const TwistMap& phi);

/// The hom-left-symmetric product a with omega(a(u,v), phi w) = -omega(phi v, [u,w]).
/// Throws NonInvolutiveTwist, or PreconditionFailed when (omega, bracket, phi) is not symplectic.
RationalTensor symplectic_left_symmetric(const SymplecticForm& omega, const RationalTensor& bracket,
                                         const TwistMap& phi);

/// u -> u* = gram·u in the dual basis.
RationalVector musical_flat(const MetricForm& g, const RationalVector& u);
/// Inverse of musical_flat.
RationalVector musical_sharp(const MetricForm& g, const RationalVector& covector);

}  // namespace homlie
