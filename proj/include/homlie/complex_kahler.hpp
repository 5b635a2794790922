#pragma once

#include "homlie/metric_symplectic.hpp"

#include <vector>

namespace homlie {

/// J^2 = -Id and phi J = J phi.
/// Throws OddDimension (no J exists since det(J)^2 = (-1)^n), NonInvolutiveTwist or DimensionMismatch.
Check check_almost_complex(const RationalMatrix& J, const TwistMap& phi);

/// The composite phi∘J used by every integrability and compatibility condition.
RationalMatrix twisted_structure(const RationalMatrix& J, const TwistMap& phi);

/// N(u,v) = [Ku,Kv] - K[Ku,v] - K[u,Kv] - [u,v] with K = phi∘J.
/// Throws PreconditionFailed when J is not almost complex for phi.
RationalTensor nijenhuis_tensor(const RationalTensor& bracket, const TwistMap& phi, const RationalMatrix& J);

/// <Ke_i, Ke_j> = <e_i, e_j> for all pairs, K = phi∘J.
Check check_hermitian_compatibility(const RationalMatrix& J, const MetricForm& g, const TwistMap& phi);

/// g^C = g^{1,0} + g^{0,1}, the +i and -i eigenspaces of K = phi∘J on the complexification.
struct ComplexSplit {
  std::vector<ComplexVector> basis10;
  std::vector<ComplexVector> basis01;
  ComplexMatrix structure;  // K acting on g^C

  /// w -> (w - iKw)/2
  ComplexVector pi10(const ComplexVector& w) const;
  /// w -> (w + iKw)/2
  ComplexVector pi01(const ComplexVector& w) const;
};

/// basis10 is a maximal independent subset of {e_k - iKe_k} in index order; basis01 its conjugates.
ComplexSplit complexify_and_split(const RationalTensor& bracket, const TwistMap& phi, const RationalMatrix& J);

struct IntegrabilityReport {
  bool subalg10 = false;
  bool subalg01 = false;
  bool nijenhuis_zero = false;

  bool consistent() const { return subalg10 == subalg01 && subalg01 == nijenhuis_zero; }
};

/// Decides closure of g^{1,0} and g^{0,1} under the complexified bracket and twist, and N = 0.
IntegrabilityReport check_integrability_equivalence(const RationalTensor& bracket, const TwistMap& phi,
                                                    const RationalMatrix& J);

/// L_{e_i} K = K L_{e_i} for every i, K = phi∘J. The witness is (i, j) for the first differing column j.
Check check_kahler(const RationalTensor& product, const TwistMap& phi, const RationalMatrix& J);

/// Omega(u,v) = <Ku, v>, i.e. Omega = K^T gram.
/// Throws PreconditionFailed unless J is almost complex for phi and g is K-invariant.
SymplecticForm induced_symplectic(const MetricForm& g, const TwistMap& phi, const RationalMatrix& J);

}  // namespace homlie
