#pragma once

#include "homlie/linalg.hpp"
#include "homlie/tensor3.hpp"
#include "homlie/violation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homlie {

/// Matrix of the twisting morphism phi.
using TwistMap = RationalMatrix;

/// (V, ·, phi): a bilinear product with its twist.
struct HomAlgebra {
  RationalTensor product;
  TwistMap twist;

  std::size_t dim() const { return product.dim(); }
};

/// (g, [·,·], phi). The axioms are not enforced on construction; use check_hom_lie.
struct HomLieAlgebra {
  RationalTensor bracket;
  TwistMap twist;

  std::size_t dim() const { return bracket.dim(); }
  bool regular() const;
  bool involutive() const;
};

bool is_involutive(const TwistMap& phi);
bool is_invertible(const TwistMap& phi);

/// Throws DimensionMismatch unless phi is dim x dim.
void require_twist_dim(const TwistMap& phi, std::size_t dim, const char* where);

/// c[k][i][j] = P[k][i][j] - P[k][j][i].
RationalTensor commutator_bracket(const RationalTensor& product);

Check check_antisymmetric(const RationalTensor& bracket);

/// phi(T(e_i,e_j)) = T(phi e_i, phi e_j) for all ordered pairs.
Check check_morphism(const RationalTensor& t, const TwistMap& phi);

/// Cyclic sum [phi u,[v,w]] + [phi v,[w,u]] + [phi w,[u,v]].
RationalVector hom_jacobiator(const RationalTensor& bracket, const TwistMap& phi, const RationalVector& u,
                              const RationalVector& v, const RationalVector& w);

/// Twisted Jacobi identity on basis triples; first violation in lexicographic order.
Check check_hom_jacobi(const RationalTensor& bracket, const TwistMap& phi);

/// Untwisted Jacobi identity (phi = Id).
Check check_jacobi(const RationalTensor& bracket);

/// (u·v)·phi(w) - phi(u)·(v·w).
RationalVector hom_associator(const RationalTensor& product, const TwistMap& phi, const RationalVector& u,
                              const RationalVector& v, const RationalVector& w);

/// The twisted associator is symmetric in its first two arguments.
Check check_hom_left_symmetric(const RationalTensor& product, const TwistMap& phi);

/// K(u,v)w = phi(u)·(v·w) - phi(v)·(u·w) - [u,v]·phi(w), with [,] the commutator of the product.
RationalVector tensor_curvature(const RationalTensor& product, const TwistMap& phi, const RationalVector& u,
                                const RationalVector& v, const RationalVector& w);

/// Cyclic sum of [phi u,[v,w]] equals cyclic sum of K(u,v)w. Holds for every product and
/// every linear phi, so a failure means an arithmetic bug.
Check check_hom_bianchi(const RationalTensor& product, const TwistMap& phi);

/// The commutator bracket of the product satisfies the hom-Jacobi identity.
Check check_hom_lie_admissible(const RationalTensor& product, const TwistMap& phi);

/// Antisymmetry, morphism and hom-Jacobi together.
Check check_hom_lie(const HomLieAlgebra& g);

/// span(basis) is closed under phi and under the bracket. Membership is decided by exact rank.
/// Throws DependentBasis when the basis vectors are linearly dependent.
template <class S>
BasicCheck<S> check_subalgebra(const Tensor3<S>& bracket, const Matrix<S>& phi, const std::vector<Vector<S>>& basis) {
  const std::size_t n = bracket.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("check_subalgebra: twist dimension mismatch");
  for (const auto& b : basis)
    if (b.size() != n) throw DimensionMismatch("check_subalgebra: basis vector has wrong length");
  if (!basis.empty() && rank(Matrix<S>::from_columns(basis, n)) != basis.size())
    throw DependentBasis("check_subalgebra: basis vectors are linearly dependent");

  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vector<S> image = phi * basis[i];
    if (!in_span(basis, image)) return make_violation<S>("twist-closure", {i}, std::move(image), {});
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vector<S> br = bracket(basis[i], basis[j]);
      if (!in_span(basis, br)) return make_violation<S>("bracket-closure", {i, j}, std::move(br), {});
    }
  return BasicCheck<S>::pass();
}

}  // namespace homlie
