#include "homlie/hom_structures.hpp"

namespace homlie {

namespace {

RationalVector e(std::size_t n, std::size_t i) { return basis_vector<Rational>(n, i); }

}  // namespace

bool HomLieAlgebra::regular() const { return is_invertible(twist); }

bool HomLieAlgebra::involutive() const { return is_involutive(twist); }

bool is_involutive(const TwistMap& phi) {
  return phi.is_square() && phi * phi == RationalMatrix::identity(phi.rows());
}

bool is_invertible(const TwistMap& phi) { return phi.is_square() && !determinant(phi).is_zero(); }

void require_twist_dim(const TwistMap& phi, std::size_t dim, const char* where) {
  if (phi.rows() != dim || phi.cols() != dim)
    throw DimensionMismatch(std::string(where) + ": twist is " + std::to_string(phi.rows()) + "x" +
                            std::to_string(phi.cols()) + ", expected " + std::to_string(dim) + "x" +
                            std::to_string(dim));
}

RationalTensor commutator_bracket(const RationalTensor& product) {
  const std::size_t n = product.dim();
  RationalTensor c(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(k, i, j) = product(k, i, j) - product(k, j, i);
  return c;
}

Check check_antisymmetric(const RationalTensor& bracket) {
  const std::size_t n = bracket.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RationalVector lhs = bracket.on_basis(i, j);
      RationalVector rhs = -bracket.on_basis(j, i);
      if (lhs != rhs) return make_violation<Rational>("antisymmetry", {i, j}, std::move(lhs), std::move(rhs));
    }
  return Check::pass();
}

Check check_morphism(const RationalTensor& t, const TwistMap& phi) {
  const std::size_t n = t.dim();
  require_twist_dim(phi, n, "check_morphism");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector lhs = phi * t.on_basis(i, j);
      RationalVector rhs = t(phi.column(i), phi.column(j));
      if (lhs != rhs) return make_violation<Rational>("morphism", {i, j}, std::move(lhs), std::move(rhs));
    }
  return Check::pass();
}

RationalVector hom_jacobiator(const RationalTensor& bracket, const TwistMap& phi, const RationalVector& u,
                              const RationalVector& v, const RationalVector& w) {
  return bracket(phi * u, bracket(v, w)) + bracket(phi * v, bracket(w, u)) + bracket(phi * w, bracket(u, v));
}

namespace {

Check jacobi_impl(const RationalTensor& bracket, const TwistMap& phi, const char* kind) {
  const std::size_t n = bracket.dim();
  require_twist_dim(phi, n, kind);
  // The cyclic sum is alternating for an antisymmetric bracket, so strictly increasing
  // triples suffice; otherwise every triple is visited.
  const bool alternating = bracket.is_antisymmetric();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = alternating ? i + 1 : 0; j < n; ++j)
      for (std::size_t k = alternating ? j + 1 : 0; k < n; ++k) {
        RationalVector lhs = hom_jacobiator(bracket, phi, e(n, i), e(n, j), e(n, k));
        if (!is_zero_vector(lhs))
          return make_violation<Rational>(kind, {i, j, k}, std::move(lhs), RationalVector(n));
      }
  return Check::pass();
}

}  // namespace

Check check_hom_jacobi(const RationalTensor& bracket, const TwistMap& phi) {
  return jacobi_impl(bracket, phi, "hom-jacobi");
}

Check check_jacobi(const RationalTensor& bracket) {
  return jacobi_impl(bracket, RationalMatrix::identity(bracket.dim()), "jacobi");
}

RationalVector hom_associator(const RationalTensor& product, const TwistMap& phi, const RationalVector& u,
                              const RationalVector& v, const RationalVector& w) {
  return product(product(u, v), phi * w) - product(phi * u, product(v, w));
}

Check check_hom_left_symmetric(const RationalTensor& product, const TwistMap& phi) {
  const std::size_t n = product.dim();
  require_twist_dim(phi, n, "check_hom_left_symmetric");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        RationalVector lhs = hom_associator(product, phi, e(n, i), e(n, j), e(n, k));
        RationalVector rhs = hom_associator(product, phi, e(n, j), e(n, i), e(n, k));
        if (lhs != rhs)
          return make_violation<Rational>("hom-left-symmetry", {i, j, k}, std::move(lhs), std::move(rhs));
      }
  return Check::pass();
}

RationalVector tensor_curvature(const RationalTensor& product, const TwistMap& phi, const RationalVector& u,
                                const RationalVector& v, const RationalVector& w) {
  const RationalVector uv = product(u, v) - product(v, u);
  return product(phi * u, product(v, w)) - product(phi * v, product(u, w)) - product(uv, phi * w);
}

Check check_hom_bianchi(const RationalTensor& product, const TwistMap& phi) {
  const std::size_t n = product.dim();
  require_twist_dim(phi, n, "check_hom_bianchi");
  const RationalTensor bracket = commutator_bracket(product);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const RationalVector u = e(n, i), v = e(n, j), w = e(n, k);
        RationalVector lhs = hom_jacobiator(bracket, phi, u, v, w);
        RationalVector rhs = tensor_curvature(product, phi, u, v, w) + tensor_curvature(product, phi, v, w, u) +
                             tensor_curvature(product, phi, w, u, v);
        if (lhs != rhs)
          return make_violation<Rational>("hom-bianchi", {i, j, k}, std::move(lhs), std::move(rhs));
      }
  return Check::pass();
}

Check check_hom_lie_admissible(const RationalTensor& product, const TwistMap& phi) {
  Check c = check_hom_jacobi(commutator_bracket(product), phi);
  if (c) return c;
  Violation v = c.violation();
  v.kind = "hom-lie-admissibility";
  return v;
}

Check check_hom_lie(const HomLieAlgebra& g) {
  if (Check c = check_antisymmetric(g.bracket); !c) return c;
  if (Check c = check_morphism(g.bracket, g.twist); !c) return c;
  return check_hom_jacobi(g.bracket, g.twist);
}

}  // namespace homlie
