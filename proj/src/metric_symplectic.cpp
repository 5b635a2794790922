#include "homlie/metric_symplectic.hpp"

#include <functional>

namespace homlie {

namespace {

RationalVector e(std::size_t n, std::size_t i) { return basis_vector<Rational>(n, i); }

void require_square(const RationalMatrix& m, const char* what) {
  if (!m.is_square()) throw DimensionMismatch(std::string(what) + ": matrix is not square");
}

void require_form_dim(std::size_t form_dim, std::size_t dim, const char* where) {
  if (form_dim != dim) throw DimensionMismatch(std::string(where) + ": form dimension mismatch");
}

RationalTensor solve_columnwise(const RationalMatrix& system, std::size_t n,
                                const std::function<RationalVector(std::size_t, std::size_t)>& rhs) {
  RationalMatrix inverse;
  try {
    inverse = matrix_inverse(system);
  } catch (const SingularMatrix&) {
    throw SingularSystem("product system is singular: no unique solution");
  }
  RationalTensor product(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) product.set(i, j, inverse * rhs(i, j));
  return product;
}

}  // namespace

MetricForm::MetricForm(RationalMatrix gram) : m_gram(std::move(gram)) {
  require_square(m_gram, "MetricForm");
  if (!m_gram.is_symmetric()) throw PreconditionFailed("MetricForm: Gram matrix is not symmetric");
  if (determinant(m_gram).is_zero()) throw DegenerateForm("MetricForm: Gram matrix is degenerate");
}

Rational MetricForm::operator()(const RationalVector& u, const RationalVector& v) const {
  return dot(u, m_gram * v);
}

SymplecticForm::SymplecticForm(RationalMatrix omega) : m_omega(std::move(omega)) {
  require_square(m_omega, "SymplecticForm");
  if (!m_omega.is_antisymmetric()) throw PreconditionFailed("SymplecticForm: matrix is not antisymmetric");
  if (determinant(m_omega).is_zero()) throw DegenerateForm("SymplecticForm: form is degenerate");
}

Rational SymplecticForm::operator()(const RationalVector& u, const RationalVector& v) const {
  return dot(u, m_omega * v);
}

Check check_pseudo_riemannian(const MetricForm& g, const TwistMap& phi) {
  const std::size_t n = g.dim();
  require_twist_dim(phi, n, "check_pseudo_riemannian");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational lhs = g(phi.column(i), phi.column(j));
      Rational rhs = g.gram()(i, j);
      if (lhs != rhs) return make_violation<Rational>("twist-isometry", {i, j}, {lhs}, {rhs});
    }
  return Check::pass();
}

Check check_phi_selfadjoint(const MetricForm& g, const TwistMap& phi) {
  const std::size_t n = g.dim();
  require_twist_dim(phi, n, "check_phi_selfadjoint");
  if (!is_involutive(phi)) throw NonInvolutiveTwist("check_phi_selfadjoint: phi^2 != Id");
  const RationalMatrix left = g.gram() * phi;
  const RationalMatrix right = phi.transpose() * g.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (left(i, j) != right(i, j))
        return make_violation<Rational>("twist-selfadjoint", {i, j}, {right(i, j)}, {left(i, j)});
  return Check::pass();
}

RationalTensor levi_civita_product(const RationalTensor& bracket, const TwistMap& phi, const MetricForm& g) {
  const std::size_t n = bracket.dim();
  require_twist_dim(phi, n, "levi_civita_product");
  require_form_dim(g.dim(), n, "levi_civita_product");
  if (!is_invertible(phi)) throw SingularTwist("levi_civita_product: phi is not invertible");

  // <v, phi e_k> = (G^T v)_k with G = gram·phi.
  const RationalMatrix twisted_t = (g.gram() * phi).transpose();
  const Rational half(1, 2);
  return solve_columnwise(twisted_t, n, [&](std::size_t i, std::size_t j) {
    const RationalVector ei = e(n, i), ej = e(n, j);
    RationalVector rhs = twisted_t * bracket.on_basis(i, j);
    for (std::size_t k = 0; k < n; ++k) {
      const RationalVector ek = e(n, k);
      rhs[k] += g(bracket(ek, ej), phi * ei) + g(bracket(ek, ei), phi * ej);
      rhs[k] *= half;
    }
    return rhs;
  });
}

Check check_torsion(const RationalTensor& product, const RationalTensor& bracket) {
  const std::size_t n = product.dim();
  if (bracket.dim() != n) throw DimensionMismatch("check_torsion: dimension mismatch");
  const RationalTensor commutator = commutator_bracket(product);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector lhs = commutator.on_basis(i, j);
      RationalVector rhs = bracket.on_basis(i, j);
      if (lhs != rhs) return make_violation<Rational>("torsion", {i, j}, std::move(lhs), std::move(rhs));
    }
  return Check::pass();
}

Check check_metric_compatibility(const RationalTensor& product, const MetricForm& g, const TwistMap& phi) {
  const std::size_t n = product.dim();
  require_twist_dim(phi, n, "check_metric_compatibility");
  require_form_dim(g.dim(), n, "check_metric_compatibility");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational lhs = g(product.on_basis(i, j), phi.column(k));
        Rational rhs = -g(phi.column(j), product.on_basis(i, k));
        if (lhs != rhs) return make_violation<Rational>("metric-compatibility", {i, j, k}, {lhs}, {rhs});
      }
  return Check::pass();
}

Check check_symplectic(const SymplecticForm& omega, const RationalTensor& bracket, const TwistMap& phi) {
  const std::size_t n = bracket.dim();
  require_twist_dim(phi, n, "check_symplectic");
  require_form_dim(omega.dim(), n, "check_symplectic");
  if (!is_invertible(phi)) throw SingularTwist("check_symplectic: phi is not invertible");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational sum = omega(bracket.on_basis(i, j), phi.column(k)) +
                             omega(bracket.on_basis(k, i), phi.column(j)) +
                             omega(bracket.on_basis(j, k), phi.column(i));
        if (!sum.is_zero()) return make_violation<Rational>("2-hom-cocycle", {i, j, k}, {sum}, {Rational(0)});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational lhs = omega(phi.column(i), phi.column(j));
      Rational rhs = omega.matrix()(i, j);
      if (lhs != rhs) return make_violation<Rational>("twist-invariance", {i, j}, {lhs}, {rhs});
    }
  return Check::pass();
}

RationalTensor symplectic_left_symmetric(const SymplecticForm& omega, const RationalTensor& bracket,
                                         const TwistMap& phi) {
  const std::size_t n = bracket.dim();
  require_twist_dim(phi, n, "symplectic_left_symmetric");
  require_form_dim(omega.dim(), n, "symplectic_left_symmetric");
  if (!is_involutive(phi)) throw NonInvolutiveTwist("symplectic_left_symmetric: phi^2 != Id");
  if (Check c = check_symplectic(omega, bracket, phi); !c)
    throw PreconditionFailed("symplectic_left_symmetric: not a symplectic hom-Lie algebra (" +
                             c.violation().describe() + ")");

  // omega(x, phi e_k) = ((Omega·phi)^T x)_k.
  const RationalMatrix twisted_t = (omega.matrix() * phi).transpose();
  return solve_columnwise(twisted_t, n, [&](std::size_t i, std::size_t j) {
    RationalVector rhs(n);
    const RationalVector phi_ej = phi.column(j);
    for (std::size_t k = 0; k < n; ++k) rhs[k] = -omega(phi_ej, bracket.on_basis(i, k));
    return rhs;
  });
}

RationalVector musical_flat(const MetricForm& g, const RationalVector& u) {
  require_form_dim(u.size(), g.dim(), "musical_flat");
  return g.gram() * u;
}

RationalVector musical_sharp(const MetricForm& g, const RationalVector& covector) {
  require_form_dim(covector.size(), g.dim(), "musical_sharp");
  const auto solved = solve_linear(g.gram(), covector);
  if (!solved.unique()) throw DegenerateForm("musical_sharp: metric is degenerate");
  return solved.solution;
}

}  // namespace homlie
