#include "homlie/representations_phase_space.hpp"

namespace homlie {

namespace {

void require_rep_dims(const Representation& rep) {
  const std::size_t n = rep.base.dim();
  const std::size_t m = rep.carrier_dim;
  require_twist_dim(rep.base.twist, n, "representation");
  if (rep.rho.size() != n) throw DimensionMismatch("representation: need one rho matrix per basis vector");
  if (rep.A.rows() != m || rep.A.cols() != m) throw DimensionMismatch("representation: A has wrong dimension");
  for (const auto& r : rep.rho)
    if (r.rows() != m || r.cols() != m) throw DimensionMismatch("representation: rho matrix has wrong dimension");
}

// First column where lhs and rhs differ, or nothing.
std::optional<Violation> compare(const char* kind, std::vector<std::size_t> where, const RationalMatrix& lhs,
                                 const RationalMatrix& rhs) {
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    RationalVector l = lhs.column(c);
    RationalVector r = rhs.column(c);
    if (l != r) {
      where.push_back(c);
      return make_violation<Rational>(kind, std::move(where), std::move(l), std::move(r));
    }
  }
  return std::nullopt;
}

RationalVector e(std::size_t n, std::size_t i) { return basis_vector<Rational>(n, i); }

}  // namespace

RationalMatrix Representation::at(const RationalVector& u) const {
  RationalMatrix out(carrier_dim, carrier_dim);
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!u[i].is_zero()) out = out + rho[i] * u[i];
  return out;
}

Representation DualRepresentation::representation() const {
  return {A_star.rows(), A_star, rho_tilde, base};
}

Check check_representation(const Representation& rep) {
  require_rep_dims(rep);
  const std::size_t n = rep.base.dim();
  const TwistMap& phi = rep.base.twist;
  for (std::size_t i = 0; i < n; ++i)
    if (auto v = compare("rep-twist", {i}, rep.at(phi.column(i)) * rep.A, rep.A * rep.rho[i])) return *v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RationalMatrix lhs = rep.at(rep.base.bracket.on_basis(i, j)) * rep.A;
      const RationalMatrix rhs = rep.at(phi.column(i)) * rep.rho[j] - rep.at(phi.column(j)) * rep.rho[i];
      if (auto v = compare("rep-bracket", {i, j}, lhs, rhs)) return *v;
    }
  return Check::pass();
}

Check check_admissible(const Representation& rep) {
  require_rep_dims(rep);
  const std::size_t n = rep.base.dim();
  const TwistMap& phi = rep.base.twist;
  for (std::size_t i = 0; i < n; ++i)
    if (auto v = compare("admissible-twist", {i}, rep.A * rep.at(phi.column(i)), rep.rho[i] * rep.A)) return *v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RationalMatrix lhs = rep.A * rep.at(rep.base.bracket.on_basis(i, j));
      const RationalMatrix rhs = rep.rho[i] * rep.at(phi.column(j)) - rep.rho[j] * rep.at(phi.column(i));
      if (auto v = compare("admissible-bracket", {i, j}, lhs, rhs)) return *v;
    }
  return Check::pass();
}

Representation adjoint_rep(const HomLieAlgebra& g) {
  require_twist_dim(g.twist, g.dim(), "adjoint_rep");
  Representation rep{g.dim(), g.twist, {}, g};
  for (std::size_t i = 0; i < g.dim(); ++i) rep.rho.push_back(g.bracket.left_matrix(i));
  return rep;
}

Representation left_mult_rep(const RationalTensor& product, const TwistMap& phi) {
  require_twist_dim(phi, product.dim(), "left_mult_rep");
  const Check ls = check_hom_left_symmetric(product, phi);
  if (!ls) throw NotLeftSymmetric("left_mult_rep: " + ls.violation().describe());
  Representation rep{product.dim(), phi, {}, HomLieAlgebra{commutator_bracket(product), phi}};
  for (std::size_t i = 0; i < product.dim(); ++i) rep.rho.push_back(product.left_matrix(i));
  return rep;
}

DualRepresentation dual_rep(const Representation& rep) {
  const Check adm = check_admissible(rep);
  if (!adm) throw NotAdmissible("dual_rep: " + adm.violation().describe());
  DualRepresentation dual{rep.A.transpose(), {}, rep.base};
  for (const auto& r : rep.rho) dual.rho_tilde.push_back(RationalMatrix(r.rows(), r.cols()) - r.transpose());
  return dual;
}

Check check_twisted_dual_pairing(const RationalTensor& product, const TwistMap& phi) {
  const std::size_t n = product.dim();
  require_twist_dim(phi, n, "check_twisted_dual_pairing");
  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix dual_left = RationalMatrix(n, n) - product.left_matrix(phi.column(i)).transpose();
    for (std::size_t j = 0; j < n; ++j) {
      const RationalVector uv = product.on_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Rational lhs = dot(dual_left * e(n, k), phi.column(j));
        Rational rhs = -dot(uv, phi.transpose() * e(n, k));
        if (lhs != rhs) return make_violation<Rational>("dual-pairing", {i, j, k}, {lhs}, {rhs});
      }
    }
  }
  return Check::pass();
}

namespace {

RationalMatrix canonical_omega(std::size_t n) {
  RationalMatrix w(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, n + i) = 1;
    w(n + i, i) = -1;
  }
  return w;
}

}  // namespace

PhaseSpaceInstance assemble_phase_space(const RationalTensor& product, const TwistMap& phi,
                                        const std::optional<MetricForm>& g) {
  const std::size_t n = product.dim();
  require_twist_dim(phi, n, "assemble_phase_space");
  if (!is_involutive(phi)) throw NonInvolutiveTwist("assemble_phase_space: phi^2 != Id");
  const MetricForm metric = g.value_or(MetricForm::identity(n));
  if (metric.dim() != n) throw DimensionMismatch("assemble_phase_space: metric dimension mismatch");

  RationalTensor big(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) big(k, i, j) = product(k, i, j);
    // e_i · e^k = L~_{phi e_i} e^k = -L_{phi e_i}^T e^k
    const RationalMatrix L = product.left_matrix(phi.column(i));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a) big(n + a, i, n + k) = -L(k, a);
  }

  RationalMatrix Phi(2 * n, 2 * n);
  const RationalMatrix phi_t = phi.transpose();
  const RationalMatrix sharp = matrix_inverse(metric.gram());
  const RationalMatrix upper = RationalMatrix(n, n) - phi * sharp;
  const RationalMatrix lower = phi_t * metric.gram();
  RationalMatrix J(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Phi(r, c) = phi(r, c);
      Phi(n + r, n + c) = phi_t(r, c);
      J(r, n + c) = upper(r, c);
      J(n + r, c) = lower(r, c);
    }
  return {n, std::move(big), std::move(Phi), SymplecticForm(canonical_omega(n)), std::move(J), metric};
}

PhaseSpaceInstance build_phase_space(const RationalTensor& product, const TwistMap& phi,
                                     const std::optional<MetricForm>& g) {
  require_twist_dim(phi, product.dim(), "build_phase_space");
  if (!is_involutive(phi)) throw NonInvolutiveTwist("build_phase_space: phi^2 != Id");
  const Check ls = check_hom_left_symmetric(product, phi);
  if (!ls) throw NotLeftSymmetric("build_phase_space: " + ls.violation().describe());
  return assemble_phase_space(product, phi, g);
}

NamedChecks verify_phase_space(const PhaseSpaceInstance& ps) {
  const std::size_t dim = 2 * ps.base_dim;
  NamedChecks out;
  out.emplace_back("left-symmetric", check_hom_left_symmetric(ps.product, ps.twist));
  const RationalTensor bracket = commutator_bracket(ps.product);
  out.emplace_back("hom-jacobi", check_hom_jacobi(bracket, ps.twist));

  Check involutive = Check::pass();
  const RationalMatrix square = ps.twist * ps.twist;
  for (std::size_t i = 0; i < dim && involutive; ++i)
    if (square.column(i) != e(dim, i))
      involutive = make_violation<Rational>("twist-involutive", {i}, square.column(i), e(dim, i));
  out.emplace_back("twist-involutive", involutive);

  if (is_invertible(ps.twist))
    out.emplace_back("symplectic", check_symplectic(ps.omega, bracket, ps.twist));
  else
    out.emplace_back("symplectic", make_violation<Rational>("twist-invertible", {}, {}, {}));

  Check complex_square = Check::pass();
  const RationalMatrix J2 = ps.J_cal * ps.J_cal;
  for (std::size_t i = 0; i < dim && complex_square; ++i)
    if (J2.column(i) != -e(dim, i))
      complex_square = make_violation<Rational>("complex-square", {i}, J2.column(i), -e(dim, i));
  out.emplace_back("complex-square", complex_square);

  Check commutes = Check::pass();
  const RationalMatrix left = ps.twist * ps.J_cal;
  const RationalMatrix right = ps.J_cal * ps.twist;
  for (std::size_t i = 0; i < dim && commutes; ++i)
    if (left.column(i) != right.column(i))
      commutes = make_violation<Rational>("twist-commute", {i}, left.column(i), right.column(i));
  out.emplace_back("complex-commutes", commutes);
  return out;
}

Check check_phase_space_complex(const PhaseSpaceInstance& ps) {
  const RationalTensor N = nijenhuis_tensor(commutator_bracket(ps.product), ps.twist, ps.J_cal);
  const std::size_t dim = N.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (!is_zero_vector(N.on_basis(i, j)))
        return make_violation<Rational>("nijenhuis", {i, j}, N.on_basis(i, j), RationalVector(dim));
  return Check::pass();
}

}  // namespace homlie
