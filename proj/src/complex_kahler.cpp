#include "homlie/complex_kahler.hpp"

namespace homlie {

namespace {

void require_structure_dims(const RationalMatrix& J, const TwistMap& phi, std::size_t n, const char* where) {
  if (!J.is_square() || J.rows() != n) throw DimensionMismatch(std::string(where) + ": J has wrong dimension");
  require_twist_dim(phi, n, where);
}

void require_almost_complex(const RationalMatrix& J, const TwistMap& phi, const char* where) {
  const Check c = check_almost_complex(J, phi);
  if (!c) throw PreconditionFailed(std::string(where) + ": not an almost complex structure: " + c.violation().describe());
}

GaussianRational half_i() { return {Rational(0), Rational(1, 2)}; }

}  // namespace

Check check_almost_complex(const RationalMatrix& J, const TwistMap& phi) {
  const std::size_t n = J.rows();
  require_structure_dims(J, phi, n, "check_almost_complex");
  if (n % 2 != 0) throw OddDimension("check_almost_complex: odd dimension admits no J with J^2 = -Id");
  if (!is_involutive(phi)) throw NonInvolutiveTwist("check_almost_complex: phi^2 != Id");

  const RationalMatrix square = J * J;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector lhs = square.column(i);
    RationalVector rhs = -basis_vector<Rational>(n, i);
    if (lhs != rhs) return make_violation<Rational>("complex-square", {i}, std::move(lhs), std::move(rhs));
  }
  const RationalMatrix left = phi * J;
  const RationalMatrix right = J * phi;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector lhs = left.column(i);
    RationalVector rhs = right.column(i);
    if (lhs != rhs) return make_violation<Rational>("twist-commute", {i}, std::move(lhs), std::move(rhs));
  }
  return Check::pass();
}

RationalMatrix twisted_structure(const RationalMatrix& J, const TwistMap& phi) {
  require_structure_dims(J, phi, J.rows(), "twisted_structure");
  return phi * J;
}

RationalTensor nijenhuis_tensor(const RationalTensor& bracket, const TwistMap& phi, const RationalMatrix& J) {
  const std::size_t n = bracket.dim();
  require_structure_dims(J, phi, n, "nijenhuis_tensor");
  require_almost_complex(J, phi, "nijenhuis_tensor");
  const RationalMatrix K = phi * J;
  RationalTensor N(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RationalVector u = basis_vector<Rational>(n, i);
      const RationalVector v = basis_vector<Rational>(n, j);
      const RationalVector Ku = K.column(i);
      const RationalVector Kv = K.column(j);
      N.set(i, j, bracket(Ku, Kv) - K * bracket(Ku, v) - K * bracket(u, Kv) - bracket.on_basis(i, j));
    }
  return N;
}

Check check_hermitian_compatibility(const RationalMatrix& J, const MetricForm& g, const TwistMap& phi) {
  const std::size_t n = g.dim();
  require_structure_dims(J, phi, n, "check_hermitian_compatibility");
  const RationalMatrix K = phi * J;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational lhs = g(K.column(i), K.column(j));
      Rational rhs = g.gram()(i, j);
      if (lhs != rhs) return make_violation<Rational>("hermitian-invariance", {i, j}, {lhs}, {rhs});
    }
  return Check::pass();
}

ComplexVector ComplexSplit::pi10(const ComplexVector& w) const {
  return scale(GaussianRational(Rational(1, 2)), w) - scale(half_i(), structure * w);
}

ComplexVector ComplexSplit::pi01(const ComplexVector& w) const {
  return scale(GaussianRational(Rational(1, 2)), w) + scale(half_i(), structure * w);
}

ComplexSplit complexify_and_split(const RationalTensor& bracket, const TwistMap& phi, const RationalMatrix& J) {
  const std::size_t n = bracket.dim();
  require_structure_dims(J, phi, n, "complexify_and_split");
  require_almost_complex(J, phi, "complexify_and_split");
  ComplexSplit split;
  split.structure = complexify(phi * J);
  std::vector<ComplexVector> candidates;
  for (std::size_t k = 0; k < n; ++k)
    candidates.push_back(basis_vector<GaussianRational>(n, k) -
                         scale(GaussianRational::i(), split.structure.column(k)));
  split.basis10 = independent_subset(candidates);
  for (const auto& w : split.basis10) split.basis01.push_back(conj(w));
  return split;
}

IntegrabilityReport check_integrability_equivalence(const RationalTensor& bracket, const TwistMap& phi,
                                                    const RationalMatrix& J) {
  const ComplexSplit split = complexify_and_split(bracket, phi, J);
  const ComplexTensor cbracket = complexify(bracket);
  const ComplexMatrix cphi = complexify(phi);
  IntegrabilityReport report;
  report.subalg10 = check_subalgebra(cbracket, cphi, split.basis10).passed();
  report.subalg01 = check_subalgebra(cbracket, cphi, split.basis01).passed();
  report.nijenhuis_zero = nijenhuis_tensor(bracket, phi, J).is_zero();
  return report;
}

Check check_kahler(const RationalTensor& product, const TwistMap& phi, const RationalMatrix& J) {
  const std::size_t n = product.dim();
  require_structure_dims(J, phi, n, "check_kahler");
  const RationalMatrix K = phi * J;
  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix L = product.left_matrix(i);
    const RationalMatrix left = L * K;
    const RationalMatrix right = K * L;
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector lhs = left.column(j);
      RationalVector rhs = right.column(j);
      if (lhs != rhs) return make_violation<Rational>("kahler-invariance", {i, j}, std::move(lhs), std::move(rhs));
    }
  }
  return Check::pass();
}

SymplecticForm induced_symplectic(const MetricForm& g, const TwistMap& phi, const RationalMatrix& J) {
  require_structure_dims(J, phi, g.dim(), "induced_symplectic");
  require_almost_complex(J, phi, "induced_symplectic");
  const Check h = check_hermitian_compatibility(J, g, phi);
  if (!h) throw PreconditionFailed("induced_symplectic: metric is not Hermitian: " + h.violation().describe());
  return SymplecticForm((phi * J).transpose() * g.gram());
}

}  // namespace homlie
