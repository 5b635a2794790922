#include "homlie/dim2_classification.hpp"

namespace homlie {

namespace {

// Coefficient matrix of X -> X phi - phi X on row-major vec(X).
RationalMatrix commutator_system(const TwistMap& phi) {
  RationalMatrix m(4, 4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      const std::size_t eq = 2 * r + c;
      for (std::size_t q = 0; q < 2; ++q) m(eq, 2 * r + q) += phi(q, c);
      for (std::size_t p = 0; p < 2; ++p) m(eq, 2 * p + c) -= phi(r, p);
    }
  return m;
}

RationalMatrix unvec(const RationalVector& x) { return RationalMatrix{{x[0], x[1]}, {x[2], x[3]}}; }

// Symmetric metric entries (g11, g12, g22) -> <Ke_i,Ke_j> - <e_i,e_j> for (i,j) in (1,1),(1,2),(2,2).
RationalMatrix hermitian_system(const RationalMatrix& K) {
  const auto gram_of = [](std::size_t which) {
    RationalMatrix g(2, 2);
    if (which == 0) g(0, 0) = 1;
    if (which == 1) g(0, 1) = g(1, 0) = 1;
    if (which == 2) g(1, 1) = 1;
    return g;
  };
  RationalMatrix m(3, 3);
  const std::pair<std::size_t, std::size_t> pairs[3] = {{0, 0}, {0, 1}, {1, 1}};
  for (std::size_t unknown = 0; unknown < 3; ++unknown) {
    const RationalMatrix g = gram_of(unknown);
    const RationalMatrix diff = K.transpose() * g * K - g;
    for (std::size_t eq = 0; eq < 3; ++eq) m(eq, unknown) = diff(pairs[eq].first, pairs[eq].second);
  }
  return m;
}

void require_complex(const TwistFamily2D& twist, const RationalMatrix& J, const char* where) {
  if (J.rows() != 2 || J.cols() != 2) throw DimensionMismatch(std::string(where) + ": J must be 2x2");
  const Check c = check_almost_complex(J, twist.matrix());
  if (!c)
    throw NoComplexStructure(std::string(where) + ": J is not an almost complex structure for the " + twist.name() +
                             " twist: " + c.violation().describe());
}

}  // namespace

TwistFamily2D TwistFamily2D::tilde(const Rational& B) {
  if (B.is_zero()) throw PreconditionFailed("tilde twist requires B != 0");
  return {TwistKind::Tilde, B};
}

TwistMap TwistFamily2D::matrix() const {
  switch (tag) {
    case TwistKind::Hat:
      return RationalMatrix::identity(2);
    case TwistKind::Bar:
      return RationalMatrix::diagonal({1, -1});
    case TwistKind::Tilde:
      return RationalMatrix{{1, 0}, {B, -1}};
  }
  return {};
}

std::string TwistFamily2D::name() const {
  switch (tag) {
    case TwistKind::Hat:
      return "hat";
    case TwistKind::Bar:
      return "bar";
    case TwistKind::Tilde:
      return "tilde(B=" + B.str() + ")";
  }
  return {};
}

RationalTensor canonical_bracket_2d() {
  RationalTensor c(2);
  c.set_antisymmetric(0, 1, {0, 1});
  return c;
}

RationalMatrix from_row_presentation(const RationalMatrix& rows) { return rows.transpose(); }

std::string to_string(SolutionFamily::Kind kind) { return kind == SolutionFamily::Kind::None ? "none" : "constrained"; }

SolutionFamily solve_almost_complex_2d(const TwistFamily2D& twist) {
  const TwistMap phi = twist.matrix();
  const std::vector<RationalVector> commutant = nullspace(commutator_system(phi));
  SolutionFamily out;
  out.derivation.push_back("twist " + twist.name() + " = " + to_string(phi));
  out.derivation.push_back("J phi = phi J: commutant has dimension " + std::to_string(commutant.size()));

  if (commutant.size() == 4) {
    out.kind = SolutionFamily::Kind::Constrained;
    out.free_params = {"a", "b", "c"};
    out.constraints = {"a^2+bc=-1"};
    out.derivation.push_back("phi is scalar, so J is unrestricted by the twist");
    out.derivation.push_back("J^2 = -Id: a scalar J would need s^2 = -1, so J - tr(J)/2 Id != 0 and by Cayley-Hamilton "
                             "tr J = 0, det J = 1");
    out.derivation.push_back("J = [[a,b],[c,-a]] with a^2+bc = -1");
    const RationalMatrix sample{{0, -1}, {1, 0}};
    if (!check_almost_complex(sample, phi)) throw std::logic_error("sample J failed check_almost_complex");
    out.sample_J = sample;
    return out;
  }

  const std::vector<RationalVector> plus = nullspace(phi - RationalMatrix::identity(2));
  const std::vector<RationalVector> minus = nullspace(phi + RationalMatrix::identity(2));
  if (plus.size() != 1 || minus.size() != 1)
    throw PreconditionFailed("solve_almost_complex_2d: twist is neither scalar nor a reflection");
  const RationalMatrix P = RationalMatrix::from_columns({plus[0], minus[0]}, 2);
  const RationalMatrix P_inv = matrix_inverse(P);
  out.derivation.push_back("eigenbasis of phi: v+ = " + to_string(plus[0]) + ", v- = " + to_string(minus[0]));
  for (const auto& x : commutant) {
    const RationalMatrix d = P_inv * unvec(x) * P;
    if (!d(0, 1).is_zero() || !d(1, 0).is_zero()) throw std::logic_error("commutant element is not diagonal");
  }
  out.derivation.push_back("in the eigenbasis every commuting J is diagonal, J = diag(p, q)");
  out.derivation.push_back("J^2 = -Id forces p^2 = -1 and q^2 = -1, which have no rational or real solution");
  out.kind = SolutionFamily::Kind::None;
  return out;
}

SolutionFamily solve_hermitian_2d(const TwistFamily2D& twist, const RationalMatrix& J) {
  require_complex(twist, J, "solve_hermitian_2d");
  const RationalMatrix K = twist.matrix() * J;
  const std::vector<RationalVector> kernel = nullspace(hermitian_system(K));
  SolutionFamily out;
  out.derivation.push_back("<Ke_i,Ke_j> = <e_i,e_j> on (g11, g12, g22): solution space of dimension " +
                           std::to_string(kernel.size()));
  if (kernel.size() != 1 || kernel[0][0].is_zero())
    throw std::logic_error("solve_hermitian_2d: unexpected solution space");

  const Rational a = J(0, 0);
  const Rational d = J(1, 0);
  const Rational h = J(0, 1);
  const Rational g11 = a.is_zero() ? Rational(1) : -d / a;
  const Rational t = g11 / kernel[0][0];
  out.kind = SolutionFamily::Kind::Constrained;
  out.free_params = {"<e1,e1>"};
  if (a.is_zero()) {
    out.constraints = {"<e1,e2>=0", "<e2,e2>=<e1,e1>/d^2"};
    out.derivation.push_back("a = 0: J e1 = d e2, J e2 = -e1/d with d = " + d.str());
  } else {
    out.constraints = {"<e1,e2>=-(a/d)<e1,e1>", "<e2,e2>=-(h/d)<e1,e1>"};
    out.derivation.push_back("J e1 = a e1 + d e2, J e2 = h e1 - a e2 with a = " + a.str() + ", d = " + d.str() +
                             ", h = " + h.str());
  }
  out.sample_J = J;
  out.sample_metric = MetricForm(RationalMatrix{{kernel[0][0] * t, kernel[0][1] * t}, {kernel[0][1] * t, kernel[0][2] * t}});
  out.derivation.push_back("sample <e1,e1> = " + g11.str());
  return out;
}

SolutionFamily solve_kahler_2d(const TwistFamily2D& twist, const RationalMatrix& J, const MetricForm& g) {
  require_complex(twist, J, "solve_kahler_2d");
  const TwistMap phi = twist.matrix();
  const Check h = check_hermitian_compatibility(J, g, phi);
  if (!h) throw PreconditionFailed("solve_kahler_2d: metric is not Hermitian: " + h.violation().describe());
  SolutionFamily out;
  const RationalTensor product = levi_civita_product(canonical_bracket_2d(), phi, g);
  out.sample_J = J;
  out.sample_metric = g;
  out.sample_product = product;
  out.derivation.push_back("Levi-Civita product by the Koszul formula");
  const Check k = check_kahler(product, phi, J);
  if (k) {
    out.kind = SolutionFamily::Kind::Constrained;
    out.derivation.push_back("L_{e_i} K = K L_{e_i} for i = 1, 2: Kähler");
    if (J(0, 0).is_zero()) {
      out.constraints = {"a=0", "<e2,e2>=<e1,e1>/d^2"};
    } else {
      out.constraints = {"a^2+hd=-1"};
    }
  } else {
    out.kind = SolutionFamily::Kind::None;
    out.derivation.push_back("not Kähler: " + k.violation().describe());
  }
  return out;
}

bool NonexistenceReport::all_none() const {
  for (const auto& e : entries)
    if (e.family.kind != SolutionFamily::Kind::None) return false;
  return true;
}

NonexistenceReport proper_nonexistence_report() {
  NonexistenceReport report;
  std::vector<TwistFamily2D> twists{TwistFamily2D::bar()};
  for (const Rational& B : {Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(7)})
    twists.push_back(TwistFamily2D::tilde(B));
  for (const auto& t : twists) report.entries.push_back({t, solve_almost_complex_2d(t)});
  return report;
}

}  // namespace homlie
