#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlie/fixtures.hpp"
#include "homlie/metric_symplectic.hpp"
#include "test_support.hpp"

using namespace homlie;
using homlie::testing::e;
using homlie::testing::R;

namespace {

RationalTensor bracket_2d() {
  RationalTensor c(2);
  c.set_antisymmetric(0, 1, {0, 1});
  return c;
}

const std::vector<std::array<Rational, 3>> kBindings{{1, 1, 1}, {2, 3, 1}, {R(-1), R(1, 2), 5}};

}  // namespace

TEST_CASE("forms validate their matrices") {
  CHECK_THROWS_AS(MetricForm(RationalMatrix{{1, 2}, {3, 4}}), PreconditionFailed);
  CHECK_THROWS_AS(MetricForm(RationalMatrix{{1, 1}, {1, 1}}), DegenerateForm);
  CHECK_THROWS_AS(MetricForm(RationalMatrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(SymplecticForm(RationalMatrix{{0, 1}, {1, 0}}), PreconditionFailed);
  CHECK_THROWS_AS(SymplecticForm(RationalMatrix(3, 3)), DegenerateForm);
}

TEST_CASE("check_pseudo_riemannian") {
  CHECK(check_pseudo_riemannian(fixtures::kahler4_metric(1, 1, 1), fixtures::imex_twist()));
  CHECK(fixtures::kahler4_metric(1, 1, 1).gram() == RationalMatrix::identity(4));
  CHECK(check_pseudo_riemannian(MetricForm(RationalMatrix{{2, 1}, {1, 1}}), RationalMatrix::identity(2)));
  const Check bad = check_pseudo_riemannian(MetricForm(RationalMatrix::diagonal({1, 2})), RationalMatrix{{0, 1}, {1, 0}});
  REQUIRE_FALSE(bad);
  CHECK(bad.violation().witness == std::vector<std::size_t>{1, 1});
  CHECK(bad.violation().lhs == RationalVector{2});
}

TEST_CASE("check_phi_selfadjoint") {
  CHECK(check_phi_selfadjoint(fixtures::kahler4_metric(1, 1, 1), fixtures::imex_twist()));
  CHECK(check_phi_selfadjoint(MetricForm(RationalMatrix{{2, 1}, {1, 1}}), RationalMatrix::identity(2)));
  CHECK_THROWS_AS(check_phi_selfadjoint(MetricForm::identity(2), RationalMatrix::diagonal({2, 1})), NonInvolutiveTwist);
  // phi-isometry plus phi^2 = Id implies self-adjointness.
  for (const auto& [a, b, A] : kBindings) {
    const MetricForm g = fixtures::kahler4_metric(a, b, A);
    REQUIRE(check_pseudo_riemannian(g, fixtures::imex_twist()));
    CHECK(check_phi_selfadjoint(g, fixtures::imex_twist()));
  }
  CHECK(check_phi_selfadjoint(MetricForm::identity(4), fixtures::hermitian4_twist()));
  const Check bad = check_phi_selfadjoint(MetricForm(RationalMatrix::diagonal({1, 2})), RationalMatrix{{0, 1}, {1, 0}});
  CHECK_FALSE(bad);
}

TEST_CASE("levi_civita_product reproduces the Kähler example table") {
  for (const auto& [a, b, A] : kBindings) {
    const RationalTensor p =
        levi_civita_product(fixtures::imex_bracket(a, b), fixtures::imex_twist(), fixtures::kahler4_metric(a, b, A));
    CHECK(p == fixtures::kahler4_levi_civita_table(a, b));
  }
  const RationalTensor p =
      levi_civita_product(fixtures::imex_bracket(1, 1), fixtures::imex_twist(), fixtures::kahler4_metric(1, 1, 1));
  CHECK(p.on_basis(1, 0) == RationalVector{0, 0, 1, 0});
  CHECK(p.on_basis(2, 0) == RationalVector{0, -1, 0, 0});
  CHECK(p.on_basis(0, 0) == RationalVector{0, 0, 0, 0});
}

TEST_CASE("levi_civita_product special cases") {
  homlie::testing::RandomRationals rng(29);
  CHECK(levi_civita_product(RationalTensor(3), RationalMatrix::identity(3), MetricForm(RationalMatrix::diagonal({1, -2, 3})))
            .is_zero());

  const MetricForm g(RationalMatrix{{2, 1}, {1, 1}});
  const RationalTensor p = levi_civita_product(bracket_2d(), RationalMatrix::identity(2), g);
  CHECK(p.on_basis(0, 0) == RationalVector{1, -2});
  CHECK(p.on_basis(0, 1) == RationalVector{1, -1});
  CHECK(p.on_basis(1, 0) == RationalVector{1, -2});
  CHECK(p.on_basis(1, 1) == RationalVector{1, -1});
  CHECK(p == homlie::testing::koszul_oracle(bracket_2d(), RationalMatrix::identity(2), g.gram()));

  CHECK_THROWS_AS(levi_civita_product(bracket_2d(), RationalMatrix::diagonal({1, 0}), g), SingularTwist);
  CHECK_THROWS_AS(levi_civita_product(bracket_2d(), RationalMatrix::identity(3), g), DimensionMismatch);
}

TEST_CASE("Levi-Civita output satisfies torsion and compatibility, and is unique") {
  for (const auto& [a, b, A] : kBindings) {
    const RationalTensor c = fixtures::imex_bracket(a, b);
    const MetricForm g = fixtures::kahler4_metric(a, b, A);
    const RationalTensor p = levi_civita_product(c, fixtures::imex_twist(), g);
    CHECK(check_torsion(p, c));
    CHECK(check_metric_compatibility(p, g, fixtures::imex_twist()));
    CHECK(p == homlie::testing::koszul_oracle(c, fixtures::imex_twist(), g.gram()));

    // Perturbing any single constant breaks at least one Koszul equation.
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          RationalTensor q = p;
          q(k, i, j) += 1;
          bool broken = false;
          for (std::size_t w = 0; w < 4 && !broken; ++w)
            broken = !homlie::testing::koszul_residual(q, c, fixtures::imex_twist(), g.gram(), i, j, w).is_zero();
          CHECK(broken);
        }
  }
}

TEST_CASE("check_torsion and check_metric_compatibility") {
  CHECK(check_torsion(RationalTensor(4), RationalTensor(4)));
  const Check bad = check_torsion(RationalTensor(4), fixtures::imex_bracket(1, 1));
  REQUIRE_FALSE(bad);
  CHECK(bad.violation().witness == std::vector<std::size_t>{1, 2});

  CHECK(check_metric_compatibility(RationalTensor(3), MetricForm::identity(3), RationalMatrix::identity(3)));
  const MetricForm g(RationalMatrix{{2, 1}, {1, 1}});
  const RationalTensor p = levi_civita_product(bracket_2d(), RationalMatrix::identity(2), g);
  CHECK(check_metric_compatibility(p, g, RationalMatrix::identity(2)));
  RationalTensor q = p;
  q(0, 0, 0) += 1;
  CHECK_FALSE(check_metric_compatibility(q, g, RationalMatrix::identity(2)));
}

TEST_CASE("check_symplectic") {
  for (const auto& [a, b, A] : kBindings)
    CHECK(check_symplectic(fixtures::imex_omega(a, b, A), fixtures::imex_bracket(a, b), fixtures::imex_twist()));

  CHECK(check_symplectic(SymplecticForm(RationalMatrix{{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, R(1, 3)}, {0, 0, R(-1, 3), 0}}),
                         RationalTensor(4), RationalMatrix::identity(4)));

  // Flipping only entry (2,4) leaves a non-antisymmetric matrix.
  CHECK_THROWS_AS(SymplecticForm(RationalMatrix{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}}),
                  PreconditionFailed);
  // Flipping the antisymmetric pair breaks the cocycle condition.
  const SymplecticForm flipped(RationalMatrix{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const Check bad = check_symplectic(flipped, fixtures::imex_bracket(1, 1), fixtures::imex_twist());
  REQUIRE_FALSE(bad);
  CHECK(bad.violation().kind == "2-hom-cocycle");
  CHECK(bad.violation().witness == std::vector<std::size_t>{1, 3, 4});

  // A form that is a cocycle but not phi-invariant.
  const SymplecticForm skew(RationalMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  const Check inv = check_symplectic(skew, RationalTensor(4), fixtures::imex_twist());
  REQUIRE_FALSE(inv);
  CHECK(inv.violation().kind == "twist-invariance");
  CHECK(inv.violation().witness == std::vector<std::size_t>{1, 2});

  CHECK_THROWS_AS(check_symplectic(fixtures::imex_omega(1, 1, 1), fixtures::imex_bracket(1, 1), RationalMatrix::diagonal({1, 1, 1, 0})),
                  SingularTwist);
}

TEST_CASE("symplectic_left_symmetric") {
  const SymplecticForm std2(RationalMatrix{{0, 1}, {-1, 0}});
  CHECK(symplectic_left_symmetric(std2, RationalTensor(2), RationalMatrix::identity(2)).is_zero());

  for (const auto& [a, b, A] : kBindings) {
    const RationalTensor c = fixtures::imex_bracket(a, b);
    const SymplecticForm omega = fixtures::imex_omega(a, b, A);
    const TwistMap phi = fixtures::imex_twist();
    const RationalTensor s = symplectic_left_symmetric(omega, c, phi);
    CHECK(commutator_bracket(s) == c);
    CHECK(check_hom_left_symmetric(s, phi));
    // Oracle: the defining relation evaluated on every triple.
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
          CHECK(omega(s(e(4, i), e(4, j)), phi * e(4, k)) == -omega(phi * e(4, j), c(e(4, i), e(4, k))));
  }

  CHECK_THROWS_AS(symplectic_left_symmetric(std2, RationalTensor(2), RationalMatrix::diagonal({2, 1})), NonInvolutiveTwist);
  const SymplecticForm flipped(RationalMatrix{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK_THROWS_AS(symplectic_left_symmetric(flipped, fixtures::imex_bracket(1, 1), fixtures::imex_twist()),
                  PreconditionFailed);
}

TEST_CASE("musical isomorphisms") {
  CHECK(musical_flat(MetricForm::identity(3), e(3, 0)) == e(3, 0));
  CHECK(musical_flat(MetricForm(RationalMatrix::diagonal({2, 3})), e(2, 1)) == RationalVector{0, 3});
  homlie::testing::RandomRationals rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix s = rng.matrix(4, 4);
    RationalMatrix gram = s + s.transpose();
    if (determinant(gram).is_zero()) continue;
    const MetricForm g(gram);
    const RationalVector u = rng.vector(4);
    CHECK(musical_sharp(g, musical_flat(g, u)) == u);
    CHECK(musical_sharp(g, u) == matrix_inverse(gram) * u);
  }
}
