#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlie/fixtures.hpp"
#include "homlie/representations_phase_space.hpp"
#include "test_support.hpp"

using namespace homlie;
using homlie::testing::e;
using homlie::testing::R;

namespace {

const std::vector<std::array<Rational, 3>> kBindings{{1, 1, 1}, {2, 3, 1}, {R(-1), R(1, 2), 5}};

RationalTensor kahler_sls(const Rational& a, const Rational& b, const Rational& A) {
  return symplectic_left_symmetric(fixtures::imex_omega(a, b, A), fixtures::imex_bracket(a, b), fixtures::imex_twist());
}

RationalTensor bracket_2d() {
  RationalTensor c(2);
  c.set_antisymmetric(0, 1, {0, 1});
  return c;
}

bool all_pass(const NamedChecks& checks) {
  for (const auto& [name, c] : checks)
    if (!c) return false;
  return true;
}

// Phase-space product on basis pairs straight from (u,a*)·(v,b*) = (u·v, -L_{phi u}^T b*).
RationalVector phase_product_oracle(const RationalTensor& p, const TwistMap& phi, std::size_t x, std::size_t y) {
  const std::size_t n = p.dim();
  RationalVector u(n), a(n), v(n), b(n);
  (x < n ? u : a)[x % n] = 1;
  (y < n ? v : b)[y % n] = 1;
  const RationalVector uv = p(u, v);
  RationalVector dual(n);
  const RationalVector phi_u = phi * u;
  for (std::size_t k = 0; k < n; ++k) {
    // <L~_{phi u} b*, e_k> = -<b*, (phi u)·e_k>
    dual[k] = -dot(b, p(phi_u, e(n, k)));
  }
  RationalVector out(uv);
  out.insert(out.end(), dual.begin(), dual.end());
  return out;
}

}  // namespace

TEST_CASE("adjoint_rep") {
  const HomLieAlgebra g{fixtures::imex_bracket(1, 1), fixtures::imex_twist()};
  const Representation ad = adjoint_rep(g);
  CHECK(ad.A == fixtures::imex_twist());
  CHECK(ad.rho[0] * e(4, 1) == RationalVector{0, 0, -1, 0});
  CHECK(ad.rho[0] * e(4, 2) == RationalVector{0, 1, 0, 0});
  CHECK(ad.rho[0] * e(4, 0) == RationalVector{0, 0, 0, 0});
  CHECK(ad.rho[0] * e(4, 3) == RationalVector{0, 0, 0, 0});
  for (std::size_t i = 0; i < 4; ++i) CHECK(is_zero_vector(ad.rho[i] * e(4, i)));
  CHECK(check_representation(ad));
  CHECK(check_admissible(ad));

  const Representation zero = adjoint_rep(HomLieAlgebra{RationalTensor(3), RationalMatrix::identity(3)});
  for (const auto& r : zero.rho) CHECK(r.is_zero());
  for (const auto& [a, b, A] : kBindings) {
    const Representation r = adjoint_rep(HomLieAlgebra{fixtures::imex_bracket(a, b), fixtures::imex_twist()});
    CHECK(check_representation(r));
    CHECK(check_admissible(r));
  }
}

TEST_CASE("check_representation and check_admissible") {
  homlie::testing::RandomRationals rng(53);
  const HomLieAlgebra g{fixtures::imex_bracket(1, 1), fixtures::imex_twist()};
  Representation zero{3, rng.matrix(3, 3), std::vector<RationalMatrix>(4, RationalMatrix(3, 3)), g};
  CHECK(check_representation(zero));
  CHECK(check_admissible(zero));

  Representation broken = adjoint_rep(g);
  broken.rho[1](0, 1) = 1;
  const Check c = check_representation(broken);
  REQUIRE_FALSE(c);
  CHECK(c.violation().kind == "rep-twist");

  Representation wrong_size = adjoint_rep(g);
  wrong_size.rho.pop_back();
  CHECK_THROWS_AS(check_representation(wrong_size), DimensionMismatch);

  // Non-involutive twist: adjoint is a representation but not admissible.
  RationalTensor c2(2);
  const HomLieAlgebra scaled{c2, RationalMatrix::diagonal({2, 1})};
  Representation r{2, RationalMatrix::identity(2), {RationalMatrix::identity(2), RationalMatrix(2, 2)}, scaled};
  const Check rep = check_representation(r);
  const Check adm = check_admissible(r);
  REQUIRE_FALSE(rep);
  CHECK(rep.violation().witness == std::vector<std::size_t>{1, 1});
  REQUIRE_FALSE(adm);
  CHECK(adm.violation().kind == "admissible-twist");
}

TEST_CASE("left_mult_rep") {
  CHECK_THROWS_AS(left_mult_rep(levi_civita_product(bracket_2d(), RationalMatrix::identity(2),
                                                    MetricForm(RationalMatrix{{2, 1}, {1, 1}})),
                                RationalMatrix::identity(2)),
                  NotLeftSymmetric);
  const Representation zero = left_mult_rep(RationalTensor(2), RationalMatrix::identity(2));
  for (const auto& r : zero.rho) CHECK(r.is_zero());

  for (const auto& [a, b, A] : kBindings) {
    const RationalTensor s = kahler_sls(a, b, A);
    const Representation L = left_mult_rep(s, fixtures::imex_twist());
    CHECK(L.base.bracket == fixtures::imex_bracket(a, b));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(L.rho[i] * e(4, j) == s.on_basis(i, j));
    CHECK(check_representation(L));
    CHECK(check_admissible(L));
  }
}

TEST_CASE("dual_rep") {
  const HomLieAlgebra g{fixtures::imex_bracket(1, 1), fixtures::imex_twist()};
  const Representation ad = adjoint_rep(g);
  const DualRepresentation dual = dual_rep(ad);
  CHECK(dual.A_star == fixtures::imex_twist().transpose());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(dual.rho_tilde[i] == RationalMatrix(4, 4) - ad.rho[i].transpose());
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(dot(dual.rho_tilde[i] * e(4, k), e(4, j)) + dot(e(4, k), ad.rho[i] * e(4, j)) == 0);
  }
  CHECK(check_representation(dual.representation()));

  const Representation zero{2, RationalMatrix::identity(2), {RationalMatrix(2, 2), RationalMatrix(2, 2)},
                            HomLieAlgebra{RationalTensor(2), RationalMatrix::identity(2)}};
  for (const auto& r : dual_rep(zero).rho_tilde) CHECK(r.is_zero());

  const HomLieAlgebra scaled{RationalTensor(2), RationalMatrix::diagonal({2, 1})};
  const Representation bad{2, RationalMatrix::identity(2), {RationalMatrix::identity(2), RationalMatrix(2, 2)}, scaled};
  CHECK_THROWS_AS(dual_rep(bad), NotAdmissible);

  for (const auto& [a, b, A] : kBindings) {
    const Representation L = left_mult_rep(kahler_sls(a, b, A), fixtures::imex_twist());
    CHECK(check_representation(dual_rep(L).representation()));
  }
}

TEST_CASE("twisted dual pairing identity") {
  for (const auto& [a, b, A] : kBindings) {
    CHECK(check_twisted_dual_pairing(kahler_sls(a, b, A), fixtures::imex_twist()));
    CHECK(check_twisted_dual_pairing(
        levi_civita_product(fixtures::imex_bracket(a, b), fixtures::imex_twist(), fixtures::kahler4_metric(a, b, A)),
        fixtures::imex_twist()));
  }
  // Fails when phi is not multiplicative for the product.
  RationalTensor p(2);
  p.set(0, 0, {1, 0});
  const Check c = check_twisted_dual_pairing(p, RationalMatrix{{0, 1}, {1, 0}});
  CHECK_FALSE(c);
}

TEST_CASE("Lemma: phi*(flat u) = flat(phi u) for selfadjoint metrics") {
  for (const auto& [a, b, A] : kBindings) {
    const MetricForm g = fixtures::kahler4_metric(a, b, A);
    const TwistMap phi = fixtures::imex_twist();
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(phi.transpose() * musical_flat(g, e(4, i)) == musical_flat(g, phi * e(4, i)));
  }
}

TEST_CASE("build_phase_space structure") {
  const RationalTensor s = kahler_sls(1, 1, 1);
  const TwistMap phi = fixtures::imex_twist();
  const PhaseSpaceInstance ps = build_phase_space(s, phi);
  REQUIRE(ps.base_dim == 4);

  CHECK(ps.omega(e(8, 0), e(8, 4)) == 1);
  CHECK(ps.omega(e(8, 4), e(8, 0)) == -1);
  CHECK(ps.J_cal * e(8, 0) == -e(8, 4));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      CHECK(ps.product.on_basis(x, y) == phase_product_oracle(s, phi, x, y));
      if (x >= 4) CHECK(is_zero_vector(ps.product.on_basis(x, y)));
      if (x < 4 && y < 4)
        for (std::size_t k = 4; k < 8; ++k) CHECK(ps.product(k, x, y).is_zero());
    }
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) CHECK(ps.omega(ps.twist * e(8, x), ps.twist * e(8, y)) == ps.omega(e(8, x), e(8, y)));

  CHECK_THROWS_AS(build_phase_space(s, RationalMatrix::diagonal({2, 1, 1, 1})), NonInvolutiveTwist);
  const RationalTensor lc =
      levi_civita_product(fixtures::imex_bracket(1, 1), phi, fixtures::kahler4_metric(1, 1, 1));
  CHECK_THROWS_AS(build_phase_space(lc, phi), NotLeftSymmetric);
}

TEST_CASE("phase space from the symplectic left-symmetric product") {
  for (const auto& [a, b, A] : kBindings) {
    const RationalTensor s = kahler_sls(a, b, A);
    for (const auto& g : {std::optional<MetricForm>{}, std::optional<MetricForm>{fixtures::kahler4_metric(a, b, A)}}) {
      const PhaseSpaceInstance ps = build_phase_space(s, fixtures::imex_twist(), g);
      for (const auto& [name, c] : verify_phase_space(ps)) {
        INFO(name);
        CHECK(c.passed());
      }
      // Not integrable: N((e1,0),(e2,0)) = a e3.
      const Check n = check_phase_space_complex(ps);
      REQUIRE_FALSE(n);
      CHECK(n.violation().witness == std::vector<std::size_t>{1, 2});
      CHECK(n.violation().lhs == RationalVector{0, 0, a, 0, 0, 0, 0, 0});
    }
  }
}

TEST_CASE("phase space from metric-compatible bases") {
  for (const auto& [a, b, A] : kBindings) {
    const MetricForm g = fixtures::kahler4_metric(a, b, A);
    const RationalTensor lc = levi_civita_product(fixtures::imex_bracket(a, b), fixtures::imex_twist(), g);
    const PhaseSpaceInstance ps = assemble_phase_space(lc, fixtures::imex_twist(), g);
    CHECK(check_phase_space_complex(ps));
    const NamedChecks checks = verify_phase_space(ps);
    CHECK(checks[2].second.passed());
    CHECK(checks[3].second.passed());
    CHECK(checks[4].second.passed());
    CHECK(checks[5].second.passed());
    CHECK_FALSE(checks[0].second.passed());
  }

  const PhaseSpaceInstance abelian = build_phase_space(RationalTensor(4), fixtures::imex_twist());
  CHECK(all_pass(verify_phase_space(abelian)));
  CHECK(check_phase_space_complex(abelian));

  const MetricForm g2(RationalMatrix{{2, 1}, {1, 1}});
  const RationalTensor leil4 = levi_civita_product(bracket_2d(), RationalMatrix::identity(2), g2);
  CHECK(check_phase_space_complex(assemble_phase_space(leil4, RationalMatrix::identity(2), g2)));
  const Check with_identity = check_phase_space_complex(assemble_phase_space(leil4, RationalMatrix::identity(2)));
  REQUIRE_FALSE(with_identity);
  CHECK(with_identity.violation().lhs == RationalVector{3, 1, 0, 0});
}

TEST_CASE("phase space of random involutive left-symmetric bases") {
  // Products with phi = Id that are left-symmetric: left multiplication by a fixed nilpotent pattern.
  homlie::testing::RandomRationals rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    RationalTensor p(2);
    // e1·e1 = t e2, all else zero: associative, hence left-symmetric.
    p.set(0, 0, {0, rng.nonzero()});
    REQUIRE(check_hom_left_symmetric(p, RationalMatrix::identity(2)));
    const PhaseSpaceInstance ps = build_phase_space(p, RationalMatrix::identity(2));
    CHECK(all_pass(verify_phase_space(ps)));
  }
}
