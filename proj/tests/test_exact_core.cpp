#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlie/linalg.hpp"
#include "test_support.hpp"

using namespace homlie;
using homlie::testing::R;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(2, 4) == R(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-6, -4).denominator() == 2);
  CHECK(Rational::parse("-10/4") == R(-5, 2));
  CHECK(Rational::parse("7") == R(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(R(1) / R(0), std::domain_error);
}

TEST_CASE("gaussian rationals") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  homlie::testing::RandomRationals rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const GaussianRational z(rng.scalar(), rng.scalar());
    CHECK(conj(conj(z)) == z);
    const GaussianRational modulus = z * conj(z);
    CHECK(modulus.im().is_zero());
    CHECK(modulus.re() == z.norm());
    if (!z.is_zero()) CHECK(z * inverse(z) == GaussianRational(1));
  }
  CHECK(GaussianRational(R(1, 2), R(-3)).str() == "1/2-3*i");
}

TEST_CASE("solve_linear examples") {
  const auto id = RationalMatrix::identity(3);
  auto r = solve_linear(id, RationalVector{1, R(1, 2), -3});
  REQUIRE(r.unique());
  CHECK(r.solution == RationalVector{1, R(1, 2), -3});

  r = solve_linear(RationalMatrix{{2, 0}, {0, 3}}, RationalVector{1, 1});
  REQUIRE(r.unique());
  CHECK(r.solution == RationalVector{R(1, 2), R(1, 3)});

  r = solve_linear(RationalMatrix{{1, 1}, {2, 2}}, RationalVector{1, 3});
  CHECK(r.status == SolveResult<Rational>::Status::NoSolution);

  r = solve_linear(RationalMatrix{{1, 1}, {2, 2}}, RationalVector{1, 2});
  REQUIRE(r.status == SolveResult<Rational>::Status::NonUnique);
  CHECK(RationalMatrix{{1, 1}, {2, 2}} * r.kernel == RationalVector{0, 0});
  CHECK(!is_zero_vector(r.kernel));

  CHECK_THROWS_AS(solve_linear(RationalMatrix(2, 3), RationalVector{1, 2}), DimensionMismatch);
  CHECK_THROWS_AS(solve_linear(id, RationalVector{1, 2}), DimensionMismatch);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(RationalMatrix::identity(4)) == R(1));
  CHECK(determinant(RationalMatrix{{0, -1}, {1, 0}}) == R(1));
  CHECK(determinant(RationalMatrix{{2, 1}, {1, 1}}) == R(1));
  CHECK(determinant(RationalMatrix{{0, 1}, {1, 0}}) == R(-1));
  CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("matrix_inverse examples") {
  CHECK(matrix_inverse(RationalMatrix::identity(5)) == RationalMatrix::identity(5));
  const auto d = RationalMatrix::diagonal({-1, 1, -1, 1});
  CHECK(matrix_inverse(d) == d);
  const RationalMatrix swap{{0, 1}, {1, 0}};
  CHECK(matrix_inverse(swap) == swap);
  CHECK_THROWS_AS(matrix_inverse(RationalMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("random invertible systems solve exactly") {
  homlie::testing::RandomRationals rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RationalMatrix a = rng.invertible(n);
    const RationalVector x = rng.vector(n);
    const auto r = solve_linear(a, a * x);
    REQUIRE(r.unique());
    CHECK(r.solution == x);
    CHECK(a * matrix_inverse(a) == RationalMatrix::identity(n));
  }
}

TEST_CASE("determinant agrees with Leibniz expansion and is multiplicative") {
  homlie::testing::RandomRationals rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const RationalMatrix a = rng.matrix(n, n);
    RationalMatrix b = rng.matrix(n, n);
    if (trial % 4 == 0) {
      // Force a repeated row to exercise the singular path.
      for (std::size_t c = 0; c < n && n > 1; ++c) b(n - 1, c) = b(0, c);
    }
    CHECK(determinant(a) == homlie::testing::leibniz_determinant(a));
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("rank, nullspace and span over gaussian rationals") {
  const GaussianRational i = GaussianRational::i();
  const ComplexMatrix m{{1, i}, {i, -1}};
  CHECK(rank(m) == 1);
  const auto kernel = nullspace(m);
  REQUIRE(kernel.size() == 1);
  CHECK(is_zero_vector(m * kernel[0]));
  CHECK(determinant(m).is_zero());
  CHECK(in_span<GaussianRational>({{1, i}}, {i, -1}));
  CHECK_FALSE(in_span<GaussianRational>({{1, i}}, {1, -i}));
  const auto kept = independent_subset<GaussianRational>({{1, i}, {i, -1}, {1, -i}});
  CHECK(kept.size() == 2);
}
