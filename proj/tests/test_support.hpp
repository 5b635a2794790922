#pragma once

#include "homlie/linalg.hpp"
#include "homlie/tensor3.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

namespace homlie::testing {

inline Rational R(long p, long q = 1) { return Rational(p, q); }

/// Small random rationals p/q with |p| <= 5, 1 <= q <= 4.
class RandomRationals {
public:
  explicit RandomRationals(std::uint32_t seed) : m_engine(seed) {}

  Rational scalar() {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(m_engine), den(m_engine));
  }

  Rational nonzero() {
    Rational r;
    do r = scalar();
    while (r.is_zero());
    return r;
  }

  RationalVector vector(std::size_t n) {
    RationalVector v(n);
    for (auto& x : v) x = scalar();
    return v;
  }

  RationalMatrix matrix(std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
    return m;
  }

  RationalMatrix invertible(std::size_t n) {
    RationalMatrix m;
    do m = matrix(n, n);
    while (determinant(m).is_zero());
    return m;
  }

  RationalTensor tensor(std::size_t n) {
    RationalTensor t(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(k, i, j) = scalar();
    return t;
  }

  std::mt19937& engine() { return m_engine; }

private:
  std::mt19937 m_engine;
};

/// Leibniz expansion; an oracle independent of elimination.
template <class S>
S leibniz_determinant(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  S total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    S term(1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += (inversions % 2 == 0) ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Conjugates an operator into the basis given by the columns of `basis`.
inline RationalMatrix conjugate(const RationalMatrix& op, const RationalMatrix& basis) {
  return matrix_inverse(basis) * op * basis;
}

inline RationalVector e(std::size_t n, std::size_t i) { return basis_vector<Rational>(n, i); }

}  // namespace homlie::testing

#include "homlie/metric_symplectic.hpp"

namespace homlie::testing {

/// Solves every Koszul equation of every pair at once as one (n^3 x n^3) system.
/// Independent of the column-wise closed form used by levi_civita_product.
inline RationalTensor koszul_oracle(const RationalTensor& bracket, const TwistMap& phi, const RationalMatrix& gram) {
  const std::size_t n = bracket.dim();
  const std::size_t unknowns = n * n * n;
  auto index = [n](std::size_t k, std::size_t i, std::size_t j) { return (i * n + j) * n + k; };
  auto inner = [&](const RationalVector& u, const RationalVector& v) { return dot(u, gram * v); };
  RationalMatrix system(unknowns, unknowns);
  RationalVector rhs(unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t w = 0; w < n; ++w, ++row) {
        const RationalVector phi_w = phi.column(w);
        // 2 sum_k P^k_ij <e_k, phi e_w>
        for (std::size_t k = 0; k < n; ++k) system(row, index(k, i, j)) = R(2) * inner(e(n, k), phi_w);
        rhs[row] = inner(bracket(e(n, i), e(n, j)), phi_w) + inner(bracket(e(n, w), e(n, j)), phi.column(i)) +
                   inner(bracket(e(n, w), e(n, i)), phi.column(j));
      }
  const auto solved = solve_linear(system, rhs);
  if (!solved.unique()) throw SingularSystem("koszul_oracle: system not uniquely solvable");
  RationalTensor p(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(k, i, j) = solved.solution[index(k, i, j)];
  return p;
}

/// Residual of the Koszul equation at (i, j, w); zero for the Levi-Civita product.
inline Rational koszul_residual(const RationalTensor& product, const RationalTensor& bracket, const TwistMap& phi,
                                const RationalMatrix& gram, std::size_t i, std::size_t j, std::size_t w) {
  const std::size_t n = product.dim();
  auto inner = [&](const RationalVector& u, const RationalVector& v) { return dot(u, gram * v); };
  return R(2) * inner(product(e(n, i), e(n, j)), phi.column(w)) -
         inner(bracket(e(n, i), e(n, j)), phi.column(w)) - inner(bracket(e(n, w), e(n, j)), phi.column(i)) -
         inner(bracket(e(n, w), e(n, i)), phi.column(j));
}

inline RationalTensor transform_tensor(const RationalTensor& t, const RationalMatrix& basis) {
  return change_basis(t, basis, matrix_inverse(basis));
}

}  // namespace homlie::testing
