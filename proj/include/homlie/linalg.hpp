#pragma once

#include "homlie/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace homlie {

/// Fraction-free (Bareiss) determinant with first-nonzero pivoting.
template <class S>
S determinant(const Matrix<S>& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return S(1);
  Matrix<S> m = a;
  S previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return S(0);
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = S(0);
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Reduced row echelon form together with its pivot columns.
template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free forward elimination followed by back substitution to RREF.
template <class S>
Echelon<S> row_reduce(const Matrix<S>& a) {
  Matrix<S> m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  S previous(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / previous;
      }
      m(i, c) = S(0);
    }
    previous = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  // Normalize pivots and clear above them.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    const S pivot = m(k, c);
    for (std::size_t j = c; j < cols; ++j) m(k, j) /= pivot;
    for (std::size_t i = 0; i < k; ++i) {
      const S factor = m(i, c);
      if (is_zero(factor)) continue;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  for (std::size_t i = pivots.size(); i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = S(0);
  return {std::move(m), std::move(pivots)};
}

template <class S>
std::size_t rank(const Matrix<S>& a) {
  return row_reduce(a).rank();
}

/// Basis of the kernel {x : A x = 0}, one vector per free column, in column order.
template <class S>
std::vector<Vector<S>> nullspace(const Matrix<S>& a) {
  const Echelon<S> e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector<S>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<S> x(a.cols());
    x[free] = S(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class S>
struct SolveResult {
  enum class Status { Unique, NoSolution, NonUnique };
  Status status = Status::NoSolution;
  /// The solution when Unique; a particular solution when NonUnique.
  Vector<S> solution;
  /// A nontrivial kernel vector when NonUnique.
  Vector<S> kernel;

  bool unique() const { return status == Status::Unique; }
};

/// Exact solve of the square system A x = b.
template <class S>
SolveResult<S> solve_linear(const Matrix<S>& a, const Vector<S>& b) {
  if (!a.is_square()) throw DimensionMismatch("solve_linear: matrix is not square");
  if (a.rows() != b.size()) throw DimensionMismatch("solve_linear: right-hand side size mismatch");
  const std::size_t n = a.rows();
  Matrix<S> augmented(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = b[r];
  }
  const Echelon<S> e = row_reduce(augmented);
  SolveResult<S> result;
  if (!e.pivots.empty() && e.pivots.back() == n) {
    result.status = SolveResult<S>::Status::NoSolution;
    return result;
  }
  Vector<S> x(n);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, n);
  result.solution = std::move(x);
  if (e.rank() < n) {
    result.status = SolveResult<S>::Status::NonUnique;
    result.kernel = nullspace(a).front();
  } else {
    result.status = SolveResult<S>::Status::Unique;
  }
  return result;
}

/// Throws SingularMatrix when A is not invertible.
template <class S>
Matrix<S> matrix_inverse(const Matrix<S>& a) {
  if (!a.is_square()) throw DimensionMismatch("matrix_inverse: matrix is not square");
  const std::size_t n = a.rows();
  Matrix<S> augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n + r) = S(1);
  }
  const Echelon<S> e = row_reduce(augmented);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("matrix_inverse: matrix is singular");
  Matrix<S> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

/// True when v lies in the span of the given vectors.
template <class S>
bool in_span(const std::vector<Vector<S>>& spanning, const Vector<S>& v) {
  if (spanning.empty()) return is_zero_vector(v);
  const Matrix<S> base = Matrix<S>::from_columns(spanning, v.size());
  std::vector<Vector<S>> extended = spanning;
  extended.push_back(v);
  return rank(Matrix<S>::from_columns(extended, v.size())) == rank(base);
}

/// Greedy maximal independent subset, preserving input order.
template <class S>
std::vector<Vector<S>> independent_subset(const std::vector<Vector<S>>& candidates) {
  std::vector<Vector<S>> kept;
  for (const auto& v : candidates) {
    if (is_zero_vector(v)) continue;
    if (!kept.empty() && in_span(kept, v)) continue;
    kept.push_back(v);
  }
  return kept;
}

}  // namespace homlie
