#pragma once

#include "homlie/errors.hpp"
#include "homlie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace homlie {

template <class S>
using Vector = std::vector<S>;

/// Dense row-major matrix over an exact field. Matrices act on column vectors:
/// column j holds the image of the j-th basis vector.
template <class S>
class Matrix {
public:
  using Scalar = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    m_rows = rows.size();
    m_cols = m_rows == 0 ? 0 : rows.begin()->size();
    m_data.reserve(m_rows * m_cols);
    for (const auto& row : rows) {
      if (row.size() != m_cols) throw DimensionMismatch("Matrix: ragged initializer");
      m_data.insert(m_data.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix diagonal(const Vector<S>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  static Matrix from_columns(const std::vector<Vector<S>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw DimensionMismatch("Matrix::from_columns: length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }
  bool is_square() const { return m_rows == m_cols; }

  S& operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

  Vector<S> column(std::size_t c) const {
    Vector<S> v(m_rows);
    for (std::size_t r = 0; r < m_rows; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vector<S> row(std::size_t r) const {
    return Vector<S>(m_data.begin() + static_cast<std::ptrdiff_t>(r * m_cols),
                     m_data.begin() + static_cast<std::ptrdiff_t>((r + 1) * m_cols));
  }

  Matrix transpose() const {
    Matrix t(m_cols, m_rows);
    for (std::size_t r = 0; r < m_rows; ++r)
      for (std::size_t c = 0; c < m_cols; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : m_data)
      if (!homlie::is_zero(x)) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < m_rows; ++r)
      for (std::size_t c = r + 1; c < m_cols; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  bool is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < m_rows; ++r)
      for (std::size_t c = r; c < m_cols; ++c)
        if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < m_data.size(); ++k) m_data[k] += o.m_data[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < m_data.size(); ++k) m_data[k] -= o.m_data[k];
    return *this;
  }

  Matrix& operator*=(const S& s) {
    for (auto& x : m_data) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.m_data) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.m_cols != b.m_rows) throw DimensionMismatch("Matrix product: inner dimensions differ");
    Matrix p(a.m_rows, b.m_cols);
    for (std::size_t r = 0; r < a.m_rows; ++r)
      for (std::size_t k = 0; k < a.m_cols; ++k) {
        const S& x = a(r, k);
        if (homlie::is_zero(x)) continue;
        for (std::size_t c = 0; c < b.m_cols; ++c) p(r, c) += x * b(k, c);
      }
    return p;
  }

  friend Vector<S> operator*(const Matrix& a, const Vector<S>& v) {
    if (a.m_cols != v.size()) throw DimensionMismatch("Matrix-vector product: size mismatch");
    Vector<S> out(a.m_rows);
    for (std::size_t r = 0; r < a.m_rows; ++r)
      for (std::size_t c = 0; c < a.m_cols; ++c) out[r] += a(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
  }

private:
  void require_same_shape(const Matrix& o) const {
    if (m_rows != o.m_rows || m_cols != o.m_cols) throw DimensionMismatch("Matrix: shape mismatch");
  }

  std::size_t m_rows = 0;
  std::size_t m_cols = 0;
  std::vector<S> m_data;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<GaussianRational>;
using RationalVector = Vector<Rational>;
using ComplexVector = Vector<GaussianRational>;

// Vector helpers.

template <class S>
Vector<S> basis_vector(std::size_t n, std::size_t i) {
  Vector<S> v(n);
  v[i] = S(1);
  return v;
}

template <class S>
Vector<S> operator+(Vector<S> a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

template <class S>
Vector<S> operator-(Vector<S> a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference: size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

template <class S>
Vector<S> operator-(Vector<S> a) {
  for (auto& x : a) x = -x;
  return a;
}

template <class S>
Vector<S> scale(const S& s, Vector<S> v) {
  for (auto& x : v) x *= s;
  return v;
}

template <class S>
S dot(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  S acc{};
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

template <class S>
bool is_zero_vector(const Vector<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class S>
Vector<S> conj(Vector<S> v) {
  for (auto& x : v) x = conj(x);
  return v;
}

template <class S>
Matrix<S> conj(const Matrix<S>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = conj(m(r, c));
  return out;
}

inline ComplexVector complexify(const RationalVector& v) { return ComplexVector(v.begin(), v.end()); }

inline ComplexMatrix complexify(const RationalMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational(m(r, c));
  return out;
}

template <class S>
std::string to_string(const Vector<S>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += to_string(v[k]);
  }
  return out + ")";
}

template <class S>
std::string to_string(const Matrix<S>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace homlie
