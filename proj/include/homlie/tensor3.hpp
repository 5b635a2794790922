#pragma once

#include "homlie/matrix.hpp"

#include <cstddef>
#include <vector>

namespace homlie {

/// Structure constants c[k][i][j] of a bilinear map on an n-dimensional space:
/// T(e_i, e_j) = sum_k c[k][i][j] e_k.
template <class S>
class Tensor3 {
public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : m_dim(dim), m_data(dim * dim * dim) {}

  std::size_t dim() const { return m_dim; }

  S& operator()(std::size_t k, std::size_t i, std::size_t j) { return m_data[(k * m_dim + i) * m_dim + j]; }
  const S& operator()(std::size_t k, std::size_t i, std::size_t j) const {
    return m_data[(k * m_dim + i) * m_dim + j];
  }

  /// T(e_i, e_j) as a coordinate vector.
  Vector<S> on_basis(std::size_t i, std::size_t j) const {
    Vector<S> out(m_dim);
    for (std::size_t k = 0; k < m_dim; ++k) out[k] = (*this)(k, i, j);
    return out;
  }

  void set(std::size_t i, std::size_t j, const Vector<S>& value) {
    if (value.size() != m_dim) throw DimensionMismatch("Tensor3::set: size mismatch");
    for (std::size_t k = 0; k < m_dim; ++k) (*this)(k, i, j) = value[k];
  }

  /// Sets T(e_i,e_j) = value and T(e_j,e_i) = -value.
  void set_antisymmetric(std::size_t i, std::size_t j, const Vector<S>& value) {
    set(i, j, value);
    set(j, i, -value);
  }

  /// Bilinear evaluation (u, v) -> sum_{i,j} u_i v_j c[.][i][j].
  Vector<S> operator()(const Vector<S>& u, const Vector<S>& v) const {
    if (u.size() != m_dim || v.size() != m_dim) throw DimensionMismatch("Tensor3 evaluation: size mismatch");
    Vector<S> out(m_dim);
    for (std::size_t i = 0; i < m_dim; ++i) {
      if (homlie::is_zero(u[i])) continue;
      for (std::size_t j = 0; j < m_dim; ++j) {
        if (homlie::is_zero(v[j])) continue;
        const S w = u[i] * v[j];
        for (std::size_t k = 0; k < m_dim; ++k) {
          const S& c = (*this)(k, i, j);
          if (!homlie::is_zero(c)) out[k] += w * c;
        }
      }
    }
    return out;
  }

  /// Matrix of v -> T(e_i, v).
  Matrix<S> left_matrix(std::size_t i) const {
    Matrix<S> m(m_dim, m_dim);
    for (std::size_t k = 0; k < m_dim; ++k)
      for (std::size_t j = 0; j < m_dim; ++j) m(k, j) = (*this)(k, i, j);
    return m;
  }

  /// Matrix of v -> T(u, v).
  Matrix<S> left_matrix(const Vector<S>& u) const {
    Matrix<S> m(m_dim, m_dim);
    for (std::size_t i = 0; i < m_dim; ++i) {
      if (homlie::is_zero(u[i])) continue;
      for (std::size_t k = 0; k < m_dim; ++k)
        for (std::size_t j = 0; j < m_dim; ++j) m(k, j) += u[i] * (*this)(k, i, j);
    }
    return m;
  }

  bool is_zero() const {
    for (const auto& x : m_data)
      if (!homlie::is_zero(x)) return false;
    return true;
  }

  bool is_antisymmetric() const {
    for (std::size_t k = 0; k < m_dim; ++k)
      for (std::size_t i = 0; i < m_dim; ++i)
        for (std::size_t j = i; j < m_dim; ++j)
          if ((*this)(k, i, j) != -(*this)(k, j, i)) return false;
    return true;
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

private:
  std::size_t m_dim = 0;
  std::vector<S> m_data;
};

using RationalTensor = Tensor3<Rational>;
using ComplexTensor = Tensor3<GaussianRational>;

inline ComplexTensor complexify(const RationalTensor& t) {
  ComplexTensor out(t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k)
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = 0; j < t.dim(); ++j) out(k, i, j) = GaussianRational(t(k, i, j));
  return out;
}

/// Change of basis: columns of `basis` are the new basis vectors in old coordinates.
/// Returns the structure constants of the same bilinear map in the new basis.
template <class S>
Tensor3<S> change_basis(const Tensor3<S>& t, const Matrix<S>& basis, const Matrix<S>& basis_inverse) {
  const std::size_t n = t.dim();
  Tensor3<S> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, basis_inverse * t(basis.column(i), basis.column(j)));
  return out;
}

}  // namespace homlie
