#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "su2k/arith/real.hpp"
#include "su2k/arith/surd.hpp"
#include "su2k/errors.hpp"

namespace su2k {

inline Surd conj_of(const Surd& x) { return x.conj(); }
inline CycNumber conj_of(const CycNumber& x) { return x.conj(); }
template <class Real>
Complex<Real> conj_of(const Complex<Real>& z) {
  return z.conj();
}

/// Dense row-major square matrix over a ring T (Complex<Real>, Surd, CycNumber).
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, T(0L)) {}
  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DomainError("SquareMatrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1L);
    return m;
  }

  static SquareMatrix diagonal(const std::vector<T>& d) {
    SquareMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  const std::vector<T>& data() const { return data_; }

  SquareMatrix adjoint() const {
    SquareMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = conj_of((*this)(r, c));
    return out;
  }

  SquareMatrix transpose() const {
    SquareMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  T trace() const {
    T t(0L);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw DomainError("SquareMatrix: dimension mismatch");
    SquareMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < a.dim_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw DomainError("SquareMatrix: dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw DomainError("SquareMatrix: dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend SquareMatrix operator*(const T& s, SquareMatrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

  SquareMatrix pow(unsigned long long e) const {
    SquareMatrix result = identity(dim_);
    SquareMatrix base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

template <class Real>
using CMatrix = SquareMatrix<Complex<Real>>;
using CMatrixD = CMatrix<double>;
using SurdMatrix = SquareMatrix<Surd>;

/// Largest entrywise modulus of a - b.
template <class Real>
Real max_abs_diff(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  if (a.dim() != b.dim()) throw DomainError("max_abs_diff: dimension mismatch");
  Real m = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const Real d = (a.data()[i] - b.data()[i]).abs();
    if (d > m) m = d;
  }
  return m;
}

/// max |U U^dagger - I|.
template <class Real>
Real unitarity_defect(const CMatrix<Real>& u) {
  return max_abs_diff<Real>(u * u.adjoint(), CMatrix<Real>::identity(u.dim()));
}

template <class Real>
CMatrix<Real> approx_matrix(const SurdMatrix& m) {
  CMatrix<Real> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c).template approx<Real>();
  return out;
}

template <class To, class From>
CMatrix<To> cast_matrix(const CMatrix<From>& m) {
  CMatrix<To> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).template cast<To>();
  return out;
}

/// Determinant of a 2x2 matrix.
template <class T>
T det2(const SquareMatrix<T>& m) {
  if (m.dim() != 2) throw DomainError("det2: matrix is not 2x2");
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

}  // namespace su2k
