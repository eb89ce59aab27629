#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "su2k/arith/matrix.hpp"

namespace su2k {

/// Element of SU(2) as [[a + ib, c + id], [-c + id, a - ib]], (a, b, c, d) a unit 4-vector.
struct SU2 {
  double a = 1, b = 0, c = 0, d = 0;

  static SU2 identity() { return {}; }

  /// Unitary 2x2 matrix divided by a square root of its determinant.
  static SU2 from_matrix(const CMatrixD& u, double tol = 1e-9) {
    if (u.dim() != 2) throw DomainError("expected a 2x2 matrix");
    if (unitarity_defect(u) > tol) throw DomainError("matrix is not unitary");
    const ComplexD det = det2(u);
    const std::complex<double> root = std::sqrt(std::complex<double>(det.re, det.im));
    const ComplexD s{root.real(), root.imag()};
    const ComplexD alpha = u(0, 0) / s;
    const ComplexD beta = u(0, 1) / s;
    SU2 out{alpha.re, alpha.im, beta.re, beta.im};
    out.normalize();
    return out;
  }

  CMatrixD matrix() const {
    CMatrixD m(2);
    m(0, 0) = {a, b};
    m(0, 1) = {c, d};
    m(1, 0) = {-c, d};
    m(1, 1) = {a, -b};
    return m;
  }

  void normalize() {
    const double n = std::sqrt(a * a + b * b + c * c + d * d);
    a /= n;
    b /= n;
    c /= n;
    d /= n;
  }

  friend SU2 operator*(const SU2& x, const SU2& y) {
    // alpha = a1 a2 - b1 conj(b2), beta = a1 b2 + b1 conj(a2) with alpha = a + ib, beta = c + id
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d, x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b, x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
};

/// sqrt(1 - |tr(U^dagger V)|/2) between two SU(2) elements, computed as min(|u - v|, |u + v|)/sqrt(2).
inline double projective_distance(const SU2& u, const SU2& v) {
  const double m2 = (u.a - v.a) * (u.a - v.a) + (u.b - v.b) * (u.b - v.b) + (u.c - v.c) * (u.c - v.c) + (u.d - v.d) * (u.d - v.d);
  const double p2 = (u.a + v.a) * (u.a + v.a) + (u.b + v.b) * (u.b + v.b) + (u.c + v.c) * (u.c + v.c) + (u.d + v.d) * (u.d + v.d);
  return std::min(1.0, std::sqrt(std::min(m2, p2) / 2));
}

/// Projective distance between unitary 2x2 matrices; zero iff U = e^{i phi} V.
inline double projective_distance(const CMatrixD& u, const CMatrixD& v) {
  return projective_distance(SU2::from_matrix(u), SU2::from_matrix(v));
}

/// Haar-random SU(2) element: a normalized standard Gaussian 4-vector is uniform on the 3-sphere.
inline SU2 haar_random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    SU2 out{normal(rng), normal(rng), normal(rng), normal(rng)};
    if (out.a * out.a + out.b * out.b + out.c * out.c + out.d * out.d < 1e-24) continue;
    out.normalize();
    return out;
  }
}

}  // namespace su2k
