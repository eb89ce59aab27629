#pragma once

// Floating-point scalar types and a minimal complex type usable with both
// double and fixed-precision MPFR reals.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "su2k/errors.hpp"

namespace su2k {

namespace mp = boost::multiprecision;

// Precision tiers, in decimal digits for the MPFR backend: 39 -> 130 bits, 78 -> 260 bits, 155 -> 515 bits.
using Real128 = mp::number<mp::mpfr_float_backend<39>, mp::et_off>;
using Real256 = mp::number<mp::mpfr_float_backend<78>, mp::et_off>;
using Real512 = mp::number<mp::mpfr_float_backend<155>, mp::et_off>;

template <class Real>
inline constexpr int precision_bits = 0;
template <>
inline constexpr int precision_bits<double> = 53;
template <>
inline constexpr int precision_bits<Real128> = 128;
template <>
inline constexpr int precision_bits<Real256> = 256;
template <>
inline constexpr int precision_bits<Real512> = 512;

/// Smallest supported tier holding at least `bits` bits; 0 if none.
inline int precision_tier(int bits) {
  if (bits <= 53) return 53;
  if (bits <= 128) return 128;
  if (bits <= 256) return 256;
  if (bits <= 512) return 512;
  return 0;
}

/// Calls `fn.template operator()<Real>()` with the Real type of the tier for `bits`.
template <class Fn>
decltype(auto) dispatch_precision(int bits, Fn&& fn) {
  switch (precision_tier(bits)) {
    case 53:
      return fn.template operator()<double>();
    case 128:
      return fn.template operator()<Real128>();
    case 256:
      return fn.template operator()<Real256>();
    case 512:
      return fn.template operator()<Real512>();
    default:
      throw DomainError("precision " + std::to_string(bits) + " bits exceeds the 512-bit maximum");
  }
}

template <class Real>
Real pi() {
  if constexpr (std::is_same_v<Real, double>) {
    return 3.14159265358979323846264338327950288;
  } else {
    return boost::math::constants::pi<Real>();
  }
}

template <class Real>
bool is_finite(const Real& x) {
  using std::isfinite;
  using mp::isfinite;
  return isfinite(x);
}

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

template <class Real>
std::string to_string(const Real& x, int digits = 17) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

/// Complex number over Real. NaN and infinity are never produced silently: division by zero and
/// non-finite construction via `checked` throw NumericError.
template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex checked(Real r, Real i) {
    if (!is_finite(r) || !is_finite(i)) throw NumericError("non-finite complex value");
    return {std::move(r), std::move(i)};
  }

  /// e^{i * angle}
  static Complex polar(const Real& angle) {
    using std::cos;
    using std::sin;
    return {cos(angle), sin(angle)};
  }

  Complex conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
  Real abs() const {
    using std::sqrt;
    return sqrt(norm2());
  }
  bool finite() const { return is_finite(re) && is_finite(im); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    const Real d = o.norm2();
    if (d == 0) throw NumericError("complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  template <class Other>
  Complex<Other> cast() const {
    return {static_cast<Other>(re), static_cast<Other>(im)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << z.re << (z.im < 0 ? "-" : "+") << (z.im < 0 ? Real(-z.im) : z.im) << "i";
  }
};

using ComplexD = Complex<double>;

}  // namespace su2k
