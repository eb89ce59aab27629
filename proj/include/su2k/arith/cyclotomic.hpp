#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNumber is stored in the power basis 1, z, ..., z^{phi(N)-1} of Q(zeta_N), z = e^{2 pi i/N},
// with integer numerators over one positive common denominator. Every value is kept reduced modulo
// the N-th cyclotomic polynomial and with content gcd 1, so two values of the same order are equal
// iff their representations are identical. Operands of different orders are lifted to the lcm.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "su2k/arith/number_theory.hpp"
#include "su2k/arith/real.hpp"
#include "su2k/errors.hpp"

namespace su2k {

namespace mp = boost::multiprecision;

namespace detail {

using Real1024 = mp::number<mp::mpfr_float_backend<310>, mp::et_off>;

// Working precision used to evaluate at a requested precision, with guard bits.
template <class Real>
struct guarded {
  using type = Real128;
};
template <>
struct guarded<Real128> {
  using type = Real256;
};
template <>
struct guarded<Real256> {
  using type = Real512;
};
template <>
struct guarded<Real512> {
  using type = Real1024;
};

template <class Real>
Real from_mpq(const mpq_class& q) {
  if constexpr (std::is_same_v<Real, double>) {
    return q.get_d();
  } else {
    Real x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
  }
}

// Reduces `poly` (low degree first) in place modulo the monic polynomial `modulus`, leaving
// exactly deg(modulus) coefficients.
inline void reduce_mod(std::vector<mpz_class>& poly, const std::vector<mpz_class>& modulus) {
  const std::size_t d = modulus.size() - 1;
  for (std::size_t i = poly.size(); i-- > d;) {
    if (poly[i] == 0) continue;
    mpz_class c = poly[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (modulus[j] != 0) mpz_submul(poly[i - d + j].get_mpz_t(), c.get_mpz_t(), modulus[j].get_mpz_t());
    }
    poly[i] = 0;
  }
  poly.resize(d);
}

// Dense polynomials over Q, low degree first, trailing zeros trimmed.
using QPoly = std::vector<mpq_class>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {QPoly{}, num};
  QPoly quot(num.size() - dd);
  const mpq_class lead = den.back();
  for (std::size_t i = num.size(); i-- > dd;) {
    if (num[i] == 0) continue;
    mpq_class c = num[i] / lead;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

inline QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

}  // namespace detail

class CycNumber {
 public:
  /// Zero in Q.
  CycNumber() : order_(1), num_(1), den_(1) {}

  CycNumber(long value) : order_(1), num_{mpz_class(value)}, den_(1) {}  // NOLINT(google-explicit-constructor)

  explicit CycNumber(const mpq_class& value, int order = 1) : order_(order) {
    check_order(order);
    num_.assign(static_cast<std::size_t>(nt::totient(order)), mpz_class(0));
    mpq_class v = value;
    v.canonicalize();
    num_[0] = v.get_num();
    den_ = v.get_den();
  }

  /// zeta_N^{e mod N}.
  static CycNumber root_of_unity(int order, long long exponent) {
    check_order(order);
    std::vector<mpz_class> poly(static_cast<std::size_t>(order));
    poly[static_cast<std::size_t>(nt::mod_floor(exponent, order))] = 1;
    return from_poly(order, std::move(poly), mpz_class(1));
  }

  /// Sum over (exponent, coefficient) of coefficient * zeta_N^exponent.
  static CycNumber from_terms(int order, const std::vector<std::pair<long long, mpq_class>>& terms) {
    check_order(order);
    mpz_class den = 1;
    for (const auto& [e, c] : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> poly(static_cast<std::size_t>(order));
    for (const auto& [e, c] : terms) {
      poly[static_cast<std::size_t>(nt::mod_floor(e, order))] += c.get_num() * (den / c.get_den());
    }
    return from_poly(order, std::move(poly), std::move(den));
  }

  /// cos(p pi / r) = (zeta_{2r}^p + zeta_{2r}^{-p}) / 2.
  static CycNumber cos_pi_fraction(long long p, long long r) {
    if (r <= 0) throw DomainError("cos_pi_fraction: denominator must be positive");
    const auto order = static_cast<int>(2 * r);
    return from_terms(order, {{p, mpq_class(1, 2)}, {-p, mpq_class(1, 2)}});
  }

  int order() const { return order_; }
  int degree() const { return static_cast<int>(num_.size()); }
  const mpz_class& denominator() const { return den_; }
  const std::vector<mpz_class>& numerators() const { return num_; }

  mpq_class coefficient(int i) const {
    mpq_class c(num_.at(static_cast<std::size_t>(i)), den_);
    c.canonicalize();
    return c;
  }

  std::vector<mpq_class> coefficients() const {
    std::vector<mpq_class> out;
    out.reserve(num_.size());
    for (int i = 0; i < degree(); ++i) out.push_back(coefficient(i));
    return out;
  }

  bool is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
  }

  /// Same value represented in Q(zeta_M); M must be a multiple of order().
  CycNumber lifted(int new_order) const {
    check_order(new_order);
    if (new_order % order_ != 0) throw DomainError("lifted: target order must be a multiple of the current order");
    if (new_order == order_) return *this;
    const int step = new_order / order_;
    std::vector<mpz_class> poly(static_cast<std::size_t>(new_order));
    for (std::size_t i = 0; i < num_.size(); ++i) poly[i * static_cast<std::size_t>(step)] = num_[i];
    return from_poly(new_order, std::move(poly), den_);
  }

  /// Image under the automorphism zeta -> zeta^a, gcd(a, N) = 1.
  CycNumber galois(long long a) const {
    if (std::gcd(nt::mod_floor(a, order_), static_cast<long long>(order_)) != 1)
      throw DomainError("galois: exponent must be coprime to the order");
    std::vector<mpz_class> poly(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < num_.size(); ++i) {
      poly[static_cast<std::size_t>(nt::mod_floor(a * static_cast<long long>(i), order_))] += num_[i];
    }
    return from_poly(order_, std::move(poly), den_);
  }

  /// Complex conjugate (the automorphism zeta -> zeta^{-1}).
  CycNumber conj() const { return galois(-1); }

  CycNumber inverse() const {
    if (is_zero()) throw DomainError("CycNumber: inverse of zero");
    const auto& phi = *nt::cyclotomic_polynomial(order_);
    detail::QPoly f(phi.begin(), phi.end());
    detail::QPoly a;
    a.reserve(num_.size());
    for (const auto& c : num_) a.emplace_back(c);
    detail::trim(a);
    // Extended Euclid: track s with s * a == r (mod f).
    detail::QPoly r0 = f, r1 = a, s0{}, s1{mpq_class(1)};
    while (r1.size() > 1) {
      auto [q, rem] = detail::divmod(r0, r1);
      detail::QPoly s2 = detail::sub_mul(s0, q, s1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.empty()) throw IntegrityError("CycNumber: cyclotomic polynomial shares a factor with a nonzero element");
    const mpq_class scale = mpq_class(den_) / r1[0];
    mpz_class den = 1;
    for (auto& c : s1) {
      c *= scale;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<mpz_class> poly(std::max<std::size_t>(s1.size(), 1));
    for (std::size_t i = 0; i < s1.size(); ++i) poly[i] = s1[i].get_num() * (den / s1[i].get_den());
    return from_poly(order_, std::move(poly), std::move(den));
  }

  /// The rational value if this lies in Q. In the canonical basis an element is rational
  /// exactly when all non-constant coefficients vanish.
  std::optional<mpq_class> rational_value() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) return std::nullopt;
    mpq_class v(num_[0], den_);
    v.canonicalize();
    return v;
  }

  /// Rationality via the Galois characterization: fixed by every zeta -> zeta^a with gcd(a, N) = 1.
  bool galois_invariant() const {
    for (int a = 2; a < order_; ++a) {
      if (std::gcd(a, order_) != 1) continue;
      if (galois(a) != *this) return false;
    }
    return true;
  }

  /// Evaluates at zeta_N = e^{2 pi i / N}. Computation runs with extra guard bits and is rounded
  /// to Real.
  template <class Real>
  Complex<Real> approx() const {
    using Work = typename detail::guarded<Real>::type;
    using std::cos;
    using std::sin;
    const Work two_pi = 2 * pi<Work>();
    Work re = 0, im = 0;
    const Work den = detail::from_mpq<Work>(mpq_class(den_));
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      const Work c = detail::from_mpq<Work>(mpq_class(num_[i])) / den;
      const Work angle = two_pi * static_cast<long>(i) / order_;
      re += c * cos(angle);
      im += c * sin(angle);
    }
    return Complex<Real>::checked(static_cast<Real>(re), static_cast<Real>(im));
  }

  ComplexD approx_double() const { return approx<double>(); }

  /// Exact serialization: "c0 + c1*z^1 + ...; N=order".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < degree(); ++i) {
      const mpq_class c = coefficient(i);
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << c.get_str();
      if (i > 0) os << "*z^" << i;
    }
    if (first) os << "0";
    os << "; N=" << order_;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.to_string(); }

  CycNumber operator-() const {
    CycNumber out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
  }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) { return add(a, b, false); }
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b) { return add(a, b, true); }

  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.order_ != b.order_) {
      const int n = std::lcm(a.order_, b.order_);
      return a.lifted(n) * b.lifted(n);
    }
    const std::size_t d = a.num_.size();
    std::vector<mpz_class> poly(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b.num_[j] != 0) mpz_addmul(poly[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    return from_poly(a.order_, std::move(poly), a.den_ * b.den_);
  }

  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
  CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
    const int n = std::lcm(a.order_, b.order_);
    return a.lifted(n) == b.lifted(n);
  }
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  CycNumber pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNumber result = CycNumber(mpq_class(1), order_);
    CycNumber base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

 private:
  static void check_order(int order) {
    if (order < 1) throw DomainError("cyclotomic order must be positive");
  }

  static CycNumber from_poly(int order, std::vector<mpz_class> poly, mpz_class den) {
    // memoized polynomials are never freed, so a per-thread raw pointer is safe
    thread_local int last_order = 0;
    thread_local const std::vector<mpz_class>* last_phi = nullptr;
    if (order != last_order) {
      last_phi = nt::cyclotomic_polynomial(order).get();
      last_order = order;
    }
    detail::reduce_mod(poly, *last_phi);
    CycNumber out;
    out.order_ = order;
    out.num_ = std::move(poly);
    out.den_ = std::move(den);
    out.normalize();
    return out;
  }

  static CycNumber add(const CycNumber& a, const CycNumber& b, bool subtract) {
    if (a.order_ != b.order_) {
      const int n = std::lcm(a.order_, b.order_);
      return add(a.lifted(n), b.lifted(n), subtract);
    }
    CycNumber out;
    out.order_ = a.order_;
    out.num_.resize(a.num_.size());
    if (a.den_ == b.den_) {
      out.den_ = a.den_;
      for (std::size_t i = 0; i < a.num_.size(); ++i)
        out.num_[i] = subtract ? mpz_class(a.num_[i] - b.num_[i]) : mpz_class(a.num_[i] + b.num_[i]);
    } else {
      mpz_lcm(out.den_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
      const mpz_class fa = out.den_ / a.den_;
      const mpz_class fb = out.den_ / b.den_;
      for (std::size_t i = 0; i < a.num_.size(); ++i)
        out.num_[i] = subtract ? mpz_class(a.num_[i] * fa - b.num_[i] * fb) : mpz_class(a.num_[i] * fa + b.num_[i] * fb);
    }
    out.normalize();
    return out;
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
      if (c == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  int order_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

/// Q-linear dependence among values: returns a nonzero rational vector c with sum c_i x_i = 0,
/// or nullopt if the values are linearly independent over Q.
inline std::optional<std::vector<mpq_class>> rational_relation(const std::vector<CycNumber>& values) {
  if (values.empty()) return std::nullopt;
  int order = 1;
  for (const auto& v : values) order = std::lcm(order, v.order());
  const std::size_t n = values.size();
  std::vector<std::vector<mpq_class>> cols;
  for (const auto& v : values) cols.push_back(v.lifted(order).coefficients());
  const std::size_t rows = cols.front().size();
  // Row-reduce the rows x n matrix whose columns are the coefficient vectors.
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpq_class lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  if (r == n) return std::nullopt;
  // First free column gives a kernel vector.
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::size_t free = 0;
  while (is_pivot[free]) ++free;
  std::vector<mpq_class> kernel(n);
  kernel[free] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) kernel[static_cast<std::size_t>(pivot_col[i])] = -m[i][free];
  return kernel;
}

}  // namespace su2k
