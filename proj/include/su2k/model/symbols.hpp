#pragma once

// Quantum integers, R-symbols and quantum-6j F-symbols of SU(2)_k, exact and floating.
//
// Labels are doubled (2j) everywhere. F-symbol arguments follow (j1, j2, j3; j, j12, j23) where
// j12 labels the left splitting tree (j1 j2 -> j12) and j23 the right one (j2 j3 -> j23). In the
// F-move notation F^{abc}_{d;nm}, m is the left label and n the right label, so
// F^{abc}_{d;nm} = f_symbol(a, b, c, d, m, n).

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "su2k/arith/real.hpp"
#include "su2k/arith/surd.hpp"
#include "su2k/model/level.hpp"

namespace su2k {

/// [n]_q as an exact element of Q(zeta_{2(k+2)}); [0] = 0 and [k+2] = 0.
inline CycNumber quantum_integer(const Level& level, int n) {
  if (n < 0) throw DomainError("quantum_integer: n must be >= 0");
  const int order = 2 * level.shift();
  std::vector<std::pair<long long, mpq_class>> terms;
  for (int j = 0; j < n; ++j) terms.emplace_back(n - 1 - 2 * j, mpq_class(1));
  if (terms.empty()) return CycNumber(mpq_class(0), order);
  return CycNumber::from_terms(order, terms);
}

/// [n]_q! with [0]_q! = 1.
inline CycNumber quantum_factorial(const Level& level, int n) {
  CycNumber out(mpq_class(1), 2 * level.shift());
  for (int i = 1; i <= n; ++i) out *= quantum_integer(level, i);
  return out;
}

/// Exact factorials [n]! and their inverses for 0 <= n <= k+1 (all nonzero in that range).
class QuantumTable {
 public:
  explicit QuantumTable(const Level& level) : level_(level), ctx_(level.radicals()) {
    const int m = level.shift();
    const int order = 2 * m;
    fact_.emplace_back(mpq_class(1), order);
    inv_fact_.emplace_back(mpq_class(1), order);
    for (int n = 1; n < m; ++n) {
      fact_.push_back(fact_.back() * ctx_->qint(n));
      inv_fact_.push_back(inv_fact_.back() * ctx_->qint_inverse(n));
    }
  }

  const Level& level() const { return level_; }
  const std::shared_ptr<const RadicalContext>& radicals() const { return ctx_; }

  /// [n]! ; zero once n >= k+2.
  CycNumber factorial(int n) const {
    if (n < 0) throw DomainError("quantum factorial of a negative integer");
    if (n >= level_.shift()) return CycNumber(mpq_class(0), 2 * level_.shift());
    return fact_[static_cast<std::size_t>(n)];
  }
  const CycNumber& inverse_factorial(int n) const {
    if (n < 0 || n >= level_.shift()) throw IntegrityError("quantum factorial [" + std::to_string(n) + "]! is not invertible");
    return inv_fact_[static_cast<std::size_t>(n)];
  }

 private:
  Level level_;
  std::shared_ptr<const RadicalContext> ctx_;
  std::vector<CycNumber> fact_;
  std::vector<CycNumber> inv_fact_;
};

inline std::shared_ptr<const QuantumTable> quantum_table(const Level& level) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const QuantumTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(level.k());
  if (it == cache.end()) it = cache.emplace(level.k(), std::make_shared<const QuantumTable>(level)).first;
  return it->second;
}

namespace detail {

inline void require_admissible(const Level& level, int a, int b, int c, const char* what) {
  if (!admissible(level, a, b, c)) {
    throw DomainError(std::string(what) + ": triple (" + std::to_string(a) + "/2, " + std::to_string(b) + "/2; " +
                      std::to_string(c) + "/2) is not admissible at k=" + std::to_string(level.k()));
  }
}

/// Exponent of zeta_{4(k+2)} in R^{ab}_c, and the sign (-1)^{c-a-b}.
inline std::pair<long long, int> r_symbol_data(int a, int b, int c) {
  // q^{(j(j+1) - j1(j1+1) - j2(j2+1))/2} with j(j+1) = t(t+2)/4 gives q^{E/8} = zeta_{4(k+2)}^{E/2}.
  const long long e = static_cast<long long>(c) * (c + 2) - static_cast<long long>(a) * (a + 2) - static_cast<long long>(b) * (b + 2);
  const int sign = ((c - a - b) / 2) % 2 == 0 ? 1 : -1;
  return {e / 2, sign};
}

struct SixJShape {
  int lo, hi;                 // z range
  std::array<int, 4> lower;   // z - lower[i] >= 0
  std::array<int, 3> upper;   // upper[i] - z >= 0
};

inline SixJShape six_j_shape(int j1, int j2, int j3, int j, int j12, int j23) {
  SixJShape s{};
  s.lower = {(j1 + j2 + j12) / 2, (j12 + j3 + j) / 2, (j2 + j3 + j23) / 2, (j1 + j23 + j) / 2};
  s.upper = {(j1 + j2 + j3 + j) / 2, (j1 + j12 + j3 + j23) / 2, (j2 + j12 + j + j23) / 2};
  s.lo = *std::max_element(s.lower.begin(), s.lower.end());
  s.hi = *std::min_element(s.upper.begin(), s.upper.end());
  return s;
}

}  // namespace detail

/// R^{j1 j2}_j = (-1)^{j-j1-j2} q^{(j(j+1) - j1(j1+1) - j2(j2+1))/2}, exact in Q(zeta_{4(k+2)}).
inline CycNumber r_symbol(const Level& level, AnyonLabel j1, AnyonLabel j2, AnyonLabel j) {
  detail::require_admissible(level, j1.twice_j, j2.twice_j, j.twice_j, "r_symbol");
  const auto [e, sign] = detail::r_symbol_data(j1.twice_j, j2.twice_j, j.twice_j);
  CycNumber r = level.q_quarter_power(e);
  return sign > 0 ? r : -r;
}

/// Quantum 6j F-symbol F^{j1 j2 j3}_{j; j12, j23}, exact.
inline Surd f_symbol(const QuantumTable& table, int j1, int j2, int j3, int j, int j12, int j23) {
  const Level& level = table.level();
  detail::require_admissible(level, j1, j2, j12, "f_symbol");
  detail::require_admissible(level, j12, j3, j, "f_symbol");
  detail::require_admissible(level, j2, j3, j23, "f_symbol");
  detail::require_admissible(level, j1, j23, j, "f_symbol");
  const int order = 2 * level.shift();

  const auto shape = detail::six_j_shape(j1, j2, j3, j, j12, j23);
  CycNumber sum(mpq_class(0), order);
  for (int z = shape.lo; z <= shape.hi; ++z) {
    if (z + 1 >= level.shift()) continue;  // [z+1]! contains [k+2] = 0
    CycNumber term = table.factorial(z + 1);
    for (int a : shape.lower) term *= table.inverse_factorial(z - a);
    for (int b : shape.upper) term *= table.inverse_factorial(b - z);
    sum = (z % 2 == 0) ? sum + term : sum - term;
  }
  if ((j1 + j2 + j3 + j) / 2 % 2 != 0) sum = -sum;

  // Radicand [2j12+1][2j23+1] * prod Delta^2, as exponents of [n].
  std::vector<int> exps(static_cast<std::size_t>(level.shift()), 0);
  auto add_factorial = [&exps](int n, int sign) {
    for (int i = 1; i <= n; ++i) exps[static_cast<std::size_t>(i)] += sign;
  };
  exps[static_cast<std::size_t>(j12 + 1)] += 1;
  exps[static_cast<std::size_t>(j23 + 1)] += 1;
  auto add_delta_squared = [&](int a, int b, int c) {
    add_factorial((-a + b + c) / 2, 1);
    add_factorial((a - b + c) / 2, 1);
    add_factorial((a + b - c) / 2, 1);
    add_factorial((a + b + c) / 2 + 1, -1);
  };
  add_delta_squared(j1, j2, j12);
  add_delta_squared(j12, j3, j);
  add_delta_squared(j2, j3, j23);
  add_delta_squared(j1, j23, j);
  return Surd::monomial(table.radicals(), std::move(sum), exps);
}

inline Surd f_symbol(const Level& level, AnyonLabel j1, AnyonLabel j2, AnyonLabel j3, AnyonLabel j, AnyonLabel j12,
                     AnyonLabel j23) {
  return f_symbol(*quantum_table(level), j1.twice_j, j2.twice_j, j3.twice_j, j.twice_j, j12.twice_j, j23.twice_j);
}

/// The same data computed directly in floating point from sines, independent of the exact path.
template <class Real>
class NumericSymbols {
 public:
  explicit NumericSymbols(const Level& level) : level_(level) {
    using std::sin;
    const int m = level.shift();
    const Real unit = pi<Real>() / m;
    qint_.resize(static_cast<std::size_t>(m) + 1);
    for (int n = 0; n <= m; ++n) qint_[static_cast<std::size_t>(n)] = n == m ? Real(0) : Real(sin(unit * n) / sin(unit));
    fact_.assign(static_cast<std::size_t>(m), Real(1));
    for (int n = 1; n < m; ++n) fact_[static_cast<std::size_t>(n)] = fact_[static_cast<std::size_t>(n) - 1] * qint_[static_cast<std::size_t>(n)];
  }

  const Level& level() const { return level_; }
  const Real& qint(int n) const { return qint_.at(static_cast<std::size_t>(n)); }

  Complex<Real> r(int a, int b, int c) const {
    detail::require_admissible(level_, a, b, c, "r_symbol");
    const auto [e, sign] = detail::r_symbol_data(a, b, c);
    Complex<Real> z = Complex<Real>::polar(2 * pi<Real>() * Real(e) / level_.root_order());
    return sign > 0 ? z : -z;
  }

  Real f(int j1, int j2, int j3, int j, int j12, int j23) const {
    using std::sqrt;
    detail::require_admissible(level_, j1, j2, j12, "f_symbol");
    detail::require_admissible(level_, j12, j3, j, "f_symbol");
    detail::require_admissible(level_, j2, j3, j23, "f_symbol");
    detail::require_admissible(level_, j1, j23, j, "f_symbol");
    const auto shape = detail::six_j_shape(j1, j2, j3, j, j12, j23);
    Real sum = 0;
    for (int z = shape.lo; z <= shape.hi; ++z) {
      if (z + 1 >= level_.shift()) continue;
      Real den = 1;
      for (int a : shape.lower) den *= fact(z - a);
      for (int b : shape.upper) den *= fact(b - z);
      const Real term = fact(z + 1) / den;
      sum += (z % 2 == 0) ? term : Real(-term);
    }
    if ((j1 + j2 + j3 + j) / 2 % 2 != 0) sum = -sum;
    return sum * sqrt(qint(j12 + 1) * qint(j23 + 1)) * delta(j1, j2, j12) * delta(j12, j3, j) * delta(j2, j3, j23) *
           delta(j1, j23, j);
  }

 private:
  const Real& fact(int n) const { return fact_.at(static_cast<std::size_t>(n)); }

  Real delta(int a, int b, int c) const {
    using std::sqrt;
    return sqrt(fact((-a + b + c) / 2) * fact((a - b + c) / 2) * fact((a + b - c) / 2) / fact((a + b + c) / 2 + 1));
  }

  Level level_;
  std::vector<Real> qint_;
  std::vector<Real> fact_;
};

}  // namespace su2k
