#pragma once

// Consistency checks for SU(2)_k: fusion axioms, pentagon and both hexagons, spins, quantum
// dimensions and the S-matrix.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "su2k/arith/small_cyclotomic.hpp"
#include "su2k/model/model_data.hpp"

namespace su2k {

struct AxiomReport {
  AxiomReport(std::string name = {}, int level = 0) : axiom(std::move(name)), k(level) {}

  std::string axiom;
  int k = 0;
  std::size_t checked = 0;
  std::size_t exact = 0;    // equations settled in exact arithmetic
  std::size_t numeric = 0;  // equations settled by a floating residual
  double max_residual = 0;
  bool holds = true;
  std::optional<std::string> counterexample;

  void fail(std::string what) {
    if (holds) counterexample = std::move(what);
    holds = false;
  }
};

inline AxiomReport check_fusion_axioms(const ModelData& model) {
  const int n = model.label_count();
  AxiomReport rep{"fusion", model.level().k()};
  auto name = [](int t) { return AnyonLabel{t}.to_string(); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        ++rep.checked;
        const int nabc = model.fusion(a, b, c);
        if (nabc != 0 && nabc != 1) rep.fail("multiplicity N_{" + name(a) + name(b) + "}^" + name(c) + " not in {0,1}");
        if (nabc != model.fusion(b, a, c)) rep.fail("commutativity fails at (" + name(a) + "," + name(b) + ";" + name(c) + ")");
        // every label is self-dual, so the dual of (a, b; c) is (b, a; c)
        if (nabc != model.fusion(b, a, c)) rep.fail("duality fails at (" + name(a) + "," + name(b) + ";" + name(c) + ")");
      }
      if (model.fusion(0, a, b) != (a == b ? 1 : 0)) rep.fail("unit law fails at (" + name(a) + "," + name(b) + ")");
      if (model.fusion(a, b, 0) != (a == b ? 1 : 0)) rep.fail("N_{ab}^1 = delta fails at (" + name(a) + "," + name(b) + ")");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int lhs = 0, rhs = 0;
          for (int p = 0; p < n; ++p) lhs += model.fusion(a, b, p) * model.fusion(p, c, d);
          for (int q = 0; q < n; ++q) rhs += model.fusion(a, q, d) * model.fusion(b, c, q);
          ++rep.checked;
          if (lhs != rhs) rep.fail("associativity fails at (" + name(a) + "," + name(b) + "," + name(c) + ";" + name(d) + ")");
        }
  rep.exact = rep.checked;
  return rep;
}

namespace detail {

/// out[a][b] lists the c with (a, b; c) admissible.
inline std::vector<std::vector<std::vector<int>>> fusion_lists(const Level& level) {
  const int n = level.label_count();
  std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (admissible(level, a, b, c)) out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].push_back(c);
  return out;
}

/// Calls fn(t, xs) for every pentagon tuple t = (a,b,c,d,e,m,n,y,z); xs are the admissible x of
/// the right-hand sum. Tuples sharing (a,b,c,d,e,m,n,y) are visited consecutively, z innermost.
template <class Fn>
void for_each_pentagon(const Level& level, Fn&& fn) {
  const int n_labels = level.label_count();
  const auto fl = fusion_lists(level);
  auto at = [&fl](int a, int b) -> const std::vector<int>& { return fl[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  std::vector<int> xs;
  for (int a = 0; a < n_labels; ++a)
    for (int b = 0; b < n_labels; ++b)
      for (int m : at(a, b))
        for (int c = 0; c < n_labels; ++c)
          for (int n : at(m, c))
            for (int d = 0; d < n_labels; ++d)
              for (int e : at(n, d))
                for (int y : at(a, e)) {
                  for (int z : at(c, d)) {
                    if (!admissible(level, m, z, e) || !admissible(level, b, z, y)) continue;
                    xs.clear();
                    for (int x : at(b, c))
                      if (admissible(level, a, x, n) && admissible(level, x, d, y)) xs.push_back(x);
                    fn(std::array<int, 9>{a, b, c, d, e, m, n, y, z}, xs);
                  }
                }
}

/// Calls fn(t, xs) for every hexagon tuple t = (a,b,c,d,m,n).
template <class Fn>
void for_each_hexagon(const Level& level, Fn&& fn) {
  const int n_labels = level.label_count();
  const auto fl = fusion_lists(level);
  std::vector<int> xs;
  for (int a = 0; a < n_labels; ++a)
    for (int b = 0; b < n_labels; ++b)
      for (int c = 0; c < n_labels; ++c)
        for (int d = 0; d < n_labels; ++d)
          for (int m : fl[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
            if (!admissible(level, m, c, d)) continue;
            for (int n : fl[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) {
              if (!admissible(level, b, n, d)) continue;
              xs.clear();
              for (int x : fl[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                if (admissible(level, a, x, d)) xs.push_back(x);
              fn(std::array<int, 6>{a, b, c, d, m, n}, xs);
            }
          }
}

/// F^{mcd}_{e;zn} F^{abz}_{e;ym} - sum_x F^{abc}_{n;xm} F^{axd}_{e;yn} F^{bcd}_{y;zx}.
template <class Source>
auto pentagon_defect(const Source& s, const std::array<int, 9>& t, const std::vector<int>& xs) {
  const auto [a, b, c, d, e, m, n, y, z] = t;
  auto value = s.f(m, c, d, e, n, z) * s.f(a, b, z, e, m, y);
  for (int x : xs) value -= s.f(a, b, c, n, m, x) * s.f(a, x, d, e, n, y) * s.f(b, c, d, y, x, z);
  return value;
}

/// R^{ba}_m F^{bac}_{d;nm} R^{ca}_n - sum_x F^{abc}_{d;xm} R^{xa}_d F^{bca}_{d;nx}, and the same with
/// every R replaced by the inverse of its transpose when inverse is set.
template <class Source>
auto hexagon_defect(const Source& s, const std::array<int, 6>& t, const std::vector<int>& xs, bool inverse) {
  const auto [a, b, c, d, m, n] = t;
  auto r = [&](int p, int q, int u) { return inverse ? s.r_inverse(q, p, u) : s.r(p, q, u); };
  auto value = r(b, a, m) * s.f(b, a, c, d, m, n) * r(c, a, n);
  for (int x : xs) value -= s.f(a, b, c, d, m, x) * r(x, a, d) * s.f(b, c, a, d, x, n);
  return value;
}

struct ExactSource {
  const ModelData& model;
  const FTable& table;
  explicit ExactSource(const ModelData& m) : model(m), table(m.f_table()) {}
  const Surd& f(int j1, int j2, int j3, int j, int j12, int j23) const { return table(j1, j2, j3, j, j12, j23); }
  Surd r(int a, int b, int c) const { return Surd(model.r(a, b, c)); }
  Surd r_inverse(int a, int b, int c) const { return Surd(model.r(a, b, c).conj()); }
};

/// The exact F table re-encoded with machine-word coefficients, for the pentagon inner loop.
class FastSource {
 public:
  struct Term {
    std::uint64_t mask = 0;
    SmallCyc coeff;
    bool zero = true;
  };

  explicit FastSource(const ExactSource& exact)
      : exact_(exact), order_(2 * exact.model.level().shift()), zero_(SmallCyc::zero(order_)) {}

  const SmallCyc& zero() const { return zero_; }

  const Term& f(int j1, int j2, int j3, int j, int j12, int j23) {
    const std::uint32_t key = pack(j1, j2, j3, j, j12, j23);
    auto it = f_.find(key);
    if (it != f_.end()) return it->second;
    const Surd& s = exact_.f(j1, j2, j3, j, j12, j23);
    Term t;
    t.coeff = zero_;
    if (!s.terms().empty()) {
      if (s.terms().size() != 1) throw SmallCyc::Overflow{};
      const auto& term = s.terms().front();
      t.mask = term.mask;
      t.coeff = SmallCyc::from(term.coeff.order() == order_ ? term.coeff : term.coeff.lifted(order_));
      t.zero = false;
    }
    return f_.emplace(key, std::move(t)).first->second;
  }

  Term multiply(const Term& a, const Term& b) {
    Term out;
    if (a.zero || b.zero) {
      out.coeff = zero_;
      return out;
    }
    out.zero = false;
    out.mask = a.mask ^ b.mask;
    out.coeff = a.coeff * b.coeff;
    if (const std::uint64_t common = a.mask & b.mask; common != 0) out.coeff = out.coeff * radicand(common);
    return out;
  }

 private:
  static std::uint32_t pack(int a, int b, int c, int d, int e, int f) {
    auto u = [](int x) { return static_cast<std::uint32_t>(x) & 31U; };
    return u(a) | u(b) << 5 | u(c) << 10 | u(d) << 15 | u(e) << 20 | u(f) << 25;
  }

  const SmallCyc& radicand(std::uint64_t mask) {
    auto it = radicands_.find(mask);
    if (it != radicands_.end()) return it->second;
    const CycNumber& value = exact_.model.level().radicals()->radicand_value(mask);
    return radicands_.emplace(mask, SmallCyc::from(value.order() == order_ ? value : value.lifted(order_))).first->second;
  }

  const ExactSource& exact_;
  int order_;
  SmallCyc zero_;
  std::unordered_map<std::uint32_t, Term> f_;
  std::unordered_map<std::uint64_t, SmallCyc> radicands_;
};

/// F and R tables evaluated in floating point straight from the sine formulas.
template <class Real>
class NumericSource {
 public:
  explicit NumericSource(const Level& level) : symbols_(level) {
    const int n = level.label_count();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (admissible(level, a, b, c)) r_.emplace(key(a, b, c, 0, 0, 0), symbols_.r(a, b, c));
          for (int d = 0; d < n; ++d)
            for (int m = 0; m < n; ++m)
              for (int e = 0; e < n; ++e)
                if (admissible(level, a, b, m) && admissible(level, m, c, d) && admissible(level, b, c, e) &&
                    admissible(level, a, e, d))
                  f_.emplace(key(a, b, c, d, m, e), Complex<Real>(symbols_.f(a, b, c, d, m, e)));
        }
  }
  const Complex<Real>& f(int j1, int j2, int j3, int j, int j12, int j23) const { return f_.at(key(j1, j2, j3, j, j12, j23)); }
  const Complex<Real>& r(int a, int b, int c) const { return r_.at(key(a, b, c, 0, 0, 0)); }
  Complex<Real> r_inverse(int a, int b, int c) const { return r(a, b, c).conj(); }

 private:
  static std::uint32_t key(int a, int b, int c, int d, int e, int f) {
    auto u = [](int x) { return static_cast<std::uint32_t>(x) & 31U; };
    return u(a) | u(b) << 5 | u(c) << 10 | u(d) << 15 | u(e) << 20 | u(f) << 25;
  }
  NumericSymbols<Real> symbols_;
  std::unordered_map<std::uint32_t, Complex<Real>> f_;
  std::unordered_map<std::uint32_t, Complex<Real>> r_;
};

template <std::size_t N>
std::string tuple_text(const char* names, const std::array<int, N>& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < N; ++i) os << (i ? " " : "") << names[i] << "=" << AnyonLabel{t[i]}.to_string();
  return os.str();
}

/// Settles one exact defect; where() names the equation on failure. Tries an exact zero test first, then a 256-bit residual if the radicals do
/// not reduce.
template <class Where>
void settle_exact(AxiomReport& rep, const Surd& defect, double tol, const Where& where) {
  ++rep.checked;
  if (defect.is_structurally_zero()) {
    ++rep.exact;
    return;
  }
  if (auto zero = defect.exactly_zero()) {
    ++rep.exact;
    if (!*zero) {
      rep.max_residual = std::max(rep.max_residual, defect.approx<double>().abs());
      rep.fail(where());
    }
    return;
  }
  ++rep.numeric;
  const double r = to_double(defect.approx<Real256>().abs());
  rep.max_residual = std::max(rep.max_residual, r);
  if (!(r < tol)) rep.fail(where());
}

template <class Real>
void settle_numeric(AxiomReport& rep, const Complex<Real>& defect, const Real& tol, const std::string_view where_names,
                    const auto& tuple) {
  ++rep.checked;
  ++rep.numeric;
  const Real r = defect.abs();
  if (!is_finite(r)) throw NumericError("non-finite residual in " + rep.axiom);
  rep.max_residual = std::max(rep.max_residual, to_double(r));
  if (!(r < tol)) rep.fail(tuple_text(where_names.data(), tuple));
}

}  // namespace detail

/// Pentagon equations in exact arithmetic. Defects that stay a sum of three or more distinct
/// radicals are evaluated at 256 bits against tol.
inline AxiomReport verify_pentagon_exact(const ModelData& model, double tol = 1e-40) {
  AxiomReport rep{"pentagon", model.level().k()};
  const detail::ExactSource src(model);
  detail::FastSource fast(src);
  using Term = detail::FastSource::Term;
  // F^{abc}_{n;xm} F^{axd}_{e;yn} does not depend on z; keep it across the innermost loop.
  std::array<int, 8> cached_key{-1};
  std::vector<std::pair<int, Term>> partial;
  std::vector<Term> sum;
  auto accumulate = [&sum, &fast](const Term& t, bool subtract) {
    if (t.zero) return;
    for (auto& s : sum) {
      if (s.mask != t.mask) continue;
      s.coeff = subtract ? s.coeff - t.coeff : s.coeff + t.coeff;
      return;
    }
    sum.push_back(t);
    if (subtract) sum.back().coeff = fast.zero() - t.coeff;
  };
  detail::for_each_pentagon(model.level(), [&](const std::array<int, 9>& t, const std::vector<int>& xs) {
    const auto [a, b, c, d, e, m, n, y, z] = t;
    try {
      const std::array<int, 8> key{a, b, c, d, e, m, n, y};
      if (key != cached_key) {
        cached_key = {-1};
        partial.clear();
        for (int x : xs) partial.emplace_back(x, fast.multiply(fast.f(a, b, c, n, m, x), fast.f(a, x, d, e, n, y)));
        cached_key = key;
      }
      sum.clear();
      accumulate(fast.multiply(fast.f(m, c, d, e, n, z), fast.f(a, b, z, e, m, y)), false);
      for (int x : xs) {
        auto it = std::find_if(partial.begin(), partial.end(), [x](const auto& p) { return p.first == x; });
        if (it == partial.end()) {
          partial.emplace_back(x, fast.multiply(fast.f(a, b, c, n, m, x), fast.f(a, x, d, e, n, y)));
          it = std::prev(partial.end());
        }
        accumulate(fast.multiply(it->second, fast.f(b, c, d, y, x, z)), true);
      }
      if (std::all_of(sum.begin(), sum.end(), [](const Term& s) { return s.coeff.is_zero(); })) {
        ++rep.checked;
        ++rep.exact;
        return;
      }
    } catch (const SmallCyc::Overflow&) {
      cached_key = {-1};
      partial.clear();
    }
    detail::settle_exact(rep, detail::pentagon_defect(src, t, xs), tol, [&] { return detail::tuple_text("abcdemnyz", t); });
  });
  return rep;
}

/// Both hexagon equations in exact arithmetic.
inline AxiomReport verify_hexagon_exact(const ModelData& model, double tol = 1e-40) {
  AxiomReport rep{"hexagon", model.level().k()};
  const detail::ExactSource src(model);
  detail::for_each_hexagon(model.level(), [&](const std::array<int, 6>& t, const std::vector<int>& xs) {
    for (bool inverse : {false, true}) {
      const Surd defect = detail::hexagon_defect(src, t, xs, inverse);
      if (defect.is_structurally_zero()) {
        ++rep.checked;
        ++rep.exact;
        continue;
      }
      detail::settle_exact(rep, defect, tol, [&] { return std::string(inverse ? "inverse " : "") + detail::tuple_text("abcdmn", t); });
    }
  });
  return rep;
}

/// Pentagon equations in floating point at the precision of Real; every equation must have
/// residual below tol.
template <class Real>
AxiomReport verify_pentagon_numeric(const Level& level, const Real& tol) {
  AxiomReport rep{"pentagon", level.k()};
  const detail::NumericSource<Real> src(level);
  detail::for_each_pentagon(level, [&](const std::array<int, 9>& t, const std::vector<int>& xs) {
    detail::settle_numeric<Real>(rep, detail::pentagon_defect(src, t, xs), tol, "abcdemnyz", t);
  });
  return rep;
}

template <class Real>
AxiomReport verify_hexagon_numeric(const Level& level, const Real& tol) {
  AxiomReport rep{"hexagon", level.k()};
  const detail::NumericSource<Real> src(level);
  detail::for_each_hexagon(level, [&](const std::array<int, 6>& t, const std::vector<int>& xs) {
    for (bool inverse : {false, true}) detail::settle_numeric<Real>(rep, detail::hexagon_defect(src, t, xs, inverse), tol, "abcdmn", t);
  });
  return rep;
}

/// Largest eigenvalue of the fusion matrix (N_t)_{bc} = N_{tb}^c, by power iteration on N_t + I.
inline double perron_frobenius(const ModelData& model, int t) {
  const int n = model.label_count();
  std::vector<double> v(static_cast<std::size_t>(n), 1.0), w(static_cast<std::size_t>(n));
  double lambda = 0;
  for (int iter = 0; iter < 100000; ++iter) {
    double norm = 0;
    for (int b = 0; b < n; ++b) {
      double s = v[static_cast<std::size_t>(b)];
      for (int c = 0; c < n; ++c) s += model.fusion(t, b, c) * v[static_cast<std::size_t>(c)];
      w[static_cast<std::size_t>(b)] = s;
      norm = std::max(norm, std::abs(s));
    }
    for (auto& x : w) x /= norm;
    double change = 0;
    for (int b = 0; b < n; ++b) change = std::max(change, std::abs(w[static_cast<std::size_t>(b)] - v[static_cast<std::size_t>(b)]));
    v.swap(w);
    const double next = norm - 1.0;
    if (change < 1e-15 && std::abs(next - lambda) < 1e-15) return next;
    lambda = next;
  }
  return lambda;
}

struct ModularReport {
  std::vector<double> perron_frobenius;
  CycNumber global_dimension_squared;
  std::size_t spin_conditions = 0;
};

/// Checks theta_c / (theta_a theta_b) = R^{ab}_c R^{ba}_c on every admissible triple, the Perron-Frobenius
/// dimensions against [2j+1] within 1e-10, and S S^dagger = D^2 I exactly. Throws IntegrityError on
/// the first violation.
inline ModularReport validate_spins_dims_smatrix(const ModelData& model) {
  const int n = model.label_count();
  const Level& level = model.level();
  ModularReport rep;
  if (model.spin(0) != CycNumber(1L)) throw IntegrityError("theta_0 != 1");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!admissible(level, a, b, c)) continue;
        const CycNumber lhs = model.spin(c) * model.spin(a).conj() * model.spin(b).conj();
        if (lhs != model.r(a, b, c) * model.r(b, a, c)) {
          throw IntegrityError("spin condition fails at (" + AnyonLabel{a}.to_string() + "," + AnyonLabel{b}.to_string() + ";" +
                               AnyonLabel{c}.to_string() + ")");
        }
        ++rep.spin_conditions;
      }
  for (int t = 0; t < n; ++t) {
    const double pf = perron_frobenius(model, t);
    const double expected = model.dim(t).approx_double().re;
    if (!(expected > 0) || std::abs(pf - expected) > 1e-10)
      throw IntegrityError("quantum dimension of " + AnyonLabel{t}.to_string() + " disagrees with the Perron-Frobenius eigenvalue");
    rep.perron_frobenius.push_back(pf);
  }
  rep.global_dimension_squared = model.global_dimension_squared();
  const auto& s = model.s_matrix();
  const auto product = s * s.adjoint();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const CycNumber expected = a == b ? rep.global_dimension_squared : CycNumber(0L);
      if (product(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) != expected)
        throw IntegrityError("S-matrix is not invertible: S S^dagger != D^2 I");
    }
  return rep;
}

}  // namespace su2k
