#pragma once

// Built-in regression suite of published closed forms and special values.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "su2k/model/axioms.hpp"
#include "su2k/universality/certificate.hpp"
#include "su2k/universality/conway_jones.hpp"

namespace su2k {

struct RegressionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline RegressionCheck run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string failure = body();
    return {name, failure.empty(), failure};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

inline std::complex<double> to_std(const ComplexD& z) { return {z.re, z.im}; }

}  // namespace detail

/// Closed-form F and rho(sigma_2) on the dense qubit, both within 1e-12 of the generic machinery.
inline std::string check_qubit_closed_forms(const Level& level) {
  using C = std::complex<double>;
  const double two_pi = 2 * pi<double>();
  const C q = std::polar(1.0, two_pi / level.shift());
  const C q4 = std::polar(1.0, two_pi / (4.0 * level.shift()));
  const double s = std::sqrt(1 + 2 * std::cos(two_pi / level.shift()));
  const C pref = std::sqrt(q) / (q + 1.0);
  const C f[2][2] = {{-pref, pref * s}, {pref * s, pref}};
  const C pref2 = q4 / (1.0 + q);
  const C sigma2[2][2] = {{pref2 * q, pref2 * s}, {pref2 * s, -pref2 / q}};
  const C sigma1[2][2] = {{-1.0 / (q4 * q4 * q4), 0}, {0, q4}};
  const QubitData d = qubit_data(level);
  const auto rho = dense_qubit_rep(level);
  double worst = 0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      worst = std::max(worst, std::abs(detail::to_std(d.f(r, c).approx<double>()) - f[r][c]));
      worst = std::max(worst, std::abs(detail::to_std(rho.sigma2(r, c).approx<double>()) - sigma2[r][c]));
      worst = std::max(worst, std::abs(detail::to_std(rho.sigma1(r, c).approx<double>()) - sigma1[r][c]));
    }
  if (worst > 1e-12) return "deviation " + std::to_string(worst) + " at k=" + std::to_string(level.k());
  if (!(d.f(0, 1) == d.f(1, 0))) return "F not symmetric at k=" + std::to_string(level.k());
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      if (!(d.f(r, c).conj() == d.f(r, c))) return "F not real at k=" + std::to_string(level.k());
  if (!(d.f * d.f == SurdMatrix::identity(2))) return "F not involutory at k=" + std::to_string(level.k());
  return {};
}

/// Exact closed forms of tr A, tr B and tr W as rational functions of q.
inline std::string check_trace_closed_forms(const Level& level) {
  const CycNumber q = level.q();
  const CycNumber one(1L), two(2L);
  const ABW abw = build_ABW(level);
  const CycNumber tr_a = -((q - one) * q + one) * (q * q + one) / (q * q);
  const CycNumber tr_b = (q * q + one) * ((q - one) * q * (q * q + one) + one) / q.pow(3);
  const CycNumber tr_w = -((q - one) * q + one) * (q.pow(4) - two * q.pow(3) - two * q + one) / q.pow(3);
  if (radical_free_trace(abw.a) != tr_a) return "tr A closed form fails at k=" + std::to_string(level.k());
  if (radical_free_trace(abw.b) != tr_b) return "tr B closed form fails at k=" + std::to_string(level.k());
  if (radical_free_trace(abw.w) != tr_w) return "tr W closed form fails at k=" + std::to_string(level.k());
  return {};
}

/// Exact cos(theta_k) of A for k = 3, 5, 6, 10 in radicals and cosines.
inline std::vector<std::pair<int, CycNumber>> special_cos_theta_values() {
  const auto z5 = [](long e) { return CycNumber::root_of_unity(5, e); };
  const CycNumber sqrt5 = z5(1) - z5(2) - z5(3) + z5(4);
  const CycNumber sqrt2 = CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, -1);
  const CycNumber sqrt3 = CycNumber::root_of_unity(12, 1) + CycNumber::root_of_unity(12, -1);
  const CycNumber half(mpq_class(1, 2));
  return {{3, (sqrt5 - CycNumber(2L)) * half},
          {5, CycNumber::cos_pi_fraction(3, 7) + CycNumber::cos_pi_fraction(2, 7) - CycNumber(1L)},
          {6, (sqrt2 - CycNumber(2L)) * half},
          {10, (sqrt3 - CycNumber(3L)) * half}};
}

inline std::vector<RegressionCheck> run_regression_suite(int k_max = 30) {
  std::vector<RegressionCheck> out;
  auto add = [&](const std::string& name, const std::function<std::string()>& body) { out.push_back(detail::run_check(name, body)); };
  auto sweep = [&](int from, const std::function<std::string(const Level&)>& body) {
    return [=]() -> std::string {
      for (int k = from; k <= k_max; ++k)
        if (auto f = body(Level(k)); !f.empty()) return f;
      return {};
    };
  };

  add("SU(2)_k has k+1 anyon types", sweep(0, [](const Level& l) {
        return static_cast<int>(labels(l).size()) == l.k() + 1 ? "" : "wrong label count at k=" + std::to_string(l.k());
      }));
  add("1/2 x 1/2 = 0 + 1 at k=3", [] {
    return fusion(Level(3), {1}, {1}) == std::vector<AnyonLabel>{{0}, {2}} ? "" : "wrong fusion";
  });
  add("1/2 x 1 = 1/2 + 3/2 at k=3", [] {
    return fusion(Level(3), {1}, {2}) == std::vector<AnyonLabel>{{1}, {3}} ? "" : "wrong fusion";
  });
  add("0 x j = j", sweep(0, [](const Level& l) -> std::string {
        for (int j = 0; j <= l.k(); ++j)
          if (fusion(l, {0}, {j}) != std::vector<AnyonLabel>{{j}}) return "0 x j != j at k=" + std::to_string(l.k());
        return {};
      }));
  add("theta_0 = 1, k=2 dim(1/2) = sqrt 2, k=3 dim(1) = golden ratio", []() -> std::string {
    const ModelData m2{Level(2)};
    const ModelData m3{Level(3)};
    if (m2.spin(0) != CycNumber(1L)) return "theta_0 != 1";
    const CycNumber sqrt2 = CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, -1);
    if (m2.dim(1) != sqrt2) return "dim(1/2) != sqrt 2 at k=2";
    const CycNumber sqrt5 = CycNumber::root_of_unity(5, 1) - CycNumber::root_of_unity(5, 2) - CycNumber::root_of_unity(5, 3) + CycNumber::root_of_unity(5, 4);
    if (m3.dim(2) != (CycNumber(1L) + sqrt5) * CycNumber(mpq_class(1, 2))) return "dim(1) != golden ratio at k=3";
    return {};
  });
  add("R^{1/2 1/2}_0 = -q^{-3/4}, R^{1/2 1/2}_1 = q^{1/4}", sweep(2, [](const Level& l) -> std::string {
        if (r_symbol(l, kTau, kTau, {0}) != -l.q_quarter_power(-3)) return "R_0 mismatch at k=" + std::to_string(l.k());
        if (r_symbol(l, kTau, kTau, {2}) != l.q_quarter_power(1)) return "R_1 mismatch at k=" + std::to_string(l.k());
        return {};
      }));
  add("qubit F, rho(sigma_1), rho(sigma_2) closed forms; F real symmetric involutory", sweep(2, check_qubit_closed_forms));
  add("dense and sparse qubit spaces are two-dimensional", sweep(2, [](const Level& l) {
        return dense_qubit_basis(l).dim() == 2 && sparse_qubit_basis(l).dim() == 2 ? "" : "dimension mismatch at k=" + std::to_string(l.k());
      }));
  add("k=2 normalized generators: e^{i pi/4} diag(1,-i) and (1/sqrt 2)[[1,-i],[-i,1]]", []() -> std::string {
    const auto g = normalized_qubit_rep(Level(2));
    const double h = 1 / std::sqrt(2.0);
    CMatrixD s1 = CMatrixD::diagonal({ComplexD(h, h), ComplexD(h, -h)});
    CMatrixD s2(2);
    s2(0, 0) = {h, 0};
    s2(0, 1) = {0, -h};
    s2(1, 0) = {0, -h};
    s2(1, 1) = {h, 0};
    const double e = std::max(max_abs_diff<double>(approx_matrix<double>(g.sigma1), s1), max_abs_diff<double>(approx_matrix<double>(g.sigma2), s2));
    return e < 1e-12 ? "" : "deviation " + std::to_string(e);
  });
  add("sparse generators equal dense generators", sweep(2, [](const Level& l) {
        sparse_encoding_rep(l);
        return std::string();
      }));
  add("tr A, tr B, tr W closed forms in q", sweep(2, check_trace_closed_forms));
  add("A, B, W trace identities", sweep(2, [](const Level& l) {
        const ABW abw = build_ABW(l);
        for (auto m : {TraceMatrix::A, TraceMatrix::B, TraceMatrix::W}) trace_to_cosine_identity(m, l, abw);
        return std::string();
      }));
  add("cos theta_4 = 0, cos theta_8 = -1/2", []() -> std::string {
    if (trace_to_cosine_identity(TraceMatrix::A, Level(4)).cos_theta != CycNumber(0L)) return "cos theta_4 != 0";
    if (trace_to_cosine_identity(TraceMatrix::A, Level(8)).cos_theta != CycNumber(mpq_class(-1, 2))) return "cos theta_8 != -1/2";
    return {};
  });
  add("cos theta_3, cos theta_5, cos theta_6, cos theta_10 special values", []() -> std::string {
    for (const auto& [k, value] : special_cos_theta_values())
      if (trace_to_cosine_identity(TraceMatrix::A, Level(k)).cos_theta != value) return "mismatch at k=" + std::to_string(k);
    return {};
  });
  add("statement A: cos(2pi/(k+2)) rational only for k=4", sweep(3, [](const Level& l) {
        const auto s = statements_ABCD(l.k());
        const bool expect = l.k() == 4;
        if (s.cos2.has_value() != expect || (expect && *s.cos2 != mpq_class(1, 2))) return "mismatch at k=" + std::to_string(l.k());
        return std::string();
      }));
  add("statement B: cos(4pi/(k+2)) rational only for k=4, 6, 10", sweep(3, [](const Level& l) {
        const auto s = statements_ABCD(l.k());
        const std::map<int, mpq_class> expect{{4, mpq_class(-1, 2)}, {6, mpq_class(0)}, {10, mpq_class(1, 2)}};
        const auto it = expect.find(l.k());
        if (s.cos4.has_value() != (it != expect.end()) || (s.cos4 && *s.cos4 != it->second)) return "mismatch at k=" + std::to_string(l.k());
        return std::string();
      }));
  add("statement C: nontrivial combinations only for k=3, 8", sweep(3, [](const Level& l) {
        const auto s = statements_ABCD(l.k());
        const std::map<int, std::string> expect{{3, "-cos(2pi/5) - cos(4pi/5) = 1/2"}, {8, "cos(2pi/10) - cos(4pi/10) = 1/2"}};
        const auto it = expect.find(l.k());
        if (s.combination.has_value() != (it != expect.end())) return "mismatch at k=" + std::to_string(l.k());
        if (s.combination && s.combination->to_string(l.k()) != it->second) return "wrong combination at k=" + std::to_string(l.k());
        return std::string();
      }));
  add("statement D: cos theta_k rational only for k=4, 8", sweep(3, [](const Level& l) {
        const auto s = statements_ABCD(l.k());
        const bool expect = l.k() == 4 || l.k() == 8;
        return s.cos_theta.has_value() == expect ? "" : "mismatch at k=" + std::to_string(l.k());
      }));
  add("cosine identity list (cos pi/3 = 1/2)", []() -> std::string {
    for (const auto& id : conway_jones_list()) {
      const auto v = conway_jones_is_rational(id.terms);
      if (!v || *v != id.rhs) return "fails: " + id.text;
    }
    for (const mpq_class& phi : {mpq_class(1, 12), mpq_class(1, 7), mpq_class(1, 10)})
      if (conway_jones_is_rational(conway_jones_family(phi).terms) != mpq_class(0)) return "family fails at phi = " + phi.get_str() + "pi";
    return {};
  });
  add("double braids dense exactly for k >= 3, k != 4, 8", sweep(3, [](const Level& l) {
        const auto c = kitaev_certificate(l);
        const bool expect = l.k() != 4 && l.k() != 8;
        return c.dense == expect ? "" : "verdict mismatch at k=" + std::to_string(l.k());
      }));
  return out;
}

}  // namespace su2k
