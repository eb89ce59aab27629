#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "su2k/arith/number_theory.hpp"
#include "su2k/universality/abw.hpp"

namespace su2k {

struct OrderDecision {
  bool finite = false;
  /// Smallest p > 0 with M^p = +-I, when finite.
  long projective_order = 0;
  /// Eigenvalue angle theta = 2 pi j / m in lowest terms, when finite.
  long angle_numerator = 0;
  long angle_denominator = 0;
  /// Candidate orders m with phi(m) <= totient_bound were examined up to max_candidate.
  long totient_bound = 0;
  long max_candidate = 0;
  long candidates_examined = 0;

  std::string to_string() const {
    if (!finite) return "infinite (no root of unity of order m <= " + std::to_string(max_candidate) + " with phi(m) <= " + std::to_string(totient_bound) + ")";
    return "finite, projective order " + std::to_string(projective_order) + ", theta = 2pi*" + std::to_string(angle_numerator) + "/" +
           std::to_string(angle_denominator);
  }
};

/// Default degree bound 2 phi(8(k+2)) for the order of a root of unity whose real part lies in the
/// field of the trace.
inline long default_totient_bound(const Level& level) { return 2 * nt::totient(8L * level.shift()); }

/// Decides exactly whether a 2x2 special unitary M (eigenvalues e^{+-i theta}) has finite projective
/// order. theta/pi is rational iff tr M = zeta_m^j + zeta_m^{-j}; since tr M lies in a field of degree
/// at most D over Q, such an m has phi(m) <= D, and every m with phi(m) <= D is below 2 D^2. Each
/// candidate is screened in floating point and confirmed in exact arithmetic.
inline OrderDecision decide_projective_order(const SurdMatrix& m, const Level& level, std::optional<long> totient_bound = std::nullopt) {
  if (m.dim() != 2) throw DomainError("decide_projective_order: matrix is not 2x2");
  if (!(det2(m) == Surd(1L))) throw DomainError("decide_projective_order: matrix does not have determinant 1");
  if (unitarity_defect(approx_matrix<double>(m)) > 1e-12) throw DomainError("decide_projective_order: matrix is not unitary");
  const CycNumber trace = radical_free_trace(m);
  const Real256 t = trace.approx<Real256>().re;
  const double td = to_double(t);

  OrderDecision out;
  out.totient_bound = totient_bound.value_or(default_totient_bound(level));
  if (out.totient_bound < 1) throw DomainError("decide_projective_order: totient bound must be positive");
  out.max_candidate = 2 * out.totient_bound * out.totient_bound;
  const auto phi = nt::totient_table(out.max_candidate);
  const double theta = std::acos(std::clamp(td / 2, -1.0, 1.0));
  for (long mm = 1; mm <= out.max_candidate; ++mm) {
    if (phi[static_cast<std::size_t>(mm)] > out.totient_bound) continue;
    ++out.candidates_examined;
    const long j = std::lround(theta * static_cast<double>(mm) / (2 * M_PI));
    if (std::abs(2 * std::cos(2 * M_PI * static_cast<double>(j) / static_cast<double>(mm)) - td) > 1e-9) continue;
    const Real256 angle = 2 * pi<Real256>() * j / mm;
    if (abs(2 * cos(angle) - t) > Real256("1e-60")) continue;
    const long g = std::gcd(j, mm);
    const long j0 = j / g, m0 = mm / g;
    const CycNumber candidate = CycNumber::root_of_unity(static_cast<int>(m0), j0) + CycNumber::root_of_unity(static_cast<int>(m0), -j0);
    if (candidate != trace) continue;
    out.finite = true;
    out.angle_numerator = j0;
    out.angle_denominator = m0;
    out.projective_order = m0 % 2 == 1 ? m0 : m0 / 2;
    // M^p = +-I must hold; a failure here is a bug, not a property of M.
    const CMatrixD md = approx_matrix<double>(m);
    const CMatrixD power = md.pow(static_cast<unsigned long long>(out.projective_order));
    const double plus = max_abs_diff<double>(power, CMatrixD::identity(2));
    const double minus = max_abs_diff<double>(power, -1.0 * CMatrixD::identity(2));
    if (std::min(plus, minus) > 1e-9) throw IntegrityError("finite order claimed but M^p != +-I");
    return out;
  }
  return out;
}

/// Floating heuristic: smallest p <= limit with M^p within tol of +-I.
inline std::optional<long> heuristic_projective_order(const CMatrixD& m, long limit = 10000, double tol = 1e-9) {
  CMatrixD power = m;
  const CMatrixD id = CMatrixD::identity(m.dim());
  const CMatrixD neg = -1.0 * id;
  for (long p = 1; p <= limit; ++p) {
    if (max_abs_diff<double>(power, id) < tol || max_abs_diff<double>(power, neg) < tol) return p;
    power = power * m;
  }
  return std::nullopt;
}

}  // namespace su2k
