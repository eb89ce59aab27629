#pragma once

#include <map>
#include <string>

#include "su2k/braid/qubit.hpp"

namespace su2k {

/// A = R~^2 F R~^4 F, B = R~^2 F R~^6 F and W = A B A^{-1} B^{-1} on the dense qubit, exact.
struct ABW {
  SurdMatrix a;
  SurdMatrix b;
  SurdMatrix w;
};

namespace detail {

/// Inverse of a 2x2 matrix of determinant 1.
inline SurdMatrix inverse_su2(const SurdMatrix& m) {
  SurdMatrix out(2);
  out(0, 0) = m(1, 1);
  out(1, 1) = m(0, 0);
  out(0, 1) = -m(0, 1);
  out(1, 0) = -m(1, 0);
  return out;
}

}  // namespace detail

inline ABW build_ABW(const Level& level) {
  const auto g = normalized_qubit_rep(level);
  const QubitData d = qubit_data(level);
  const SurdMatrix r2 = g.sigma1 * g.sigma1;
  const SurdMatrix r4 = r2 * r2;
  ABW out;
  out.a = r2 * d.f * r4 * d.f;
  out.b = r2 * d.f * (r4 * r2) * d.f;
  for (const auto* m : {&out.a, &out.b})
    if (!(det2(*m) == Surd(1L))) throw IntegrityError("A or B does not have determinant 1");
  out.w = out.a * out.b * detail::inverse_su2(out.a) * detail::inverse_su2(out.b);
  return out;
}

/// Trace of a matrix whose trace must not contain a radical.
inline CycNumber radical_free_trace(const SurdMatrix& m) {
  const auto t = m.trace().radical_free();
  if (!t) throw IntegrityError("trace is not free of radicals");
  return *t;
}

enum class TraceMatrix { A, B, W };

inline const char* to_string(TraceMatrix m) {
  switch (m) {
    case TraceMatrix::A: return "A";
    case TraceMatrix::B: return "B";
    case TraceMatrix::W: return "W";
  }
  return "?";
}

/// sum_m c_m cos(2 pi m/(k+2)) + c_theta cos(theta) = rhs, where 2 cos(theta) is the trace of the matrix.
struct TraceIdentity {
  int k = 0;
  TraceMatrix matrix = TraceMatrix::A;
  std::map<int, mpq_class> cos_terms;
  mpq_class theta_coefficient;
  mpq_class rhs;
  CycNumber cos_theta;

  std::string to_string() const {
    std::string out;
    auto add = [&out](const mpq_class& c, const std::string& what) {
      if (c == 0) return;
      std::string coeff = abs(c) == 1 ? "" : mpq_class(abs(c)).get_str() + "*";
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      out += coeff + what;
    };
    for (const auto& [m, c] : cos_terms) add(c, "cos(" + std::to_string(2 * m) + "pi/" + std::to_string(k + 2) + ")");
    add(theta_coefficient, "cos(theta)");
    return out + " = " + rhs.get_str();
  }
};

/// The trace identity of A, B or W, verified exactly against the computed trace.
inline TraceIdentity trace_to_cosine_identity(TraceMatrix which, const Level& level, const ABW& abw) {
  TraceIdentity id;
  id.k = level.k();
  id.matrix = which;
  const SurdMatrix& m = which == TraceMatrix::A ? abw.a : which == TraceMatrix::B ? abw.b : abw.w;
  id.cos_theta = radical_free_trace(m) * CycNumber(mpq_class(1, 2));
  switch (which) {
    case TraceMatrix::A:
      id.cos_terms = {{1, mpq_class(-1)}, {2, mpq_class(1)}};
      id.theta_coefficient = 1;
      id.rhs = -1;
      break;
    case TraceMatrix::B:
      id.cos_terms = {{1, mpq_class(2)}, {2, mpq_class(-1)}, {3, mpq_class(1)}};
      id.theta_coefficient = -1;
      id.rhs = 1;
      break;
    case TraceMatrix::W:
      id.cos_terms = {{1, mpq_class(3)}, {2, mpq_class(-3)}, {3, mpq_class(1)}};
      id.theta_coefficient = 1;
      id.rhs = 2;
      break;
  }
  CycNumber lhs = CycNumber(id.theta_coefficient) * id.cos_theta;
  for (const auto& [mult, c] : id.cos_terms) lhs += CycNumber(c) * level.cos_2pi_over_shift(mult);
  if (lhs != CycNumber(id.rhs)) throw IntegrityError(std::string("trace identity of ") + su2k::to_string(which) + " fails at k=" + std::to_string(level.k()));
  return id;
}

inline TraceIdentity trace_to_cosine_identity(TraceMatrix which, const Level& level) {
  return trace_to_cosine_identity(which, level, build_ABW(level));
}

}  // namespace su2k
