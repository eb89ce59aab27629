#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su2k/universality/order.hpp"

namespace su2k {

/// a cos(2pi/(k+2)) + b cos(4pi/(k+2)) = rhs, scaled so |a| = 1 and rhs >= 0.
struct CosineCombination {
  mpq_class cos2;
  mpq_class cos4;
  mpq_class rhs;

  std::string to_string(int k) const {
    std::string out;
    auto add = [&](const mpq_class& c, const std::string& what) {
      if (c == 0) return;
      const std::string mag = abs(c) == 1 ? "" : mpq_class(abs(c)).get_str() + "*";
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      out += mag + what;
    };
    add(cos2, "cos(2pi/" + std::to_string(k + 2) + ")");
    add(cos4, "cos(4pi/" + std::to_string(k + 2) + ")");
    return out + " = " + rhs.get_str();
  }
};

/// Exact rationality data behind the four statements for one level k >= 3.
struct StatementsReport {
  int k = 0;
  std::optional<mpq_class> cos2;        // cos(2pi/(k+2))
  std::optional<mpq_class> cos4;        // cos(4pi/(k+2))
  std::optional<CosineCombination> combination;  // only when cos2 and cos4 are both irrational
  std::optional<mpq_class> cos_theta;   // cos(theta_k), 2 cos(theta_k) = tr A
};

inline StatementsReport statements_ABCD(int k) {
  if (k < 3) throw DomainError("statements need k >= 3, got k=" + std::to_string(k));
  const Level level(k);
  StatementsReport out;
  out.k = k;
  const CycNumber c2 = level.cos_2pi_over_shift(1);
  const CycNumber c4 = level.cos_2pi_over_shift(2);
  out.cos2 = c2.rational_value();
  out.cos4 = c4.rational_value();
  if (!out.cos2 && !out.cos4) {
    // alpha + beta c2 + gamma c4 = 0; beta = 0 or gamma = 0 would make one cosine rational
    const auto rel = rational_relation({CycNumber(1L), c2, c4});
    if (rel) {
      const mpq_class scale = abs((*rel)[1]);
      CosineCombination comb{(*rel)[1] / scale, (*rel)[2] / scale, -(*rel)[0] / scale};
      if (comb.rhs < 0) comb = {-comb.cos2, -comb.cos4, -comb.rhs};
      out.combination = comb;
    }
  }
  out.cos_theta = trace_to_cosine_identity(TraceMatrix::A, level).cos_theta.rational_value();
  return out;
}

struct TraceValue {
  CycNumber exact;
  double value = 0;
};

/// Per-level universality certificate for the double-braiding gates sigma_1^2, sigma_2^2.
struct Certificate {
  int k = 0;
  TraceValue tr_a;
  TraceValue tr_b;
  TraceValue tr_w;
  OrderDecision order_a;
  OrderDecision order_b;
  /// tr W != 2 exactly, i.e. A and B do not commute.
  bool commutator_nontrivial = false;
  bool dense = false;
  /// Failing conditions when not dense.
  std::string reason;

  std::string verdict() const { return dense ? "dense" : "not-certified"; }
};

inline Certificate kitaev_certificate(const Level& level, std::optional<long> totient_bound = std::nullopt) {
  require_qubit_level(level);
  const ABW abw = build_ABW(level);
  Certificate out;
  out.k = level.k();
  for (auto [value, m] : {std::pair{&out.tr_a, &abw.a}, std::pair{&out.tr_b, &abw.b}, std::pair{&out.tr_w, &abw.w}}) {
    value->exact = radical_free_trace(*m);
    value->value = value->exact.approx_double().re;
  }
  for (auto which : {TraceMatrix::A, TraceMatrix::B, TraceMatrix::W}) trace_to_cosine_identity(which, level, abw);
  out.order_a = decide_projective_order(abw.a, level, totient_bound);
  out.order_b = decide_projective_order(abw.b, level, totient_bound);
  out.commutator_nontrivial = out.tr_w.exact != CycNumber(2L);
  std::vector<std::string> reasons;
  if (out.order_a.finite) reasons.push_back("A finite projective order " + std::to_string(out.order_a.projective_order));
  if (out.order_b.finite) reasons.push_back("B finite projective order " + std::to_string(out.order_b.projective_order));
  if (!out.commutator_nontrivial) reasons.push_back("tr W = 2");
  out.dense = reasons.empty();
  for (const auto& r : reasons) out.reason += (out.reason.empty() ? "" : "; ") + r;
  return out;
}

}  // namespace su2k
