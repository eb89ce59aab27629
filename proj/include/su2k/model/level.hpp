#pragma once

#include <memory>
#include <string>
#include <vector>

#include "su2k/arith/cyclotomic.hpp"
#include "su2k/arith/surd.hpp"
#include "su2k/errors.hpp"

namespace su2k {

/// Level k of SU(2)_k. q = e^{2 pi i/(k+2)} = zeta_N^4 with N = 4(k+2), the smallest order in
/// which q^{1/4} exists.
class Level {
 public:
  explicit Level(int k) : k_(k) {
    if (k < 0) throw DomainError("level k must be >= 0, got " + std::to_string(k));
  }

  int k() const { return k_; }
  /// k + 2; q is a primitive root of unity of this order.
  int shift() const { return k_ + 2; }
  int root_order() const { return 4 * (k_ + 2); }
  int label_count() const { return k_ + 1; }

  /// q^{x/4} = zeta_N^x.
  CycNumber q_quarter_power(long long x) const { return CycNumber::root_of_unity(root_order(), x); }
  CycNumber q() const { return q_quarter_power(4); }

  /// cos(2 pi m / (k+2)).
  CycNumber cos_2pi_over_shift(long long m) const { return CycNumber::cos_pi_fraction(2 * m, shift()); }

  std::shared_ptr<const RadicalContext> radicals() const { return radical_context(shift()); }

  friend bool operator==(const Level&, const Level&) = default;

 private:
  int k_;
};

/// Anyon type j in {0, 1/2, ..., k/2}, stored as 2j.
struct AnyonLabel {
  int twice_j = 0;

  static AnyonLabel half(int twice_j) { return AnyonLabel{twice_j}; }

  bool valid_for(const Level& level) const { return twice_j >= 0 && twice_j <= level.k(); }
  AnyonLabel dual() const { return *this; }  // every SU(2)_k label is self-dual
  bool trivial() const { return twice_j == 0; }

  std::string to_string() const {
    if (twice_j % 2 == 0) return std::to_string(twice_j / 2);
    return std::to_string(twice_j) + "/2";
  }

  friend auto operator<=>(const AnyonLabel&, const AnyonLabel&) = default;
};

inline void require_label(const Level& level, AnyonLabel a) {
  if (!a.valid_for(level))
    throw DomainError("label 2j=" + std::to_string(a.twice_j) + " is not valid at level k=" + std::to_string(level.k()));
}

inline std::vector<AnyonLabel> labels(const Level& level) {
  std::vector<AnyonLabel> out;
  for (int t = 0; t <= level.k(); ++t) out.push_back({t});
  return out;
}

/// (a, b; c) admissible: |a-b| <= c <= min(a+b, k-a-b) and a+b+c integral. Doubled labels throughout.
inline bool admissible(const Level& level, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a > level.k() || b > level.k() || c > level.k()) return false;
  const int lo = a > b ? a - b : b - a;
  const int hi = std::min(a + b, 2 * level.k() - a - b);
  return c >= lo && c <= hi && (a + b + c) % 2 == 0;
}

inline bool admissible(const Level& level, AnyonLabel a, AnyonLabel b, AnyonLabel c) {
  return admissible(level, a.twice_j, b.twice_j, c.twice_j);
}

/// j1 (x) j2 as a sorted set of labels.
inline std::vector<AnyonLabel> fusion(const Level& level, AnyonLabel j1, AnyonLabel j2) {
  require_label(level, j1);
  require_label(level, j2);
  std::vector<AnyonLabel> out;
  const int lo = j1.twice_j > j2.twice_j ? j1.twice_j - j2.twice_j : j2.twice_j - j1.twice_j;
  const int hi = std::min(j1.twice_j + j2.twice_j, 2 * level.k() - j1.twice_j - j2.twice_j);
  for (int t = lo; t <= hi; t += 2) out.push_back({t});
  return out;
}

/// N_{ab}^c in {0, 1}.
inline int fusion_multiplicity(const Level& level, int a, int b, int c) { return admissible(level, a, b, c) ? 1 : 0; }

}  // namespace su2k
