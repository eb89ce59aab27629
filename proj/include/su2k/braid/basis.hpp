#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su2k/model/level.hpp"

namespace su2k {

/// Left-comb splitting-tree basis of V_c^{a...a} (n copies of a). A state is the tuple of internal
/// labels (b_1, ..., b_{n-2}); b_0 = a and b_{n-1} = c close the chain.
class SplittingBasis {
 public:
  SplittingBasis(const Level& level, AnyonLabel a, int n, AnyonLabel c) : level_(level), a_(a), n_(n), c_(c) {
    require_label(level, a);
    require_label(level, c);
    if (n < 1) throw DomainError("SplittingBasis: need at least one anyon");
    std::vector<int> internal;
    extend(internal);
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
  }

  const Level& level() const { return level_; }
  AnyonLabel anyon() const { return a_; }
  int anyon_count() const { return n_; }
  AnyonLabel total_charge() const { return c_; }
  std::size_t dim() const { return states_.size(); }
  const std::vector<std::vector<int>>& states() const { return states_; }

  /// Full chain (b_0 = a, b_1, ..., b_{n-2}, b_{n-1} = c) of a state.
  std::vector<int> chain(std::size_t state) const {
    std::vector<int> out{a_.twice_j};
    if (n_ == 1) return out;
    const auto& s = states_.at(state);
    out.insert(out.end(), s.begin(), s.end());
    out.push_back(c_.twice_j);
    return out;
  }

  std::optional<std::size_t> find(const std::vector<int>& internal) const {
    auto it = index_.find(internal);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  void extend(std::vector<int>& internal) {
    const int k = level_.k();
    const int depth = static_cast<int>(internal.size());
    if (n_ == 1) {
      if (a_ == c_) states_.push_back({});
      return;
    }
    const int previous = depth == 0 ? a_.twice_j : internal.back();
    if (depth == n_ - 2) {
      if (admissible(level_, previous, a_.twice_j, c_.twice_j)) states_.push_back(internal);
      return;
    }
    for (int b = 0; b <= k; ++b) {
      if (!admissible(level_, previous, a_.twice_j, b)) continue;
      internal.push_back(b);
      extend(internal);
      internal.pop_back();
    }
  }

  Level level_;
  AnyonLabel a_;
  int n_;
  AnyonLabel c_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, std::size_t> index_;
};

inline SplittingBasis enumerate_basis(const Level& level, AnyonLabel a, int n, AnyonLabel c) { return SplittingBasis(level, a, n, c); }

}  // namespace su2k
