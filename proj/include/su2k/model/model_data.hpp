#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "su2k/arith/matrix.hpp"
#include "su2k/model/symbols.hpp"

namespace su2k {

/// All admissible F-symbols of one level, computed exactly and indexed by
/// (j1, j2, j3, j, j12, j23) in doubled labels.
class FTable {
 public:
  explicit FTable(const Level& level) : level_(level), quantum_(quantum_table(level)) {
    const int k = level.k();
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c)
          for (int d = 0; d <= k; ++d)
            for (int m = 0; m <= k; ++m) {
              if (!admissible(level, a, b, m) || !admissible(level, m, c, d)) continue;
              for (int n = 0; n <= k; ++n) {
                if (!admissible(level, b, c, n) || !admissible(level, a, n, d)) continue;
                table_.emplace(key(a, b, c, d, m, n), f_symbol(*quantum_, a, b, c, d, m, n));
              }
            }
  }

  const Level& level() const { return level_; }
  std::size_t size() const { return table_.size(); }

  const Surd& operator()(int j1, int j2, int j3, int j, int j12, int j23) const {
    auto it = table_.find(key(j1, j2, j3, j, j12, j23));
    if (it == table_.end()) {
      throw DomainError("F-symbol (" + std::to_string(j1) + "," + std::to_string(j2) + "," + std::to_string(j3) + ";" +
                        std::to_string(j) + "," + std::to_string(j12) + "," + std::to_string(j23) +
                        ") has an inadmissible vertex at k=" + std::to_string(level_.k()));
    }
    return it->second;
  }

  /// F^{abc}_d as a matrix with rows indexed by the right label j23 and columns by the left label
  /// j12, both in increasing order. For SU(2)_k the two index sets have equal size.
  struct Block {
    std::vector<int> left;
    std::vector<int> right;
    SurdMatrix matrix;
  };

  Block block(int a, int b, int c, int d) const {
    Block out;
    for (int m = 0; m <= level_.k(); ++m)
      if (admissible(level_, a, b, m) && admissible(level_, m, c, d)) out.left.push_back(m);
    for (int n = 0; n <= level_.k(); ++n)
      if (admissible(level_, b, c, n) && admissible(level_, a, n, d)) out.right.push_back(n);
    if (out.left.size() != out.right.size()) throw IntegrityError("F-matrix is not square");
    out.matrix = SurdMatrix(out.left.size());
    for (std::size_t r = 0; r < out.right.size(); ++r)
      for (std::size_t c2 = 0; c2 < out.left.size(); ++c2)
        out.matrix(r, c2) = (*this)(a, b, c, d, out.left[c2], out.right[r]);
    return out;
  }

 private:
  static std::uint32_t key(int j1, int j2, int j3, int j, int j12, int j23) {
    auto u = [](int x) { return static_cast<std::uint32_t>(x) & 31U; };
    return u(j1) | u(j2) << 5 | u(j3) << 10 | u(j) << 15 | u(j12) << 20 | u(j23) << 25;
  }

  Level level_;
  std::shared_ptr<const QuantumTable> quantum_;
  std::unordered_map<std::uint32_t, Surd> table_;
};

/// Static data of SU(2)_k: fusion tensor, R-symbols, spins, quantum dimensions, S-matrix. The F table
/// is built on first use.
class ModelData {
 public:
  explicit ModelData(const Level& level) : level_(level) {
    if (level.k() > 30) throw DomainError("levels above k=30 are not supported");
    const int n = level.label_count();
    fusion_.assign(static_cast<std::size_t>(n * n * n), 0);
    r_.resize(static_cast<std::size_t>(n * n * n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (!admissible(level, a, b, c)) continue;
          fusion_[index(a, b, c)] = 1;
          r_[index(a, b, c)] = r_symbol(level, {a}, {b}, {c});
        }
    for (int t = 0; t < n; ++t) {
      spins_.push_back(level.q_quarter_power(static_cast<long long>(t) * (t + 2)));
      dims_.push_back(quantum_integer(level, t + 1));
    }
    s_ = SquareMatrix<CycNumber>(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CycNumber sum(0L);
        for (int c = 0; c < n; ++c)
          if (fusion_[index(a, b, c)]) sum += spins_[static_cast<std::size_t>(c)] * dims_[static_cast<std::size_t>(c)];
        s_(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
            sum * spins_[static_cast<std::size_t>(a)].conj() * spins_[static_cast<std::size_t>(b)].conj();
      }
  }

  ModelData(const ModelData&) = delete;
  ModelData& operator=(const ModelData&) = delete;

  const Level& level() const { return level_; }
  int label_count() const { return level_.label_count(); }

  int fusion(int a, int b, int c) const { return in_range(a, b, c) ? fusion_[index(a, b, c)] : 0; }

  const CycNumber& r(int a, int b, int c) const {
    if (!admissible(level_, a, b, c)) detail::require_admissible(level_, a, b, c, "r_symbol");
    return r_[index(a, b, c)];
  }

  /// theta_j = q^{j(j+1)}.
  const CycNumber& spin(int t) const { return spins_.at(static_cast<std::size_t>(t)); }
  /// dim(j) = [2j+1].
  const CycNumber& dim(int t) const { return dims_.at(static_cast<std::size_t>(t)); }
  const std::vector<CycNumber>& spins() const { return spins_; }
  const std::vector<CycNumber>& dims() const { return dims_; }
  /// Unnormalized S_{ab} = theta_a^{-1} theta_b^{-1} sum_c N_{ab}^c theta_c dim(c).
  const SquareMatrix<CycNumber>& s_matrix() const { return s_; }

  /// D^2 = sum_j dim(j)^2.
  CycNumber global_dimension_squared() const {
    CycNumber d(0L);
    for (const auto& x : dims_) d += x * x;
    return d;
  }

  const FTable& f_table() const {
    std::call_once(f_once_, [this] { f_ = std::make_unique<const FTable>(level_); });
    return *f_;
  }

 private:
  bool in_range(int a, int b, int c) const {
    const int n = level_.label_count();
    return a >= 0 && b >= 0 && c >= 0 && a < n && b < n && c < n;
  }
  std::size_t index(int a, int b, int c) const {
    const auto n = static_cast<std::size_t>(level_.label_count());
    return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c);
  }

  Level level_;
  std::vector<int> fusion_;
  std::vector<CycNumber> r_;
  std::vector<CycNumber> spins_;
  std::vector<CycNumber> dims_;
  SquareMatrix<CycNumber> s_;
  mutable std::once_flag f_once_;
  mutable std::unique_ptr<const FTable> f_;
};

}  // namespace su2k
