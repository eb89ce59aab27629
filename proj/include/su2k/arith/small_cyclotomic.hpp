#pragma once

// Allocation-free exact arithmetic in Q(zeta_N) for values with small coefficients: numerators are
// machine words over one common machine-word denominator. Any step that could leave that range
// throws SmallCyc::Overflow, so a completed computation is always exact.

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "su2k/arith/cyclotomic.hpp"

namespace su2k {

class SmallCyc {
 public:
  struct Overflow {};
  static constexpr int kMaxDegree = 64;

  SmallCyc() = default;

  /// Zero of Q(zeta_order).
  static SmallCyc zero(int order) {
    SmallCyc out;
    out.order_ = order;
    out.phi_ = modulus(order);
    out.degree_ = static_cast<int>(out.phi_->size()) - 1;
    if (out.degree_ > kMaxDegree) throw Overflow{};
    return out;
  }

  static SmallCyc from(const CycNumber& x) {
    SmallCyc out = zero(x.order());
    if (!fits(x.denominator())) throw Overflow{};
    out.den_ = x.denominator().get_si();
    for (int i = 0; i < out.degree_; ++i) {
      const mpz_class& c = x.numerators()[static_cast<std::size_t>(i)];
      if (!fits(c)) throw Overflow{};
      out.num_[static_cast<std::size_t>(i)] = c.get_si();
    }
    return out;
  }

  int order() const { return order_; }

  bool is_zero() const {
    for (int i = 0; i < degree_; ++i)
      if (num_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }

  friend SmallCyc operator*(const SmallCyc& a, const SmallCyc& b) {
    if (a.order_ != b.order_) throw DomainError("SmallCyc: operands of different orders");
    const int d = a.degree_;
    if (bit_bound(a) + bit_bound(b) + 7 < 63) {
      // every partial sum fits in 64 bits; on a failed reduction start over in 128 bits
      std::array<std::int64_t, 2 * kMaxDegree> narrow{};
      for (int i = 0; i < d; ++i) {
        const std::int64_t ai = a.num_[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; j < d; ++j) narrow[static_cast<std::size_t>(i + j)] += ai * b.num_[static_cast<std::size_t>(j)];
      }
      if (reduce_narrow(narrow.data(), d, *a.phi_)) {
        SmallCyc out = a;
        return out.assign_narrow(narrow.data(), a.den_, b.den_);
      }
    }
    std::array<Wide, 2 * kMaxDegree> poly{};
    for (int i = 0; i < d; ++i) {
      const Wide ai = a.num_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (int j = 0; j < d; ++j) poly[static_cast<std::size_t>(i + j)] += ai * b.num_[static_cast<std::size_t>(j)];
    }
    const auto& phi = *a.phi_;
    for (int top = 2 * d - 2; top >= d; --top) {
      const Wide lead = poly[static_cast<std::size_t>(top)];
      if (lead == 0) continue;
      poly[static_cast<std::size_t>(top)] = 0;
      for (int j = 0; j < d; ++j) {
        const Wide p = phi[static_cast<std::size_t>(j)];
        if (p == 0) continue;
        Wide& slot = poly[static_cast<std::size_t>(top - d + j)];
        slot -= lead * p;
        if (slot > kWideLimit || slot < -kWideLimit) throw Overflow{};
      }
    }
    SmallCyc out = a;
    return out.assign(poly.data(), static_cast<Wide>(a.den_) * b.den_);
  }

  friend SmallCyc operator+(const SmallCyc& a, const SmallCyc& b) { return combine(a, b, 1); }
  friend SmallCyc operator-(const SmallCyc& a, const SmallCyc& b) { return combine(a, b, -1); }

 private:
  using Wide = __int128;
  static constexpr std::int64_t kLimit = std::int64_t{1} << 56;
  static constexpr Wide kWideLimit = Wide{1} << 120;

  static bool fits(const mpz_class& x) { return mpz_sizeinbase(x.get_mpz_t(), 2) < 56; }

  /// Bits needed for the largest numerator magnitude.
  static int bit_bound(const SmallCyc& x) {
    std::uint64_t acc = 0;
    for (int i = 0; i < x.degree_; ++i) {
      const std::int64_t v = x.num_[static_cast<std::size_t>(i)];
      acc |= static_cast<std::uint64_t>(v < 0 ? -v : v);
    }
    return 64 - std::countl_zero(acc);
  }

  /// Coefficients of Phi_order, low degree first; entries are never freed.
  static const std::vector<std::int64_t>* modulus(int order) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<std::int64_t>>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second.get();
    std::vector<std::int64_t> phi;
    for (const auto& c : *nt::cyclotomic_polynomial(order)) {
      if (mpz_sizeinbase(c.get_mpz_t(), 2) > 6) throw Overflow{};
      phi.push_back(c.get_si());
    }
    return cache.emplace(order, std::make_unique<const std::vector<std::int64_t>>(std::move(phi))).first->second.get();
  }

  static Wide gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    constexpr Wide word = Wide{1} << 63;
    if (a < word && b < word) return static_cast<Wide>(std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)));
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static SmallCyc combine(const SmallCyc& a, const SmallCyc& b, int sign) {
    if (a.order_ != b.order_) throw DomainError("SmallCyc: operands of different orders");
    const Wide g = gcd(a.den_, b.den_);
    const Wide fa = b.den_ / g;
    const Wide fb = a.den_ / g;
    if (fa == 1 && fb == 1) {
      std::array<std::int64_t, kMaxDegree> sum{};
      for (int i = 0; i < a.degree_; ++i)
        sum[static_cast<std::size_t>(i)] = a.num_[static_cast<std::size_t>(i)] + sign * b.num_[static_cast<std::size_t>(i)];
      SmallCyc out = a;
      return out.assign_narrow(sum.data(), a.den_, 1);
    }
    std::array<Wide, 2 * kMaxDegree> poly{};
    for (int i = 0; i < a.degree_; ++i)
      poly[static_cast<std::size_t>(i)] = a.num_[static_cast<std::size_t>(i)] * fa + sign * (b.num_[static_cast<std::size_t>(i)] * fb);
    SmallCyc out = a;
    return out.assign(poly.data(), static_cast<Wide>(a.den_) * fa);
  }

  /// Reduces a product polynomial modulo phi in place; false if a coefficient would leave 62 bits.
  static bool reduce_narrow(std::int64_t* poly, int d, const std::vector<std::int64_t>& phi) {
    constexpr std::int64_t limit = std::int64_t{1} << 62;
    for (int top = 2 * d - 2; top >= d; --top) {
      const std::int64_t lead = poly[top];
      if (lead == 0) continue;
      poly[top] = 0;
      for (int j = 0; j < d; ++j) {
        const std::int64_t p = phi[static_cast<std::size_t>(j)];
        if (p == 0) continue;
        std::int64_t step = 0;
        if (__builtin_mul_overflow(lead, p, &step) || __builtin_sub_overflow(poly[top - d + j], step, &poly[top - d + j])) return false;
        if (poly[top - d + j] > limit || poly[top - d + j] < -limit) return false;
      }
    }
    return true;
  }

  /// Stores poly[0..degree) / (den_a * den_b) in lowest terms.
  SmallCyc& assign_narrow(const std::int64_t* poly, std::int64_t den_a, std::int64_t den_b) {
    std::int64_t den = 0;
    if (__builtin_mul_overflow(den_a, den_b, &den)) {
      std::array<Wide, 2 * kMaxDegree> wide{};
      for (int i = 0; i < degree_; ++i) wide[static_cast<std::size_t>(i)] = poly[i];
      return assign(wide.data(), static_cast<Wide>(den_a) * den_b);
    }
    std::uint64_t g = static_cast<std::uint64_t>(den);
    bool zero = true;
    for (int i = 0; i < degree_; ++i) {
      if (poly[i] == 0) continue;
      zero = false;
      if (g != 1) g = std::gcd(g, static_cast<std::uint64_t>(poly[i] < 0 ? -poly[i] : poly[i]));
    }
    if (zero) {
      num_.fill(0);
      den_ = 1;
      return *this;
    }
    const auto sg = static_cast<std::int64_t>(g);
    for (int i = 0; i < degree_; ++i) {
      const std::int64_t v = sg == 1 ? poly[i] : poly[i] / sg;
      if (v >= kLimit || v <= -kLimit) throw Overflow{};
      num_[static_cast<std::size_t>(i)] = v;
    }
    den /= sg;
    if (den >= kLimit) throw Overflow{};
    den_ = den;
    return *this;
  }

  /// Stores poly[0..degree) / den in lowest terms.
  SmallCyc& assign(const Wide* poly, Wide den) {
    Wide g = den;
    bool zero = true;
    for (int i = 0; i < degree_; ++i) {
      if (poly[i] == 0) continue;
      zero = false;
      g = gcd(g, poly[i]);
    }
    if (zero) {
      num_.fill(0);
      den_ = 1;
      return *this;
    }
    for (int i = 0; i < degree_; ++i) {
      const Wide v = poly[i] / g;
      if (v >= kLimit || v <= -kLimit) throw Overflow{};
      num_[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v);
    }
    den /= g;
    if (den >= kLimit) throw Overflow{};
    den_ = static_cast<std::int64_t>(den);
    return *this;
  }

  int order_ = 1;
  int degree_ = 0;
  const std::vector<std::int64_t>* phi_ = nullptr;
  std::array<std::int64_t, kMaxDegree> num_{};
  std::int64_t den_ = 1;
};

}  // namespace su2k
