#pragma once

// Exact sums  sum_m c_m * sqrt([m])  where [m] is a squarefree product of quantum integers
// [n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}) at a fixed q = e^{2 pi i / M}, and the
// coefficients c_m are CycNumbers.
//
// Radicands are tracked as bitmasks over n in [2, M/2]; [n] = [M - n] folds larger indices down,
// and [1] = 1 drops out. Products merge radicands and pull perfect squares into the coefficient,
// so sums whose radicands agree up to squares combine exactly.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "su2k/arith/cyclotomic.hpp"

namespace su2k {

/// Quantum integers [n], 0 <= n <= M, as elements of Q(zeta_{2M}), plus inverses of the nonzero ones.
class RadicalContext {
 public:
  explicit RadicalContext(int shift) : shift_(shift) {
    if (shift < 2) throw DomainError("RadicalContext: q = e^{2 pi i/M} needs M >= 2");
    if (shift / 2 >= 63) throw DomainError("RadicalContext: M too large for radical bitmasks");
    const int order = 2 * shift;
    qint_.reserve(static_cast<std::size_t>(shift) + 1);
    for (int n = 0; n <= shift; ++n) {
      // [n] = sum_{j=0}^{n-1} q^{(n-1)/2 - j} = sum_j zeta_{2M}^{n-1-2j}
      std::vector<std::pair<long long, mpq_class>> terms;
      for (int j = 0; j < n; ++j) terms.emplace_back(n - 1 - 2 * j, mpq_class(1));
      qint_.push_back(terms.empty() ? CycNumber(mpq_class(0), order) : CycNumber::from_terms(order, terms));
    }
    qint_inv_.resize(qint_.size());
    for (int n = 1; n < shift; ++n) qint_inv_[static_cast<std::size_t>(n)] = qint_[static_cast<std::size_t>(n)].inverse();
  }

  int shift() const { return shift_; }
  const CycNumber& qint(int n) const { return qint_.at(static_cast<std::size_t>(n)); }
  /// 1/[n] for 1 <= n <= M-1.
  const CycNumber& qint_inverse(int n) const {
    if (n < 1 || n >= shift_) throw DomainError("quantum integer [n] is zero or out of range");
    return qint_inv_[static_cast<std::size_t>(n)];
  }
  /// Representative in [1, M/2] of n under [n] = [M-n].
  int fold(int n) const { return n > shift_ / 2 ? shift_ - n : n; }

  /// Product of [n] over the bits of a radicand mask (memoized).
  const CycNumber& radicand_value(std::uint64_t mask) const {
    std::lock_guard lock(cache_mutex_);
    auto it = radicand_cache_.find(mask);
    if (it != radicand_cache_.end()) return it->second;
    CycNumber out(mpq_class(1), 2 * shift_);
    for (int n = 2; n < 64; ++n)
      if (mask & (std::uint64_t{1} << n)) out *= qint(n);
    return radicand_cache_.emplace(mask, std::move(out)).first->second;
  }

 private:
  int shift_;
  std::vector<CycNumber> qint_;
  std::vector<CycNumber> qint_inv_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, CycNumber> radicand_cache_;
};

/// Shared, memoized context per M.
inline std::shared_ptr<const RadicalContext> radical_context(int shift) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const RadicalContext>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(shift);
  if (it == cache.end()) it = cache.emplace(shift, std::make_shared<const RadicalContext>(shift)).first;
  return it->second;
}

class Surd {
 public:
  struct Term {
    std::uint64_t mask;
    CycNumber coeff;
  };

  Surd() = default;
  Surd(CycNumber value) {  // NOLINT(google-explicit-constructor)
    if (!value.is_zero()) terms_.push_back({0, std::move(value)});
  }
  Surd(long value) : Surd(CycNumber(value)) {}  // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(prod_n [n]^{exponents[n]}); exponents may be negative. All [n] involved must be
  /// nonzero (1 <= n <= M-1).
  static Surd monomial(std::shared_ptr<const RadicalContext> ctx, CycNumber coeff, const std::vector<int>& exponents) {
    std::vector<int> folded(static_cast<std::size_t>(ctx->shift() / 2) + 1, 0);
    for (std::size_t n = 1; n < exponents.size(); ++n) {
      if (exponents[n] == 0) continue;
      const int f = ctx->fold(static_cast<int>(n));
      if (f < 1) throw DomainError("Surd::monomial: radicand contains a vanishing quantum integer");
      folded[static_cast<std::size_t>(f)] += exponents[n];
    }
    std::uint64_t mask = 0;
    for (int n = 2; n < static_cast<int>(folded.size()); ++n) {
      const int e = folded[static_cast<std::size_t>(n)];
      if (e == 0) continue;
      const int half = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e / 2)
      if (e - 2 * half == 1) mask |= std::uint64_t{1} << n;
      if (half > 0) coeff *= ctx->qint(n).pow(half);
      if (half < 0) coeff *= ctx->qint_inverse(n).pow(-half);
    }
    Surd out;
    out.ctx_ = std::move(ctx);
    if (!coeff.is_zero()) out.terms_.push_back({mask, std::move(coeff)});
    return out;
  }

  /// sqrt([n]) for a single quantum integer.
  static Surd sqrt_qint(std::shared_ptr<const RadicalContext> ctx, int n) {
    std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
    e[static_cast<std::size_t>(n)] = 1;
    const int order = 2 * ctx->shift();
    return monomial(std::move(ctx), CycNumber(mpq_class(1), order), e);
  }

  const std::vector<Term>& terms() const { return terms_; }
  const std::shared_ptr<const RadicalContext>& context() const { return ctx_; }

  bool is_structurally_zero() const { return terms_.empty(); }

  /// Radical-free value, if no radical survives.
  std::optional<CycNumber> radical_free() const {
    if (terms_.empty()) return CycNumber();
    if (terms_.size() == 1 && terms_[0].mask == 0) return terms_[0].coeff;
    return std::nullopt;
  }

  /// Exact zero test. Decides sums of up to two radical classes exactly; returns nullopt when three
  /// or more distinct radicands remain and no exact decision is available.
  std::optional<bool> exactly_zero() const {
    if (terms_.empty()) return true;
    if (terms_.size() == 1) return false;
    if (terms_.size() == 2) {
      // c1 sqrt(r1) = -c2 sqrt(r2)  implies  c1^2 r1 = c2^2 r2; the converse holds up to the sign,
      // which the two candidates 0 and 2 c1 sqrt(r1) separate numerically by a wide margin.
      const auto& [m1, c1] = terms_[0];
      const auto& [m2, c2] = terms_[1];
      if (c1 * c1 * ctx_->radicand_value(m1) != c2 * c2 * ctx_->radicand_value(m2)) return false;
      const auto total = approx<double>().abs();
      const auto first = Surd::term_value<double>(*ctx_, terms_[0]).abs();
      return total < first;
    }
    return std::nullopt;
  }

  Surd conj() const {
    Surd out = *this;
    for (auto& t : out.terms_) t.coeff = t.coeff.conj();
    return out;
  }

  template <class Real>
  Complex<Real> approx() const {
    Complex<Real> sum;
    for (const auto& t : terms_) sum += term_value<Real>(*ctx_, t);
    return sum;
  }

  /// Exact serialization: terms joined by " + ", each "(coeff)*sqrt[n1*n2...]".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) os << " + ";
      os << "(" << terms_[i].coeff.to_string() << ")";
      if (terms_[i].mask != 0) {
        os << "*sqrt[";
        bool first = true;
        for (int n = 2; n < 64; ++n) {
          if (!(terms_[i].mask & (std::uint64_t{1} << n))) continue;
          os << (first ? "" : "*") << "[" << n << "]";
          first = false;
        }
        os << "]";
      }
    }
    if (ctx_) os << "; M=" << ctx_->shift();
    return os.str();
  }

  Surd operator-() const {
    Surd out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend Surd operator+(const Surd& a, const Surd& b) {
    Surd out;
    out.ctx_ = merge_context(a, b);
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].mask < b.terms_[j].mask)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].mask < a.terms_[i].mask) {
        out.terms_.push_back(b.terms_[j++]);
      } else {
        CycNumber c = a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) out.terms_.push_back({a.terms_[i].mask, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend Surd operator-(const Surd& a, const Surd& b) {
    if (b.terms_.size() == 1 && a.terms_.size() == 1 && a.terms_[0].mask == b.terms_[0].mask) {
      Surd out;
      out.ctx_ = merge_context(a, b);
      CycNumber c = a.terms_[0].coeff - b.terms_[0].coeff;
      if (!c.is_zero()) out.terms_.push_back({a.terms_[0].mask, std::move(c)});
      return out;
    }
    return a + (-b);
  }

  friend Surd operator*(const Surd& a, const Surd& b) {
    Surd out;
    out.ctx_ = merge_context(a, b);
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
      const auto& ta = a.terms_[0];
      const auto& tb = b.terms_[0];
      CycNumber c = ta.coeff * tb.coeff;
      if (const std::uint64_t common = ta.mask & tb.mask; common != 0) c *= out.ctx_->radicand_value(common);
      if (!c.is_zero()) out.terms_.push_back({ta.mask ^ tb.mask, std::move(c)});
      return out;
    }
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        CycNumber c = ta.coeff * tb.coeff;
        std::uint64_t common = ta.mask & tb.mask;
        if (common != 0) c *= out.ctx_->radicand_value(common);
        out.add_term(ta.mask ^ tb.mask, std::move(c));
      }
    }
    return out;
  }

  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }

  /// Structural equality: same radicands and equal coefficients.
  friend bool operator==(const Surd& a, const Surd& b) { return (a - b).is_structurally_zero(); }

 private:
  template <class Real>
  static Complex<Real> term_value(const RadicalContext& ctx, const Term& t) {
    using std::sqrt;
    Complex<Real> c = t.coeff.template approx<Real>();
    if (t.mask == 0) return c;
    const Real r = ctx.radicand_value(t.mask).template approx<Real>().re;
    if (!(r > 0)) throw IntegrityError("Surd: radicand is not positive");
    return c * Complex<Real>(sqrt(r));
  }

  static std::shared_ptr<const RadicalContext> merge_context(const Surd& a, const Surd& b) {
    if (!a.ctx_) return b.ctx_;
    if (!b.ctx_) return a.ctx_;
    if (a.ctx_->shift() != b.ctx_->shift()) throw DomainError("Surd: operands use different q");
    return a.ctx_;
  }

  void add_term(std::uint64_t mask, CycNumber c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask, [](const Term& t, std::uint64_t m) { return t.mask < m; });
    if (it != terms_.end() && it->mask == mask) {
      it->coeff += c;
      if (it->coeff.is_zero()) terms_.erase(it);
    } else if (!c.is_zero()) {
      terms_.insert(it, {mask, std::move(c)});
    }
  }

  std::shared_ptr<const RadicalContext> ctx_;
  std::vector<Term> terms_;  // sorted by mask, nonzero coefficients
};

}  // namespace su2k
