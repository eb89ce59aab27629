#pragma once

#include <cstddef>
#include <vector>

#include "su2k/arith/matrix.hpp"
#include "su2k/braid/basis.hpp"
#include "su2k/braid/word.hpp"
#include "su2k/model/symbols.hpp"

namespace su2k {

namespace detail {

/// Matrix of sigma_i (counterclockwise) on a left-comb basis, in whatever ring f and r return.
/// sigma_1 is diagonal with R^{aa}_{b_1}; sigma_i for i >= 2 mixes b_{i-1} inside blocks of fixed
/// (b_{i-2}, b_i) as F^{-1} diag(R^{aa}_y) F with F = F^{b_{i-2} a a}_{b_i}, rows y, columns b_{i-1}.
template <class T, class FFn, class RFn>
SquareMatrix<T> comb_generator(const SplittingBasis& basis, int i, FFn&& f, RFn&& r) {
  const int n = basis.anyon_count();
  if (i < 1 || i > n - 1)
    throw DomainError("braid generator s" + std::to_string(i) + " out of range for " + std::to_string(n) + " anyons");
  const Level& level = basis.level();
  const int a = basis.anyon().twice_j;
  SquareMatrix<T> out(basis.dim());
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    const auto chain = basis.chain(s);
    if (i == 1) {
      out(s, s) = r(a, a, chain[1]);
      continue;
    }
    const int left = chain[static_cast<std::size_t>(i - 2)];
    const int mid = chain[static_cast<std::size_t>(i - 1)];
    const int right = chain[static_cast<std::size_t>(i)];
    std::vector<int> internal = basis.states()[s];
    for (int m2 = 0; m2 <= level.k(); ++m2) {
      if (!admissible(level, left, a, m2) || !admissible(level, m2, a, right)) continue;
      internal[static_cast<std::size_t>(i - 2)] = m2;
      const auto target = basis.find(internal);
      if (!target) throw IntegrityError("splitting basis is missing a state reached by a braid generator");
      T entry(0L);
      for (int y = 0; y <= level.k(); ++y) {
        if (!admissible(level, a, a, y) || !admissible(level, left, y, right)) continue;
        entry += f(left, a, a, right, m2, y) * r(a, a, y) * f(left, a, a, right, mid, y);
      }
      out(*target, s) = entry;
    }
  }
  return out;
}

}  // namespace detail

/// sigma_i exactly, entries in Q(zeta_{4(k+2)}) with quantum-integer radicals.
inline SurdMatrix exact_generator(const SplittingBasis& basis, int i, bool inverse = false) {
  const auto table = quantum_table(basis.level());
  const Level& level = basis.level();
  return detail::comb_generator<Surd>(
      basis, i, [&](int j1, int j2, int j3, int j, int j12, int j23) { return f_symbol(*table, j1, j2, j3, j, j12, j23); },
      [&](int x, int y, int z) {
        const CycNumber rv = r_symbol(level, {x}, {y}, {z});
        return Surd(inverse ? rv.conj() : rv);
      });
}

/// Braid group representation on a splitting basis, with generator matrices at the precision of Real
/// computed once and cached.
template <class Real>
class BraidRepresentation {
 public:
  explicit BraidRepresentation(SplittingBasis basis) : basis_(std::move(basis)) {
    const NumericSymbols<Real> symbols(basis_.level());
    for (int i = 1; i < basis_.anyon_count(); ++i) {
      for (bool inverse : {false, true}) {
        auto m = detail::comb_generator<Complex<Real>>(
            basis_, i, [&](int j1, int j2, int j3, int j, int j12, int j23) { return Complex<Real>(symbols.f(j1, j2, j3, j, j12, j23)); },
            [&](int x, int y, int z) { return inverse ? symbols.r(x, y, z).conj() : symbols.r(x, y, z); });
        (inverse ? inverses_ : generators_).push_back(std::move(m));
      }
    }
  }

  const SplittingBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  int generator_count() const { return static_cast<int>(generators_.size()); }

  const CMatrix<Real>& generator(int i, bool inverse = false) const {
    if (i < 1 || i > generator_count())
      throw DomainError("braid generator s" + std::to_string(i) + " out of range for " + std::to_string(basis_.anyon_count()) + " anyons");
    return (inverse ? inverses_ : generators_)[static_cast<std::size_t>(i - 1)];
  }

  /// Ordered product of generator powers; the empty word gives the identity.
  CMatrix<Real> evaluate(const BraidWord& word) const {
    CMatrix<Real> out = CMatrix<Real>::identity(dim());
    for (const auto& l : word.letters()) {
      const auto& g = generator(l.generator, l.exponent < 0);
      out = out * g.pow(static_cast<unsigned long long>(l.exponent < 0 ? -l.exponent : l.exponent));
    }
    return out;
  }

 private:
  SplittingBasis basis_;
  std::vector<CMatrix<Real>> generators_;
  std::vector<CMatrix<Real>> inverses_;
};

inline CMatrixD braid_generator_matrix(const SplittingBasis& basis, int i) { return BraidRepresentation<double>(basis).generator(i); }

inline CMatrixD evaluate_word(const SplittingBasis& basis, const BraidWord& word) { return BraidRepresentation<double>(basis).evaluate(word); }

}  // namespace su2k
