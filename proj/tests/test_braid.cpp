#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "su2k/braid/basis.hpp"
#include "su2k/braid/qubit.hpp"
#include "su2k/braid/representation.hpp"
#include "su2k/braid/word.hpp"

using namespace su2k;

namespace {

/// Paths tau -> ... of n - 1 fusion steps with a spin-1/2 anyon ending at c, labels doubled.
std::size_t count_paths(int k, int n, int c) {
  std::vector<std::size_t> ways(static_cast<std::size_t>(k) + 1, 0);
  ways[1] = 1;
  for (int step = 1; step < n; ++step) {
    std::vector<std::size_t> next(ways.size(), 0);
    for (int b = 0; b <= k; ++b)
      for (int d : {b - 1, b + 1})
        if (d >= 0 && d <= k && oracle::admissible(b, 1, d, k)) next[static_cast<std::size_t>(d)] += ways[static_cast<std::size_t>(b)];
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(c)];
}

double diff(const CMatrixD& a, const CMatrixD& b) { return max_abs_diff<double>(a, b); }

CMatrixD from_std(const std::array<std::array<std::complex<double>, 2>, 2>& m) {
  CMatrixD out(2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out(r, c) = ComplexD(m[r][c].real(), m[r][c].imag());
  return out;
}

}  // namespace

TEST(Basis, DimensionsCountFusionPaths) {
  for (int k = 1; k <= 10; ++k)
    for (int n = 1; n <= 8; ++n)
      for (int c = 0; c <= k; ++c) {
        const SplittingBasis basis(Level(k), kTau, n, AnyonLabel{c});
        EXPECT_EQ(basis.dim(), count_paths(k, n, c)) << k << " " << n << " " << c;
      }
  EXPECT_EQ(dense_qubit_basis(Level(2)).dim(), 2U);
  EXPECT_EQ(sparse_qubit_basis(Level(7)).dim(), 2U);
}

TEST(Basis, FibonacciDimensions) {
  // at k=3 the integer-spin sector reproduces Fibonacci numbers
  const std::vector<std::size_t> fib{1, 1, 2, 3, 5, 8, 13};
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(SplittingBasis(Level(3), AnyonLabel{2}, m + 1, AnyonLabel{2}).dim(), fib[static_cast<std::size_t>(m)]);
}

TEST(Word, ParseAndPrint) {
  const auto w = BraidWord::parse("s1^2 s2^-4 s1");
  ASSERT_EQ(w.size(), 3U);
  EXPECT_EQ(w.letters()[1].generator, 2);
  EXPECT_EQ(w.letters()[1].exponent, -4);
  EXPECT_EQ(BraidWord::parse(w.to_string()).letters(), w.letters());
  EXPECT_TRUE(BraidWord::parse("  ").empty());
  EXPECT_FALSE(w.is_double_braid());
  EXPECT_TRUE(BraidWord::parse("s1^2 s2^-4").is_double_braid());
  for (const char* bad : {"x1", "s0", "s1^0", "s1^", "s^2", "s1^2x"}) EXPECT_THROW(BraidWord::parse(bad), DomainError) << bad;
}

TEST(Generators, UnitaryForAllChargesAndLevels) {
  for (int k = 1; k <= 8; ++k)
    for (int n = 2; n <= 6; ++n)
      for (int c = 0; c <= k; ++c) {
        const SplittingBasis basis(Level(k), kTau, n, AnyonLabel{c});
        if (basis.dim() == 0) continue;
        const BraidRepresentation<double> rep(basis);
        for (int i = 1; i < n; ++i) {
          EXPECT_LT(unitarity_defect(rep.generator(i)), 1e-12);
          EXPECT_LT(diff(rep.generator(i) * rep.generator(i, true), CMatrixD::identity(basis.dim())), 1e-12);
        }
      }
}

TEST(Generators, BraidRelations) {
  for (int k = 1; k <= 10; ++k)
    for (int n = 3; n <= 6; ++n)
      for (int c = 0; c <= k; ++c) {
        const SplittingBasis basis(Level(k), kTau, n, AnyonLabel{c});
        if (basis.dim() == 0) continue;
        const BraidRepresentation<double> rep(basis);
        for (int i = 1; i + 1 < n; ++i) {
          const auto& a = rep.generator(i);
          const auto& b = rep.generator(i + 1);
          EXPECT_LT(diff(a * b * a, b * a * b), 1e-10) << k << " " << n << " " << c << " " << i;
        }
        for (int i = 1; i < n; ++i)
          for (int j = i + 2; j < n; ++j) EXPECT_LT(diff(rep.generator(i) * rep.generator(j), rep.generator(j) * rep.generator(i)), 1e-10);
      }
}

TEST(Generators, DenseQubitClosedForms) {
  for (int k = 2; k <= 30; ++k) {
    const Level level(k);
    const auto rho = dense_qubit_rep(level);
    const auto r = approx_matrix<double>(rho.sigma1);
    oracle::M2 f{}, rr{};
    for (int y = 0; y < 2; ++y)
      for (int m = 0; m < 2; ++m) f[static_cast<std::size_t>(y)][static_cast<std::size_t>(m)] = oracle::f_symbol(1, 1, 1, 1, 2 * m, 2 * y, k);
    rr[0][0] = oracle::r_symbol(1, 1, 0, k);
    rr[1][1] = oracle::r_symbol(1, 1, 2, k);
    EXPECT_LT(diff(r, from_std(rr)), 1e-12);
    EXPECT_LT(diff(approx_matrix<double>(rho.sigma2), from_std(oracle::mul(f, oracle::mul(rr, f)))), 1e-12);
  }
}

TEST(Generators, LevelTwoClifford) {
  const auto g = normalized_qubit_rep(Level(2));
  const std::complex<double> w = std::polar(1.0, M_PI / 4), i(0, 1);
  const double h = 1 / std::sqrt(2.0);
  EXPECT_LT(diff(approx_matrix<double>(g.sigma1), from_std({{{w, 0}, {0, -i * w}}})), 1e-12);
  EXPECT_LT(diff(approx_matrix<double>(g.sigma2), from_std({{{h, -i * h}, {-i * h, h}}})), 1e-12);
}

TEST(Generators, NormalizedHaveUnitDeterminant) {
  for (int k = 2; k <= 20; ++k) {
    const auto g = normalized_qubit_rep(Level(k));
    EXPECT_EQ(det2(g.sigma1), Surd(1L));
    EXPECT_EQ(det2(g.sigma2), Surd(1L));
  }
}

TEST(Generators, SparseEncodingMatchesDense) {
  for (int k = 2; k <= 12; ++k) {
    const Level level(k);
    SparseGenerators s;
    ASSERT_NO_THROW(s = sparse_encoding_rep(level));
    const auto d = dense_qubit_rep(level);
    EXPECT_LT(diff(approx_matrix<double>(s.sigma1), approx_matrix<double>(d.sigma1)), 1e-12);
    EXPECT_LT(diff(approx_matrix<double>(s.sigma2), approx_matrix<double>(d.sigma2)), 1e-12);
    EXPECT_LT(diff(approx_matrix<double>(s.sigma3), approx_matrix<double>(d.sigma1)), 1e-12);
  }
}

TEST(Words, RandomWordsAgreeBetweenEncodings) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> gen(1, 2), exp(-3, 3), len(1, 12);
  for (int k : {3, 5, 7}) {
    const Level level(k);
    const SplittingBasis dense = dense_qubit_basis(level);
    const SplittingBasis sparse = sparse_qubit_basis(level);
    std::vector<std::size_t> to_dense;
    for (const auto& st : sparse.states()) to_dense.push_back(*dense.find({st[0]}));
    auto relabel = [&](const CMatrixD& m) {
      CMatrixD out(2);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) out(to_dense[r], to_dense[c]) = m(r, c);
      return out;
    };
    for (int trial = 0; trial < 100; ++trial) {
      BraidWord w;
      for (int l = len(rng); l > 0; --l) {
        int e = exp(rng);
        if (e == 0) e = 1;
        const int g = gen(rng);
        w.append(g, e);
      }
      EXPECT_LT(diff(evaluate_word(dense, w), relabel(evaluate_word(sparse, w))), 1e-12);
    }
  }
}

TEST(Words, EvaluateRejectsOutOfRangeGenerator) {
  const SplittingBasis dense = dense_qubit_basis(Level(3));
  EXPECT_THROW(evaluate_word(dense, BraidWord::parse("s3")), DomainError);
  EXPECT_LT(diff(evaluate_word(dense, BraidWord()), CMatrixD::identity(2)), 1e-15);
}
