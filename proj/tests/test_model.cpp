#include <gtest/gtest.h>

#include "oracles.hpp"
#include "su2k/model/axioms.hpp"
#include "su2k/model/model_data.hpp"
#include "su2k/model/symbols.hpp"

using namespace su2k;

namespace {

std::complex<double> std_of(const ComplexD& z) { return {z.re, z.im}; }

}  // namespace

TEST(Level, RejectsNegativeLevel) {
  EXPECT_THROW(Level(-1), DomainError);
  EXPECT_EQ(Level(0).label_count(), 1);
  EXPECT_THROW(ModelData(Level(31)), DomainError);
}

TEST(Fusion, RulesMatchTruncatedClebschGordan) {
  const Level level(5);
  const auto out = fusion(level, AnyonLabel{1}, AnyonLabel{1});
  ASSERT_EQ(out.size(), 2U);
  EXPECT_EQ(out[0].twice_j, 0);
  EXPECT_EQ(out[1].twice_j, 2);
  // 3/2 x 2 at k=5 keeps j <= k - j1 - j2 = 3/2
  std::vector<int> got;
  for (auto a : fusion(level, AnyonLabel{3}, AnyonLabel{4})) got.push_back(a.twice_j);
  EXPECT_EQ(got, (std::vector<int>{1, 3}));
  for (int k = 0; k <= 12; ++k) {
    const ModelData model{Level(k)};
    const auto rep = check_fusion_axioms(model);
    EXPECT_TRUE(rep.holds) << k << ": " << rep.counterexample.value_or("");
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) EXPECT_EQ(model.fusion(a, b, c), oracle::admissible(a, b, c, k) ? 1 : 0);
  }
}

TEST(Symbols, QuantumIntegers) {
  for (int k = 1; k <= 30; ++k) {
    const Level level(k);
    for (int n = 0; n <= k + 2; ++n) EXPECT_NEAR(quantum_integer(level, n).approx_double().re, oracle::qint(n, k), 1e-12);
    EXPECT_TRUE(quantum_integer(level, k + 2).is_zero());
  }
  // [2] at k=3 is the golden ratio
  EXPECT_NEAR(quantum_integer(Level(3), 2).approx_double().re, (1 + std::sqrt(5.0)) / 2, 1e-15);
}

TEST(Symbols, RSymbolsMatchFormula) {
  for (int k = 1; k <= 16; ++k) {
    const ModelData model{Level(k)};
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) {
          if (!oracle::admissible(a, b, c, k)) continue;
          const auto r = std_of(model.r(a, b, c).approx_double());
          EXPECT_LT(std::abs(r - oracle::r_symbol(a, b, c, k)), 1e-12) << k << " " << a << b << c;
          EXPECT_NEAR(std::abs(r), 1.0, 1e-14);
        }
  }
}

TEST(Symbols, TauRSymbols) {
  for (int k = 2; k <= 10; ++k) {
    const ModelData model{Level(k)};
    const double q = 2 * M_PI / (k + 2);
    EXPECT_LT(std::abs(std_of(model.r(1, 1, 0).approx_double()) + std::polar(1.0, -0.75 * q)), 1e-14);
    EXPECT_LT(std::abs(std_of(model.r(1, 1, 2).approx_double()) - std::polar(1.0, 0.25 * q)), 1e-14);
  }
}

TEST(Symbols, FSymbolsMatchRacahFormula) {
  for (int k = 1; k <= 8; ++k) {
    const ModelData model{Level(k)};
    const auto& table = model.f_table();
    std::size_t checked = 0;
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c)
          for (int d = 0; d <= k; ++d)
            for (int m = 0; m <= k; ++m)
              for (int n = 0; n <= k; ++n) {
                const bool adm = oracle::admissible(a, b, m, k) && oracle::admissible(m, c, d, k) && oracle::admissible(b, c, n, k) &&
                                 oracle::admissible(a, n, d, k);
                if (!adm) {
                  EXPECT_THROW(table(a, b, c, d, m, n), DomainError);
                  continue;
                }
                const auto f = table(a, b, c, d, m, n).approx<double>();
                EXPECT_NEAR(f.im, 0.0, 1e-13);
                EXPECT_NEAR(f.re, oracle::f_symbol(a, b, c, d, m, n, k), 1e-11) << k << ": " << a << b << c << d << m << n;
                ++checked;
              }
    EXPECT_EQ(checked, table.size());
  }
}

TEST(Symbols, TauFMatrix) {
  for (int k = 2; k <= 12; ++k) {
    const ModelData model{Level(k)};
    const auto block = model.f_table().block(1, 1, 1, 1);
    const double inv2 = 1 / oracle::qint(2, k);
    const double s = std::sqrt(1 - inv2 * inv2);
    const auto m = approx_matrix<double>(block.matrix);
    EXPECT_NEAR(m(0, 0).re, -inv2, 1e-14);
    EXPECT_NEAR(m(0, 1).re, s, 1e-14);
    EXPECT_NEAR(m(1, 0).re, s, 1e-14);
    EXPECT_NEAR(m(1, 1).re, inv2, 1e-14);
  }
}

TEST(Symbols, FBlocksAreOrthogonal) {
  for (int k = 1; k <= 10; ++k) {
    const ModelData model{Level(k)};
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c)
          for (int d = 0; d <= k; ++d) {
            const auto block = model.f_table().block(a, b, c, d);
            if (block.left.empty()) continue;
            EXPECT_LT(unitarity_defect(approx_matrix<double>(block.matrix)), 1e-12);
          }
  }
}

TEST(Axioms, ExactPentagonAndHexagonAtSmallLevels) {
  for (int k : {2, 3}) {
    const ModelData model{Level(k)};
    const auto pent = verify_pentagon_exact(model);
    const auto hex = verify_hexagon_exact(model);
    EXPECT_TRUE(pent.holds) << pent.counterexample.value_or("");
    EXPECT_TRUE(hex.holds) << hex.counterexample.value_or("");
    EXPECT_EQ(pent.numeric, 0U);
    EXPECT_GT(pent.checked, 0U);
    EXPECT_GT(hex.checked, 0U);
  }
  EXPECT_EQ(verify_pentagon_exact(ModelData(Level(2))).checked, 132U);
  EXPECT_EQ(verify_hexagon_exact(ModelData(Level(2))).checked, 72U);
}

TEST(Axioms, NumericPentagonAndHexagon) {
  const Level level(5);
  const auto pent = verify_pentagon_numeric<double>(level, 1e-9);
  const auto hex = verify_hexagon_numeric<double>(level, 1e-9);
  EXPECT_TRUE(pent.holds);
  EXPECT_TRUE(hex.holds);
  EXPECT_LT(pent.max_residual, 1e-12);
  EXPECT_LT(hex.max_residual, 1e-12);
  const auto pent256 = verify_pentagon_numeric<Real256>(level, Real256("1e-60"));
  EXPECT_TRUE(pent256.holds);
  EXPECT_LT(pent256.max_residual, 1e-60);
}

TEST(Modular, SpinsDimensionsSMatrix) {
  for (int k = 1; k <= 12; ++k) {
    const ModelData model{Level(k)};
    ModularReport rep;
    ASSERT_NO_THROW(rep = validate_spins_dims_smatrix(model)) << k;
    for (int t = 0; t <= k; ++t) {
      EXPECT_NEAR(rep.perron_frobenius[static_cast<std::size_t>(t)], oracle::qint(t + 1, k), 1e-10);
      const double angle = 2 * M_PI / (k + 2) * t * (t + 2) / 4.0;
      EXPECT_LT(std::abs(std_of(model.spin(t).approx_double()) - std::polar(1.0, angle)), 1e-13);
    }
    // D^2 = (k+2) / (2 sin^2(pi/(k+2)))
    const double d2 = (k + 2) / (2 * std::pow(std::sin(M_PI / (k + 2)), 2));
    EXPECT_NEAR(rep.global_dimension_squared.approx_double().re, d2, 1e-9 * d2);
  }
}
