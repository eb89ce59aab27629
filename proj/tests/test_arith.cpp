#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "su2k/arith/cyclotomic.hpp"
#include "su2k/arith/number_theory.hpp"
#include "su2k/arith/small_cyclotomic.hpp"
#include "su2k/arith/surd.hpp"

using namespace su2k;

namespace {

CycNumber random_element(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<long long> exp(0, order - 1);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<std::pair<long long, mpq_class>> terms;
  for (int i = 0; i < 4; ++i) terms.push_back({exp(rng), mpq_class(num(rng), den(rng))});
  return CycNumber::from_terms(order, terms);
}

double error(const CycNumber& x, std::complex<double> expected) {
  const ComplexD v = x.approx_double();
  return std::abs(std::complex<double>(v.re, v.im) - expected);
}

}  // namespace

TEST(CycNumber, RootOfUnityPowers) {
  const CycNumber z = CycNumber::root_of_unity(12, 1);
  EXPECT_EQ(z.pow(12), CycNumber(1L));
  EXPECT_EQ(z.pow(6), CycNumber(-1L));
  EXPECT_EQ(CycNumber::root_of_unity(12, 13), z);
  EXPECT_EQ(CycNumber::root_of_unity(12, -1), z.conj());
  EXPECT_LT(error(z, std::polar(1.0, M_PI / 6)), 1e-15);
}

TEST(CycNumber, KnownSurds) {
  const CycNumber z8 = CycNumber::root_of_unity(8, 1);
  const CycNumber sqrt2 = z8 + z8.conj();
  EXPECT_EQ(sqrt2 * sqrt2, CycNumber(2L));
  const CycNumber z5 = CycNumber::root_of_unity(5, 1);
  const CycNumber golden = CycNumber(1L) + z5 + z5.conj();  // 1 + 2 cos(2pi/5)
  EXPECT_EQ(golden * golden, golden + CycNumber(1L));
  // 2cos(2pi/5) is a root of x^2 + x - 1
  const CycNumber c = z5 + z5.conj();
  EXPECT_TRUE((c * c + c - CycNumber(1L)).is_zero());
}

TEST(CycNumber, CosPiFraction) {
  EXPECT_EQ(CycNumber::cos_pi_fraction(1, 3).rational_value(), mpq_class(1, 2));
  EXPECT_EQ(CycNumber::cos_pi_fraction(1, 2).rational_value(), mpq_class(0));
  EXPECT_EQ(CycNumber::cos_pi_fraction(2, 3).rational_value(), mpq_class(-1, 2));
  EXPECT_FALSE(CycNumber::cos_pi_fraction(1, 4).rational_value());
  for (int r = 1; r <= 30; ++r)
    for (int p = -2 * r; p <= 2 * r; ++p) EXPECT_LT(error(CycNumber::cos_pi_fraction(p, r), std::cos(M_PI * p / r)), 1e-14) << p << "/" << r;
}

TEST(CycNumber, MinimalPolynomialOfCos2PiOver7) {
  // 8x^3 + 4x^2 - 4x - 1 has no rational root, so cos(2pi/7) is irrational of degree 3.
  const CycNumber c = CycNumber::cos_pi_fraction(2, 7);
  const CycNumber one(1L);
  EXPECT_TRUE((CycNumber(8L) * c.pow(3) + CycNumber(4L) * c * c - CycNumber(4L) * c - one).is_zero());
  for (long num : {1, -1})
    for (long den : {1, 2, 4, 8}) {
      const double x = double(num) / den;
      EXPECT_NE(8 * x * x * x + 4 * x * x - 4 * x - 1, 0.0);
    }
  EXPECT_FALSE(c.rational_value());
  EXPECT_FALSE(c.galois_invariant());
}

TEST(CycNumber, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int order : {1, 3, 4, 5, 8, 12, 20, 24, 36, 60}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNumber a = random_element(rng, order), b = random_element(rng, order), c = random_element(rng, order);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CycNumber(1L));
      }
      const auto ab = a.approx_double() * b.approx_double();
      EXPECT_LT(error(a * b, {ab.re, ab.im}), 1e-9 * (1 + std::abs(std::complex<double>(ab.re, ab.im))));
    }
  }
}

TEST(CycNumber, CanonicalizationIsIdempotentAcrossOrders) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const CycNumber a = random_element(rng, 12);
    const CycNumber lifted = a.lifted(60);
    EXPECT_EQ(lifted, a);
    EXPECT_EQ(lifted.to_string(), (lifted + CycNumber(0L)).to_string());
    EXPECT_EQ(a.lifted(12), a);
  }
  EXPECT_EQ(CycNumber(mpq_class(3, 3)), CycNumber(1L));
  EXPECT_TRUE(CycNumber(mpq_class(0, 4)).is_zero());
  EXPECT_EQ(CycNumber(mpq_class(2, 4)).rational_value(), mpq_class(1, 2));
  // zeta_4^2 lives in Q
  const CycNumber minus_one = CycNumber::root_of_unity(4, 2);
  EXPECT_EQ(minus_one.rational_value(), mpq_class(-1));
}

TEST(CycNumber, GaloisInvarianceMatchesRationality) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int order = std::vector<int>{5, 8, 12, 20}[static_cast<std::size_t>(pick(rng))];
    CycNumber x = random_element(rng, order);
    if (trial % 3 == 0) x = CycNumber(mpq_class(trial % 7 - 3, 1 + trial % 5));
    if (trial % 3 == 1) {
      // a norm-like symmetric sum is rational
      CycNumber s(0L);
      for (int a = 1; a < order; ++a)
        if (std::gcd(a, order) == 1) s += x.galois(a);
      x = s;
    }
    bool invariant = true;
    for (int a = 1; a < order; ++a)
      if (std::gcd(a, order) == 1 && x.galois(a) != x) invariant = false;
    EXPECT_EQ(invariant, x.rational_value().has_value());
    EXPECT_EQ(invariant, x.galois_invariant());
  }
}

TEST(CycNumber, MultiprecisionApproximation) {
  const CycNumber c = CycNumber::cos_pi_fraction(2, 7);
  const Real128 v = c.approx<Real128>().re;
  const Real128 expected = boost::multiprecision::cos(2 * boost::math::constants::pi<Real128>() / 7);
  const Real128 ulp = boost::multiprecision::ldexp(Real128(1), -127);
  EXPECT_LT(boost::multiprecision::abs(v - expected), 10 * ulp);
}

TEST(CycNumber, RationalRelation) {
  const auto c1 = CycNumber::cos_pi_fraction(1, 5), c2 = CycNumber::cos_pi_fraction(2, 5);
  const auto rel = rational_relation({CycNumber(1L), c1, c2});
  ASSERT_TRUE(rel);
  // cos(pi/5) - cos(2pi/5) = 1/2
  EXPECT_EQ((*rel)[1] / (*rel)[0], mpq_class(-2));
  EXPECT_EQ((*rel)[2] / (*rel)[0], mpq_class(2));
  EXPECT_FALSE(rational_relation({CycNumber(1L), CycNumber::cos_pi_fraction(2, 7)}));
}

TEST(Surd, SquareRootsOfQuantumIntegers) {
  const auto ctx = radical_context(5);
  for (int n = 1; n < 5; ++n) {
    const Surd s = Surd::sqrt_qint(ctx, n);
    const auto sq = (s * s).radical_free();
    ASSERT_TRUE(sq);
    EXPECT_EQ(*sq, ctx->qint(n));
    const double expected = std::sqrt(std::sin(n * M_PI / 5) / std::sin(M_PI / 5));
    EXPECT_NEAR(s.approx<double>().re, expected, 1e-14);
  }
  const Surd s2 = Surd::sqrt_qint(ctx, 2);
  EXPECT_FALSE((s2 - s2 + Surd(1L)).exactly_zero().value_or(true));
  EXPECT_TRUE((s2 - s2).is_structurally_zero());
}

TEST(SmallCyc, AgreesWithCycNumber) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const CycNumber a = random_element(rng, 20), b = random_element(rng, 20);
    const SmallCyc sa = SmallCyc::from(a), sb = SmallCyc::from(b);
    EXPECT_TRUE((sa * sb - SmallCyc::from(a * b)).is_zero());
    EXPECT_TRUE((sa + sb - SmallCyc::from(a + b)).is_zero());
    EXPECT_EQ((sa - sb).is_zero(), a == b);
  }
}

TEST(NumberTheory, Totient) {
  const std::vector<int> expected{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(nt::totient(n), expected[static_cast<std::size_t>(n - 1)]);
  const auto table = nt::totient_table(500);
  for (int n = 1; n <= 500; ++n) {
    int count = 0;
    for (int m = 1; m <= n; ++m) count += std::gcd(m, n) == 1;
    EXPECT_EQ(table[static_cast<std::size_t>(n)], count);
  }
  EXPECT_THROW(nt::totient(0), DomainError);
}

TEST(NumberTheory, CyclotomicPolynomials) {
  // Phi_12 = x^4 - x^2 + 1
  const auto p = *nt::cyclotomic_polynomial(12);
  ASSERT_EQ(p.size(), 5U);
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[1], 0);
  EXPECT_EQ(p[2], -1);
  EXPECT_EQ(p[3], 0);
  EXPECT_EQ(p[4], 1);
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(static_cast<int>(nt::cyclotomic_polynomial(n)->size()) - 1, nt::totient(n));
}
