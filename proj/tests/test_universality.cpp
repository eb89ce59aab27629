#include <gtest/gtest.h>

#include "oracles.hpp"
#include "su2k/universality/certificate.hpp"
#include "su2k/universality/conway_jones.hpp"

using namespace su2k;

namespace {

using C = std::complex<double>;

C std_of(const ComplexD& z) { return {z.re, z.im}; }

mpq_class q(long a, long b) { return mpq_class(a, b); }

/// A = R~^2 F R~^4 F from closed forms in double precision.
oracle::M2 closed_form_a(int k) {
  const double t = 2 * M_PI / (k + 2);
  const C rt0 = C(0, 1) * std::polar(1.0, -t / 2), rt1 = C(0, -1) * std::polar(1.0, t / 2);
  oracle::M2 f{};
  const double inv2 = 1 / oracle::qint(2, k), s = std::sqrt(oracle::qint(3, k)) * inv2;
  f[0][0] = -inv2;
  f[0][1] = f[1][0] = s;
  f[1][1] = inv2;
  const oracle::M2 r2{{{rt0 * rt0, 0}, {0, rt1 * rt1}}};
  const oracle::M2 r4 = oracle::mul(r2, r2);
  return oracle::mul(oracle::mul(r2, f), oracle::mul(r4, f));
}

}  // namespace

TEST(ABW, MatchesClosedFormMatrixOfA) {
  // entries of A as rational functions of q with s = sqrt(q + 1/q + 1)
  for (int k = 2; k <= 30; ++k) {
    const C qq = std::polar(1.0, 2 * M_PI / (k + 2));
    const C s = std::sqrt(qq + 1.0 / qq + 1.0);
    const C expected[2][2] = {
        {-(std::pow(qq, 4) + qq * qq - qq + 1.0) / (std::pow(qq, 3) + qq * qq), -s * (std::pow(qq, 3) - qq * qq + qq - 1.0) / (qq * qq * (qq + 1.0))},
        {-s * (std::pow(qq, 3) - qq * qq + qq - 1.0) / (qq + 1.0), -(std::pow(qq, 5) + qq * qq + qq + 1.0) / (qq * (qq + 1.0) * (qq + 1.0))}};
    const auto a = approx_matrix<double>(build_ABW(Level(k)).a);
    const auto oa = closed_form_a(k);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        EXPECT_LT(std::abs(std_of(a(r, c)) - oa[r][c]), 1e-12) << k;
        EXPECT_LT(std::abs(std_of(a(r, c)) - expected[r][c]), 1e-12) << k << " " << r << c;
      }
  }
}

TEST(ABW, TracesMatchRationalFunctionsOfQ) {
  for (int k = 2; k <= 30; ++k) {
    const Level level(k);
    const ABW abw = build_ABW(level);
    const C qq = std::polar(1.0, 2 * M_PI / (k + 2));
    const C tr_a = -((qq - 1.0) * qq + 1.0) * (qq * qq + 1.0) / (qq * qq);
    const C tr_b = (qq * qq + 1.0) * ((qq - 1.0) * qq * (qq * qq + 1.0) + 1.0) / std::pow(qq, 3);
    EXPECT_LT(std::abs(std_of(radical_free_trace(abw.a).approx_double()) - tr_a), 1e-12);
    const C tr_w = -((qq - 1.0) * qq + 1.0) * (std::pow(qq, 4) - 2.0 * std::pow(qq, 3) - 2.0 * qq + 1.0) / std::pow(qq, 3);
    EXPECT_LT(std::abs(std_of(radical_free_trace(abw.b).approx_double()) - tr_b), 1e-12);
    EXPECT_LT(std::abs(std_of(radical_free_trace(abw.w).approx_double()) - tr_w), 1e-12);
    const auto w = approx_matrix<double>(abw.w);
    const auto a = approx_matrix<double>(abw.a), b = approx_matrix<double>(abw.b);
    const auto w_direct = a * b * a.adjoint() * b.adjoint();
    EXPECT_LT(max_abs_diff<double>(w, w_direct), 1e-12);
  }
}

TEST(ABW, LevelFourSquaresToMinusIdentity) {
  const ABW abw = build_ABW(Level(4));
  EXPECT_TRUE(abw.a * abw.a == Surd(-1L) * SurdMatrix::identity(2));
}

TEST(TraceIdentities, HoldExactlyForAllLevels) {
  for (int k = 2; k <= 30; ++k) {
    const Level level(k);
    const ABW abw = build_ABW(level);
    const CycNumber c1 = CycNumber::cos_pi_fraction(2, k + 2), c2 = CycNumber::cos_pi_fraction(4, k + 2), c3 = CycNumber::cos_pi_fraction(6, k + 2);
    const CycNumber half(q(1, 2));
    const CycNumber ca = half * radical_free_trace(abw.a), cb = half * radical_free_trace(abw.b), cw = half * radical_free_trace(abw.w);
    EXPECT_TRUE((ca - c1 + c2 + CycNumber(1L)).is_zero()) << k;
    EXPECT_TRUE((CycNumber(2L) * c1 - c2 + c3 - cb - CycNumber(1L)).is_zero()) << k;
    EXPECT_TRUE((CycNumber(3L) * c1 - CycNumber(3L) * c2 + c3 + cw - CycNumber(2L)).is_zero()) << k;
    for (auto which : {TraceMatrix::A, TraceMatrix::B, TraceMatrix::W}) EXPECT_NO_THROW(trace_to_cosine_identity(which, level, abw));
  }
  EXPECT_EQ(trace_to_cosine_identity(TraceMatrix::A, Level(3)).to_string(), "-cos(2pi/5) + cos(4pi/5) + cos(theta) = -1");
}

TEST(Order, ExactDecisionAgreesWithMatrixPowers) {
  for (int k = 2; k <= 30; ++k) {
    const Level level(k);
    const ABW abw = build_ABW(level);
    for (const SurdMatrix* m : {&abw.a, &abw.b}) {
      const auto exact = decide_projective_order(*m, level);
      const auto heuristic = heuristic_projective_order(approx_matrix<double>(*m), 2000);
      EXPECT_EQ(exact.finite, heuristic.has_value()) << k;
      if (exact.finite && heuristic) {
        EXPECT_EQ(exact.projective_order, *heuristic) << k;
      }
    }
  }
  const auto a4 = decide_projective_order(build_ABW(Level(4)).a, Level(4));
  EXPECT_TRUE(a4.finite);
  EXPECT_EQ(a4.projective_order, 2);
  const auto b4 = decide_projective_order(build_ABW(Level(4)).b, Level(4));
  EXPECT_EQ(b4.projective_order, 3);
  const auto a8 = decide_projective_order(build_ABW(Level(8)).a, Level(8));
  EXPECT_EQ(a8.projective_order, 3);
}

TEST(Order, RejectsNonSpecialUnitary) {
  SurdMatrix m = SurdMatrix::identity(2);
  m(0, 0) = Surd(2L);
  EXPECT_THROW(decide_projective_order(m, Level(3)), DomainError);
  EXPECT_THROW(decide_projective_order(SurdMatrix::identity(3), Level(3)), DomainError);
}

TEST(Order, PowersOfRotations) {
  // diag(zeta_m, zeta_m^-1) has projective order m / gcd(m, 2)
  for (int m = 3; m <= 24; ++m) {
    const Level level(m);
    const SurdMatrix d = SurdMatrix::diagonal({Surd(CycNumber::root_of_unity(m, 1)), Surd(CycNumber::root_of_unity(m, -1))});
    const auto dec = decide_projective_order(d, level);
    ASSERT_TRUE(dec.finite) << m;
    EXPECT_EQ(dec.projective_order, m % 2 ? m : m / 2) << m;
  }
}

TEST(Certificates, VerdictsMatchTheorem) {
  for (int k = 3; k <= 30; ++k) {
    const auto cert = kitaev_certificate(Level(k));
    EXPECT_EQ(cert.dense, k != 4 && k != 8) << k << ": " << cert.reason;
    EXPECT_EQ(cert.verdict(), cert.dense ? "dense" : "not-certified");
  }
  EXPECT_FALSE(kitaev_certificate(Level(2)).dense);
  EXPECT_EQ(kitaev_certificate(Level(4)).reason, "A finite projective order 2; B finite projective order 3");
  EXPECT_THROW(kitaev_certificate(Level(1)), DomainError);
}

TEST(Statements, RationalityPattern) {
  for (int k = 3; k <= 30; ++k) {
    const auto s = statements_ABCD(k);
    // Niven: cos(2 pi/(k+2)) rational iff k+2 in {1,2,3,4,6}
    EXPECT_EQ(s.cos2.has_value(), k == 4) << k;
    EXPECT_EQ(s.cos4.has_value(), k == 4 || k == 6 || k == 10) << k;
    EXPECT_EQ(s.cos_theta.has_value(), k == 4 || k == 8) << k;
    const bool nontrivial = s.combination && (s.combination->cos2 != 0 || s.combination->cos4 != 0);
    EXPECT_EQ(nontrivial, k == 3 || k == 8) << k;
  }
  EXPECT_EQ(statements_ABCD(3).combination->to_string(3), "-cos(2pi/5) - cos(4pi/5) = 1/2");
  EXPECT_EQ(statements_ABCD(8).combination->to_string(8), "cos(2pi/10) - cos(4pi/10) = 1/2");
  EXPECT_EQ(*statements_ABCD(8).cos_theta, q(-1, 2));
  EXPECT_EQ(*statements_ABCD(4).cos_theta, q(0, 1));
  EXPECT_THROW(statements_ABCD(2), DomainError);
}

TEST(SpecialValues, CosThetaClosedForms) {
  auto cos_theta = [](int k) { return trace_to_cosine_identity(TraceMatrix::A, Level(k)).cos_theta; };
  auto near = [](const CycNumber& x, double v) { return std::abs(x.approx_double().re - v) < 1e-14 && std::abs(x.approx_double().im) < 1e-14; };
  EXPECT_TRUE(near(cos_theta(3), (std::sqrt(5.0) - 2) / 2));
  EXPECT_TRUE(near(cos_theta(6), (std::sqrt(2.0) - 2) / 2));
  EXPECT_TRUE(near(cos_theta(10), (std::sqrt(3.0) - 3) / 2));
  EXPECT_TRUE(near(cos_theta(5), std::cos(3 * M_PI / 7) + std::cos(2 * M_PI / 7) - 1));
  // exact: (cos theta_3)^2 + 2 cos theta_3 = 1/4, i.e. 4x^2 + 8x - 1 = 0
  const CycNumber x = cos_theta(3);
  EXPECT_TRUE((CycNumber(4L) * x * x + CycNumber(8L) * x - CycNumber(1L)).is_zero());
  // (2x + 2)^2 = 2 at k=6 and (2x + 3)^2 = 3 at k=10
  const CycNumber y = cos_theta(6), z = cos_theta(10);
  EXPECT_EQ((CycNumber(2L) * y + CycNumber(2L)).pow(2), CycNumber(2L));
  EXPECT_EQ((CycNumber(2L) * z + CycNumber(3L)).pow(2), CycNumber(3L));
}

TEST(ConwayJones, ListIdentitiesHoldExactly) {
  const auto& list = conway_jones_list();
  ASSERT_EQ(list.size(), 9U);
  for (const auto& id : list) {
    const auto v = conway_jones_is_rational(id.terms);
    ASSERT_TRUE(v) << id.text;
    EXPECT_EQ(*v, id.rhs) << id.text;
    long double sum = 0;
    for (const auto& t : id.terms) sum += t.coeff.get_d() * std::cos(static_cast<long double>(M_PI) * t.angle.get_d());
    EXPECT_NEAR(static_cast<double>(sum), id.rhs.get_d(), 1e-14) << id.text;
  }
  EXPECT_EQ(list.front().rhs, q(1, 2));
  for (const auto& phi : {q(1, 7), q(1, 11), q(2, 17), q(1, 8)}) {
    const auto fam = conway_jones_family(phi);
    EXPECT_EQ(conway_jones_is_rational(fam.terms), mpq_class(0));
  }
}

TEST(ConwayJones, IdentitiesAtHighPrecision) {
  using boost::multiprecision::cos;
  const Real256 pi256 = boost::math::constants::pi<Real256>();
  for (const auto& id : conway_jones_list()) {
    Real256 sum = 0;
    for (const auto& t : id.terms) {
      const Real256 angle = pi256 * Real256(t.angle.get_num().get_si()) / Real256(t.angle.get_den().get_si());
      sum += Real256(t.coeff.get_num().get_si()) / Real256(t.coeff.get_den().get_si()) * cos(angle);
    }
    EXPECT_LT(boost::multiprecision::abs(sum - Real256(1) / 2), Real256("1e-70")) << id.text;
  }
}

TEST(ConwayJones, Matching) {
  const auto m = conway_jones_match({{2, q(1, 5)}, {-2, q(2, 5)}});
  ASSERT_TRUE(m);
  EXPECT_EQ(m->value, 1);
  EXPECT_TRUE(m->minimal);
  EXPECT_EQ(m->identity, "cos(pi/5) - cos(2pi/5) = 1/2");
  const auto fam = conway_jones_match({{-1, q(1, 9)}, {1, q(2, 9)}, {1, q(4, 9)}});
  ASSERT_TRUE(fam);
  EXPECT_EQ(fam->value, 0);
  EXPECT_TRUE(fam->in_list());
  EXPECT_FALSE(conway_jones_match({{1, q(1, 7)}}));
  const auto single = conway_jones_match({{1, q(1, 3)}});
  ASSERT_TRUE(single);
  EXPECT_EQ(single->identity, "cos(pi/3) = 1/2");
  EXPECT_THROW(conway_jones_match({{1, q(1, 2)}}), DomainError);
  EXPECT_THROW(conway_jones_match({{1, q(1, 5)}, {1, q(1, 5)}}), DomainError);
  EXPECT_THROW(conway_jones_match({{0, q(1, 5)}}), DomainError);
  EXPECT_THROW(conway_jones_match({{1, q(1, 5)}, {1, q(1, 7)}, {1, q(1, 9)}, {1, q(1, 11)}, {1, q(1, 13)}}), DomainError);
}

TEST(ConwayJones, NonMinimalRelation) {
  // cos(pi/3) alone is rational, so {pi/3, pi/5, 2pi/5} is not minimal
  const auto m = conway_jones_match({{1, q(1, 3)}, {1, q(1, 5)}, {-1, q(2, 5)}});
  ASSERT_TRUE(m);
  EXPECT_EQ(m->value, 1);
  EXPECT_FALSE(m->minimal);
  EXPECT_FALSE(m->in_list());
}

TEST(ConwayJones, RationalityTestRejectsLongInputs) {
  std::vector<CosineTerm> terms(11, {1, q(1, 7)});
  EXPECT_THROW(conway_jones_is_rational(terms), DomainError);
  // sum of cos(2 pi j / 7), j = 1..3, is -1/2
  EXPECT_EQ(conway_jones_is_rational({{1, q(2, 7)}, {1, q(4, 7)}, {1, q(6, 7)}}), q(-1, 2));
}
