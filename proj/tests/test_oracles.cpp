#include <gtest/gtest.h>

#include <random>

#include "kahler/oracles.hpp"
#include "support/independent_oracles.hpp"

namespace kahler {
namespace {

OracleInputs<Rational> in(long d, long gamma, Rational mu, Rational t, Rational base_r2) {
  return {d, gamma, std::move(mu), std::move(t), std::move(base_r2)};
}

Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

TEST(ScalarCurvatureFormula, Examples) {
  // Ball base with mu = 1: c = 0, so k = -(d+1)(d+2) wherever we are.
  for (Rational n_mu : {q(1), q(1, 3), q(7, 8)}) {
    EXPECT_EQ(scalar_curvature_formula(in(2, 3, q(1), q(1, 5), q(4, 3)), n_mu), q(-12));
  }
  EXPECT_EQ(scalar_curvature_formula(in(1, 2, q(2), q(0), q(1)), q(1)), q(-5));
  // t -> N^mu kills the first term.
  EXPECT_EQ(scalar_curvature_formula(in(3, 5, q(2), q(1, 2), q(1)), q(1, 2)), q(-20));
}

TEST(R2Formula, Examples) {
  EXPECT_EQ(r2_formula(in(2, 3, q(1), q(0), q(4, 3))), q(24));
  // t = 1 leaves 2d(d+1) + 4(d+1).
  EXPECT_EQ(r2_formula(in(4, 4, q(4, 5), q(1), q(5, 2))), q(2 * 4 * 5 + 4 * 5));
}

TEST(LapAndRicFormulas, Examples) {
  EXPECT_EQ(lap_k_formula(in(1, 2, q(2), q(0), q(1))), q(-1));
  for (Rational t : {q(0), q(1, 3), q(9, 10)}) {
    // mu = gamma/(d+1) means c = 0.
    EXPECT_EQ(lap_k_formula(in(4, 4, q(4, 5), t, q(5, 2))), q(0));
    EXPECT_EQ(ric2_formula(in(4, 4, q(4, 5), t, q(5, 2))), q(5 * 6 * 6));
  }
  // Disk, mu = 2, t = 0: c = 1, |Ric|^2 = 1 - 6 + 18.
  EXPECT_EQ(ric2_formula(in(1, 2, q(2), q(0), q(1))), q(13));
}

TEST(A2QuadraticCoeffs, TypeOneTwoTwo) {
  const auto c = a2_quadratic_coeffs(in(4, 4, q(4, 5), q(0), q(5, 2)));
  EXPECT_EQ(c.c0, q(15, 16));
  EXPECT_EQ(c.c1, q(-15, 8));
  EXPECT_EQ(c.c2, q(1375, 16));
}

TEST(A2QuadraticCoeffs, ConstancyPointGivesHyperbolicConstant) {
  // c = 0 and base_r2 = 2d/(d+1): only c2 survives, and it equals
  // n(n+1)(3n+2)(n-1)/24 with n = d+1.
  for (long d = 1; d <= 12; ++d) {
    const long gamma = d + 1;
    const auto c = a2_quadratic_coeffs(in(d, gamma, q(1), q(0), q(2 * d, d + 1)));
    const long n = d + 1;
    EXPECT_EQ(c.c0, 0);
    EXPECT_EQ(c.c1, 0);
    EXPECT_EQ(c.c2, q(n * (n + 1) * (3 * n + 2) * (n - 1), 24)) << d;
  }
}

TEST(A2QuadraticCoeffs, TwoC0PlusC1VanishesOnlyAtDegenerateDimensions) {
  // 2 c0 + c1 = d^2 (d+3) c / 4 for every (d, gamma, mu) once
  // base_r2 = 2d/(d+1) is imposed. For c != 0 it vanishes only at d = 0, -3.
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 50; ++trial) {
    const long d = 1 + static_cast<long>(gen() % 20);
    const long gamma = 2 + static_cast<long>(gen() % 30);
    const Rational mu = testing::random_rational(gen, 40, 17);
    const auto in_ = in(d, gamma, mu, q(0), q(2 * d, d + 1));
    const auto c = a2_quadratic_coeffs(in_);
    const Rational cc = c_of(in_);
    EXPECT_EQ(Rational(2 * c.c0 + c.c1), Rational(Rational(d * d * (d + 3)) * cc / 4));
  }
}

TEST(A2QuadraticCoeffs, MatchesBruteForceRegroupingOnRandomRationals) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const long d = 1 + static_cast<long>(gen() % 30);
    const long gamma = 2 + static_cast<long>(gen() % 40);
    const Rational mu = testing::random_rational(gen, 60, 25);
    const Rational base_r2 = testing::random_rational(gen, 200, 50);
    const auto c = a2_quadratic_coeffs(in(d, gamma, mu, q(0), base_r2));
    const testing::RatPoly p = testing::regrouped_a2(d, gamma, mu, base_r2);
    ASSERT_LE(p.c.size(), 3u);
    EXPECT_EQ(c.c0, p.coeff(2)) << trial;
    EXPECT_EQ(c.c1, p.coeff(1)) << trial;
    EXPECT_EQ(c.c2, p.coeff(0)) << trial;
    // And pointwise against the direct combination of the closed forms.
    const Rational t = Rational(testing::random_rational(gen, 9, 10) / 10);
    EXPECT_EQ(a2_formula(in(d, gamma, mu, t, base_r2)), Rational(c.c0 * t * t + c.c1 * t + c.c2));
  }
}

TEST(TabulatedClosedForms, Values) {
  EXPECT_EQ(appendix_R2_base(DomainSpec::type1(2, 2)), q(5, 2));
  EXPECT_EQ(appendix_R2_base(DomainSpec::type1(1, 3)), q(3, 2));
  EXPECT_EQ(appendix_R2_base(DomainSpec::type3(2)), q(7, 3));
  EXPECT_EQ(appendix_R2_base(DomainSpec::type2(4)), q(8, 3));
  EXPECT_EQ(appendix_R2_base(DomainSpec::type4(5)), q(13, 5));
  EXPECT_EQ(appendix_R2_base(DomainSpec::type3(3)), q(45, 8));
  EXPECT_EQ(exact_R2_base(DomainSpec::type3(3)), q(33, 8));
  EXPECT_EQ(exact_R2_base(DomainSpec::type3(2)), appendix_R2_base(DomainSpec::type3(2)));
  EXPECT_THROW(appendix_R2_base(DomainSpec::exc5()), std::invalid_argument);
}

TEST(TabulatedClosedForms, TypeOneSymmetryAndBallValue) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      EXPECT_EQ(appendix_R2_base(DomainSpec::type1(m, n)), appendix_R2_base(DomainSpec::type1(n, m)));
    }
  }
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(appendix_R2_base(DomainSpec::type1(1, n)), q(2 * n, n + 1));
}

TEST(OracleInputs, DoubleConversionAgrees) {
  const auto exact = oracle_inputs(DomainSpec::type1(2, 2), q(4, 5), q(3, 10));
  const auto v = oracle_values_at_origin(to_double(exact));
  EXPECT_NEAR(v.a2, to_double(a2_formula(exact)), 1e-12);
  EXPECT_NEAR(v.k, to_double(scalar_curvature_formula(exact, q(1))), 1e-12);
  EXPECT_THROW(oracle_inputs(DomainSpec::type1(1, 1), q(0), q(0)), std::invalid_argument);
}

}  // namespace
}  // namespace kahler
