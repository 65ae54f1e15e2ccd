#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "optquad/coefficients.hpp"
#include "optquad/direct_solver.hpp"
#include "optquad/errors.hpp"
#include "optquad/kernel.hpp"

using namespace optquad;

TEST(Assemble, Dimensions) {
  EXPECT_EQ(assemble_system(1, 1).matrix.rows(), 3);
  EXPECT_EQ(assemble_system(2, 2).matrix.rows(), 5);
  EXPECT_EQ(assemble_system(3, 8).matrix.cols(), 12);
  const auto s = assemble_system(3, 8);
  EXPECT_EQ(s.layout.coefficient_count, 9);
  EXPECT_EQ(s.layout.polynomial_count, 2);
  EXPECT_EQ(s.layout.d_index(), 11);
  EXPECT_EQ(s.rhs.size(), 12);
  EXPECT_THROW(assemble_system(3, 1), DomainError);
  EXPECT_THROW(assemble_system(4, 8), DomainError);
}

TEST(Assemble, SymmetricKernelBlockWithZeroDiagonal) {
  for (int m = 1; m <= 3; ++m) {
    const auto s = assemble_system(m, 12);
    EXPECT_TRUE(s.matrix.isApprox(s.matrix.transpose(), 0.0L));
    for (int b = 0; b <= 12; ++b) EXPECT_EQ(s.matrix(b, b), 0.0L);
    EXPECT_EQ(static_cast<double>(s.matrix(0, 3)), psi(m, 3.0 / 12));
  }
}

TEST(Assemble, RightHandSide) {
  const auto s = assemble_system(2, 4);
  for (int b = 0; b <= 4; ++b) {
    EXPECT_NEAR(static_cast<double>(s.rhs(b)), moment_f(2, b, s.grid), 1e-17);
  }
  EXPECT_EQ(s.rhs(s.layout.polynomial_index(0)), 1.0L);
  EXPECT_NEAR(static_cast<double>(s.rhs(s.layout.d_index())), 1 - std::exp(-1.0), 1e-16);
}

TEST(Solve, OrderOneMatchesClosedForm) {
  const auto r = direct_solve(1, 1);
  const double t = (std::numbers::e - 1) / (std::numbers::e + 1);
  EXPECT_NEAR(r.coefficients[0], t, 1e-12);
  EXPECT_NEAR(r.coefficients[1], t, 1e-12);
  EXPECT_NEAR(*r.multiplier_d, 0.0, 1e-12);
  EXPECT_EQ(r.method, Method::DirectSolve);
  EXPECT_TRUE(r.condition_number.has_value());
  for (int n : {1, 2, 4, 8, 16, 32, 64}) {
    const auto a = direct_solve(1, n);
    const auto b = closed_form_m1(n);
    for (int i = 0; i <= n; ++i) EXPECT_NEAR(a.coefficients[i], b.coefficients[i], 1e-12);
  }
}

TEST(Solve, OrderTwoSingleInterval) {
  const auto r = direct_solve(2, 1);
  EXPECT_NEAR(r.coefficients[0], 0.4180232931306735, 1e-12);
  EXPECT_NEAR(r.coefficients[1], 0.5819767068693265, 1e-12);
  EXPECT_NEAR(r.polynomial_multipliers->at(0), -0.0067201804691394701754, 1e-14);
  EXPECT_NEAR(*r.multiplier_d, -0.022721008981436008792, 1e-14);
}

TEST(Solve, OrderThreeReferenceValues) {
  const auto r4 = direct_solve(3, 4);
  const double c4[] = {0.086435931474899439158, 0.31885077115187704958, 0.19137820211925700536,
                       0.31494755640625708391, 0.088387538847709421992};
  for (int b = 0; b <= 4; ++b) EXPECT_NEAR(r4.coefficients[b], c4[b], 1e-15);
  EXPECT_NEAR(r4.polynomial_multipliers->at(0), 0.000068829994889756219944, 1e-16);
  EXPECT_NEAR(r4.polynomial_multipliers->at(1), -0.000046769331365743256996, 1e-16);
  EXPECT_NEAR(*r4.multiplier_d, -0.000081000033284945095224, 1e-16);

  const auto r8 = direct_solve(3, 8);
  const double c8[] = {0.044162103829220585732, 0.15490582363767588346, 0.10799793408437678048,
                       0.13348280532261481305,  0.11900546331260746271, 0.13299671210118605087,
                       0.10927118880539295016,  0.15340640561839547805, 0.044771563288529995493};
  for (int b = 0; b <= 8; ++b) EXPECT_NEAR(r8.coefficients[b], c8[b], 1e-14);
  EXPECT_NEAR(*r8.multiplier_d, -5.7462219596081903683e-6, 1e-15);
}

TEST(Solve, LargestGridsAgainstExtendedReference) {
  const auto r2 = direct_solve(2, 64);
  EXPECT_NEAR(r2.coefficients[0], 0.0061540557216878462364, 1e-11);
  EXPECT_NEAR(r2.coefficients[1], 0.017727816819750529478, 1e-11);
  EXPECT_NEAR(r2.coefficients[32], 0.015624999999999999992, 1e-11);
  const auto r3 = direct_solve(3, 64);
  EXPECT_NEAR(r3.coefficients[0], 0.0055582616272428917444, 1e-10);
  EXPECT_NEAR(r3.coefficients[3], 0.016500351880629987035, 1e-10);
  EXPECT_NEAR(r3.coefficients[32], 0.015624999999957416844, 1e-10);
  EXPECT_LT(*r3.condition_number, kConditionLimit);
}

TEST(Solve, ConstraintsHoldOnReevaluation) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = std::max(1, m - 1); n <= 64; n += (n < 8 ? 1 : 7)) {
      const auto res = constraint_residuals(direct_solve(m, n));
      EXPECT_LE(res.max_abs(), 1e-11) << m << " " << n;
    }
  }
  const auto r = direct_solve(3, 4);
  double s0 = 0, s1 = 0, se = 0;
  for (int b = 0; b <= 4; ++b) {
    s0 += r.coefficients[b];
    s1 += r.coefficients[b] * b / 4.0;
    se += r.coefficients[b] * std::exp(-b / 4.0);
  }
  EXPECT_NEAR(s0, 1.0, 1e-11);
  EXPECT_NEAR(s1, 0.5, 1e-11);
  EXPECT_NEAR(se, 1 - std::exp(-1.0), 1e-11);
}

TEST(Solve, SingularSystemReportsCondition) {
  auto s = assemble_system(2, 4);
  s.matrix.row(1) = s.matrix.row(0);
  try {
    solve(s);
    FAIL() << "expected SolveError";
  } catch (const SolveError& e) {
    EXPECT_GT(e.condition_estimate(), kConditionLimit);
  }
}

TEST(Solve, MismatchedLayoutRejected) {
  auto s = assemble_system(2, 4);
  s.layout.polynomial_count = 0;
  EXPECT_THROW(solve(s), DomainError);
}
