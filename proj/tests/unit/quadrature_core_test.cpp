#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "optquad/coefficients.hpp"
#include "optquad/errors.hpp"
#include "optquad/grid.hpp"
#include "optquad/integrands.hpp"
#include "optquad/kernel.hpp"
#include "optquad/rule.hpp"
#include "oracles.hpp"

using namespace optquad;

namespace {
const double e = std::numbers::e;
}

TEST(Grid, ValidatesOrderAndSize) {
  EXPECT_THROW(GridSpec::make(0, 4), DomainError);
  EXPECT_THROW(GridSpec::make(4, 4), DomainError);
  EXPECT_THROW(GridSpec::make(2, 0), DomainError);
  EXPECT_THROW(GridSpec::make(3, 1), DomainError);  // two nodes, three conditions
  EXPECT_NO_THROW(GridSpec::make(3, 2));
  EXPECT_NO_THROW(GridSpec::make(1, 1));
}

TEST(Grid, SpacingTimesCountIsOne) {
  for (int n = 1; n <= 200; ++n) {
    const auto g = GridSpec::make(1, n);
    EXPECT_NEAR(g.h * n, 1.0, std::numeric_limits<double>::epsilon()) << n;
    EXPECT_EQ(g.node(0), 0.0);
    EXPECT_EQ(g.node(n), 1.0);
    EXPECT_EQ(g.node_count(), n + 1);
  }
}

TEST(Psi, ZeroAtOrigin) {
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(psi(m, 0.0), 0.0);
}

TEST(Psi, ReferenceValues) {
  EXPECT_DOUBLE_EQ(psi(1, 1.0), 0.58760059682190072844);
  EXPECT_DOUBLE_EQ(psi(2, 1.0), 0.087600596821900728441);
  EXPECT_DOUBLE_EQ(psi(1, 1.0), std::sinh(1.0) / 2);
  EXPECT_DOUBLE_EQ(psi(2, 1.0), (std::sinh(1.0) - 1.0) / 2);
}

TEST(Psi, SmallArgumentsKeepRelativeAccuracy) {
  // direct subtraction would lose every digit here
  EXPECT_NEAR(psi(3, 0.01) / 4.16667658731536597e-13, 1.0, 1e-14);
  EXPECT_NEAR(psi(3, 1e-3) / 4.16666676587301725e-18, 1.0, 1e-14);
}

// The bracket sinh x - (odd Taylor head) is odd and is multiplied by sign x,
// so the kernel is even.
TEST(Psi, IsEven) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    for (int m = 1; m <= 3; ++m) EXPECT_EQ(psi(m, -x), psi(m, x));
  }
}

TEST(Psi, MatchesDefinitionAwayFromZero) {
  for (int m = 1; m <= 3; ++m) {
    for (double x : {-2.5, -1.0, -0.3, 0.4, 1.7, 3.0}) {
      const double ref = static_cast<double>(oracle::psi_definition(m, x));
      EXPECT_NEAR(psi(m, x), ref, 1e-15 * std::max(1.0, std::abs(ref)) + 1e-16) << m << " " << x;
    }
  }
}

TEST(Psi, RejectsUnsupportedOrder) {
  EXPECT_THROW(psi(0, 1.0), DomainError);
  EXPECT_THROW(psi(4, 1.0), DomainError);
}

TEST(Moment, ReferenceValues) {
  EXPECT_DOUBLE_EQ(moment_f(1, 0, GridSpec::make(1, 1)), (e + 1 / e - 2) / 4);
  EXPECT_DOUBLE_EQ(moment_f(1, 0, GridSpec::make(1, 1)), 0.27154031740762188924);
  EXPECT_DOUBLE_EQ(moment_f(2, 1, GridSpec::make(2, 4)), 0.0067981922782089320005);
  EXPECT_DOUBLE_EQ(moment_f(3, 1, GridSpec::make(3, 4)), 0.00012501519487559866717);
  EXPECT_DOUBLE_EQ(moment_f(3, 1, GridSpec::make(3, 64)), 0.00064288249044042592407);
}

TEST(Moment, SymmetricUnderReflection) {
  for (int m = 1; m <= 3; ++m) {
    for (int n : {2, 5, 8, 33}) {
      const auto g = GridSpec::make(m, n);
      for (int b = 0; b <= n; ++b) {
        // b/N and 1 - (N-b)/N can differ in the last place
        const double v = moment_f(m, b, g);
        EXPECT_NEAR(v, moment_f(m, n - b, g), 8 * std::numeric_limits<double>::epsilon() * v)
            << m << " " << n << " " << b;
      }
    }
  }
}

TEST(Moment, MatchesAdaptiveIntegralOfKernel) {
  for (int m = 1; m <= 3; ++m) {
    for (int n : {2, 3, 8}) {
      const auto g = GridSpec::make(m, n);
      for (int b = 0; b <= n; ++b) {
        const double ref = static_cast<double>(oracle::moment(m, static_cast<long double>(b) / n));
        EXPECT_NEAR(moment_f(m, b, g), ref, 1e-15 * ref + 1e-18) << m << " " << n << " " << b;
      }
    }
  }
}

TEST(Moment, RejectsIndexOutsideGrid) {
  const auto g = GridSpec::make(2, 4);
  EXPECT_THROW(moment_f(2, -1, g), DomainError);
  EXPECT_THROW(moment_f(2, 5, g), DomainError);
}

TEST(KernelIntegral, MatchesNestedAdaptiveIntegral) {
  for (int m = 1; m <= 3; ++m) {
    auto inner = [m](long double x) { return oracle::moment(m, x); };
    const double ref = static_cast<double>(oracle::integrate(inner, 0.0L, 1.0L, 1e-19L));
    EXPECT_NEAR(kernel_double_integral(m), ref, 1e-15 * ref) << m;
  }
  EXPECT_NEAR(kernel_double_integral(1), 0.17520119364380145688, 1e-16);
  EXPECT_NEAR(kernel_double_integral(2), 0.0085345269771347902157, 1e-17);
  EXPECT_NEAR(kernel_double_integral(3), 0.00020119364380145688, 1e-19);
}

TEST(ApplyRule, ExponentialConditionForEveryOrder) {
  for (int n : {1, 2, 7, 16}) {
    EXPECT_NEAR(apply_rule(closed_form_m1(n), [](double x) { return std::exp(-x); }), 1 - 1 / e, 1e-12);
    EXPECT_NEAR(apply_rule(closed_form_m2(n), [](double x) { return std::exp(-x); }), 1 - 1 / e, 1e-12);
    EXPECT_NEAR(apply_rule(closed_form_m2(n), [](double) { return 1.0; }), 1.0, 1e-12);
  }
}

TEST(ApplyRule, OrderOneRulesAreNotExactForConstants) {
  EXPECT_NEAR(apply_rule(closed_form_m1(1), [](double) { return 1.0; }), 2 * (e - 1) / (e + 1), 1e-15);
}

TEST(ApplyRule, RejectsMalformedRule) {
  QuadratureRule r = closed_form_m1(4);
  r.coefficients.pop_back();
  EXPECT_THROW(apply_rule(r, [](double) { return 1.0; }), DomainError);
  EXPECT_THROW(constraint_residuals(r), DomainError);
}

TEST(ConstraintResiduals, ReportOnlyTheConditionsOfTheOrder) {
  EXPECT_TRUE(constraint_residuals(closed_form_m1(4)).monomials.empty());
  EXPECT_EQ(constraint_residuals(closed_form_m2(4)).monomials.size(), 1u);
}

TEST(Method, NamesRoundTrip) {
  for (Method m : {Method::ClosedForm, Method::DirectSolve, Method::Convolution, Method::Trapezoid,
                   Method::Simpson}) {
    EXPECT_EQ(method_from_string(to_string(m)), m);
  }
  EXPECT_THROW(method_from_string("gauss"), DomainError);
  EXPECT_TRUE(is_optimal_method(Method::Convolution));
  EXPECT_FALSE(is_optimal_method(Method::Simpson));
}

TEST(Integrands, BuiltinsHaveConsistentDerivatives) {
  for (const auto& name : builtin_integrand_names()) {
    const auto f = builtin_integrand(name);
    ASSERT_TRUE(f.exact_integral.has_value()) << name;
    const double ref = static_cast<double>(oracle::integrate([&](long double x) { return f.value(double(x)); }, 0, 1, 1e-16L));
    EXPECT_NEAR(*f.exact_integral, ref, 1e-14) << name;
    for (double x : {0.1, 0.37, 0.8}) {
      EXPECT_DOUBLE_EQ(f.derivative(0, x), f.value(x)) << name;
      for (int k = 1; k <= 3; ++k) {
        // central difference of the (k-1)th derivative
        const double step = 1e-5;
        const double fd = (f.derivative(k - 1, x + step) - f.derivative(k - 1, x - step)) / (2 * step);
        EXPECT_NEAR(f.derivative(k, x), fd, 1e-6 * std::max(1.0, std::abs(fd))) << name << " k=" << k;
      }
    }
  }
}

TEST(Integrands, UnknownNameAndOrder) {
  EXPECT_THROW(builtin_integrand("cosh"), DomainError);
  EXPECT_THROW(builtin_integrand("sin").derivative(4, 0.5), DomainError);
}
