#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optquad/grid.hpp"

namespace optquad {

/// How a rule's coefficients were produced.
enum class Method {
  ClosedForm,   ///< explicit formulas for m = 1, 2
  DirectSolve,  ///< dense solve of the constrained Wiener-Hopf system
  Convolution,  ///< operator convolution plus boundary constants
  Trapezoid,    ///< classical baseline, not optimal
  Simpson,      ///< classical baseline, not optimal
};

std::string_view to_string(Method method);

/// Inverse of to_string; throws DomainError for unknown names.
Method method_from_string(std::string_view name);

/// True for the methods that construct the optimal rule.
bool is_optimal_method(Method method);

/// Coefficients C_0..C_N on a uniform grid, plus how they were obtained.
struct QuadratureRule {
  GridSpec grid;
  std::vector<double> coefficients;
  Method method = Method::ClosedForm;
  std::optional<double> multiplier_d;                       ///< Lagrange constant d
  std::optional<std::vector<double>> polynomial_multipliers;  ///< P_{m-2}, ascending powers
  std::optional<double> condition_number;                   ///< set by the dense solver

  /// Throws DomainError when the coefficient count differs from N + 1.
  void validate() const;
};

using Integrand = std::function<double(double)>;

/// sum_beta C_beta f(h beta), compensated.
double apply_rule(const QuadratureRule& rule, const Integrand& f);

/// Deviations of the exactness conditions for the rule's order.
struct ConstraintResiduals {
  double exponential = 0.0;          ///< sum C e^{-x} - (1 - e^{-1})
  std::vector<double> monomials;     ///< sum C x^alpha - 1/(alpha+1), alpha = 0..m-2

  double max_abs() const;
};

/// Evaluated directly from the coefficients, never taken from a solver.
ConstraintResiduals constraint_residuals(const QuadratureRule& rule);

}  // namespace optquad
