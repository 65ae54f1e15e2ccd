#pragma once

// Norm of the error functional, the Cauchy-Schwarz bound
//   |int f - Q f| <= ||l|| * ||f||,
// convergence tables and the classical baselines.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optquad/integrands.hpp"
#include "optquad/rule.hpp"

namespace optquad {

struct NormSquared {
  double value = 0.0;     ///< ||l||^2
  double rounding = 0.0;  ///< bound on the evaluation error of value
};

/// ||l||^2 = (-1)^m [C^T Psi C - 2 C.f + I_m], accumulated in extended
/// precision. Valid for any coefficients on the rule's grid.
NormSquared error_norm_squared(const QuadratureRule& rule);

/// sqrt of the above, clamped at zero.
double error_norm(const QuadratureRule& rule);

struct SobolevNorm {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// ||f|| = (int_0^1 (f^(m) + f^(m-1))^2)^(1/2) by composite Gauss-Legendre on
/// `panels` equal panels. The estimate compares against half as many panels.
/// Throws DomainError if the integrand has no derivatives.
SobolevNorm sobolev_norm(const NamedIntegrand& f, int m, int panels = 64);

struct ReportEntry {
  std::string integrand;
  double quadrature = 0.0;
  double exact = 0.0;
  double error = 0.0;   ///< |exact - quadrature|
  double f_norm = 0.0;
  double bound = 0.0;   ///< ||l|| * ||f||
  double slack = 0.0;   ///< allowance for rounding in every quantity above
  bool violated = false;
};

/// `exact` defaults to f.exact_integral; throws DomainError if neither is given.
ReportEntry cauchy_schwarz_check(const QuadratureRule& rule, const NamedIntegrand& f,
                                 std::optional<double> exact = std::nullopt);

struct ErrorReport {
  GridSpec grid;
  Method method = Method::ClosedForm;
  NormSquared norm_squared;
  std::vector<ReportEntry> entries;
};

ErrorReport error_report(const QuadratureRule& rule, const std::vector<NamedIntegrand>& functions);

enum class ConvergenceQuantity { Error, Norm };

struct ConvergenceRow {
  int n = 0;
  double value = 0.0;
  std::optional<double> ratio;  ///< previous value / this value
  std::optional<double> order;  ///< log(ratio) / log(n / previous n)
  bool exact = false;           ///< value at rounding level; ratio undefined
};

struct ConvergenceTable {
  int m = 1;
  Method method = Method::ClosedForm;
  ConvergenceQuantity quantity = ConvergenceQuantity::Error;
  std::string integrand;  ///< empty in norm mode
  std::vector<ConvergenceRow> rows;
};

/// |int f - Q_N f| for each N. `n_values` must be strictly increasing.
ConvergenceTable convergence_study(int m, std::span<const int> n_values, const NamedIntegrand& f,
                                   double exact, Method method);

/// ||l_N|| for each N.
ConvergenceTable norm_convergence_study(int m, std::span<const int> n_values, Method method);

/// Composite trapezoid or Simpson weights on the grid of order m. Simpson
/// needs an even N.
QuadratureRule classical_rule(Method kind, int n, int m = 1);

/// Closed form where it exists, the dense solve otherwise.
Method default_method(int m);

/// Builds the rule of the given method; classical methods give the baselines.
QuadratureRule build_rule(int m, int n, Method method);

}  // namespace optquad
