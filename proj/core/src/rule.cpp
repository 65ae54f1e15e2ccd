#include "optquad/rule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "optquad/detail/summation.hpp"

namespace optquad {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::ClosedForm: return "closed";
    case Method::DirectSolve: return "solve";
    case Method::Convolution: return "conv";
    case Method::Trapezoid: return "trapezoid";
    case Method::Simpson: return "simpson";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  for (Method m : {Method::ClosedForm, Method::DirectSolve, Method::Convolution,
                   Method::Trapezoid, Method::Simpson}) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

bool is_optimal_method(Method method) {
  return method == Method::ClosedForm || method == Method::DirectSolve ||
         method == Method::Convolution;
}

void QuadratureRule::validate() const {
  if (coefficients.size() != static_cast<std::size_t>(grid.node_count())) {
    throw DomainError("rule has " + std::to_string(coefficients.size()) +
                      " coefficients for " + std::to_string(grid.node_count()) + " nodes");
  }
}

double apply_rule(const QuadratureRule& rule, const Integrand& f) {
  rule.validate();
  detail::CompensatedSum<double> sum;
  for (int beta = 0; beta <= rule.grid.n; ++beta) {
    sum += rule.coefficients[beta] * f(rule.grid.node(beta));
  }
  return sum.value();
}

double ConstraintResiduals::max_abs() const {
  double r = std::abs(exponential);
  for (double v : monomials) r = std::max(r, std::abs(v));
  return r;
}

ConstraintResiduals constraint_residuals(const QuadratureRule& rule) {
  rule.validate();
  const auto& grid = rule.grid;
  ConstraintResiduals out;

  detail::CompensatedSum<long double> exp_sum;
  for (int beta = 0; beta <= grid.n; ++beta) {
    exp_sum += static_cast<long double>(rule.coefficients[beta]) *
               std::exp(-static_cast<long double>(beta) / grid.n);
  }
  out.exponential = static_cast<double>(exp_sum.value() - (1.0L - std::exp(-1.0L)));

  for (int alpha = 0; alpha <= grid.m - 2; ++alpha) {
    detail::CompensatedSum<long double> s;
    for (int beta = 0; beta <= grid.n; ++beta) {
      const long double x = static_cast<long double>(beta) / grid.n;
      s += static_cast<long double>(rule.coefficients[beta]) * std::pow(x, alpha);
    }
    out.monomials.push_back(static_cast<double>(s.value() - 1.0L / (alpha + 1)));
  }
  return out;
}

}  // namespace optquad
