#include "optquad/direct_solver.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "optquad/errors.hpp"
#include "optquad/kernel.hpp"

namespace optquad {

WienerHopfSystem assemble_system(int m, int n) {
  WienerHopfSystem sys;
  sys.grid = GridSpec::make(m, n);
  sys.layout.coefficient_count = n + 1;
  sys.layout.polynomial_count = m - 1;
  const int size = sys.layout.size();
  sys.matrix = WienerHopfSystem::Matrix::Zero(size, size);
  sys.rhs = WienerHopfSystem::Vector::Zero(size);

  const long double ln = n;
  for (int beta = 0; beta <= n; ++beta) {
    for (int gamma = beta; gamma <= n; ++gamma) {
      const long double v = psi<long double>(m, (gamma - beta) / ln);
      sys.matrix(beta, gamma) = v;
      sys.matrix(gamma, beta) = v;
    }
    const long double x = beta / ln;
    for (int alpha = 0; alpha < m - 1; ++alpha) {
      const long double v = std::pow(x, alpha);
      sys.matrix(beta, sys.layout.polynomial_index(alpha)) = v;
      sys.matrix(sys.layout.polynomial_index(alpha), beta) = v;
    }
    const long double e = std::exp(-x);
    sys.matrix(beta, sys.layout.d_index()) = e;
    sys.matrix(sys.layout.d_index(), beta) = e;
    sys.rhs(beta) = moment_formula<long double>(m, x);
  }
  for (int alpha = 0; alpha < m - 1; ++alpha) {
    sys.rhs(sys.layout.polynomial_index(alpha)) = 1.0L / (alpha + 1);
  }
  sys.rhs(sys.layout.d_index()) = -std::expm1(-1.0L);
  return sys;
}

QuadratureRule solve(const WienerHopfSystem& system) {
  const auto& a = system.matrix;
  const auto& b = system.rhs;
  if (a.rows() != system.layout.size() || a.cols() != a.rows() || b.size() != a.rows()) {
    throw DomainError("system dimensions do not match its layout");
  }
  Eigen::PartialPivLU<WienerHopfSystem::Matrix> lu(a);
  const long double rcond = lu.rcond();
  const double condition = rcond > 0 ? static_cast<double>(1.0L / rcond) : HUGE_VAL;
  if (!(condition <= kConditionLimit)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "system is ill-conditioned: estimate %.3e exceeds %.1e",
                  condition, kConditionLimit);
    throw SolveError(buf, condition);
  }

  WienerHopfSystem::Vector x = lu.solve(b);
  x += lu.solve(b - a * x);

  const long double residual = (a * x - b).cwiseAbs().maxCoeff();
  const long double scale = b.cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10L * scale)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "solve residual %.3Le exceeds tolerance", residual);
    throw SolveError(buf, condition);
  }

  QuadratureRule rule;
  rule.grid = system.grid;
  rule.method = Method::DirectSolve;
  rule.coefficients.resize(system.layout.coefficient_count);
  for (int i = 0; i < system.layout.coefficient_count; ++i) {
    rule.coefficients[i] = static_cast<double>(x(i));
  }
  std::vector<double> poly;
  for (int alpha = 0; alpha < system.layout.polynomial_count; ++alpha) {
    poly.push_back(static_cast<double>(x(system.layout.polynomial_index(alpha))));
  }
  rule.polynomial_multipliers = std::move(poly);
  rule.multiplier_d = static_cast<double>(x(system.layout.d_index()));
  rule.condition_number = condition;
  return rule;
}

}  // namespace optquad
