#include "optquad/coefficients.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "optquad/detail/series.hpp"
#include "optquad/detail/summation.hpp"
#include "optquad/discrete_operator.hpp"
#include "optquad/errors.hpp"
#include "optquad/kernel.hpp"

namespace optquad {

namespace {

using detail::ipow;

// (1 - e^h)/(e^h + 1) = -tanh(h/2)
double end_constant_m1(double h) { return -std::tanh(h / 2.0); }

}  // namespace

QuadratureRule closed_form_m1(int n) {
  QuadratureRule rule;
  rule.grid = GridSpec::make(1, n);
  rule.method = Method::ClosedForm;
  const double t = std::tanh(rule.grid.h / 2.0);  // (e^h-1)/(e^h+1)
  rule.coefficients.assign(n + 1, 2.0 * t);
  rule.coefficients.front() = t;
  rule.coefficients.back() = t;
  rule.multiplier_d = 0.0;
  rule.polynomial_multipliers = std::vector<double>{};
  return rule;
}

double lambda1(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid spacing must be positive");
  const double eh = std::exp(h);
  const double p = -2.0 * eh * detail::sinh_tail(h, 1);
  const double n = 2.0 * eh * detail::x_cosh_minus_sinh(h);
  const double g = detail::x_cosh_plus_x_minus_two_sinh(h);
  const double radicand = 2.0 * h * eh * g;
  if (!(radicand > 0.0)) {
    throw ConstructionError("characteristic discriminant is not positive at h = " +
                            std::to_string(h));
  }
  const double s = std::expm1(h) * std::sqrt(radicand);
  return p / (n + s);
}

double boundary_layer_amplitude(int n) {
  const GridSpec grid = GridSpec::make(2, n);
  const double h = grid.h;
  const double l = lambda1(h);
  const double denom_l = l + ipow(l, n + 1);
  if (std::abs(denom_l) <= 64.0 * std::numeric_limits<double>::epsilon() * std::abs(l)) {
    throw ConstructionError("boundary amplitude denominator vanishes at N = " + std::to_string(n));
  }
  const double em1 = std::expm1(h);
  return detail::two_exp_minus_two_minus_x_exp_minus_x(h) * (l - 1.0) /
         (2.0 * em1 * em1 * denom_l);
}

QuadratureRule closed_form_m2(int n) {
  QuadratureRule rule;
  rule.grid = GridSpec::make(2, n);
  rule.method = Method::ClosedForm;
  const double h = rule.grid.h;
  const double eh = std::exp(h);
  const double em1 = std::expm1(h);
  const double l = lambda1(h);
  const double k = boundary_layer_amplitude(n);
  const double lN = ipow(l, n);

  auto& c = rule.coefficients;
  c.resize(n + 1);
  // 1 - h/(e^h-1) and -1 + h e^h/(e^h-1) written without cancellation
  c[0] = detail::exp_tail2(h) / em1 - k * (l - lN);
  c[n] = detail::x_exp_minus_exp_plus_one(h) / em1 - eh * k * (l - lN);
  for (int beta = 1; beta < n; ++beta) {
    c[beta] = h + k * ((eh - l) * ipow(l, beta) + (1.0 - l * eh) * ipow(l, n - beta));
  }
  return rule;
}

ConvolutionConstruction convolution_construction(int m, int n) {
  require_order(m);
  if (m == 3) {
    throw UnsupportedError("the convolution construction is available for m = 1 and m = 2 only");
  }
  ConvolutionConstruction out;
  QuadratureRule& rule = out.rule;
  rule.grid = GridSpec::make(m, n);
  rule.method = Method::Convolution;
  const double h = rule.grid.h;
  const double eh = std::exp(h);
  auto& c = rule.coefficients;
  c.resize(n + 1);
  BoundaryConstants& bc = out.constants;

  if (m == 1) {
    // D_1 * f_1 in the interior equals -(2 D_1(1) + D_1(0)); both terms are
    // O(1/h) and cancel to O(h), so the sum is taken in extended precision.
    const auto op = build_operator<long double>(1, h);
    out.interior_value =
        static_cast<double>(-(2.0L * operator_value(op, 1) + operator_value(op, 0)));
    bc.a = end_constant_m1(h);
    bc.b = bc.a;
    c.assign(n + 1, out.interior_value);
    c[0] += bc.a;
    c[n] += bc.b;
    bc.d = 0.0;
    rule.multiplier_d = 0.0;
    rule.polynomial_multipliers = std::vector<double>{};
  } else {
    const double l = lambda1(h);
    const double k = boundary_layer_amplitude(n);
    const double lN = ipow(l, n);
    out.interior_value = h;
    const double a1 = k * (eh - l);
    const double b1 = k * (1.0 - l * eh);
    bc.a_k = {a1};
    bc.b_k = {b1};
    for (int beta = 1; beta < n; ++beta) {
      c[beta] = out.interior_value + a1 * ipow(l, beta) + b1 * ipow(l, n - beta);
    }
    // The ends follow from sum C = 1 and sum C e^{-x} = 1 - e^{-1}.
    const double e = std::exp(1.0);
    const double em1 = std::expm1(1.0);
    detail::CompensatedSum<double> s0;
    detail::CompensatedSum<double> sn;
    s0 += (e - 2.0) / em1;
    sn += 1.0 / em1;
    for (int gamma = 1; gamma < n; ++gamma) {
      const double w = -std::expm1(1.0 - h * gamma);  // 1 - e^{1 - h gamma}
      s0 += c[gamma] * w / em1;
      sn += -c[gamma] * (w + em1) / em1;  // e^{1-h gamma} - e
    }
    c[0] = s0.value();
    c[n] = sn.value();
    bc.a = c[0] - out.interior_value - a1 - b1 * lN;
    bc.b = c[n] - out.interior_value - a1 * lN - b1;
    const Multipliers mult = recover_multipliers(rule);
    bc.d = mult.d;
    rule.multiplier_d = mult.d;
    rule.polynomial_multipliers = mult.polynomial;
  }

  detail::CompensatedSum<double> big_d;
  for (int gamma = 0; gamma <= n; ++gamma) big_d += c[gamma] * std::exp(h * gamma);
  bc.big_d = big_d.value() / 4.0;
  return out;
}

QuadratureRule coefficients_via_convolution(int m, int n) {
  return convolution_construction(m, n).rule;
}

Multipliers recover_multipliers(const QuadratureRule& rule) {
  rule.validate();
  const GridSpec& grid = rule.grid;
  const int m = grid.m;
  const int rows = grid.node_count();
  const int cols = m;  // P_{m-2} has m-1 coefficients, plus d
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  Mat basis(rows, cols);
  Vec residual(rows);
  for (int beta = 0; beta < rows; ++beta) {
    const long double x = static_cast<long double>(beta) / grid.n;
    detail::CompensatedSum<long double> s;
    for (int gamma = 0; gamma < rows; ++gamma) {
      s += static_cast<long double>(rule.coefficients[gamma]) *
           psi<long double>(m, static_cast<long double>(beta - gamma) / grid.n);
    }
    residual(beta) = moment_formula<long double>(m, x) - s.value();
    for (int alpha = 0; alpha < m - 1; ++alpha) basis(beta, alpha) = std::pow(x, alpha);
    basis(beta, m - 1) = std::exp(-x);
  }
  const Vec sol = basis.colPivHouseholderQr().solve(residual);
  Multipliers out;
  for (int alpha = 0; alpha < m - 1; ++alpha) out.polynomial.push_back(static_cast<double>(sol(alpha)));
  out.d = static_cast<double>(sol(m - 1));
  out.fit_residual = static_cast<double>((basis * sol - residual).cwiseAbs().maxCoeff());
  return out;
}

}  // namespace optquad
