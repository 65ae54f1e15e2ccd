#include "optquad/error_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "optquad/coefficients.hpp"
#include "optquad/detail/summation.hpp"
#include "optquad/direct_solver.hpp"
#include "optquad/errors.hpp"
#include "optquad/kernel.hpp"

namespace optquad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct GaussLegendre {
  static constexpr int kPoints = 10;
  std::array<double, kPoints> nodes{};    // on [-1, 1]
  std::array<double, kPoints> weights{};

  GaussLegendre() {
    for (int i = 0; i < kPoints; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (kPoints + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= kPoints; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kPoints * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule;
  return rule;
}

template <class F>
double composite_gauss(F&& g, int panels) {
  const auto& gl = gauss_legendre();
  detail::CompensatedSum<double> sum;
  const double w = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * w;
    for (int i = 0; i < GaussLegendre::kPoints; ++i) {
      sum += gl.weights[i] * g(mid + 0.5 * w * gl.nodes[i]);
    }
  }
  return 0.5 * w * sum.value();
}

}  // namespace

NormSquared error_norm_squared(const QuadratureRule& rule) {
  rule.validate();
  const GridSpec& grid = rule.grid;
  const int m = grid.m;
  const long double ln = grid.n;
  const auto& c = rule.coefficients;

  detail::CompensatedSum<long double> sum;
  long double magnitude = 0.0L;
  for (int beta = 0; beta <= grid.n; ++beta) {
    const long double cb = c[beta];
    // diagonal psi(0) = 0; off-diagonal pairs counted twice
    for (int gamma = beta + 1; gamma <= grid.n; ++gamma) {
      const long double t = 2.0L * cb * c[gamma] * psi<long double>(m, (gamma - beta) / ln);
      sum += t;
      magnitude += std::abs(t);
    }
    const long double t = -2.0L * cb * moment_formula<long double>(m, beta / ln);
    sum += t;
    magnitude += std::abs(t);
  }
  const long double im = detail::sinh_tail(1.0L, m);
  sum += im;
  magnitude += im;

  const long double value = (m % 2 == 0 ? 1.0L : -1.0L) * sum.value();
  NormSquared out;
  out.value = static_cast<double>(value);
  out.rounding = static_cast<double>(16.0L * std::numeric_limits<long double>::epsilon() * magnitude) +
                 kEps * std::abs(out.value);
  return out;
}

double error_norm(const QuadratureRule& rule) {
  return std::sqrt(std::max(0.0, error_norm_squared(rule).value));
}

SobolevNorm sobolev_norm(const NamedIntegrand& f, int m, int panels) {
  require_order(m);
  if (!f.derivative) throw DomainError("integrand '" + f.name + "' has no derivatives");
  if (panels < 2) throw DomainError("at least two panels are needed");
  auto g = [&](double x) {
    const double v = f.derivative(m, x) + f.derivative(m - 1, x);
    return v * v;
  };
  const double fine = std::sqrt(composite_gauss(g, panels));
  const double coarse = std::sqrt(composite_gauss(g, panels / 2));
  return {fine, std::abs(fine - coarse) + 4.0 * kEps * fine};
}

ReportEntry cauchy_schwarz_check(const QuadratureRule& rule, const NamedIntegrand& f,
                                 std::optional<double> exact) {
  if (!exact) exact = f.exact_integral;
  if (!exact) throw DomainError("no exact integral for '" + f.name + "'");
  ReportEntry e;
  e.integrand = f.name;
  e.exact = *exact;
  e.quadrature = apply_rule(rule, f.value);
  e.error = std::abs(e.exact - e.quadrature);

  double weighted = 0.0;
  for (int beta = 0; beta <= rule.grid.n; ++beta) {
    weighted += std::abs(rule.coefficients[beta] * f.value(rule.grid.node(beta)));
  }

  const NormSquared n2 = error_norm_squared(rule);
  const SobolevNorm fn = sobolev_norm(f, rule.grid.m);
  e.f_norm = fn.value;
  const double ln = std::sqrt(std::max(0.0, n2.value));
  e.bound = ln * fn.value;
  const double ln_hi = std::sqrt(std::max(0.0, n2.value) + n2.rounding);
  const double bound_hi = ln_hi * (fn.value + fn.error_estimate);
  e.slack = 32.0 * kEps * (weighted + std::abs(e.exact)) + (bound_hi - e.bound);
  e.violated = e.error > e.bound + e.slack;
  return e;
}

ErrorReport error_report(const QuadratureRule& rule, const std::vector<NamedIntegrand>& functions) {
  ErrorReport r;
  r.grid = rule.grid;
  r.method = rule.method;
  r.norm_squared = error_norm_squared(rule);
  for (const auto& f : functions) r.entries.push_back(cauchy_schwarz_check(rule, f));
  return r;
}

namespace {

void check_increasing(std::span<const int> n_values) {
  if (n_values.empty()) throw DomainError("no grid sizes given");
  for (std::size_t i = 1; i < n_values.size(); ++i) {
    if (n_values[i] <= n_values[i - 1]) throw DomainError("grid sizes must be strictly increasing");
  }
}

void fill_rates(ConvergenceTable& table) {
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    auto& row = table.rows[i];
    const auto& prev = table.rows[i - 1];
    if (row.exact || prev.exact || row.value <= 0.0) continue;
    row.ratio = prev.value / row.value;
    row.order = std::log(*row.ratio) / std::log(static_cast<double>(row.n) / prev.n);
  }
}

}  // namespace

ConvergenceTable convergence_study(int m, std::span<const int> n_values, const NamedIntegrand& f,
                                   double exact, Method method) {
  check_increasing(n_values);
  ConvergenceTable table;
  table.m = m;
  table.method = method;
  table.quantity = ConvergenceQuantity::Error;
  table.integrand = f.name;
  for (int n : n_values) {
    const QuadratureRule rule = build_rule(m, n, method);
    double weighted = 0.0;
    for (int beta = 0; beta <= n; ++beta) {
      weighted += std::abs(rule.coefficients[beta] * f.value(rule.grid.node(beta)));
    }
    ConvergenceRow row;
    row.n = n;
    row.value = std::abs(exact - apply_rule(rule, f.value));
    row.exact = row.value <= 64.0 * kEps * (weighted + std::abs(exact));
    table.rows.push_back(row);
  }
  fill_rates(table);
  return table;
}

ConvergenceTable norm_convergence_study(int m, std::span<const int> n_values, Method method) {
  check_increasing(n_values);
  ConvergenceTable table;
  table.m = m;
  table.method = method;
  table.quantity = ConvergenceQuantity::Norm;
  for (int n : n_values) {
    const NormSquared n2 = error_norm_squared(build_rule(m, n, method));
    ConvergenceRow row;
    row.n = n;
    row.value = std::sqrt(std::max(0.0, n2.value));
    row.exact = n2.value <= n2.rounding;
    table.rows.push_back(row);
  }
  fill_rates(table);
  return table;
}

QuadratureRule classical_rule(Method kind, int n, int m) {
  QuadratureRule rule;
  rule.grid = GridSpec::make(m, n);
  rule.method = kind;
  const double h = rule.grid.h;
  auto& c = rule.coefficients;
  if (kind == Method::Trapezoid) {
    c.assign(n + 1, h);
    c.front() = c.back() = h / 2.0;
  } else if (kind == Method::Simpson) {
    if (n % 2 != 0) throw DomainError("Simpson's rule needs an even number of intervals");
    c.resize(n + 1);
    for (int beta = 0; beta <= n; ++beta) c[beta] = (beta % 2 == 0 ? 2.0 : 4.0) * h / 3.0;
    c.front() = c.back() = h / 3.0;
  } else {
    throw DomainError("'" + std::string(to_string(kind)) + "' is not a classical rule");
  }
  return rule;
}

Method default_method(int m) {
  require_order(m);
  return m <= 2 ? Method::ClosedForm : Method::DirectSolve;
}

QuadratureRule build_rule(int m, int n, Method method) {
  switch (method) {
    case Method::ClosedForm:
      require_order(m);
      if (m == 1) return closed_form_m1(n);
      if (m == 2) return closed_form_m2(n);
      throw UnsupportedError("no closed form for m = 3; use the dense solve");
    case Method::DirectSolve:
      return direct_solve(m, n);
    case Method::Convolution:
      return coefficients_via_convolution(m, n);
    case Method::Trapezoid:
    case Method::Simpson:
      return classical_rule(method, n, m);
  }
  throw DomainError("unknown method");
}

}  // namespace optquad
