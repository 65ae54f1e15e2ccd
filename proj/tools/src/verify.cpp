#include "optquad_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include <boost/multiprecision/float128.hpp>

#include "optquad/error_analysis.hpp"
#include "optquad/errors.hpp"
#include "optquad/grid.hpp"
#include "optquad/identities.hpp"
#include "optquad/integrands.hpp"

namespace optquad::cli {

namespace {

using Quad = boost::multiprecision::float128;

constexpr double kExactnessTol = 1e-12;
constexpr double kIdentityTol = 1e-9;
constexpr long kBetaSpan = 5;

std::vector<Method> optimal_methods(int m) {
  if (m <= 2) return {Method::ClosedForm, Method::DirectSolve, Method::Convolution};
  return {Method::DirectSolve};
}

double max_deviation(const QuadratureRule& a, const QuadratureRule& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    d = std::max(d, std::abs(a.coefficients[i] - b.coefficients[i]));
  }
  return d;
}

VerifyCheck check(std::string name, double value, double tol, std::string detail = {}) {
  return {std::move(name), value, tol, std::isfinite(value) && value <= tol, std::move(detail)};
}

VerifyCheck failure(std::string name, double tol, std::string detail) {
  return {std::move(name), INFINITY, tol, false, std::move(detail)};
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport verify_rules(int m, int n) {
  GridSpec::make(m, n);  // validates before any work
  VerifyReport rep{m, n, {}};

  std::map<Method, QuadratureRule> rules;
  for (Method method : optimal_methods(m)) {
    const std::string tag = "exactness/" + std::string(to_string(method));
    try {
      rules.emplace(method, build_rule(m, n, method));
    } catch (const Error& e) {
      rep.checks.push_back(failure(tag, kExactnessTol, e.what()));
      continue;
    }
    const auto res = constraint_residuals(rules.at(method));
    rep.checks.push_back(check(tag + "/exponential", std::abs(res.exponential), kExactnessTol));
    for (std::size_t a = 0; a < res.monomials.size(); ++a) {
      rep.checks.push_back(
          check(tag + "/monomial_" + std::to_string(a), std::abs(res.monomials[a]), kExactnessTol));
    }
  }

  auto compare = [&](Method a, Method b, double tol) {
    const std::string tag = std::string(to_string(a)) + "-vs-" + std::string(to_string(b));
    if (!rules.contains(a) || !rules.contains(b)) {
      rep.checks.push_back(failure(tag, tol, "rule not constructed"));
      return;
    }
    rep.checks.push_back(check(tag, max_deviation(rules.at(a), rules.at(b)), tol));
  };
  if (m <= 2) {
    compare(Method::ClosedForm, Method::DirectSolve, m == 1 ? 1e-12 : 1e-9);
    compare(Method::ClosedForm, Method::Convolution, 1e-12);
  }

  const Method main_method = default_method(m);
  if (rules.contains(main_method)) {
    const auto& rule = rules.at(main_method);
    const auto norm = error_norm_squared(rule);
    // the check passes when the norm is not negative beyond 1e-12
    rep.checks.push_back(check("norm-squared", -norm.value, 1e-12, "value is -||l||^2"));
    for (const auto& name : builtin_integrand_names()) {
      const auto e = cauchy_schwarz_check(rule, builtin_integrand(name));
      VerifyCheck c{"cauchy-schwarz/" + name, e.error - e.bound, e.slack, !e.violated, {}};
      rep.checks.push_back(c);
    }
  }

  // one check per identity, reporting the worst beta
  std::map<std::string, VerifyCheck> identities;
  std::vector<std::string> order;
  const Quad h = Quad(1) / n;
  for (const auto& r : operator_identities<Quad>(m, h, -kBetaSpan, kBetaSpan)) {
    const std::string tag = "identity/" + r.identity;
    auto [it, fresh] = identities.try_emplace(tag, VerifyCheck{tag, 0.0, kIdentityTol, true, {}});
    if (fresh) order.push_back(tag);
    auto& c = it->second;
    if (!r.converged) {
      c.value = INFINITY;
      c.passed = false;
      c.detail = "beta=" + std::to_string(r.beta) + ": " + r.note;
    } else if (c.passed || std::isfinite(c.value)) {
      c.value = std::max(c.value, r.deviation);
      c.passed = c.passed && r.passed(kIdentityTol);
    }
  }
  for (const auto& tag : order) rep.checks.push_back(identities.at(tag));
  return rep;
}

}  // namespace optquad::cli
