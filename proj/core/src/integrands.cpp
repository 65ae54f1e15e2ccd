#include "optquad/integrands.hpp"

#include <cmath>
#include <utility>

#include "optquad/errors.hpp"

namespace optquad {

namespace {

void check_order(int k) {
  if (k < 0 || k > 3) throw DomainError("integrand derivatives are available up to order 3");
}

NamedIntegrand monomial(std::string name, int degree) {
  NamedIntegrand f;
  f.name = std::move(name);
  f.value = [degree](double x) { return std::pow(x, degree); };
  f.derivative = [degree](int k, double x) {
    check_order(k);
    if (k > degree) return 0.0;
    double c = 1.0;
    for (int i = 0; i < k; ++i) c *= degree - i;
    return c * std::pow(x, degree - k);
  };
  f.exact_integral = 1.0 / (degree + 1);
  return f;
}

}  // namespace

const std::vector<std::string>& builtin_integrand_names() {
  static const std::vector<std::string> names{"exp-neg", "one", "x", "x2", "sin", "exp", "runge"};
  return names;
}

NamedIntegrand builtin_integrand(std::string_view name) {
  if (name == "one") return monomial("one", 0);
  if (name == "x") return monomial("x", 1);
  if (name == "x2") return monomial("x2", 2);

  NamedIntegrand f;
  f.name = std::string(name);
  if (name == "exp-neg") {
    f.value = [](double x) { return std::exp(-x); };
    f.derivative = [](int k, double x) {
      check_order(k);
      return (k % 2 == 0 ? 1.0 : -1.0) * std::exp(-x);
    };
    f.exact_integral = -std::expm1(-1.0);
  } else if (name == "exp") {
    f.value = [](double x) { return std::exp(x); };
    f.derivative = [](int k, double x) {
      check_order(k);
      return std::exp(x);
    };
    f.exact_integral = std::expm1(1.0);
  } else if (name == "sin") {
    f.value = [](double x) { return std::sin(x); };
    f.derivative = [](int k, double x) {
      check_order(k);
      switch (k) {
        case 0: return std::sin(x);
        case 1: return std::cos(x);
        case 2: return -std::sin(x);
        default: return -std::cos(x);
      }
    };
    f.exact_integral = 1.0 - std::cos(1.0);
  } else if (name == "runge") {
    // 1 / (1 + 25 x^2)
    f.value = [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };
    f.derivative = [](int k, double x) {
      check_order(k);
      const double u = 1.0 + 25.0 * x * x;
      switch (k) {
        case 0: return 1.0 / u;
        case 1: return -50.0 * x / (u * u);
        case 2: return (3750.0 * x * x - 50.0) / (u * u * u);
        default: return (15000.0 * x - 375000.0 * x * x * x) / (u * u * u * u);
      }
    };
    f.exact_integral = std::atan(5.0) / 5.0;
  } else {
    throw DomainError("unknown integrand '" + std::string(name) + "'");
  }
  return f;
}

}  // namespace optquad
