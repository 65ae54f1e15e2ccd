#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace optquad {

/// A test function on [0, 1] with its derivatives and exact integral.
struct NamedIntegrand {
  std::string name;
  std::function<double(double)> value;
  /// derivative(k, x) = f^(k)(x) for 0 <= k <= 3; empty when unknown.
  std::function<double(int, double)> derivative;
  std::optional<double> exact_integral;  ///< int_0^1 f
};

/// exp-neg, one, x, x2, sin, exp, runge.
const std::vector<std::string>& builtin_integrand_names();

/// Throws DomainError for unknown names.
NamedIntegrand builtin_integrand(std::string_view name);

}  // namespace optquad
