#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "optquad/rule.hpp"

namespace optquad::cli {

inline constexpr int kSchemaVersion = 1;

/// Serialized form of a quadrature rule.
struct RuleDocument {
  int schema_version = kSchemaVersion;
  int m = 1;
  int n = 1;
  double h = 1.0;
  std::vector<double> nodes;
  std::vector<double> coefficients;
  std::string method;
  std::optional<double> d;
  std::optional<double> condition_number;
  /// name -> residual, in output order: exponential, monomial_0, ...
  std::vector<std::pair<std::string, double>> constraint_residuals;

  friend bool operator==(const RuleDocument&, const RuleDocument&) = default;
};

RuleDocument make_document(const QuadratureRule& rule);

/// %.17g, which reads back to the same double. Non-finite values throw.
std::string format_real(double x);

/// Deterministic, one value per line for nodes and coefficients.
std::string to_json(const RuleDocument& doc);

/// beta,node,coefficient with a header row.
std::string to_csv(const RuleDocument& doc);

/// Throws DomainError on malformed input or inconsistent lengths.
RuleDocument parse_json(std::string_view text);

}  // namespace optquad::cli
