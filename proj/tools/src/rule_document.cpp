#include "optquad_cli/rule_document.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "optquad/errors.hpp"

namespace optquad::cli {

RuleDocument make_document(const QuadratureRule& rule) {
  rule.validate();
  RuleDocument doc;
  doc.m = rule.grid.m;
  doc.n = rule.grid.n;
  doc.h = rule.grid.h;
  doc.nodes.reserve(rule.coefficients.size());
  for (int b = 0; b <= rule.grid.n; ++b) doc.nodes.push_back(rule.grid.node(b));
  doc.coefficients = rule.coefficients;
  doc.method = std::string(to_string(rule.method));
  doc.d = rule.multiplier_d;
  doc.condition_number = rule.condition_number;
  const auto res = constraint_residuals(rule);
  doc.constraint_residuals.emplace_back("exponential", res.exponential);
  for (std::size_t a = 0; a < res.monomials.size(); ++a) {
    doc.constraint_residuals.emplace_back("monomial_" + std::to_string(a), res.monomials[a]);
  }
  return doc;
}

std::string format_real(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot serialize a non-finite value");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string optional_real(const std::optional<double>& x) { return x ? format_real(*x) : "null"; }

void write_list(std::ostringstream& os, const char* key, const std::vector<double>& xs, bool last) {
  os << "  \"" << key << "\": [";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << format_real(xs[i]);
  }
  os << (xs.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

double require_real(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw DomainError(std::string("rule document: missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

int require_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw DomainError(std::string("rule document: missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

std::vector<double> require_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw DomainError(std::string("rule document: missing array '") + key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw DomainError(std::string("rule document: non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

std::optional<double> optional_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number()) throw DomainError(std::string("rule document: '") + key + "' is not a number");
  return j.at(key).get<double>();
}

}  // namespace

std::string to_json(const RuleDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema_version\": " << doc.schema_version << ",\n";
  os << "  \"m\": " << doc.m << ",\n";
  os << "  \"n\": " << doc.n << ",\n";
  os << "  \"h\": " << format_real(doc.h) << ",\n";
  os << "  \"method\": \"" << doc.method << "\",\n";
  write_list(os, "nodes", doc.nodes, false);
  write_list(os, "coefficients", doc.coefficients, false);
  os << "  \"d\": " << optional_real(doc.d) << ",\n";
  os << "  \"diagnostics\": {\n";
  os << "    \"condition_number\": " << optional_real(doc.condition_number) << ",\n";
  os << "    \"constraint_residuals\": {";
  for (std::size_t i = 0; i < doc.constraint_residuals.size(); ++i) {
    const auto& [name, value] = doc.constraint_residuals[i];
    os << (i ? ",\n      \"" : "\n      \"") << name << "\": " << format_real(value);
  }
  os << (doc.constraint_residuals.empty() ? "}\n" : "\n    }\n");
  os << "  }\n}\n";
  return os.str();
}

std::string to_csv(const RuleDocument& doc) {
  if (doc.nodes.size() != doc.coefficients.size()) {
    throw DomainError("rule document: node and coefficient counts differ");
  }
  std::ostringstream os;
  os << "beta,node,coefficient\n";
  for (std::size_t b = 0; b < doc.nodes.size(); ++b) {
    os << b << ',' << format_real(doc.nodes[b]) << ',' << format_real(doc.coefficients[b]) << '\n';
  }
  return os.str();
}

RuleDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("rule document: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("rule document: top level is not an object");

  RuleDocument doc;
  doc.schema_version = require_int(j, "schema_version");
  if (doc.schema_version != kSchemaVersion) {
    throw DomainError("rule document: unsupported schema_version " + std::to_string(doc.schema_version));
  }
  doc.m = require_int(j, "m");
  doc.n = require_int(j, "n");
  doc.h = require_real(j, "h");
  if (!j.contains("method") || !j.at("method").is_string()) {
    throw DomainError("rule document: missing string field 'method'");
  }
  doc.method = j.at("method").get<std::string>();
  doc.nodes = require_list(j, "nodes");
  doc.coefficients = require_list(j, "coefficients");
  doc.d = optional_field(j, "d");
  if (doc.n < 1 || doc.nodes.size() != static_cast<std::size_t>(doc.n) + 1 ||
      doc.coefficients.size() != doc.nodes.size()) {
    throw DomainError("rule document: lengths inconsistent with n");
  }
  if (j.contains("diagnostics")) {
    const auto& diag = j.at("diagnostics");
    if (!diag.is_object()) throw DomainError("rule document: diagnostics is not an object");
    doc.condition_number = optional_field(diag, "condition_number");
    if (diag.contains("constraint_residuals")) {
      for (const auto& [name, value] : diag.at("constraint_residuals").items()) {
        if (!value.is_number()) throw DomainError("rule document: non-numeric residual '" + name + "'");
        doc.constraint_residuals.emplace_back(name, value.get<double>());
      }
    }
  }
  return doc;
}

}  // namespace optquad::cli
