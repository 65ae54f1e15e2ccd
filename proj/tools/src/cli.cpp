#include "optquad_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "optquad/error_analysis.hpp"
#include "optquad/errors.hpp"
#include "optquad/integrands.hpp"
#include "optquad_cli/rule_document.hpp"
#include "optquad_cli/verify.hpp"

namespace optquad::cli {

namespace {

using nlohmann::json;

struct Options {
  int m = 1;
  int n = 1;
  std::vector<int> n_list;
  std::string method;
  std::string function;
  std::string format;
  std::string out_path;
  bool norm_mode = false;
};

Method chosen_method(const Options& o) {
  return o.method.empty() ? default_method(o.m) : method_from_string(o.method);
}

std::string fixed_width(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%-24.17g", x);
  return buf;
}

std::string short_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

json nullable(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + o.out_path + "'");
  f << text;
  if (!f.flush()) throw DomainError("failed writing '" + o.out_path + "'");
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const auto doc = make_document(build_rule(o.m, o.n, chosen_method(o)));
  emit(o, o.format == "csv" ? to_csv(doc) : to_json(doc), out);
  return kSuccess;
}

int cmd_integrate(const Options& o, std::ostream& out) {
  const auto f = builtin_integrand(o.function);
  const auto rule = build_rule(o.m, o.n, chosen_method(o));
  const double value = apply_rule(rule, f.value);
  const double exact = *f.exact_integral;
  const double error = std::abs(value - exact);
  std::string text;
  if (o.format == "json") {
    const json j{{"function", o.function}, {"m", o.m}, {"n", o.n}, {"method", to_string(rule.method)},
                 {"value", value},         {"reference", exact}, {"abs_error", error}};
    text = j.dump(2) + "\n";
  } else {
    text = "function   " + o.function + "\nmethod     " + std::string(to_string(rule.method)) +
           "\nvalue      " + format_real(value) + "\nreference  " + format_real(exact) +
           "\nabs_error  " + short_real(error) + "\n";
  }
  emit(o, text, out);
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto rep = verify_rules(o.m, o.n);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j{{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}};
    if (!std::isfinite(c.value)) j["value"] = nullptr;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  const json j{{"m", rep.m}, {"n", rep.n}, {"passed", rep.passed()}, {"checks", std::move(checks)}};
  emit(o, j.dump(2) + "\n", out);
  if (rep.passed()) return kSuccess;
  for (const auto& c : rep.checks) {
    if (!c.passed) err << "verify: failed " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return kVerificationFailed;
}

int cmd_convergence(const Options& o, std::ostream& out) {
  const Method method = chosen_method(o);
  ConvergenceTable t;
  if (o.norm_mode) {
    t = norm_convergence_study(o.m, o.n_list, method);
  } else {
    const auto f = builtin_integrand(o.function);
    t = convergence_study(o.m, o.n_list, f, *f.exact_integral, method);
  }
  const char* quantity = t.quantity == ConvergenceQuantity::Norm ? "norm" : "error";
  std::string text;
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      rows.push_back({{"n", r.n}, {"value", r.value}, {"ratio", nullable(r.ratio)},
                      {"order", nullable(r.order)}, {"exact", r.exact}});
    }
    json j{{"m", t.m}, {"method", to_string(t.method)}, {"quantity", quantity}, {"rows", std::move(rows)}};
    if (!o.norm_mode) j["function"] = t.integrand;
    text = j.dump(2) + "\n";
  } else {
    text = "n," + std::string(quantity) + ",ratio,order,exact\n";
    for (const auto& r : t.rows) {
      text += std::to_string(r.n) + "," + format_real(r.value) + "," + (r.ratio ? format_real(*r.ratio) : "") +
              "," + (r.order ? format_real(*r.order) : "") + "," + (r.exact ? "1" : "0") + "\n";
    }
  }
  emit(o, text, out);
  return kSuccess;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const auto f = builtin_integrand(o.function);
  const double exact = *f.exact_integral;
  std::vector<QuadratureRule> rules{build_rule(o.m, o.n, chosen_method(o)),
                                    classical_rule(Method::Trapezoid, o.n, o.m)};
  std::string note;
  if (o.n % 2 == 0) {
    rules.push_back(classical_rule(Method::Simpson, o.n, o.m));
  } else {
    note = "simpson omitted: n = " + std::to_string(o.n) + " is odd";
  }

  std::string text;
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : rules) {
      const double v = apply_rule(r, f.value);
      rows.push_back({{"rule", to_string(r.method)}, {"value", v}, {"abs_error", std::abs(v - exact)}});
    }
    json j{{"function", o.function}, {"m", o.m}, {"n", o.n}, {"reference", exact}, {"rows", std::move(rows)}};
    j["notes"] = note.empty() ? json::array() : json::array({note});
    text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = "rule,value,abs_error\n";
    for (const auto& r : rules) {
      const double v = apply_rule(r, f.value);
      text += std::string(to_string(r.method)) + "," + format_real(v) + "," + format_real(std::abs(v - exact)) + "\n";
    }
    if (!note.empty()) err << "note: " << note << "\n";
  } else {
    text = "rule       value                    abs_error\n";
    for (const auto& r : rules) {
      const double v = apply_rule(r, f.value);
      std::string name(to_string(r.method));
      name.resize(std::max<std::size_t>(name.size() + 1, 11), ' ');
      text += name + fixed_width(v) + " " + short_real(std::abs(v - exact)) + "\n";
    }
    text += "reference  " + format_real(exact) + "\n";
    if (!note.empty()) text += "note: " + note + "\n";
  }
  emit(o, text, out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal quadrature rules on [0, 1] for W_2^(m,m-1)", "optquad"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> optimal{"closed", "solve", "conv"};
  const std::vector<std::string> any_method{"closed", "solve", "conv", "trapezoid", "simpson"};
  const auto& functions = builtin_integrand_names();

  auto order_and_size = [&o](CLI::App* sub) {
    sub->add_option("--m", o.m, "order of the space (1-3)")->required();
    sub->add_option("--n", o.n, "number of intervals N")->required();
  };

  auto* coeffs = app.add_subcommand("coeffs", "print the coefficients of a rule");
  order_and_size(coeffs);
  coeffs->add_option("--method", o.method, "closed, solve or conv")->check(CLI::IsMember(optimal));
  coeffs->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
  coeffs->add_option("--out", o.out_path, "write to a file instead of stdout");

  auto* integrate = app.add_subcommand("integrate", "apply a rule to a built-in integrand");
  order_and_size(integrate);
  integrate->add_option("--function", o.function)->required()->check(CLI::IsMember(functions));
  integrate->add_option("--method", o.method)->check(CLI::IsMember(any_method));
  integrate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");
  integrate->add_option("--out", o.out_path);

  auto* verify = app.add_subcommand("verify", "run the invariant checks; exit 1 on failure");
  order_and_size(verify);
  verify->add_option("--out", o.out_path);

  auto* convergence = app.add_subcommand("convergence", "errors or norms over a list of N");
  convergence->add_option("--m", o.m)->required();
  convergence->add_option("--n-list", o.n_list, "ascending, comma separated")->required()->delimiter(',');
  auto* fn = convergence->add_option("--function", o.function)->check(CLI::IsMember(functions));
  auto* nm = convergence->add_flag("--norm-mode", o.norm_mode, "tabulate ||l_N|| instead of an error");
  fn->excludes(nm);
  convergence->add_option("--method", o.method)->check(CLI::IsMember(any_method));
  convergence->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->default_val("csv");
  convergence->add_option("--out", o.out_path);

  auto* compare = app.add_subcommand("compare", "optimal rule against trapezoid and Simpson");
  order_and_size(compare);
  compare->add_option("--function", o.function)->required()->check(CLI::IsMember(functions));
  compare->add_option("--method", o.method)->check(CLI::IsMember(optimal));
  compare->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}))->default_val("text");
  compare->add_option("--out", o.out_path);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    if (convergence->parsed() && o.function.empty() && !o.norm_mode) {
      throw CLI::RequiredError("one of --function or --norm-mode");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(o, out);
    if (integrate->parsed()) return cmd_integrate(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (convergence->parsed()) return cmd_convergence(o, out);
    return cmd_compare(o, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SolveError& e) {
    err << "numeric failure: " << e.what() << " (condition estimate " << short_real(e.condition_estimate())
        << ")\n";
    return kNumericFailure;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  }
}

}  // namespace optquad::cli
