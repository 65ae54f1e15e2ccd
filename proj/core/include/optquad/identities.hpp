#pragma once

// Convolution identities of the discrete operator, evaluated as windowed
// sums:
//   D_m * e^{+-h beta} = 0,
//   D_m * (h beta)^k = 0 for k <= 2m - 3,
//   D_m * psi_m(h beta) = delta(beta),
// and for m = 2 additionally D_2 * (h beta)^2 = -2h and D_2 * f_2 = h.
//
// |D_m| grows like h^(1-2m), so the sums cancel heavily at small h. Callers
// pick the scalar type; a quad type keeps every case at 1e-15 or better.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "optquad/discrete_operator.hpp"
#include "optquad/kernel.hpp"

namespace optquad {

struct IdentityCheck {
  std::string identity;  ///< exp+, exp-, poly<k>, psi-delta, x2, moment
  int m = 1;
  double h = 1.0;
  long beta = 0;
  double value = 0.0;
  double expected = 0.0;
  double deviation = std::numeric_limits<double>::infinity();
  double tail_bound = 0.0;
  long window = 0;
  bool converged = false;
  std::string note;  ///< reason when the windowed sum does not converge

  bool passed(double tolerance) const { return converged && deviation <= tolerance; }
};

namespace detail {

template <class Real, class G>
IdentityCheck run_identity(const BasicOperatorSpec<Real>& spec, std::string name, G&& g, long beta,
                           Real expected, Real tail_tolerance) {
  using std::abs;
  IdentityCheck c;
  c.identity = std::move(name);
  c.m = spec.m;
  c.h = static_cast<double>(spec.h);
  c.beta = beta;
  c.expected = static_cast<double>(expected);
  try {
    const auto r = convolve_to_tolerance(spec, g, beta, tail_tolerance);
    c.value = static_cast<double>(r.value);
    c.deviation = static_cast<double>(abs(r.value - expected));
    c.tail_bound = static_cast<double>(r.tail_bound);
    c.window = r.window;
    c.converged = true;
  } catch (const ToleranceError& e) {
    c.note = e.what();
    c.tail_bound = e.achievable_bound();
  }
  return c;
}

}  // namespace detail

/// Every identity for order m at spacing h and beta in [beta_lo, beta_hi].
template <class Real>
std::vector<IdentityCheck> operator_identities(int m, Real h, long beta_lo, long beta_hi,
                                               Real tail_tolerance = Real(1e-14)) {
  using std::exp;
  const auto spec = build_operator<Real>(m, h);
  std::vector<IdentityCheck> out;
  for (long beta = beta_lo; beta <= beta_hi; ++beta) {
    out.push_back(detail::run_identity(
        spec, "exp+", [&](long g) { return Real(exp(h * Real(g))); }, beta, Real(0), tail_tolerance));
    out.push_back(detail::run_identity(
        spec, "exp-", [&](long g) { return Real(exp(-h * Real(g))); }, beta, Real(0), tail_tolerance));
    for (int k = 0; k <= 2 * m - 3; ++k) {
      out.push_back(detail::run_identity(
          spec, "poly" + std::to_string(k),
          [&](long g) { return detail::ipow(h * Real(g), k); }, beta, Real(0), tail_tolerance));
    }
    out.push_back(detail::run_identity(
        spec, "psi-delta", [&](long g) { return psi<Real>(m, h * Real(g)); }, beta,
        Real(beta == 0 ? 1 : 0), tail_tolerance));
    if (m == 2) {
      out.push_back(detail::run_identity(
          spec, "x2", [&](long g) { return detail::ipow(h * Real(g), 2); }, beta, Real(-2) * h,
          tail_tolerance));
      out.push_back(detail::run_identity(
          spec, "moment", [&](long g) { return moment_formula<Real>(2, h * Real(g)); }, beta, h,
          tail_tolerance));
    }
  }
  return out;
}

}  // namespace optquad
