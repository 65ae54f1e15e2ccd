#pragma once

// The kernel psi_m of the error-functional norm and the moments
// f_m(t) = int_0^1 psi_m(x - t) dx for the unit weight.

#include <cmath>
#include <string>

#include "optquad/detail/series.hpp"
#include "optquad/errors.hpp"
#include "optquad/grid.hpp"

namespace optquad {

inline void require_order(int m) {
  if (m < kMinOrder || m > kMaxOrder) {
    throw DomainError("order m must lie in [1, 3], got " + std::to_string(m));
  }
}

/// psi_m(x) = sign(x)/2 * (sinh x - sum_{k=1}^{m-1} x^(2k-1)/(2k-1)!).
///
/// The bracket is odd, so psi_m itself is even, and psi_m(0) = 0 with
/// sign(0) = 0. Near the origin the bracket is summed as the tail of the
/// sinh series.
template <class Real>
Real psi(int m, Real x) {
  using std::abs;
  require_order(m);
  if (x == Real(0)) return Real(0);
  return detail::sinh_tail(abs(x), m - 1) / Real(2);
}

/// Closed-form moment (e^t + e^-t + e^(1-t) + e^(t-1) - 4)/4
///   - sum_{k=1}^{m-1} (t^(2k) + (1-t)^(2k)) / (2 (2k)!),
/// valid as the analytic expression for every real t. It coincides with
/// int_0^1 psi_m(x - t) dx for t in [0, 1].
template <class Real>
Real moment_formula(int m, Real t) {
  require_order(m);
  // (cosh t - 1 - ...) / 2 + (cosh(1-t) - 1 - ...) / 2
  return (detail::cosh_tail(t, m) + detail::cosh_tail(Real(1) - t, m)) / Real(2);
}

/// f_m(h*beta) at a node of the grid; beta must lie in [0, N].
double moment_f(int m, int beta, const GridSpec& grid);

/// I_m = int_0^1 int_0^1 psi_m(x - y) dx dy = sum_{k >= m} 1/(2k+1)!.
double kernel_double_integral(int m);

}  // namespace optquad
