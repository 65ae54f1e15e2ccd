#pragma once

// Cancellation-free evaluation of the "exponential minus its Taylor head"
// quantities that appear throughout the kernel, the moments and the
// discrete operator. For small arguments every one of them is a power series
// whose terms share a sign, so summing the series directly loses nothing;
// for large arguments the direct subtraction is harmless.

#include <cmath>
#include <limits>

namespace optquad::detail {

/// Arguments up to this size are evaluated by series.
inline constexpr double kSeriesCutoff = 2.0;

template <class Real>
Real ipow(Real base, long exponent) {
  Real result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

template <class Real>
Real inv_factorial(int n) {
  Real r(1);
  for (int i = 2; i <= n; ++i) r /= Real(i);
  return r;
}

/// sum_{n = first, first + step, ...} coef(n) * x^n, stopped once two
/// consecutive terms fall below machine epsilon relative to the sum.
template <class Real, class Coef>
Real power_series(Real x, int first, int step, Coef coef) {
  using std::abs;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real x_step = ipow(x, step);
  Real power = ipow(x, first);
  Real sum(0);
  int small = 0;
  for (int n = first; n < first + 400 * step; n += step) {
    const Real term = coef(n) * power;
    sum += term;
    if (abs(term) <= eps * abs(sum)) {
      if (++small == 2) break;
    } else {
      small = 0;
    }
    power *= x_step;
  }
  return sum;
}

/// sinh(x) - sum_{k < skip} x^(2k+1)/(2k+1)!.
template <class Real>
Real sinh_tail(Real x, int skip) {
  using std::abs;
  using std::sinh;
  if (abs(x) <= Real(kSeriesCutoff)) {
    return power_series(x, 2 * skip + 1, 2, [](int n) { return inv_factorial<Real>(n); });
  }
  Real r = sinh(x);
  for (int k = 0; k < skip; ++k) r -= ipow(x, 2 * k + 1) * inv_factorial<Real>(2 * k + 1);
  return r;
}

/// cosh(x) - sum_{k < skip} x^(2k)/(2k)!.
template <class Real>
Real cosh_tail(Real x, int skip) {
  using std::abs;
  using std::cosh;
  if (abs(x) <= Real(kSeriesCutoff)) {
    return power_series(x, 2 * skip, 2, [](int n) { return inv_factorial<Real>(n); });
  }
  Real r = cosh(x);
  for (int k = 0; k < skip; ++k) r -= ipow(x, 2 * k) * inv_factorial<Real>(2 * k);
  return r;
}

/// x cosh x - sinh x = sum_{k >= 1} 2k x^(2k+1)/(2k+1)!.
template <class Real>
Real x_cosh_minus_sinh(Real x) {
  using std::abs;
  using std::cosh;
  using std::sinh;
  if (abs(x) <= Real(kSeriesCutoff)) {
    return power_series(x, 3, 2, [](int n) { return Real(n - 1) * inv_factorial<Real>(n); });
  }
  return x * cosh(x) - sinh(x);
}

/// x cosh x + x - 2 sinh x = sum_{k >= 1} (2k-1) x^(2k+1)/(2k+1)!.
template <class Real>
Real x_cosh_plus_x_minus_two_sinh(Real x) {
  using std::abs;
  using std::cosh;
  using std::sinh;
  if (abs(x) <= Real(kSeriesCutoff)) {
    return power_series(x, 3, 2, [](int n) { return Real(n - 2) * inv_factorial<Real>(n); });
  }
  return x * cosh(x) + x - Real(2) * sinh(x);
}

/// e^x - 1 - x = sum_{n >= 2} x^n/n!.
template <class Real>
Real exp_tail2(Real x) {
  using std::abs;
  using std::exp;
  if (abs(x) <= Real(kSeriesCutoff)) {
    return power_series(x, 2, 1, [](int n) { return inv_factorial<Real>(n); });
  }
  return exp(x) - Real(1) - x;
}

/// x e^x - e^x + 1 = sum_{n >= 2} (n-1) x^n/n!.
template <class Real>
Real x_exp_minus_exp_plus_one(Real x) {
  using std::abs;
  using std::exp;
  if (abs(x) <= Real(kSeriesCutoff)) {
    return power_series(x, 2, 1, [](int n) { return Real(n - 1) * inv_factorial<Real>(n); });
  }
  return x * exp(x) - exp(x) + Real(1);
}

/// 2e^x - 2 - x e^x - x = -sum_{n >= 3} (n-2) x^n/n!.
template <class Real>
Real two_exp_minus_two_minus_x_exp_minus_x(Real x) {
  using std::abs;
  using std::exp;
  if (abs(x) <= Real(kSeriesCutoff)) {
    return -power_series(x, 3, 1, [](int n) { return Real(n - 2) * inv_factorial<Real>(n); });
  }
  return Real(2) * exp(x) - Real(2) - x * exp(x) - x;
}

/// e^x - 1 for any Real.
template <class Real>
Real expm1_generic(Real x) {
  using std::abs;
  using std::exp;
  if (abs(x) <= Real(kSeriesCutoff)) {
    return power_series(x, 1, 1, [](int n) { return inv_factorial<Real>(n); });
  }
  return exp(x) - Real(1);
}

}  // namespace optquad::detail
