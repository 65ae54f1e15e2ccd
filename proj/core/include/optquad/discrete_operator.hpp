#pragma once

// Discrete analogue D_m(h beta) of d^(2m)/dx^(2m) - d^(2m-2)/dx^(2m-2):
// the sequence whose discrete convolution with psi_m(h beta) is the unit
// impulse. It is supported on {-1, 0, 1} plus geometric tails
// A_k lambda_k^(|beta|-1) / p, one per root lambda_k of the characteristic
// polynomial inside the unit disk.
//
// Everything here is templated on the scalar type. double is the everyday
// instantiation; D_m grows like h^(1-2m), so convolution identities at small
// h are checked with a wider type (long double or a quad type).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "optquad/detail/series.hpp"
#include "optquad/detail/summation.hpp"
#include "optquad/errors.hpp"
#include "optquad/kernel.hpp"

namespace optquad {

/// P_{2m-2}(lambda) = sum_s coeffs[s] lambda^s.
template <class Real>
struct BasicCharacteristicPolynomial {
  int m = 2;
  Real h{1};
  std::vector<Real> coeffs;  ///< ascending, p_0 .. p_{2m-2}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Real operator()(Real lambda) const {
    Real r(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * lambda + *it;
    return r;
  }

  Real derivative(Real lambda) const {
    Real r(0);
    for (int s = degree(); s >= 1; --s) r = r * lambda + Real(s) * coeffs[s];
    return r;
  }

  /// sum_s |p_s| |lambda|^s, the scale against which residuals are judged.
  Real magnitude(Real lambda) const {
    using std::abs;
    Real r(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * abs(lambda) + abs(*it);
    return r;
  }
};

/// D_m(h beta) in the form p^{-1} * {sum_k A_k lambda_k^(|beta|-1),
/// -2e^h + sum_k A_k, 2C + sum_k A_k/lambda_k} for |beta| >= 2, = 1, = 0.
template <class Real>
struct BasicOperatorSpec {
  int m = 1;
  Real h{1};
  Real p{0};        ///< leading coefficient of the characteristic polynomial
  Real c_const{0};  ///< the constant C of the beta = 0 branch
  std::vector<Real> roots;       ///< lambda_k, |lambda_k| < 1, ascending
  std::vector<Real> amplitudes;  ///< A_k, paired with roots

  Real max_root_magnitude() const {
    using std::abs;
    Real r(0);
    for (const Real& l : roots) r = std::max(r, Real(abs(l)));
    return r;
  }
};

using CharacteristicPolynomial = BasicCharacteristicPolynomial<double>;
using OperatorSpec = BasicOperatorSpec<double>;

template <class Real>
struct ConvolutionResult {
  Real value{0};
  Real tail_bound{0};  ///< estimated magnitude of the neglected |gamma| > window terms
  long window = 0;
};

namespace detail {

template <class Real>
void require_spacing(Real h) {
  if (!(h > Real(0))) throw DomainError("grid spacing must be positive");
}

template <class Real>
Real residual_tolerance() {
  return Real(1024) * std::numeric_limits<Real>::epsilon();
}

/// Root of lambda^2 - s lambda + 1 with |lambda| < 1; requires |s| > 2.
template <class Real>
Real small_reciprocal_root(Real s) {
  using std::abs;
  using std::sqrt;
  if (!(abs(s) > Real(2))) {
    throw ConstructionError("reciprocal root pair lies on the unit circle");
  }
  const Real root = sqrt((s - Real(2)) * (s + Real(2)));
  return Real(2) / (s + (s < Real(0) ? -root : root));
}

template <class Real>
bool is_palindromic(const std::vector<Real>& c) {
  using std::abs;
  Real scale(0);
  for (const Real& v : c) scale = std::max(scale, Real(abs(v)));
  const Real tol = Real(64) * std::numeric_limits<Real>::epsilon() * scale;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (abs(c[i] - c[c.size() - 1 - i]) > tol) return false;
  }
  return true;
}

/// Palindromic reduction: pair roots as lambda + 1/lambda = mu.
template <class Real>
bool palindromic_roots(const std::vector<Real>& c, std::vector<Real>& out) {
  using std::abs;
  using std::sqrt;
  const int degree = static_cast<int>(c.size()) - 1;
  std::vector<Real> mus;
  if (degree == 2) {
    mus.push_back(-c[1] / c[2]);
  } else if (degree == 4) {
    // c4 (mu^2 - 2) + c3 mu + c2 = 0
    const Real a = c[4];
    const Real b = c[3];
    const Real cc = c[2] - Real(2) * c[4];
    const Real disc = b * b - Real(4) * a * cc;
    if (disc < Real(0)) return false;
    const Real q = -(b + (b < Real(0) ? -sqrt(disc) : sqrt(disc))) / Real(2);
    if (q == Real(0)) return false;
    mus.push_back(q / a);
    mus.push_back(cc / q);
  } else {
    return false;
  }
  for (const Real& mu : mus) {
    if (!(abs(mu) > Real(2))) return false;
    out.push_back(small_reciprocal_root(mu));
  }
  return true;
}

/// Durand-Kerner on the complex plane, then keep real roots inside the disk.
template <class Real>
std::vector<Real> general_roots_inside_disk(const std::vector<Real>& c) {
  using C = std::complex<long double>;
  const int degree = static_cast<int>(c.size()) - 1;
  std::vector<C> monic(c.size());
  const long double lead = static_cast<long double>(c.back());
  for (std::size_t i = 0; i < c.size(); ++i) monic[i] = static_cast<long double>(c[i]) / lead;

  auto eval = [&](C z) {
    C r(0);
    for (int s = degree; s >= 0; --s) r = r * z + monic[s];
    return r;
  };
  std::vector<C> z(degree);
  const C seed(0.4L, 0.9L);
  for (int i = 0; i < degree; ++i) z[i] = std::pow(seed, i);
  for (int iter = 0; iter < 500; ++iter) {
    long double change = 0;
    for (int i = 0; i < degree; ++i) {
      C denom(1);
      for (int j = 0; j < degree; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  std::vector<Real> out;
  for (const C& r : z) {
    if (std::abs(r.imag()) <= 1e-9L * std::max(1.0L, std::abs(r)) && std::abs(r.real()) < 1.0L) {
      out.push_back(Real(r.real()));
    }
  }
  return out;
}

}  // namespace detail

/// Characteristic polynomial
///   (1 - e^{2h})(1-l)^{2m-2} - 2(l(e^{2h}+1) - e^h(l^2+1)) * bracket,
/// bracket = h for m = 2 and h(1-l)^2 + h^3 (l^2 + 4l + 1)/3! for m = 3.
///
/// Every coefficient equals -2e^h times a power series in h with no
/// cancellation at small h (the leading one behaves like -2h^(2m-1)/(2m-1)!).
template <class Real>
BasicCharacteristicPolynomial<Real> characteristic_polynomial(int m, Real h) {
  using std::cosh;
  using std::exp;
  using std::sinh;
  detail::require_spacing(h);
  if (m == 1) {
    throw DomainError("order 1 has no characteristic polynomial; its operator is built directly");
  }
  if (m != 2 && m != 3) throw DomainError("characteristic polynomial is available for m = 2, 3");

  const Real scale = Real(-2) * exp(h);
  BasicCharacteristicPolynomial<Real> poly;
  poly.m = m;
  poly.h = h;
  if (m == 2) {
    const Real outer = detail::sinh_tail(h, 1);              // sinh h - h
    const Real middle = Real(2) * detail::x_cosh_minus_sinh(h);  // 2(h cosh h - sinh h)
    poly.coeffs = {scale * outer, scale * middle, scale * outer};
    return poly;
  }

  Real q0, q1, q2;
  if (h <= Real(detail::kSeriesCutoff)) {
    // coefficients of h^(2k+1), k >= 2, in the lambda^1 and lambda^2 terms
    auto c1 = [](int n) {
      return Real(-4) * detail::inv_factorial<Real>(n) + Real(2) * detail::inv_factorial<Real>(n - 1) +
             detail::inv_factorial<Real>(n - 3) / Real(3);
    };
    auto c2 = [](int n) {
      return Real(6) * detail::inv_factorial<Real>(n) - Real(4) * detail::inv_factorial<Real>(n - 1) +
             Real(4) * detail::inv_factorial<Real>(n - 3) / Real(3);
    };
    q0 = detail::sinh_tail(h, 2);
    q1 = detail::power_series(h, 5, 2, c1);
    q2 = detail::power_series(h, 5, 2, c2);
  } else {
    const Real h3 = h * h * h;
    q0 = sinh(h) - h - h3 / Real(6);
    q1 = Real(-4) * sinh(h) + Real(2) * cosh(h) * (h + h3 / Real(6)) + Real(2) * h - Real(2) * h3 / Real(3);
    q2 = Real(6) * sinh(h) + Real(2) * cosh(h) * (Real(-2) * h + Real(2) * h3 / Real(3)) - Real(2) * h -
         h3 / Real(3);
  }
  poly.coeffs = {scale * q0, scale * q1, scale * q2, scale * q1, scale * q0};
  return poly;
}

/// The roots of the characteristic polynomial strictly inside the unit disk,
/// ascending. Exactly degree/2 of them exist for a valid operator.
template <class Real>
std::vector<Real> stable_roots(const BasicCharacteristicPolynomial<Real>& poly) {
  using std::abs;
  if (poly.coeffs.empty() || poly.coeffs.back() == Real(0)) {
    throw ConstructionError("characteristic polynomial is degenerate");
  }
  const int degree = poly.degree();
  if (degree == 0) return {};

  std::vector<Real> roots;
  const bool reduced = detail::is_palindromic(poly.coeffs) && detail::palindromic_roots(poly.coeffs, roots);
  if (!reduced) {
    roots = detail::general_roots_inside_disk(poly.coeffs);
  }

  // polish and certify
  const Real tol = detail::residual_tolerance<Real>();
  for (Real& l : roots) {
    for (int it = 0; it < 3 && abs(poly(l)) > tol * poly.magnitude(l); ++it) {
      l -= poly(l) / poly.derivative(l);
    }
    if (!(abs(l) < Real(1)) || abs(poly(l)) > tol * poly.magnitude(l)) {
      throw ConstructionError("root certification failed for the characteristic polynomial");
    }
  }
  if (static_cast<int>(roots.size()) != degree / 2) {
    throw ConstructionError("expected " + std::to_string(degree / 2) +
                            " roots inside the unit disk, found " + std::to_string(roots.size()));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Builds D_m for m in {1, 2, 3} at spacing h.
template <class Real>
BasicOperatorSpec<Real> build_operator(int m, Real h) {
  using std::exp;
  detail::require_spacing(h);
  if (m < 1 || m > 3) throw DomainError("discrete operator is available for m = 1, 2, 3");

  BasicOperatorSpec<Real> spec;
  spec.m = m;
  spec.h = h;
  const Real eh = exp(h);
  const Real e2h = eh * eh;
  if (m == 1) {
    // support {-1, 0, 1}; no geometric tail
    spec.p = -detail::expm1_generic(Real(2) * h);
    spec.c_const = Real(1) + e2h;
    return spec;
  }

  const auto poly = characteristic_polynomial(m, h);
  const int degree = poly.degree();
  spec.p = poly.coeffs[degree];
  spec.c_const = Real(1) + Real(2 * m - 2) * eh + e2h + eh * poly.coeffs[degree - 1] / poly.coeffs[degree];
  spec.roots = stable_roots(poly);
  for (const Real& l : spec.roots) {
    const Real one_minus = detail::ipow(Real(1) - l, 2 * m - 2);
    const Real bracket = l * (e2h + Real(1)) - eh * (l * l + Real(1));
    spec.amplitudes.push_back(Real(2) * one_minus * bracket * spec.p / (l * poly.derivative(l)));
  }
  return spec;
}

/// D_m(h beta); even in beta.
template <class Real>
Real operator_value(const BasicOperatorSpec<Real>& spec, long beta) {
  using std::exp;
  const long b = beta < 0 ? -beta : beta;
  detail::CompensatedSum<Real> sum;
  if (b >= 2) {
    for (std::size_t k = 0; k < spec.roots.size(); ++k) {
      sum += spec.amplitudes[k] * detail::ipow(spec.roots[k], b - 1);
    }
  } else if (b == 1) {
    sum += Real(-2) * exp(spec.h);
    for (const Real& a : spec.amplitudes) sum += a;
  } else {
    sum += Real(2) * spec.c_const;
    for (std::size_t k = 0; k < spec.roots.size(); ++k) sum += spec.amplitudes[k] / spec.roots[k];
  }
  return sum.value() / spec.p;
}

/// Smallest window W with (max|lambda_k| * growth)^W <= tail_tolerance, where
/// growth bounds |g(gamma +- 1)| / |g(gamma)| for the sequence to be convolved.
/// Throws ToleranceError when the product is >= 1 (the tail diverges).
template <class Real>
long window_for(const BasicOperatorSpec<Real>& spec, Real tail_tolerance, Real growth = Real(1)) {
  using std::ceil;
  using std::log;
  if (spec.roots.empty()) return 1;
  const Real rate = spec.max_root_magnitude() * growth;
  if (!(rate < Real(1))) {
    throw ToleranceError("operator tail times sequence growth is " + std::to_string(static_cast<double>(rate)) +
                             " >= 1; the convolution does not converge",
                         std::numeric_limits<double>::infinity());
  }
  const Real w = ceil(log(tail_tolerance) / log(rate));
  return std::max(1L, static_cast<long>(w));
}

/// sum_{|gamma| <= window} D_m(gamma) g(beta - gamma), with an estimate of
/// the neglected tail
///   2 K rho^(W+1) G / (1 - rho r),
/// K = sum_k |A_k| / (|p| |lambda_k|), rho = max|lambda_k|, G the larger of
/// |g(beta -+ (W+1))| and r the observed growth ratio of g at the window
/// edges. Throws ToleranceError when that estimate exceeds tail_tolerance.
template <class Real, class G>
ConvolutionResult<Real> convolve(const BasicOperatorSpec<Real>& spec, G&& g, long beta, long window,
                                 Real tail_tolerance = std::numeric_limits<Real>::infinity()) {
  using std::abs;
  if (window < 1) throw DomainError("convolution window must be positive");

  detail::CompensatedSum<Real> sum;
  for (long gamma = -window; gamma <= window; ++gamma) {
    sum += operator_value(spec, gamma) * Real(g(beta - gamma));
  }

  ConvolutionResult<Real> out;
  out.value = sum.value();
  out.window = window;
  if (!spec.roots.empty()) {
    Real k_const(0);
    for (std::size_t k = 0; k < spec.roots.size(); ++k) {
      k_const += abs(spec.amplitudes[k]) / (abs(spec.p) * abs(spec.roots[k]));
    }
    const Real rho = spec.max_root_magnitude();
    const Real left_edge = abs(Real(g(beta + window)));
    const Real left_out = abs(Real(g(beta + window + 1)));
    const Real right_edge = abs(Real(g(beta - window)));
    const Real right_out = abs(Real(g(beta - window - 1)));
    Real growth(1);
    if (left_edge > Real(0)) growth = std::max(growth, Real(left_out / left_edge));
    if (right_edge > Real(0)) growth = std::max(growth, Real(right_out / right_edge));
    const Real edge = std::max(left_out, right_out);
    if (rho * growth < Real(1)) {
      out.tail_bound = Real(2) * k_const * detail::ipow(rho, window + 1) * edge / (Real(1) - rho * growth);
    } else {
      out.tail_bound = std::numeric_limits<Real>::infinity();
    }
  }
  if (out.tail_bound > tail_tolerance) {
    throw ToleranceError("window " + std::to_string(window) + " leaves an estimated tail of " +
                             std::to_string(static_cast<double>(out.tail_bound)),
                         static_cast<double>(out.tail_bound));
  }
  return out;
}

/// Convolution whose window starts at window_for(spec, tail_tolerance) and
/// widens until the tail estimate meets tail_tolerance. The amplitudes scale
/// like 1/p ~ h^(1-2m), so small h needs windows well past the first guess.
/// A window edge near a zero of g can show a large local growth ratio, so an
/// infinite estimate is only taken as divergence after several widenings.
template <class Real, class G>
ConvolutionResult<Real> convolve_to_tolerance(const BasicOperatorSpec<Real>& spec, G&& g, long beta,
                                              Real tail_tolerance, long max_window = 100000) {
  using std::isinf;
  constexpr int kDivergentRounds = 8;
  long window = window_for(spec, tail_tolerance);
  int unbounded = 0;
  for (;;) {
    auto result = convolve(spec, g, beta, window);
    if (result.tail_bound <= tail_tolerance) return result;
    unbounded = isinf(result.tail_bound) ? unbounded + 1 : 0;
    if (unbounded >= kDivergentRounds || window >= max_window) {
      throw ToleranceError("no window up to " + std::to_string(window) + " meets the tail tolerance",
                           static_cast<double>(result.tail_bound));
    }
    window = std::min(max_window, window + std::max(4L, window / 4));
  }
}

}  // namespace optquad
