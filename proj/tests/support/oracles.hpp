#pragma once

// Reference computations that share no code with the library: adaptive
// Gauss-Kronrod integration, the textbook quadratic formula, the
// characteristic polynomial multiplied out term by term, and a plain
// null-space basis for the exactness conditions.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Real = long double;

/// Adaptive 7-15 Gauss-Kronrod on [a, b].
inline Real integrate(const std::function<Real(Real)>& f, Real a, Real b, Real tol = 1e-17L,
                      int depth = 0) {
  static const Real xgk[8] = {0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
                              0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
                              0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
                              0.207784955007898467600689403773245L, 0.0L};
  static const Real wgk[8] = {0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
                              0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
                              0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
                              0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
  static const Real wg[4] = {0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
                             0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};
  const Real c = (a + b) / 2;
  const Real r = (b - a) / 2;
  Real kronrod = wgk[7] * f(c);
  Real gauss = wg[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const Real v = f(c - r * xgk[i]) + f(c + r * xgk[i]);
    kronrod += wgk[i] * v;
    if (i % 2 == 1) gauss += wg[i / 2] * v;
  }
  kronrod *= r;
  gauss *= r;
  if (std::abs(kronrod - gauss) <= tol || depth > 40) return kronrod;
  return integrate(f, a, c, tol / 2, depth + 1) + integrate(f, c, b, tol / 2, depth + 1);
}

/// psi_m straight from its definition: sign(x)/2 (sinh x - odd Taylor head).
inline Real psi_definition(int m, Real x) {
  Real head = 0;
  Real term = x;  // x^(2k-1)/(2k-1)!
  for (int k = 1; k <= m - 1; ++k) {
    head += term;
    term *= x * x / ((2 * k) * (2 * k + 1));
  }
  const Real s = x > 0 ? 1 : (x < 0 ? -1 : 0);
  return s / 2 * (std::sinh(x) - head);
}

/// int_0^1 psi_m(x - t) dx, split at the kink.
inline Real moment(int m, Real t) {
  auto f = [&](Real x) { return psi_definition(m, x - t); };
  Real v = 0;
  if (t > 0) v += integrate(f, 0, t, 1e-20L);
  if (t < 1) v += integrate(f, t, 1, 1e-20L);
  return v;
}

/// Both roots of a x^2 + b x + c, computed the plain way in long double.
inline std::pair<Real, Real> quadratic_roots(Real a, Real b, Real c) {
  const Real d = std::sqrt(b * b - 4 * a * c);
  return {(-b - d) / (2 * a), (-b + d) / (2 * a)};
}

using Poly = std::vector<Real>;  // ascending

inline Poly multiply(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

inline Poly add(Poly p, const Poly& q) {
  if (q.size() > p.size()) p.resize(q.size(), 0);
  for (std::size_t i = 0; i < q.size(); ++i) p[i] += q[i];
  return p;
}

inline Poly scale(Poly p, Real s) {
  for (auto& v : p) v *= s;
  return p;
}

inline Poly power(const Poly& p, int k) {
  Poly r{1};
  for (int i = 0; i < k; ++i) r = multiply(r, p);
  return r;
}

/// (1 - e^{2h})(1-l)^{2m-2} - 2(l(e^{2h}+1) - e^h(l^2+1)) * B(l), multiplied out
/// with no care for cancellation. B = h for m = 2, h(1-l)^2 + h^3(l^2+4l+1)/6 for m = 3.
inline Poly characteristic_naive(int m, Real h) {
  const Real eh = std::exp(h);
  const Real e2h = std::exp(2 * h);
  const Poly one_minus{1, -1};
  Poly first = scale(power(one_minus, 2 * m - 2), 1 - e2h);
  Poly mid{-eh, e2h + 1, -eh};
  Poly bracket = (m == 2) ? Poly{h} : add(scale(power(one_minus, 2), h), scale(Poly{1, 4, 1}, h * h * h / 6));
  return add(first, scale(multiply(mid, bracket), -2));
}

inline Real horner(const Poly& p, Real x) {
  Real r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

/// Orthonormal basis of {v : sum v_b x_b^alpha = 0 (alpha <= m-2), sum v_b e^{-x_b} = 0}.
inline Eigen::MatrixXd admissible_directions(int m, int n) {
  Eigen::MatrixXd rows(m, n + 1);
  for (int b = 0; b <= n; ++b) {
    const double x = static_cast<double>(b) / n;
    for (int a = 0; a < m - 1; ++a) rows(a, b) = std::pow(x, a);
    rows(m - 1, b) = std::exp(-x);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  const int rank = static_cast<int>(svd.rank());
  return svd.matrixV().rightCols(n + 1 - rank);
}

}  // namespace oracle
