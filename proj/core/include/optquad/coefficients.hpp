#pragma once

// Optimal coefficients for the unit weight from explicit formulas:
// order 1 (W_2^(1,0)) and order 2 (W_2^(2,1)), plus an independent
// assembly through operator convolution and boundary constants.

#include <vector>

#include "optquad/rule.hpp"

namespace optquad {

/// C_0 = C_N = (e^h-1)/(e^h+1), interior 2(e^h-1)/(e^h+1); d = 0.
QuadratureRule closed_form_m1(int n);

/// The root of p l^2 + (2(e^{2h}-1) - 2h(e^{2h}+1)) l + p, p = 1 - e^{2h} + 2h e^h,
/// with |l| < 1, computed as p / (n + S) from the factored discriminant
///   S^2 = h (e^h-1)^2 (h (e^h+1)^2 + 2(1 - e^{2h})).
/// Throws ConstructionError if the discriminant is not positive.
double lambda1(double h);

/// K(h) = (2e^h - 2 - h e^h - h)(lambda1 - 1) / (2 (e^h-1)^2 (lambda1 + lambda1^(N+1))).
double boundary_layer_amplitude(int n);

/// Order-2 optimal rule:
///   C_0 = 1 - h/(e^h-1) - K (l - l^N),
///   C_beta = h + K ((e^h - l) l^beta + (1 - l e^h) l^(N-beta)),
///   C_N = -1 + e^h (h/(e^h-1) - K (l - l^N)).
QuadratureRule closed_form_m2(int n);

/// Constants of the convolution construction
///   C_0 = D*f + a + sum_k (a_k + b_k l_k^N),
///   C_beta = D*f + sum_k (a_k l_k^beta + b_k l_k^(N-beta)),
///   C_N = D*f + b + sum_k (a_k l_k^N + b_k).
struct BoundaryConstants {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> a_k;
  std::vector<double> b_k;
  double d = 0.0;      ///< Lagrange constant of the exponential condition
  double big_d = 0.0;  ///< (1/4) sum_gamma C_gamma e^{h gamma}
};

struct ConvolutionConstruction {
  QuadratureRule rule;
  BoundaryConstants constants;
  double interior_value = 0.0;  ///< D_m * f_m away from the ends
};

/// m = 1: interior value -(2 D_1(1) + D_1(0)) taken from the operator and
/// a = b = (1-e^h)/(e^h+1). m = 2: interior value h, a_1 = K (e^h - l),
/// b_1 = K (1 - l e^h), and the end coefficients recovered from the two
/// exactness conditions. Other orders throw UnsupportedError.
ConvolutionConstruction convolution_construction(int m, int n);

QuadratureRule coefficients_via_convolution(int m, int n);

/// Lagrange multipliers recovered from the kernel rows
///   sum_gamma C_gamma psi(x_beta - x_gamma) + P_{m-2}(x_beta) + d e^{-x_beta} = f_m(x_beta)
/// by least squares over all nodes.
struct Multipliers {
  std::vector<double> polynomial;  ///< P_{m-2}, ascending powers
  double d = 0.0;
  double fit_residual = 0.0;       ///< max |row residual| after the fit
};

Multipliers recover_multipliers(const QuadratureRule& rule);

}  // namespace optquad
