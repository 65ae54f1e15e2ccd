#pragma once

// Dense solve of the constrained system
//   sum_gamma C_gamma psi_m(x_beta - x_gamma) + P_{m-2}(x_beta) + d e^{-x_beta} = f_m(x_beta),
//   sum_gamma C_gamma x_gamma^alpha = 1/(alpha+1),  alpha = 0..m-2,
//   sum_gamma C_gamma e^{-x_gamma} = 1 - e^{-1}.
// Works for every supported order and serves as the reference for the
// explicit formulas.

#include <Eigen/Dense>

#include "optquad/grid.hpp"
#include "optquad/rule.hpp"

namespace optquad {

/// Estimated 1-norm condition numbers above this are rejected. The system is
/// assembled and factorised in extended precision, so this sits above the
/// usual double-precision threshold.
inline constexpr double kConditionLimit = 1e15;

/// Column order of the unknown vector.
struct UnknownLayout {
  int coefficient_count = 0;  ///< C_0..C_N
  int polynomial_count = 0;   ///< P_{m-2} coefficients, ascending
  int size() const { return coefficient_count + polynomial_count + 1; }
  int polynomial_index(int alpha) const { return coefficient_count + alpha; }
  int d_index() const { return coefficient_count + polynomial_count; }
};

struct WienerHopfSystem {
  using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

  GridSpec grid;
  Matrix matrix;
  Vector rhs;
  UnknownLayout layout;
};

/// Symmetric bordered system of size N + m + 1.
WienerHopfSystem assemble_system(int m, int n);

/// LU with partial pivoting and one step of iterative refinement. Throws
/// SolveError when the condition estimate exceeds kConditionLimit or the
/// final residual is not below 1e-10 relative to the right-hand side.
QuadratureRule solve(const WienerHopfSystem& system);

inline QuadratureRule direct_solve(int m, int n) { return solve(assemble_system(m, n)); }

}  // namespace optquad
