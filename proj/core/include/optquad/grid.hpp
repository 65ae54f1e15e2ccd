#pragma once

#include <string>

#include "optquad/errors.hpp"

namespace optquad {

/// Smallest and largest order of the space W_2^(m,m-1) handled here.
inline constexpr int kMinOrder = 1;
inline constexpr int kMaxOrder = 3;

/// Uniform grid x_beta = h*beta, beta = 0..n, on [0, 1] for order m.
struct GridSpec {
  int m = 1;
  int n = 1;  ///< number of intervals N; there are N + 1 nodes
  double h = 1.0;

  /// Throws DomainError unless 1 <= m <= 3, n >= 1 and n + 1 >= m.
  static GridSpec make(int m, int n) {
    if (m < kMinOrder || m > kMaxOrder) {
      throw DomainError("order m must lie in [1, 3], got " + std::to_string(m));
    }
    if (n < 1) throw DomainError("number of intervals must be >= 1, got " + std::to_string(n));
    if (n + 1 < m) {
      throw DomainError("order " + std::to_string(m) + " needs at least " + std::to_string(m) +
                        " nodes, got " + std::to_string(n + 1));
    }
    return GridSpec{m, n, 1.0 / n};
  }

  int node_count() const { return n + 1; }

  /// beta/n, which is exact at both endpoints.
  double node(int beta) const { return static_cast<double>(beta) / n; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace optquad
