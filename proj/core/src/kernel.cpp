#include "optquad/kernel.hpp"

#include <string>

namespace optquad {

double moment_f(int m, int beta, const GridSpec& grid) {
  require_order(m);
  if (beta < 0 || beta > grid.n) {
    throw DomainError("node index " + std::to_string(beta) + " outside [0, " +
                      std::to_string(grid.n) + "]");
  }
  return moment_formula(m, grid.node(beta));
}

double kernel_double_integral(int m) {
  require_order(m);
  // integrate the moment over [0, 1]: sinh(1) minus its first m odd Taylor terms
  return detail::sinh_tail(1.0, m);
}

}  // namespace optquad
