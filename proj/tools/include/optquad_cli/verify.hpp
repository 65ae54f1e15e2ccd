#pragma once

#include <string>
#include <vector>

namespace optquad::cli {

struct VerifyCheck {
  std::string name;
  double value = 0.0;  ///< the measured quantity
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int m = 1;
  int n = 1;
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

/// Exactness of every constructible rule, agreement between methods, norm
/// sign, Cauchy-Schwarz certificates and the operator identities at h = 1/n
/// for beta in [-5, 5]. Throws DomainError for an invalid (m, n).
VerifyReport verify_rules(int m, int n);

}  // namespace optquad::cli
