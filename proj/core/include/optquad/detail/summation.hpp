#pragma once

#include <cmath>

namespace optquad::detail {

/// Neumaier's variant of Kahan summation.
template <class Real>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(Real x) {
    using std::abs;
    const Real t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  Real value() const { return sum_ + compensation_; }

 private:
  Real sum_{0};
  Real compensation_{0};
};

}  // namespace optquad::detail
