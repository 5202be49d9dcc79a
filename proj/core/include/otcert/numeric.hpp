#pragma once

#include <cmath>

namespace otcert {

/// Neumaier compensated accumulator. Sums of plan masses and dual terms must
/// land on the correctly rounded total (uniform 1/N masses in particular),
/// which naive left-to-right addition does not guarantee.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace otcert
