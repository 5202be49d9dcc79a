#pragma once

#include <cassert>
#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace otcert {

/// A transport cost value in [0, +inf]. PositiveInfinity marks a forbidden
/// pairing and is a first-class value: it is never approximated by a large
/// finite number, and arithmetic follows the absorbing rules below.
class ExtendedReal {
 public:
  ExtendedReal() : v_(0.0) {}

  /// Finite cost; rejects negatives, NaN and infinities.
  explicit ExtendedReal(double v) : v_(v) {
    if (std::isnan(v) || v < 0.0 || std::isinf(v)) {
      throw std::invalid_argument("ExtendedReal: finite cost must be >= 0 and not NaN/inf");
    }
  }

  static ExtendedReal infinity() {
    ExtendedReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_infinite() const { return !is_finite(); }

  /// Finite payload; only valid when is_finite().
  double value() const {
    assert(is_finite());
    return v_;
  }

  /// Finite + Finite = Finite; anything + PositiveInfinity = PositiveInfinity.
  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    ExtendedReal r;
    r.v_ = a.v_ + b.v_;
    return r;
  }

  /// Scale by a strictly positive mass. mass * inf = inf.
  ExtendedReal scaled(double mass) const {
    assert(mass > 0.0);
    ExtendedReal r;
    r.v_ = v_ * mass;
    return r;
  }

  friend auto operator<=>(ExtendedReal a, ExtendedReal b) { return a.v_ <=> b.v_; }
  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }

 private:
  double v_;
};

/// Difference of two costs, used for pair-graph edge weights. Only defined
/// when the minuend is finite; callers exclude infinite edges first. The
/// subtrahend is always a support-pair cost and must be finite as well.
inline double cost_difference(ExtendedReal minuend, ExtendedReal subtrahend) {
  if (minuend.is_infinite()) {
    throw std::invalid_argument("cost_difference: infinite minuend");
  }
  assert(subtrahend.is_finite());
  return minuend.value() - subtrahend.value();
}

}  // namespace otcert
