#include "otcert/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "otcert/numeric.hpp"

namespace otcert {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw std::invalid_argument("Point: dimension must be >= 1");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("Point: coordinates must be finite");
    }
  }
}

namespace {

double weight_sum(const std::vector<double>& w) {
  NeumaierSum s;
  for (double x : w) s.add(x);
  return s.value();
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Point> points, std::vector<double> weights) {
  if (points.empty()) {
    throw std::invalid_argument("DiscreteMeasure: needs at least one point");
  }
  if (points.size() != weights.size()) {
    throw std::invalid_argument("DiscreteMeasure: points/weights length mismatch");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    double w = weights[i];
    if (std::isnan(w) || w < 0.0) {
      throw std::invalid_argument("DiscreteMeasure: weights must be >= 0");
    }
    if (w > 0.0) {
      points_.push_back(std::move(points[i]));
      weights_.push_back(w);
    }
  }
  if (points_.empty()) {
    throw std::invalid_argument("DiscreteMeasure: all weights are zero");
  }
  double s = weight_sum(weights_);
  if (std::abs(s - 1.0) > 1e-12) {
    throw std::invalid_argument("DiscreteMeasure: weights must sum to 1 within 1e-12");
  }
  if (s != 1.0) {
    for (double& w : weights_) w /= s;
  }
  // Exact renormalization: park the residual on the largest atom so the
  // double-precision sum is exactly one.
  double s2 = weight_sum(weights_);
  if (s2 != 1.0) {
    auto it = std::max_element(weights_.begin(), weights_.end());
    *it += 1.0 - s2;
  }
}

DiscreteMeasure DiscreteMeasure::uniform(std::vector<Point> points) {
  std::vector<double> w(points.size(), 1.0 / static_cast<double>(points.size()));
  return DiscreteMeasure(std::move(points), std::move(w));
}

DiscreteMeasure DiscreteMeasure::normalized(std::vector<Point> points,
                                            std::vector<double> weights) {
  double s = weight_sum(weights);
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("DiscreteMeasure: total weight must be positive and finite");
  }
  for (double& w : weights) w /= s;
  return DiscreteMeasure(std::move(points), std::move(weights));
}

}  // namespace otcert
