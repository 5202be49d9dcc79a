#pragma once

#include <cstddef>
#include <vector>

namespace otcert {

/// A point of the ground space: a fixed-length vector of finite reals.
/// Cyclic-grid instances use a single coordinate r in [0,1), read as the
/// angle of a unit-circle point.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t k) const { return coords_[k]; }
  const std::vector<double>& coords() const { return coords_; }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

/// Finitely supported probability measure: points plus strictly positive
/// weights summing to one. Duplicate points are allowed and kept as-is;
/// mass semantics make them equivalent to a merged atom.
class DiscreteMeasure {
 public:
  /// Weights must sum to 1 within 1e-12; they are then renormalized so the
  /// double-precision sum is exactly 1 (residual goes to the largest atom).
  /// Zero-weight atoms are dropped, negative weights rejected.
  DiscreteMeasure(std::vector<Point> points, std::vector<double> weights);

  /// Uniform weights 1/n.
  static DiscreteMeasure uniform(std::vector<Point> points);

  /// Rescales arbitrary positive weights to total mass one first, then
  /// applies the usual constructor.
  static DiscreteMeasure normalized(std::vector<Point> points, std::vector<double> weights);

  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  const Point& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

 private:
  std::vector<Point> points_;
  std::vector<double> weights_;
};

}  // namespace otcert
