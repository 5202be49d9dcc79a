#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "otcert/extended_real.hpp"
#include "otcert/measure.hpp"

namespace otcert {

/// Dense n x m matrix of extended-real costs. This is the materialized form
/// of a cost on supp(mu) x supp(nu); the solver and the certifiers all work
/// against it.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, ExtendedReal fill = ExtendedReal(0.0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExtendedReal operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  ExtendedReal& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtendedReal> data_;
};

/// Squared Euclidean distance: sum_k (x_k - y_k)^2.
struct SquaredEuclideanCost {};

/// The l^p distance (sum_k |x_k - y_k|^p)^(1/p), p >= 1.
struct PNormCost {
  double p = 2.0;
};

/// Costs given verbatim as a matrix over point indices.
struct ExplicitMatrixCost {
  CostMatrix values;
};

/// Cyclic-grid cost on n points: diag_cost when j == i, shift_cost when
/// j == i + shift_steps (mod n), off_value otherwise.
struct TorusShiftCost {
  std::size_t n = 0;
  int shift_steps = 1;
  double diag_cost = 1.0;
  double shift_cost = 2.0;
  ExtendedReal off_value = ExtendedReal::infinity();
};

using CostSpec = std::variant<SquaredEuclideanCost, PNormCost, ExplicitMatrixCost, TorusShiftCost>;

/// True for cost functions that are defined on points of R^d (rather than
/// on indices) and take finite values everywhere.
bool is_analytic(const CostSpec& spec);

/// Cost of one pairing for point-based specs. Throws on dimension mismatch.
ExtendedReal eval_cost(const CostSpec& spec, const Point& x, const Point& y);

/// Cost of one pairing for index-based specs (ExplicitMatrix, TorusShift).
/// Throws when indices are out of range or the spec is point-based.
ExtendedReal eval_cost(const CostSpec& spec, std::size_t i, std::size_t j);

/// Materializes eval_cost on supp(mu) x supp(nu). For index-based specs the
/// measure sizes must match the spec's intrinsic dimensions.
CostMatrix cost_matrix(const CostSpec& spec, const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace otcert
