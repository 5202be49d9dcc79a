#pragma once

#include <cstddef>
#include <vector>

#include "otcert/cost.hpp"
#include "otcert/extended_real.hpp"

namespace otcert {

struct PlanEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  double mass = 0.0;

  bool operator==(const PlanEntry&) const = default;
};

/// Sparse coupling between two finite marginals. Entries carry strictly
/// positive mass; zero entries are dropped on construction.
class TransportPlan {
 public:
  TransportPlan() = default;
  TransportPlan(std::size_t n_rows, std::size_t n_cols, std::vector<PlanEntry> entries);

  /// The permutation plan (i, sigma(i), 1/n).
  static TransportPlan from_permutation(const std::vector<std::size_t>& sigma);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  const std::vector<PlanEntry>& entries() const { return entries_; }

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;

  /// Largest absolute deviation of the marginals from the given weights.
  double marginal_error(const std::vector<double>& mu_weights,
                        const std::vector<double>& nu_weights) const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<PlanEntry> entries_;
};

/// Transport cost sum_(i,j) mass_ij * c(i,j), computed with compensated
/// summation. Positive mass on an infinite-cost pair makes the total
/// PositiveInfinity.
ExtendedReal plan_cost(const TransportPlan& plan, const CostMatrix& costs);

/// Convenience overload that materializes the cost matrix first.
ExtendedReal plan_cost(const TransportPlan& plan, const CostSpec& spec, const DiscreteMeasure& mu,
                       const DiscreteMeasure& nu);

}  // namespace otcert
