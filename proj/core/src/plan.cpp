#include "otcert/plan.hpp"

#include <cmath>
#include <stdexcept>

#include "otcert/numeric.hpp"

namespace otcert {

TransportPlan::TransportPlan(std::size_t n_rows, std::size_t n_cols,
                             std::vector<PlanEntry> entries)
    : n_rows_(n_rows), n_cols_(n_cols) {
  if (n_rows == 0 || n_cols == 0) {
    throw std::invalid_argument("TransportPlan: empty marginals");
  }
  entries_.reserve(entries.size());
  for (const PlanEntry& e : entries) {
    if (e.i >= n_rows || e.j >= n_cols) {
      throw std::out_of_range("TransportPlan: entry index out of range");
    }
    if (std::isnan(e.mass) || e.mass < 0.0) {
      throw std::invalid_argument("TransportPlan: entry mass must be >= 0");
    }
    if (e.mass > 0.0) entries_.push_back(e);
  }
}

TransportPlan TransportPlan::from_permutation(const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<PlanEntry> entries;
  entries.reserve(n);
  const double mass = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, sigma[i], mass});
  return TransportPlan(n, n, std::move(entries));
}

std::vector<double> TransportPlan::row_sums() const {
  std::vector<NeumaierSum> acc(n_rows_);
  for (const PlanEntry& e : entries_) acc[e.i].add(e.mass);
  std::vector<double> out(n_rows_);
  for (std::size_t i = 0; i < n_rows_; ++i) out[i] = acc[i].value();
  return out;
}

std::vector<double> TransportPlan::col_sums() const {
  std::vector<NeumaierSum> acc(n_cols_);
  for (const PlanEntry& e : entries_) acc[e.j].add(e.mass);
  std::vector<double> out(n_cols_);
  for (std::size_t j = 0; j < n_cols_; ++j) out[j] = acc[j].value();
  return out;
}

double TransportPlan::marginal_error(const std::vector<double>& mu_weights,
                                     const std::vector<double>& nu_weights) const {
  if (mu_weights.size() != n_rows_ || nu_weights.size() != n_cols_) {
    throw std::invalid_argument("marginal_error: weight vector size mismatch");
  }
  double worst = 0.0;
  auto rows = row_sums();
  auto cols = col_sums();
  for (std::size_t i = 0; i < n_rows_; ++i) worst = std::max(worst, std::abs(rows[i] - mu_weights[i]));
  for (std::size_t j = 0; j < n_cols_; ++j) worst = std::max(worst, std::abs(cols[j] - nu_weights[j]));
  return worst;
}

ExtendedReal plan_cost(const TransportPlan& plan, const CostMatrix& costs) {
  if (plan.n_rows() != costs.rows() || plan.n_cols() != costs.cols()) {
    throw std::invalid_argument("plan_cost: plan/cost shape mismatch");
  }
  NeumaierSum total;
  for (const PlanEntry& e : plan.entries()) {
    ExtendedReal c = costs(e.i, e.j);
    if (c.is_infinite()) return ExtendedReal::infinity();
    total.add(e.mass * c.value());
  }
  return ExtendedReal(total.value());
}

ExtendedReal plan_cost(const TransportPlan& plan, const CostSpec& spec, const DiscreteMeasure& mu,
                       const DiscreteMeasure& nu) {
  return plan_cost(plan, cost_matrix(spec, mu, nu));
}

}  // namespace otcert
