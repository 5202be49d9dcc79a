#include "otcert/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace otcert {

bool CostMatrix::all_finite() const {
  for (const ExtendedReal& v : data_) {
    if (v.is_infinite()) return false;
  }
  return true;
}

bool is_analytic(const CostSpec& spec) {
  return std::holds_alternative<SquaredEuclideanCost>(spec) ||
         std::holds_alternative<PNormCost>(spec);
}

namespace {

void check_dims(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("eval_cost: point dimension mismatch");
  }
}

}  // namespace

ExtendedReal eval_cost(const CostSpec& spec, const Point& x, const Point& y) {
  if (const auto* sq = std::get_if<SquaredEuclideanCost>(&spec)) {
    (void)sq;
    check_dims(x, y);
    double s = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) {
      double d = x[k] - y[k];
      s += d * d;
    }
    return ExtendedReal(s);
  }
  if (const auto* pn = std::get_if<PNormCost>(&spec)) {
    check_dims(x, y);
    double s = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) {
      s += std::pow(std::abs(x[k] - y[k]), pn->p);
    }
    return ExtendedReal(std::pow(s, 1.0 / pn->p));
  }
  throw std::invalid_argument("eval_cost: index-based cost evaluated on points");
}

ExtendedReal eval_cost(const CostSpec& spec, std::size_t i, std::size_t j) {
  if (const auto* em = std::get_if<ExplicitMatrixCost>(&spec)) {
    if (i >= em->values.rows() || j >= em->values.cols()) {
      throw std::out_of_range("eval_cost: matrix index out of range");
    }
    return em->values(i, j);
  }
  if (const auto* ts = std::get_if<TorusShiftCost>(&spec)) {
    if (i >= ts->n || j >= ts->n) {
      throw std::out_of_range("eval_cost: torus index out of range");
    }
    if (j == i) return ExtendedReal(ts->diag_cost);
    const auto n = static_cast<long long>(ts->n);
    const auto step = ((ts->shift_steps % n) + n) % n;
    if (static_cast<long long>(j) == (static_cast<long long>(i) + step) % n) {
      return ExtendedReal(ts->shift_cost);
    }
    return ts->off_value;
  }
  throw std::invalid_argument("eval_cost: point-based cost evaluated on indices");
}

CostMatrix cost_matrix(const CostSpec& spec, const DiscreteMeasure& mu,
                       const DiscreteMeasure& nu) {
  const std::size_t n = mu.size();
  const std::size_t m = nu.size();
  if (const auto* em = std::get_if<ExplicitMatrixCost>(&spec)) {
    if (em->values.rows() != n || em->values.cols() != m) {
      throw std::invalid_argument("cost_matrix: explicit matrix shape does not match measures");
    }
    return em->values;
  }
  CostMatrix c(n, m);
  if (const auto* ts = std::get_if<TorusShiftCost>(&spec)) {
    if (ts->n != n || ts->n != m) {
      throw std::invalid_argument("cost_matrix: torus size does not match measures");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) c(i, j) = eval_cost(spec, i, j);
    }
    return c;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      c(i, j) = eval_cost(spec, mu.point(i), nu.point(j));
    }
  }
  return c;
}

}  // namespace otcert
