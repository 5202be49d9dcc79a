#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otcert/cost.hpp"
#include "otcert/measure.hpp"
#include "otcert/plan.hpp"

namespace otcert {

inline constexpr double kDefaultCertTol = 1e-9;

/// Candidate support of a coupling: a deduplicated, sorted set of (i, j)
/// index pairs into the mu/nu point lists.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::pair<std::size_t, std::size_t>> pairs);

  static SupportSet from_plan(const TransportPlan& plan);

  std::size_t size() const { return pairs_.size(); }
  const std::pair<std::size_t, std::size_t>& pair(std::size_t k) const { return pairs_[k]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Constructive witness of non-monotonicity: reassigning the y's cyclically
/// along the listed pairs lowers total cost by `improvement`.
struct ViolatingCycle {
  std::vector<std::size_t> pair_indices;  ///< into the SupportSet, cycle order
  double improvement = 0.0;
};

/// Verdict of a monotonicity check. Monotone certificates record the slack
/// they were issued under.
class MonotonicityCertificate {
 public:
  static MonotonicityCertificate monotone(double tol) {
    MonotonicityCertificate c;
    c.tol_ = tol;
    return c;
  }
  static MonotonicityCertificate violated(ViolatingCycle cycle, double tol) {
    MonotonicityCertificate c;
    c.tol_ = tol;
    c.cycle_ = std::move(cycle);
    return c;
  }

  bool is_monotone() const { return !cycle_.has_value(); }
  double tol() const { return tol_; }
  const ViolatingCycle& cycle() const { return *cycle_; }

 private:
  double tol_ = 0.0;
  std::optional<ViolatingCycle> cycle_;
};

/// Thrown by the potential construction when the support admits an
/// improving cycle.
struct NotMonotoneError : std::runtime_error {
  explicit NotMonotoneError(ViolatingCycle c)
      : std::runtime_error("support is not c-monotone"), cycle(std::move(c)) {}
  ViolatingCycle cycle;
};

/// Sum of diagonal costs minus sum of cyclically shifted costs along the
/// listed pairs; positive means the cyclic reassignment strictly improves.
/// Throws when a required cost entry is infinite.
double cycle_improvement(const std::vector<std::pair<std::size_t, std::size_t>>& cycle_pairs,
                         const CostMatrix& costs);

/// Decides c-cyclical monotonicity of gamma by negative-cycle search on the
/// pair graph (one node per support pair, edge weight c(x_p, y_q) - c(x_q,
/// y_q), edges with infinite cross cost omitted). Every permutation splits
/// into cycles, so cycle search is exhaustive. A cycle counts as violating
/// only when its improvement exceeds tol.
MonotonicityCertificate check_c_monotone(const SupportSet& gamma, const CostMatrix& costs,
                                         double tol = kDefaultCertTol);

/// Point-based overload; 1-D squared-Euclidean instances take a dense
/// closed-form relaxation path, everything else materializes the matrix.
MonotonicityCertificate check_c_monotone(const SupportSet& gamma, const CostSpec& spec,
                                         const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                         double tol = kDefaultCertTol);

/// Exhaustive oracle over every subset of gamma and every cyclic
/// reassignment on it; |gamma| <= n_max <= 7. Returns the violation of
/// maximal improvement (first found on ties) or Monotone(0).
MonotonicityCertificate brute_check(const SupportSet& gamma, const CostMatrix& costs,
                                    std::size_t n_max = 7);

/// Maps a cycle's pair indices back to the (i, j) pairs of gamma.
std::vector<std::pair<std::size_t, std::size_t>> resolve_cycle(const SupportSet& gamma,
                                                               const ViolatingCycle& cycle);

}  // namespace otcert
