#pragma once

// Internal machinery shared by the monotonicity checker and the potential
// construction: Bellman-Ford over the support pair graph, negative-cycle
// extraction, and a closed-form relaxation for 1-D squared-Euclidean costs.
// Not installed.

#include <cstddef>
#include <optional>
#include <vector>

#include "otcert/cost.hpp"
#include "otcert/monotonicity.hpp"

namespace otcert::detail {

// Uniform access to c(i, j) without forcing matrix materialization. The
// analytic form covers 1-D squared-Euclidean instances, which stay finite.
class CostView {
 public:
  explicit CostView(const CostMatrix& m) : matrix_(&m), rows_(m.rows()), cols_(m.cols()) {}
  CostView(const std::vector<double>& xs, const std::vector<double>& ys)
      : xs_(&xs), ys_(&ys), rows_(xs.size()), cols_(ys.size()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExtendedReal at(std::size_t i, std::size_t j) const {
    if (matrix_) return (*matrix_)(i, j);
    double d = (*xs_)[i] - (*ys_)[j];
    return ExtendedReal(d * d);
  }

  bool analytic() const { return matrix_ == nullptr; }
  const std::vector<double>& xs() const { return *xs_; }
  const std::vector<double>& ys() const { return *ys_; }

 private:
  const CostMatrix* matrix_ = nullptr;
  const std::vector<double>* xs_ = nullptr;
  const std::vector<double>* ys_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
};

// Edge direction of the pair graph.
//   check: p -> q weighs c(x_p, y_q) - c(x_q, y_q); improving cycles are
//          negative cycles traversed in edge order.
//   build: p -> q weighs c(x_q, y_p) - c(x_p, y_p); shortest-path distances
//          from a root are the Ruschendorf chain values, so relaxed edges
//          bound phi(x_q) by phi(x_p) + c(x_q, y_p) - c(x_p, y_p).
enum class Orientation { check, build };

struct BellmanFordOutcome {
  std::vector<double> dist;
  // Node sequence v0 -> v1 -> ... -> v0 along engine-orientation edges when
  // a negative cycle was found; empty optional otherwise.
  std::optional<std::vector<std::size_t>> cycle;
};

// Synchronous-round relaxation provider.
class RelaxEngine {
 public:
  virtual ~RelaxEngine() = default;
  virtual std::size_t size() const = 0;
  // Performs one round: relaxes using the current dist, writes improvements
  // into dist/pred, flags improved nodes in active_out. active_in holds the
  // nodes whose dist changed in the previous round. Returns whether any
  // node improved by more than eps.
  virtual bool relax_round(const std::vector<char>& active_in, std::vector<double>& dist,
                          std::vector<int>& pred, std::vector<char>& active_out, double eps) = 0;
};

// Explicit adjacency engine for arbitrary cost views. Throws
// InfiniteOnSupportError when a support pair has infinite diagonal cost.
class EdgeListEngine final : public RelaxEngine {
 public:
  EdgeListEngine(const SupportSet& gamma, const CostView& costs, Orientation orientation);

  std::size_t size() const override { return nodes_; }
  bool relax_round(const std::vector<char>& active_in, std::vector<double>& dist,
                   std::vector<int>& pred, std::vector<char>& active_out, double eps) override;

 private:
  struct Edge {
    std::size_t to;
    double weight;
  };
  std::size_t nodes_ = 0;
  std::vector<std::vector<Edge>> out_;
};

// Dense relaxation for 1-D squared-Euclidean costs via the lower envelope
// of lines: min_p (dist[p] + (a_p - t)^2) is a hull query, so one round
// costs O(n) after an upfront sort instead of O(n^2).
class SquaredLineEngine final : public RelaxEngine {
 public:
  SquaredLineEngine(const SupportSet& gamma, const CostView& costs, Orientation orientation);

  std::size_t size() const override { return n_; }
  bool relax_round(const std::vector<char>& active_in, std::vector<double>& dist,
                   std::vector<int>& pred, std::vector<char>& active_out, double eps) override;

 private:
  std::size_t n_ = 0;
  std::vector<double> slope_pos_;   // line parameter a_p per node
  std::vector<double> base_;        // constant part of the intercept per node
  std::vector<double> query_;       // query coordinate t_q per node
  std::vector<double> query_add_;   // added back after the envelope query
  std::vector<std::size_t> order_;  // nodes sorted by a_p
};

// Runs rounds to quiescence. Relaxations persisting past |V| rounds (per
// anchor phase) certify a negative cycle, which is extracted from the
// predecessor graph. When anchor_unreached is set, quiescence with
// unreached nodes re-anchors the lowest one at 0 and resumes (used by the
// potential construction on supports whose pair graph is disconnected).
BellmanFordOutcome run_bellman_ford(RelaxEngine& engine, std::vector<double> init_dist, double eps,
                                    bool anchor_unreached);

// Canonical certificate from a cycle in engine-node order: build-orientation
// cycles are reversed into check order, the rotation starts at the smallest
// pair index, and the improvement is recomputed from costs.
ViolatingCycle make_violating_cycle(std::vector<std::size_t> cycle_nodes, Orientation orientation,
                                    const SupportSet& gamma, const CostView& costs);

double cycle_improvement(const std::vector<std::pair<std::size_t, std::size_t>>& cycle_pairs,
                         const CostView& costs);

}  // namespace otcert::detail
