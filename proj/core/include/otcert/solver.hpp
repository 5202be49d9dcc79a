#pragma once

#include "otcert/cost.hpp"
#include "otcert/measure.hpp"
#include "otcert/plan.hpp"

namespace otcert {

enum class SolveMethod { hungarian, flow, brute };

const char* to_string(SolveMethod m);

struct SolveResult {
  TransportPlan plan;
  ExtendedReal cost;  ///< plan-integrated cost I(pi), equals plan_cost(plan)
  SolveMethod method = SolveMethod::hungarian;
};

/// Minimum-cost perfect assignment on a square matrix, reported as the
/// permutation plan with mass 1/n per pair; cost is sum c(i, sigma(i)) / n.
/// Infinite entries are forbidden edges. Throws InfeasibleError when no
/// permutation avoids them all.
SolveResult solve_assignment(const CostMatrix& costs);

/// Exact minimum-cost coupling between two general discrete measures via
/// successive shortest paths on the bipartite flow network; infinite-cost
/// arcs are structurally absent. The returned plan is reduced to a basic
/// (forest-supported) solution with at most n+m-1 atoms.
SolveResult solve_general(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const CostMatrix& costs);
SolveResult solve_general(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const CostSpec& spec);

/// Exhaustive minimum over all n! permutations, n <= 9. Ties break toward
/// the lexicographically smallest permutation. Test oracle.
SolveResult brute_force_optimal(const CostMatrix& costs, std::size_t n_max = 9);

}  // namespace otcert
