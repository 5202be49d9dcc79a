#include "otcert/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otcert/errors.hpp"
#include "otcert/numeric.hpp"

namespace otcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double permutation_plan_cost(const CostMatrix& costs, const std::vector<std::size_t>& sigma) {
  NeumaierSum total;
  for (std::size_t i = 0; i < sigma.size(); ++i) total.add(costs(i, sigma[i]).value());
  return total.value() / static_cast<double>(sigma.size());
}

}  // namespace

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::hungarian: return "hungarian";
    case SolveMethod::flow: return "flow";
    case SolveMethod::brute: return "brute";
  }
  return "?";
}

// Shortest-augmenting-path Hungarian method with dual potentials (u, v).
// Forbidden pairs enter as IEEE +inf, which the minimum computations skip
// over naturally; a +inf delta means the current row cannot be matched
// through finite edges, hence no feasible permutation exists.
SolveResult solve_assignment(const CostMatrix& costs) {
  if (costs.rows() != costs.cols()) {
    throw std::invalid_argument("solve_assignment: matrix must be square");
  }
  const std::size_t n = costs.rows();
  if (n == 0) throw std::invalid_argument("solve_assignment: empty matrix");

  auto cost_at = [&](std::size_t i, std::size_t j) {
    ExtendedReal c = costs(i, j);
    return c.is_finite() ? c.value() : kInf;
  };

  // 1-based arrays; column 0 is the virtual root of each augmenting search.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, false);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      std::size_t i0 = match[j0], j1 = 0;
      double delta = kInf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost_at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (delta == kInf) {
        throw InfeasibleError("solve_assignment: no permutation avoids all infinite entries");
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> sigma(n);
  for (std::size_t j = 1; j <= n; ++j) sigma[match[j] - 1] = j - 1;

  return SolveResult{TransportPlan::from_permutation(sigma),
                     ExtendedReal(permutation_plan_cost(costs, sigma)), SolveMethod::hungarian};
}

SolveResult brute_force_optimal(const CostMatrix& costs, std::size_t n_max) {
  if (costs.rows() != costs.cols()) {
    throw std::invalid_argument("brute_force_optimal: matrix must be square");
  }
  const std::size_t n = costs.rows();
  if (n > n_max || n > 9) {
    throw SizeExceededError("brute_force_optimal: n exceeds the enumeration cap");
  }

  std::vector<std::size_t> sigma(n), best;
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  double best_sum = kInf;
  do {
    double s = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < n && finite; ++i) {
      ExtendedReal c = costs(i, sigma[i]);
      if (c.is_infinite()) {
        finite = false;
      } else {
        s += c.value();
      }
    }
    // Strict improvement keeps the lexicographically smallest optimum,
    // since next_permutation enumerates in lexicographic order.
    if (finite && s < best_sum) {
      best_sum = s;
      best = sigma;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  if (best.empty()) {
    throw InfeasibleError("brute_force_optimal: every permutation hits an infinite entry");
  }
  return SolveResult{TransportPlan::from_permutation(best),
                     ExtendedReal(permutation_plan_cost(costs, best)), SolveMethod::brute};
}

namespace {

struct Arc {
  std::size_t to;
  std::size_t rev;   // index of the reverse arc in graph[to]
  double cap;
  double cost;
  bool forward;      // supply -> demand arc carrying plan mass
  std::size_t i = 0;
  std::size_t j = 0;
};

// Finds one cycle in the bipartite support graph (rows 0..n-1, cols n..n+m-1)
// and returns it as an edge sequence (r, c), consecutive edges sharing a
// node. Empty when the support is a forest.
std::vector<std::pair<std::size_t, std::size_t>> find_support_cycle(
    const std::vector<std::vector<double>>& mass, std::size_t n, std::size_t m) {
  const std::size_t nodes = n + m;
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (mass[r][c] > 0.0) {
        adj[r].push_back(n + c);
        adj[n + c].push_back(r);
      }
    }
  }

  std::vector<int> color(nodes, 0), parent(nodes, -1);
  for (std::size_t start = 0; start < nodes; ++start) {
    if (color[start] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frame;  // (node, next adj index)
    color[start] = 1;
    frame.emplace_back(start, 0);
    while (!frame.empty()) {
      auto& [x, it] = frame.back();
      if (it == adj[x].size()) {
        color[x] = 2;
        frame.pop_back();
        continue;
      }
      std::size_t y = adj[x][it++];
      if (parent[x] >= 0 && y == static_cast<std::size_t>(parent[x])) continue;
      if (color[y] == 1) {
        // Cycle: y is an ancestor of x on the DFS path.
        std::vector<std::size_t> up{x};
        for (std::size_t cur = x; cur != y;) {
          cur = static_cast<std::size_t>(parent[cur]);
          up.push_back(cur);
        }
        std::reverse(up.begin(), up.end());  // y ... down to x
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t k = 0; k < up.size(); ++k) {
          std::size_t a = up[k], b = up[(k + 1) % up.size()];
          std::size_t r = a < n ? a : b;
          std::size_t c = (a < n ? b : a) - n;
          edges.emplace_back(r, c);
        }
        return edges;
      }
      if (color[y] == 0) {
        color[y] = 1;
        parent[y] = static_cast<int>(x);
        frame.emplace_back(y, 0);
      }
    }
  }
  return {};
}

// Rotates mass around support cycles until the support is a forest, i.e. a
// basic solution with at most n+m-1 atoms. At an optimum every support arc
// is tight, so both rotation directions are cost-neutral up to rounding; the
// direction with measured non-positive cost change is taken.
void reduce_to_forest(std::vector<std::vector<double>>& mass, const CostMatrix& costs) {
  const std::size_t n = mass.size();
  const std::size_t m = n ? mass[0].size() : 0;

  while (true) {
    auto cycle = find_support_cycle(mass, n, m);
    if (cycle.empty()) break;

    // Rotation adds +t on even-position edges and -t on odd ones (or the
    // reverse); bipartite cycles have even length, so marginals cancel.
    double plus_dir_cost = 0.0;
    double min_even = kInf, min_odd = kInf;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto [r, c] = cycle[k];
      double v = costs(r, c).value();
      if (k % 2 == 0) {
        plus_dir_cost += v;
        min_even = std::min(min_even, mass[r][c]);
      } else {
        plus_dir_cost -= v;
        min_odd = std::min(min_odd, mass[r][c]);
      }
    }
    const bool take_plus = plus_dir_cost <= 0.0;
    const double t = take_plus ? min_odd : min_even;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto [r, c] = cycle[k];
      const bool grows = take_plus == (k % 2 == 0);
      mass[r][c] += grows ? t : -t;
      if (mass[r][c] < 1e-15) mass[r][c] = 0.0;
    }
  }
}

}  // namespace

SolveResult solve_general(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const CostMatrix& costs) {
  const std::size_t n = mu.size();
  const std::size_t m = nu.size();
  if (costs.rows() != n || costs.cols() != m) {
    throw std::invalid_argument("solve_general: cost matrix shape mismatch");
  }

  const std::size_t source = n + m;
  const std::size_t sink = n + m + 1;
  std::vector<std::vector<Arc>> g(n + m + 2);
  auto add_arc = [&](std::size_t from, std::size_t to, double cap, double cost, bool forward,
                     std::size_t i, std::size_t j) {
    g[from].push_back({to, g[to].size(), cap, cost, forward, i, j});
    g[to].push_back({from, g[from].size() - 1, 0.0, -cost, false, i, j});
  };
  for (std::size_t i = 0; i < n; ++i) add_arc(source, i, mu.weight(i), 0.0, false, 0, 0);
  for (std::size_t j = 0; j < m; ++j) add_arc(n + j, sink, nu.weight(j), 0.0, false, 0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (costs(i, j).is_finite()) add_arc(i, n + j, kInf, costs(i, j).value(), true, i, j);
    }
  }

  const std::size_t nodes = g.size();
  std::vector<double> potential(nodes, 0.0), dist(nodes);
  std::vector<std::size_t> prev_node(nodes), prev_arc(nodes);

  const double total = 1.0;  // both marginals carry unit mass
  // Mass below which a residual is treated as exhausted; far beneath the
  // 1e-9 marginal tolerance.
  const double dust = 1e-15;
  double flow = 0.0;
  std::size_t guard = 0;
  const std::size_t max_iters = 1000 + 20 * nodes * nodes;

  while (total - flow > dust) {
    if (++guard > max_iters) {
      throw std::logic_error("solve_general: augmentation did not converge");
    }
    // Dijkstra over reduced costs.
    std::fill(dist.begin(), dist.end(), kInf);
    dist[source] = 0.0;
    using QE = std::pair<double, std::size_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > dist[x]) continue;
      for (std::size_t a = 0; a < g[x].size(); ++a) {
        const Arc& arc = g[x][a];
        if (arc.cap <= dust) continue;
        double nd = d + arc.cost + potential[x] - potential[arc.to];
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          prev_node[arc.to] = x;
          prev_arc[arc.to] = a;
          pq.emplace(nd, arc.to);
        }
      }
    }
    if (dist[sink] == kInf) {
      throw InfeasibleError("solve_general: infinity pattern disconnects supply from demand");
    }
    // Only reached nodes move; unreached ones have no residual in-arcs from
    // the reached side, so reduced costs stay nonnegative.
    for (std::size_t x = 0; x < nodes; ++x) {
      if (dist[x] < kInf) potential[x] += dist[x] - dist[sink];
    }

    double push = total - flow;
    for (std::size_t x = sink; x != source; x = prev_node[x]) {
      push = std::min(push, g[prev_node[x]][prev_arc[x]].cap);
    }
    for (std::size_t x = sink; x != source; x = prev_node[x]) {
      Arc& arc = g[prev_node[x]][prev_arc[x]];
      arc.cap -= push;
      g[x][arc.rev].cap += push;
    }
    flow += push;
  }

  // Read plan mass off the reverse capacities of forward arcs.
  std::vector<std::vector<double>> mass(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const Arc& arc : g[i]) {
      if (arc.forward) {
        double f = g[arc.to][arc.rev].cap;
        if (f > 0.0) mass[arc.i][arc.j] = f;
      }
    }
  }

  reduce_to_forest(mass, costs);

  std::vector<PlanEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (mass[i][j] > 0.0) entries.push_back({i, j, mass[i][j]});
    }
  }
  TransportPlan plan(n, m, std::move(entries));
  ExtendedReal c = plan_cost(plan, costs);
  return SolveResult{std::move(plan), c, SolveMethod::flow};
}

SolveResult solve_general(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const CostSpec& spec) {
  return solve_general(mu, nu, cost_matrix(spec, mu, nu));
}

}  // namespace otcert
