#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <vector>

#include "fbsim/error.hpp"
#include "fbsim/graph.hpp"
#include "fbsim/ranking.hpp"

namespace fbsim {

/// What happens to the walk mass sitting on a node with no out-edges.
enum class DanglingPolicy {
  kDrop,     ///< mass leaves the system (the plain recurrence); scores sum to <= 1
  kRestart,  ///< mass jumps back to the query node; scores sum to 1
};

struct PprConfig {
  double epsilon = 0.15;  ///< reset probability
  double tolerance = 1e-6;  ///< L1 distance between successive iterates
  std::size_t max_iterations = 1000;
  DanglingPolicy dangling = DanglingPolicy::kDrop;

  void validate() const {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidArgument("epsilon must lie in (0, 1]");
    if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
    if (max_iterations < 1) throw InvalidArgument("max_iterations must be at least 1");
  }
};

/// Personalized scores of every node for one query node.
struct ScoreMap {
  NodeId query = 0;
  std::vector<double> scores;
  std::size_t iterations = 0;
  double residual = 0.0;

  double operator[](NodeId v) const { return scores.at(v); }
  double total() const { return std::accumulate(scores.begin(), scores.end(), 0.0); }
};

/// Receives (iteration, iterate) after each sweep.
using PprObserver = std::function<void(std::size_t, std::span<const double>)>;

/// Personalized PageRank by power iteration, starting from the indicator of u:
///
///   pi(v) = eps * [v == u] + (1 - eps) * sum_{(x,v) in E} pi(x) / outdeg(x)
///
/// plus the dangling-node policy. Throws NonConvergence with the last iterate.
inline ScoreMap ppr(const Graph& g, NodeId u, const PprConfig& cfg = {},
                    const PprObserver& observe = {}) {
  cfg.validate();
  if (u >= g.node_count()) throw InvalidArgument("query node out of range");
  const std::size_t n = g.node_count();
  const Csr& in = g.in_adjacency();
  const Csr& out = g.out_adjacency();
  const double walk = 1.0 - cfg.epsilon;

  std::vector<double> current(n, 0.0), next(n, 0.0), share(n, 0.0);
  current[u] = 1.0;

  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    double dangling = 0.0;
    for (NodeId x = 0; x < n; ++x) {
      const std::size_t d = out.degree(x);
      if (d == 0) {
        dangling += current[x];
        share[x] = 0.0;
      } else {
        share[x] = current[x] / static_cast<double>(d);
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (NodeId x : in.neighbors(v)) sum += share[x];
      next[v] = walk * sum;
    }
    next[u] += cfg.epsilon;
    if (cfg.dangling == DanglingPolicy::kRestart) next[u] += walk * dangling;

    double residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) residual += std::abs(next[v] - current[v]);
    current.swap(next);
    if (observe) observe(it, current);
    if (residual <= cfg.tolerance) return {u, std::move(current), it, residual};
    if (it == cfg.max_iterations) throw NonConvergence(std::move(current), residual, it);
  }
  throw NonConvergence(std::move(current), 0.0, cfg.max_iterations);  // unreachable
}

/// Nodes with positive score, best first, ties by ascending id.
inline std::vector<NodeId> ppr_rank(const Graph& g, NodeId u, const PprConfig& cfg = {}) {
  return rank_by_score(ppr(g, u, cfg).scores);
}

/// `label<TAB>score` lines in rank order.
inline void write_score_tsv(std::ostream& os, const Graph& g, std::span<const double> scores,
                            std::span<const NodeId> order) {
  for (NodeId v : order) os << g.label(v) << '\t' << scores[v] << '\n';
}

}  // namespace fbsim
