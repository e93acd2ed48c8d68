#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fbsim/error.hpp"
#include "fbsim/graph.hpp"
#include "fbsim/ppr.hpp"

namespace fbsim {

// ---------------------------------------------------------------------------
// Adamic Adar

/// Adamic Adar index over the undirected projection. Holds the projection so
/// repeated pair queries do not rebuild it.
class AdamicAdar {
 public:
  explicit AdamicAdar(const Graph& g) : adj_(undirected_projection(g)) {}

  /// Sum of 1 / ln(deg w) over common neighbors w. Defined as 0 for u == v.
  double pair(NodeId u, NodeId v) const {
    check(u);
    check(v);
    if (u == v) return 0.0;
    auto a = adj_.neighbors(u);
    auto b = adj_.neighbors(v);
    double score = 0.0;
    for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        // A common neighbor of two distinct nodes has degree >= 2.
        score += 1.0 / std::log(static_cast<double>(adj_.degree(*i)));
        ++i;
        ++j;
      }
    }
    return score;
  }

  std::vector<double> scores(NodeId u) const {
    check(u);
    std::vector<double> s(adj_.node_count(), 0.0);
    for (NodeId w : adj_.neighbors(u)) {
      const std::size_t d = adj_.degree(w);
      if (d < 2) continue;
      const double weight = 1.0 / std::log(static_cast<double>(d));
      for (NodeId v : adj_.neighbors(w)) {
        if (v != u) s[v] += weight;
      }
    }
    return s;
  }

 private:
  void check(NodeId u) const {
    if (u >= adj_.node_count()) throw InvalidArgument("node id out of range");
  }

  Csr adj_;
};

inline double adamic_adar(const Graph& g, NodeId u, NodeId v) { return AdamicAdar(g).pair(u, v); }

// ---------------------------------------------------------------------------
// Personalized SALSA

struct SalsaConfig {
  double alpha = 0.15;  ///< restart probability at each hub step
  double tolerance = 1e-6;
  std::size_t max_iterations = 1000;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha must lie in (0, 1]");
    if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
    if (max_iterations < 1) throw InvalidArgument("max_iterations must be at least 1");
  }
};

/// Personalized SALSA on the hub/authority expansion of g.
///
/// A hub state x moves to authority y along an out-edge x -> y; an authority
/// state y moves back to hub z along an in-edge z -> y. Before each hub step
/// the walker returns to hub(u) with probability alpha (always, when x has no
/// out-edges). The score of v != u is its authority mass; u itself gets its
/// hub mass. The result is renormalized to sum to 1.
inline ScoreMap psalsa(const Graph& g, NodeId u, const SalsaConfig& cfg = {}) {
  cfg.validate();
  if (u >= g.node_count()) throw InvalidArgument("query node out of range");
  const std::size_t n = g.node_count();
  const Csr& out = g.out_adjacency();
  const Csr& in = g.in_adjacency();

  std::vector<double> hub(n, 0.0), auth(n, 0.0), next_hub(n), next_auth(n);
  hub[u] = 1.0;
  std::size_t it = 1;
  double residual = 0.0;
  for (;; ++it) {
    double restart = 0.0;
    std::fill(next_auth.begin(), next_auth.end(), 0.0);
    for (NodeId x = 0; x < n; ++x) {
      if (hub[x] == 0.0) continue;
      const std::size_t d = out.degree(x);
      if (d == 0) {
        restart += hub[x];
        continue;
      }
      restart += cfg.alpha * hub[x];
      const double share = (1.0 - cfg.alpha) * hub[x] / static_cast<double>(d);
      for (NodeId y : out.neighbors(x)) next_auth[y] += share;
    }
    std::fill(next_hub.begin(), next_hub.end(), 0.0);
    for (NodeId y = 0; y < n; ++y) {
      if (auth[y] == 0.0) continue;
      const double share = auth[y] / static_cast<double>(in.degree(y));
      for (NodeId z : in.neighbors(y)) next_hub[z] += share;
    }
    next_hub[u] += restart;

    residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      residual += std::abs(next_hub[v] - hub[v]) + std::abs(next_auth[v] - auth[v]);
    }
    hub.swap(next_hub);
    auth.swap(next_auth);
    if (residual <= cfg.tolerance) break;
    if (it == cfg.max_iterations) {
      std::vector<double> last(hub);
      last.insert(last.end(), auth.begin(), auth.end());
      throw NonConvergence(std::move(last), residual, it);
    }
  }

  std::vector<double> scores = std::move(auth);
  scores[u] = hub[u];
  double total = 0.0;
  for (double s : scores) total += s;
  for (double& s : scores) s /= total;
  return {u, std::move(scores), it, residual};
}

// ---------------------------------------------------------------------------
// SimRank, Monte Carlo

enum class SimRankEstimator {
  /// Linearized SimRank with the diagonal correction approximated by (1 - c) I:
  /// s(u, v) = (1 - c) sum_t c^t <P^t e_u, P^t e_v>, estimated from R
  /// independent walks out of u and R out of v.
  kLinearized,
  /// E[c^tau] over R paired walks, tau the first meeting step; s(u, u) = 1.
  /// Converges to exact SimRank.
  kMeeting,
};

enum class WalkDirection {
  kUndirected,  ///< walks move over the undirected projection
  kInEdges,     ///< walks follow in-edges backwards
};

struct SimRankConfig {
  double c = 0.8;
  std::size_t walk_length = 100;  ///< T
  std::size_t samples = 10000;    ///< R
  std::uint64_t seed = 42;
  SimRankEstimator estimator = SimRankEstimator::kLinearized;
  WalkDirection direction = WalkDirection::kUndirected;

  void validate() const {
    if (!(c > 0.0 && c < 1.0)) throw InvalidArgument("c must lie in (0, 1)");
    if (walk_length < 1) throw InvalidArgument("walk length must be at least 1");
    if (samples < 1) throw InvalidArgument("sample count must be at least 1");
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b + 0x632be59bd9b4e019ULL));
}

}  // namespace detail

/// Single-source and pairwise SimRank estimates on one graph.
class SimRankMc {
 public:
  SimRankMc(const Graph& g, const SimRankConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    adj_ = cfg_.direction == WalkDirection::kUndirected ? undirected_projection(g) : g.in_adjacency();
    decay_.resize(cfg_.walk_length + 1);
    decay_[0] = 1.0;
    for (std::size_t t = 1; t < decay_.size(); ++t) decay_[t] = decay_[t - 1] * cfg_.c;
  }

  std::vector<double> scores(NodeId u) const {
    check(u);
    std::vector<double> s(adj_.node_count(), 0.0);
    if (cfg_.estimator == SimRankEstimator::kMeeting) {
      for (NodeId v = 0; v < s.size(); ++v) s[v] = meeting(u, v);
    } else {
      const auto from_u = occupancy(u);
      for (NodeId v = 0; v < s.size(); ++v) s[v] = linearized(from_u, v);
    }
    return s;
  }

  double pair(NodeId u, NodeId v) const {
    check(u);
    check(v);
    if (cfg_.estimator == SimRankEstimator::kMeeting) return meeting(u, v);
    return linearized(occupancy(u), v);
  }

 private:
  static constexpr NodeId kHalted = static_cast<NodeId>(-1);

  void check(NodeId u) const {
    if (u >= adj_.node_count()) throw InvalidArgument("node id out of range");
  }

  NodeId step(NodeId at, std::mt19937_64& rng) const {
    auto nb = adj_.neighbors(at);
    if (nb.empty()) return kHalted;
    std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
    return nb[pick(rng)];
  }

  /// Per step t < T, the sorted positions of the R walkers started at u.
  std::vector<std::vector<NodeId>> occupancy(NodeId u) const {
    std::mt19937_64 rng(detail::derive_seed(cfg_.seed, u));
    std::vector<NodeId> walkers(cfg_.samples, u);
    std::vector<std::vector<NodeId>> steps(cfg_.walk_length);
    for (std::size_t t = 0; t < cfg_.walk_length; ++t) {
      auto& at = steps[t];
      for (NodeId w : walkers) {
        if (w != kHalted) at.push_back(w);
      }
      std::sort(at.begin(), at.end());
      if (t + 1 < cfg_.walk_length) {
        for (NodeId& w : walkers) {
          if (w != kHalted) w = step(w, rng);
        }
      }
    }
    return steps;
  }

  double linearized(const std::vector<std::vector<NodeId>>& from_u, NodeId v) const {
    std::mt19937_64 rng(detail::derive_seed(cfg_.seed, v, 1));
    const double r = static_cast<double>(cfg_.samples);
    double sum = 0.0;
    std::vector<NodeId> walkers(cfg_.samples, v);
    for (std::size_t t = 0; t < cfg_.walk_length; ++t) {
      const auto& at = from_u[t];
      if (at.empty()) break;
      std::size_t hits = 0;
      bool alive = false;
      for (NodeId& w : walkers) {
        if (w == kHalted) continue;
        alive = true;
        auto [lo, hi] = std::equal_range(at.begin(), at.end(), w);
        hits += static_cast<std::size_t>(hi - lo);
        if (t + 1 < cfg_.walk_length) w = step(w, rng);
      }
      if (!alive) break;
      sum += decay_[t] * static_cast<double>(hits) / (r * r);
    }
    return (1.0 - cfg_.c) * sum;
  }

  double meeting(NodeId u, NodeId v) const {
    if (u == v) return 1.0;
    // Symmetric stream so that pair(u, v) and pair(v, u) share samples.
    std::mt19937_64 rng(detail::derive_seed(cfg_.seed, std::min(u, v), std::max(u, v)));
    double sum = 0.0;
    for (std::size_t r = 0; r < cfg_.samples; ++r) {
      NodeId a = std::min(u, v), b = std::max(u, v);
      for (std::size_t t = 1; t <= cfg_.walk_length; ++t) {
        a = step(a, rng);
        if (a == kHalted) break;
        b = step(b, rng);
        if (b == kHalted) break;
        if (a == b) {
          sum += decay_[t];
          break;
        }
      }
    }
    return sum / static_cast<double>(cfg_.samples);
  }

  SimRankConfig cfg_;
  Csr adj_;
  std::vector<double> decay_;
};

inline ScoreMap simrank_mc(const Graph& g, NodeId u, const SimRankConfig& cfg = {}) {
  return {u, SimRankMc(g, cfg).scores(u), 0, 0.0};
}

}  // namespace fbsim
