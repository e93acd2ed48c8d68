#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <vector>

#include "fbsim/error.hpp"
#include "fbsim/graph.hpp"
#include "fbsim/ppr.hpp"
#include "fbsim/ranking.hpp"

namespace fbsim {

inline double combine_linear(double forward, double backward, double lambda) {
  return lambda * forward + (1.0 - lambda) * backward;
}

/// Each score squashed by x / (x + k) before blending, so the result is in [0, 1).
inline double combine_saturation(double forward, double backward, double lambda, double k1,
                                 double k2) {
  return lambda * forward / (forward + k1) + (1.0 - lambda) * backward / (backward + k2);
}

enum class CombinerKind { kLinear, kSaturation };

struct CombinerSpec {
  CombinerKind kind = CombinerKind::kLinear;
  double lambda = 0.5;
  double k1 = 0.72;
  double k2 = 0.3;

  static CombinerSpec linear(double lambda) { return {CombinerKind::kLinear, lambda}; }

  /// Defaults are the tuned preset from the Wikipedia category-selection task.
  static CombinerSpec saturation(double lambda = 0.571, double k1 = 0.72, double k2 = 0.3) {
    return {CombinerKind::kSaturation, lambda, k1, k2};
  }

  void validate() const {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("lambda must lie in [0, 1]");
    if (kind == CombinerKind::kSaturation && !(k1 > 0.0 && k2 > 0.0)) {
      throw InvalidArgument("saturation constants k1, k2 must be positive");
    }
  }

  double operator()(double forward, double backward) const {
    return kind == CombinerKind::kLinear ? combine_linear(forward, backward, lambda)
                                         : combine_saturation(forward, backward, lambda, k1, k2);
  }
};

struct FbsConfig {
  std::size_t n = 20;  ///< candidate list size
  std::size_t rounds = 1;
  PprConfig ppr;
  CombinerSpec combiner;
  bool include_zero = false;  ///< append nodes unreachable from the query with score 0

  void validate() const {
    if (n < 1) throw InvalidArgument("n must be at least 1");
    if (rounds < 1) throw InvalidArgument("rounds must be at least 1");
    ppr.validate();
    combiner.validate();
  }
};

struct Candidate {
  NodeId node;
  double forward;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

using CandidateList = std::vector<Candidate>;

struct FbsEntry {
  NodeId node;
  double forward;
  double backward;
  double combined;
};

struct FbsResult {
  NodeId query = 0;
  std::vector<FbsEntry> candidates;

  std::vector<NodeId> order() const {
    std::vector<NodeId> nodes;
    nodes.reserve(candidates.size());
    for (const auto& e : candidates) nodes.push_back(e.node);
    return nodes;
  }
};

namespace detail {

inline CandidateList top_candidates(const ScoreMap& forward, std::size_t n) {
  auto order = rank_by_score(forward.scores);
  if (order.size() > n) order.resize(n);
  CandidateList list;
  list.reserve(order.size());
  for (NodeId v : order) list.push_back({v, forward.scores[v]});
  return list;
}

}  // namespace detail

/// The top-n nodes by forward PPR from u (only positive scores qualify).
inline CandidateList forward_mode(const Graph& g, NodeId u, std::size_t n,
                                  const PprConfig& ppr_cfg = {}) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  return detail::top_candidates(ppr(g, u, ppr_cfg), n);
}

/// For each candidate v, the PPR score of u personalized at v on the reversed
/// graph. Aligned with `candidates`.
inline std::vector<double> backward_mode(const Graph& g_rev, const CandidateList& candidates,
                                         NodeId u, const PprConfig& ppr_cfg = {}) {
  if (u >= g_rev.node_count()) throw InvalidArgument("query node out of range");
  std::vector<double> backward;
  backward.reserve(candidates.size());
  for (const auto& c : candidates) backward.push_back(ppr(g_rev, c.node, ppr_cfg).scores[u]);
  return backward;
}

inline void sort_entries(std::vector<FbsEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const FbsEntry& a, const FbsEntry& b) {
    if (a.combined != b.combined) return a.combined > b.combined;
    return a.node < b.node;
  });
}

/// Forward mode, backward mode over the reversed graph, and combination.
///
/// With rounds > 1, every further round repeats both modes on the subgraph
/// induced by the previous round's candidates (plus the query).
inline FbsResult fbs_query(const Graph& g, NodeId u, const FbsConfig& cfg = {}) {
  cfg.validate();
  if (u >= g.node_count()) throw InvalidArgument("query node out of range");

  const ScoreMap first_forward = ppr(g, u, cfg.ppr);
  Graph current = g;
  std::vector<NodeId> original;  // current id -> g id; empty means identity
  NodeId query = u;
  std::vector<FbsEntry> entries;

  for (std::size_t round = 1; round <= cfg.rounds; ++round) {
    CandidateList candidates = round == 1 ? detail::top_candidates(first_forward, cfg.n)
                                          : forward_mode(current, query, cfg.n, cfg.ppr);
    std::vector<double> backward = backward_mode(current.reversed(), candidates, query, cfg.ppr);

    entries.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const NodeId node = original.empty() ? candidates[i].node : original[candidates[i].node];
      entries.push_back({node, candidates[i].forward, backward[i],
                         cfg.combiner(candidates[i].forward, backward[i])});
    }
    if (round == cfg.rounds) break;

    std::vector<NodeId> survivors{u};
    for (const auto& e : entries) {
      if (e.node != u) survivors.push_back(e.node);
    }
    std::sort(survivors.begin(), survivors.end());
    current = induced_subgraph(g, survivors);
    query = static_cast<NodeId>(std::lower_bound(survivors.begin(), survivors.end(), u) -
                                survivors.begin());
    original = std::move(survivors);
  }

  sort_entries(entries);
  if (cfg.include_zero) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (first_forward.scores[v] == 0.0) entries.push_back({v, 0.0, 0.0, 0.0});
    }
  }
  return {u, std::move(entries)};
}

struct FeaturePair {
  double forward;
  double backward;
};

/// Forward and backward similarity of one pair, without candidate pruning.
inline FeaturePair fbs_two_feature(const Graph& g, NodeId u, NodeId v, const PprConfig& ppr_cfg = {}) {
  if (v >= g.node_count()) throw InvalidArgument("candidate node out of range");
  return {ppr(g, u, ppr_cfg).scores[v], ppr(g.reversed(), v, ppr_cfg).scores[u]};
}

/// `rank<TAB>label<TAB>forward<TAB>backward<TAB>combined` lines, rank from 1.
inline void write_fbs_tsv(std::ostream& os, const Graph& g, const FbsResult& result,
                          std::size_t limit = static_cast<std::size_t>(-1)) {
  std::size_t rank = 0;
  for (const auto& e : result.candidates) {
    if (rank == limit) break;
    os << ++rank << '\t' << g.label(e.node) << '\t' << e.forward << '\t' << e.backward << '\t'
       << e.combined << '\n';
  }
}

}  // namespace fbsim
