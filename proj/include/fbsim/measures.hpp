#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fbsim/baselines.hpp"
#include "fbsim/error.hpp"
#include "fbsim/fbs.hpp"
#include "fbsim/graph.hpp"
#include "fbsim/ppr.hpp"
#include "fbsim/ranking.hpp"

namespace fbsim {

enum class Measure { kPpr, kFbs, kPsalsa, kSimRank, kAdamicAdar };

inline std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::kPpr: return "ppr";
    case Measure::kFbs: return "fbs";
    case Measure::kPsalsa: return "psalsa";
    case Measure::kSimRank: return "simrank";
    case Measure::kAdamicAdar: return "adamic-adar";
  }
  return "?";
}

inline std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : {Measure::kPpr, Measure::kFbs, Measure::kPsalsa, Measure::kSimRank,
                    Measure::kAdamicAdar}) {
    if (measure_name(m) == name) return m;
  }
  return std::nullopt;
}

/// Configuration of every measure, so one value can drive any of them.
struct MeasureSettings {
  FbsConfig fbs;  ///< fbs.ppr also configures the PPR baseline
  SalsaConfig salsa;
  SimRankConfig simrank;
};

/// One ranked list for query u. `scores` holds the value each node was ranked
/// by (the combined score for FBS).
struct Ranking {
  std::vector<NodeId> order;
  std::vector<double> scores;
};

/// Ranks nodes for query u. PPR and FBS list positive scores only unless
/// `include_zero`; pSALSA, SimRank and Adamic Adar follow the same rule.
inline Ranking rank_query(const Graph& g, NodeId u, Measure m, const MeasureSettings& s,
                          bool include_zero = false) {
  Ranking r;
  switch (m) {
    case Measure::kPpr:
      r.scores = ppr(g, u, s.fbs.ppr).scores;
      break;
    case Measure::kFbs: {
      FbsConfig cfg = s.fbs;
      cfg.include_zero = include_zero;
      FbsResult result = fbs_query(g, u, cfg);
      r.scores.assign(g.node_count(), 0.0);
      for (const auto& e : result.candidates) r.scores[e.node] = e.combined;
      r.order = result.order();
      return r;
    }
    case Measure::kPsalsa:
      r.scores = psalsa(g, u, s.salsa).scores;
      break;
    case Measure::kSimRank:
      r.scores = simrank_mc(g, u, s.simrank).scores;
      break;
    case Measure::kAdamicAdar:
      r.scores = AdamicAdar(g).scores(u);
      break;
  }
  r.order = rank_by_score(r.scores, include_zero);
  return r;
}

/// Per-pair feature extraction for link prediction. Caches single-source
/// vectors so pairs that share an endpoint reuse them.
class PairFeatures {
 public:
  PairFeatures(const Graph& g, const MeasureSettings& s)
      : g_(g), rev_(g.reversed()), settings_(s) {}

  /// Feature columns a measure contributes: FBS gives two (forward, backward).
  static std::size_t width(Measure m) { return m == Measure::kFbs ? 2 : 1; }

  void append(Measure m, NodeId u, NodeId v, std::vector<double>& row) {
    switch (m) {
      case Measure::kPpr:
        row.push_back(forward(u)[v]);
        break;
      case Measure::kFbs:
        row.push_back(forward(u)[v]);
        row.push_back(backward(v)[u]);
        break;
      case Measure::kPsalsa: {
        auto it = salsa_.find(u);
        if (it == salsa_.end()) it = salsa_.emplace(u, psalsa(g_, u, settings_.salsa).scores).first;
        row.push_back(it->second[v]);
        break;
      }
      case Measure::kSimRank:
        if (!simrank_) simrank_.emplace(g_, settings_.simrank);
        row.push_back(simrank_->pair(u, v));
        break;
      case Measure::kAdamicAdar:
        if (!adamic_) adamic_.emplace(g_);
        row.push_back(adamic_->pair(u, v));
        break;
    }
  }

 private:
  const std::vector<double>& forward(NodeId u) {
    auto it = forward_.find(u);
    if (it == forward_.end()) it = forward_.emplace(u, ppr(g_, u, settings_.fbs.ppr).scores).first;
    return it->second;
  }

  const std::vector<double>& backward(NodeId v) {
    auto it = backward_.find(v);
    if (it == backward_.end()) it = backward_.emplace(v, ppr(rev_, v, settings_.fbs.ppr).scores).first;
    return it->second;
  }

  Graph g_;
  Graph rev_;
  MeasureSettings settings_;
  std::map<NodeId, std::vector<double>> forward_, backward_, salsa_;
  std::optional<SimRankMc> simrank_;
  std::optional<AdamicAdar> adamic_;
};

}  // namespace fbsim
