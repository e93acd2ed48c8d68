#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "fbsim/graph.hpp"

namespace fbsim {

/// Node ids ordered by score descending, ties by ascending id. Zero-score
/// nodes are appended only when `include_zero` is set.
inline std::vector<NodeId> rank_by_score(std::span<const double> scores, bool include_zero = false) {
  std::vector<NodeId> order;
  order.reserve(scores.size());
  for (NodeId v = 0; v < scores.size(); ++v) {
    if (include_zero || scores[v] > 0.0) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace fbsim
