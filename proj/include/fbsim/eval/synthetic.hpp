#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fbsim/error.hpp"
#include "fbsim/eval/metrics.hpp"
#include "fbsim/graph.hpp"

namespace fbsim {

struct PlantedPartition {
  Graph graph;
  CommunityAssignment communities;
};

/// `blocks` communities of `size` nodes each. Every pair (ordered, when
/// directed) is an edge independently with probability p_in inside a block and
/// p_out across blocks. Node i belongs to community "c<i / size>".
inline PlantedPartition planted_partition(std::size_t blocks, std::size_t size, double p_in,
                                          double p_out, bool directed, std::uint64_t seed) {
  if (!(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0)) {
    throw InvalidArgument("edge probabilities must lie in [0, 1]");
  }
  if (blocks == 0 || size == 0) throw InvalidArgument("need at least one non-empty block");
  const std::size_t n = blocks * size;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      const double p = (u / size == v / size) ? p_in : p_out;
      // one draw per pair, even for p in {0, 1}, so the stream layout is fixed
      if (coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  PlantedPartition result{Graph::from_edges(n, edges, directed), {}};
  auto& comms = result.communities;
  comms.membership.resize(n);
  comms.primary.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    comms.primary[u] = "c" + std::to_string(u / size);
    comms.membership[u] = {comms.primary[u]};
  }
  return result;
}

/// A ranking written as tie groups, best group first.
using TieGroups = std::vector<std::vector<std::string>>;

struct ToyExpectations {
  TieGroups ppr;
  TieGroups simrank;
  TieGroups psalsa;
  TieGroups adamic_adar;
  TieGroups fbs;
};

struct ToyCitation {
  Graph graph;
  CommunityAssignment communities;  ///< "white" = A..G, "grey" = H..N
  ToyExpectations expected;         ///< published orderings for query G
};

/// The 14-node citation toy graph: G cites D, E, F, H; E and F cite D; D cites
/// A, B, C; H cites I, J, K; L, M, N cite H. Node ids follow the letters.
inline ToyCitation toy_citation_graph() {
  std::vector<std::string> labels;
  for (char c = 'A'; c <= 'N'; ++c) labels.emplace_back(1, c);
  auto id = [](char c) { return static_cast<NodeId>(c - 'A'); };
  std::vector<Edge> edges;
  for (char t : {'D', 'E', 'F', 'H'}) edges.emplace_back(id('G'), id(t));
  edges.emplace_back(id('E'), id('D'));
  edges.emplace_back(id('F'), id('D'));
  for (char t : {'A', 'B', 'C'}) edges.emplace_back(id('D'), id(t));
  for (char t : {'I', 'J', 'K'}) edges.emplace_back(id('H'), id(t));
  for (char s : {'L', 'M', 'N'}) edges.emplace_back(id(s), id('H'));

  ToyCitation toy;
  toy.graph = Graph::from_edges(labels.size(), edges, /*directed=*/true, labels);
  toy.communities.membership.resize(labels.size());
  toy.communities.primary.resize(labels.size());
  for (NodeId u = 0; u < labels.size(); ++u) {
    toy.communities.primary[u] = u <= id('G') ? "white" : "grey";
    toy.communities.membership[u] = {toy.communities.primary[u]};
  }
  toy.expected.ppr = {{"G"}, {"D"}, {"E", "F", "H"}, {"A", "B", "C"}, {"I", "J", "K"}, {"L", "M", "N"}};
  toy.expected.simrank = {{"G"}, {"I", "J", "K", "L", "M", "N"}, {"A", "B", "C"}, {"D"}, {"E", "F"}, {"H"}};
  toy.expected.psalsa = {{"G"}, {"H"}, {"D"}, {"E", "F"}, {"A", "B", "C", "I", "J", "K", "L", "M", "N"}};
  toy.expected.adamic_adar = {{"D"}, {"A", "B", "C", "E", "F"}, {"I", "J", "K", "L", "M", "N"}, {"G", "H"}};
  toy.expected.fbs = {{"G"}, {"D"}, {"E", "F"}, {"A", "B", "C"}, {"H"}, {"I", "J", "K"}, {"L", "M", "N"}};
  return toy;
}

/// True when `ranking` splits, in order, into consecutive chunks whose label
/// sets equal the tie groups.
inline bool matches_tie_groups(const Graph& g, std::span<const NodeId> ranking,
                               const TieGroups& groups) {
  std::size_t at = 0;
  for (const auto& group : groups) {
    if (at + group.size() > ranking.size()) return false;
    std::vector<std::string> got;
    for (std::size_t i = 0; i < group.size(); ++i) got.push_back(g.label(ranking[at + i]));
    if (make_label_set(got) != make_label_set(group)) return false;
    at += group.size();
  }
  return at == ranking.size();
}

}  // namespace fbsim
