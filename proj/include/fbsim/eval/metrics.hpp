#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fbsim/error.hpp"
#include "fbsim/graph.hpp"

namespace fbsim {

using LabelSet = std::vector<std::string>;  // sorted, unique

/// Ground-truth community labels per node.
struct CommunityAssignment {
  std::vector<LabelSet> membership;  ///< sorted label set per node id
  std::vector<std::string> primary;  ///< first listed label per node, "" if none
  std::size_t unknown_nodes = 0;  ///< file rows naming nodes absent from the graph

  std::size_t node_count() const noexcept { return membership.size(); }
  const LabelSet& of(NodeId u) const { return membership.at(u); }
};

inline LabelSet make_label_set(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

/// Reads `node<TAB>comm1,comm2,...`; ids resolve through the graph's labels.
inline CommunityAssignment load_communities(std::istream& in, const Graph& g) {
  CommunityAssignment comms;
  comms.membership.resize(g.node_count());
  comms.primary.resize(g.node_count());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw ParseError("expected 'node<TAB>labels'", line_no);
    std::vector<std::string> labels;
    std::size_t start = tab + 1;
    while (true) {
      auto comma = line.find(',', start);
      auto field = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (field.empty()) throw ParseError("empty community label", line_no);
      labels.push_back(std::move(field));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    auto node = g.find(std::string_view(line).substr(0, tab));
    if (!node) {
      ++comms.unknown_nodes;
      continue;
    }
    if (comms.primary[*node].empty()) comms.primary[*node] = labels.front();
    auto& set = comms.membership[*node];
    set.insert(set.end(), labels.begin(), labels.end());
    set = make_label_set(std::move(set));
  }
  return comms;
}

inline CommunityAssignment load_communities_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return load_communities(in, g);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path);
  }
}

inline void write_communities(std::ostream& out, const Graph& g, const CommunityAssignment& comms) {
  for (NodeId u = 0; u < comms.node_count(); ++u) {
    const auto& set = comms.of(u);
    if (set.empty()) continue;
    out << g.label(u) << '\t';
    // primary first so a reload keeps it
    out << comms.primary[u];
    for (const auto& c : set) {
      if (c != comms.primary[u]) out << ',' << c;
    }
    out << '\n';
  }
}

/// |a ∩ b| / |a ∪ b| for sorted unique sets; 0 when both are empty.
inline double jaccard(const LabelSet& a, const LabelSet& b) {
  std::size_t common = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t unite = a.size() + b.size() - common;
  return unite == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(unite);
}

/// Average Jaccard of the top-k ranking against the query's communities:
///
///   aj@k = (sum_{j=1..k} sum_{i=1..j} J_i) / k
///
/// evaluated literally, so rank i carries weight (k - i + 1) / k and the value
/// can exceed 1. With `normalized`, the inner sum is divided by j (a mean
/// precision-style variant bounded by 1).
inline double aj_at_k(const LabelSet& query, std::span<const LabelSet> ranked, std::size_t k,
                      bool normalized = false) {
  if (k == 0) throw InvalidArgument("aj@k needs k >= 1");
  if (k > ranked.size()) throw InvalidArgument("aj@k: k exceeds the ranking length");
  double prefix = 0.0, total = 0.0;
  for (std::size_t j = 1; j <= k; ++j) {
    prefix += jaccard(query, ranked[j - 1]);
    total += normalized ? prefix / static_cast<double>(j) : prefix;
  }
  return total / static_cast<double>(k);
}

struct MajResult {
  double value = 0.0;
  std::size_t evaluated = 0;
  std::vector<NodeId> skipped;  ///< queries without community labels
};

/// Mean of aj@k over the queries. Rankings shorter than k count the missing
/// positions as zero overlap.
inline MajResult maj_at_k(std::span<const NodeId> queries,
                          std::span<const std::vector<NodeId>> rankings,
                          const CommunityAssignment& comms, std::size_t k, bool normalized = false) {
  if (queries.size() != rankings.size()) throw InvalidArgument("one ranking per query expected");
  MajResult result;
  double sum = 0.0;
  std::vector<LabelSet> ranked;
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const auto& own = comms.of(queries[q]);
    if (own.empty()) {
      result.skipped.push_back(queries[q]);
      continue;
    }
    ranked.assign(k, LabelSet{});
    for (std::size_t i = 0; i < k && i < rankings[q].size(); ++i) ranked[i] = comms.of(rankings[q][i]);
    sum += aj_at_k(own, ranked, k, normalized);
    ++result.evaluated;
  }
  if (result.evaluated == 0) throw UndefinedStatistic("MAJ@k: no query has community labels");
  result.value = sum / static_cast<double>(result.evaluated);
  return result;
}

inline double dcg_at_k(std::span<const int> relevance, std::size_t k) {
  double dcg = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    dcg += (std::exp2(relevance[i]) - 1.0) / std::log2(static_cast<double>(i) + 2.0);
  }
  return dcg;
}

/// DCG of the ideal (descending) ordering of the same relevance values.
inline double idcg_at_k(std::span<const int> relevance, std::size_t k) {
  std::vector<int> ideal(relevance.begin(), relevance.end());
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  return dcg_at_k(ideal, k);
}

/// nDCG with gain 2^rel - 1 and log2(i + 1) discount; 0 when IDCG is 0.
inline double ndcg_at_k(std::span<const int> relevance_in_rank_order, std::size_t k) {
  if (k == 0) throw InvalidArgument("nDCG@k needs k >= 1");
  if (k > relevance_in_rank_order.size()) throw InvalidArgument("nDCG@k: k exceeds list length");
  for (int r : relevance_in_rank_order) {
    if (r < 0) throw InvalidArgument("relevance must be non-negative");
  }
  const double ideal = idcg_at_k(relevance_in_rank_order, k);
  return ideal == 0.0 ? 0.0 : dcg_at_k(relevance_in_rank_order, k) / ideal;
}

/// Vote counts per candidate: each in [0, judges], summing to judges.
struct RelevanceList {
  std::vector<std::string> candidates;
  std::vector<int> votes;

  void validate(int judges = 20) const {
    int total = 0;
    for (int v : votes) {
      if (v < 0 || v > judges) throw InvalidArgument("relevance outside [0, " + std::to_string(judges) + "]");
      total += v;
    }
    if (total != judges) {
      throw InvalidArgument("relevance votes sum to " + std::to_string(total) + ", expected " +
                            std::to_string(judges));
    }
  }
};

/// Reads `candidate<TAB>votes` lines.
inline RelevanceList load_relevance(std::istream& in) {
  RelevanceList list;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw ParseError("expected 'candidate<TAB>votes'", line_no);
    std::size_t used = 0;
    int votes = 0;
    try {
      votes = std::stoi(line.substr(tab + 1), &used);
    } catch (const std::exception&) {
      throw ParseError("votes must be an integer", line_no);
    }
    if (used != line.size() - tab - 1) throw ParseError("votes must be an integer", line_no);
    list.candidates.push_back(line.substr(0, tab));
    list.votes.push_back(votes);
  }
  return list;
}

/// Newman modularity of a hard partition on the undirected projection.
inline double modularity(const Graph& g, std::span<const std::size_t> community_of) {
  if (community_of.size() != g.node_count()) throw InvalidArgument("partition must cover every node");
  const Csr adj = undirected_projection(g);
  const double two_m = static_cast<double>(adj.targets.size());
  if (two_m == 0.0) throw UndefinedStatistic("modularity of a graph without edges");
  std::map<std::size_t, double> internal, degree;  // ordered: deterministic summation
  for (NodeId u = 0; u < adj.node_count(); ++u) {
    degree[community_of[u]] += static_cast<double>(adj.degree(u));
    for (NodeId v : adj.neighbors(u)) {
      if (community_of[u] == community_of[v]) internal[community_of[u]] += 1.0;
    }
  }
  double q = 0.0;
  for (const auto& [c, d] : degree) {
    const double share = d / two_m;
    q += internal[c] / two_m - share * share;
  }
  return q;
}

/// Hard partition from each node's first listed community.
inline std::vector<std::size_t> primary_partition(const CommunityAssignment& comms) {
  std::map<std::string, std::size_t> ids;
  std::vector<std::size_t> part(comms.node_count());
  for (NodeId u = 0; u < comms.node_count(); ++u) {
    if (comms.primary[u].empty()) throw InvalidArgument("partition must cover every node");
    part[u] = ids.emplace(comms.primary[u], ids.size()).first->second;
  }
  return part;
}

/// Mean community count over labeled nodes.
inline double cpv(const CommunityAssignment& comms) {
  std::size_t nodes = 0, labels = 0;
  for (const auto& set : comms.membership) {
    if (set.empty()) continue;
    ++nodes;
    labels += set.size();
  }
  if (nodes == 0) throw UndefinedStatistic("CPV of an empty community assignment");
  return static_cast<double>(labels) / static_cast<double>(nodes);
}

}  // namespace fbsim
