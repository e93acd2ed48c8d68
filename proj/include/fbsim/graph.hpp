#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fbsim/error.hpp"

namespace fbsim {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Compressed sparse row adjacency. Neighbor lists are sorted and unique.
struct Csr {
  std::vector<std::size_t> offsets{0};
  std::vector<NodeId> targets;

  std::size_t node_count() const noexcept { return offsets.size() - 1; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {targets.data() + offsets[u], offsets[u + 1] - offsets[u]};
  }

  std::size_t degree(NodeId u) const noexcept { return offsets[u + 1] - offsets[u]; }

  bool contains(NodeId u, NodeId v) const noexcept {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Builds from (row, column) pairs; duplicates are collapsed.
  static Csr from_pairs(std::size_t node_count, std::vector<Edge> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    Csr csr;
    csr.offsets.assign(node_count + 1, 0);
    csr.targets.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
      ++csr.offsets[u + 1];
      csr.targets.push_back(v);
    }
    for (std::size_t i = 0; i < node_count; ++i) csr.offsets[i + 1] += csr.offsets[i];
    return csr;
  }

  friend bool operator==(const Csr&, const Csr&) = default;
};

/// Immutable sparse graph with both adjacency directions materialized.
///
/// Copies are cheap: the adjacency arrays and labels are shared. For
/// undirected graphs the successor and predecessor lists are the same
/// symmetric adjacency, and reversed() returns an equal graph.
class Graph {
 public:
  Graph() : out_(std::make_shared<Csr>()), in_(out_), labels_(std::make_shared<Labels>()) {}

  /// Node ids must be < node_count. Labels default to the decimal node id.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges, bool directed,
                          std::vector<std::string> labels = {}) {
    if (!labels.empty() && labels.size() != node_count) {
      throw InvalidArgument("label count does not match node count");
    }
    std::vector<Edge> forward;
    forward.reserve(directed ? edges.size() : 2 * edges.size());
    for (const auto& [u, v] : edges) {
      if (u >= node_count || v >= node_count) throw InvalidArgument("edge endpoint out of range");
      forward.emplace_back(u, v);
      if (!directed && u != v) forward.emplace_back(v, u);
    }
    std::vector<Edge> backward;
    if (directed) {
      backward.reserve(forward.size());
      for (const auto& [u, v] : forward) backward.emplace_back(v, u);
    }

    Graph g;
    g.directed_ = directed;
    auto out = std::make_shared<Csr>(Csr::from_pairs(node_count, std::move(forward)));
    if (directed) {
      g.edge_count_ = out->targets.size();
      g.in_ = std::make_shared<Csr>(Csr::from_pairs(node_count, std::move(backward)));
    } else {
      std::size_t loops = 0;
      for (NodeId u = 0; u < node_count; ++u) loops += out->contains(u, u) ? 1 : 0;
      g.edge_count_ = (out->targets.size() + loops) / 2;
      g.in_ = out;
    }
    g.out_ = std::move(out);

    auto table = std::make_shared<Labels>();
    if (labels.empty()) {
      labels.reserve(node_count);
      for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    }
    table->names = std::move(labels);
    for (std::size_t i = 0; i < table->names.size(); ++i) {
      auto [it, fresh] = table->index.emplace(table->names[i], static_cast<NodeId>(i));
      if (!fresh) throw InvalidArgument("duplicate node label '" + table->names[i] + "'");
    }
    g.labels_ = std::move(table);
    return g;
  }

  std::size_t node_count() const noexcept { return out_->node_count(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool directed() const noexcept { return directed_; }
  bool empty() const noexcept { return node_count() == 0; }

  std::span<const NodeId> successors(NodeId u) const { return out_->neighbors(check(u)); }
  std::span<const NodeId> predecessors(NodeId u) const { return in_->neighbors(check(u)); }
  std::size_t out_degree(NodeId u) const { return out_->degree(check(u)); }
  std::size_t in_degree(NodeId u) const { return in_->degree(check(u)); }
  bool has_edge(NodeId u, NodeId v) const { return out_->contains(check(u), check(v)); }

  const Csr& out_adjacency() const noexcept { return *out_; }
  const Csr& in_adjacency() const noexcept { return *in_; }

  const std::string& label(NodeId u) const { return labels_->names[check(u)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_->names; }

  std::optional<NodeId> find(std::string_view label) const {
    auto it = labels_->index.find(std::string(label));
    if (it == labels_->index.end()) return std::nullopt;
    return it->second;
  }

  /// Edge-reversed view, O(1).
  Graph reversed() const {
    Graph g = *this;
    std::swap(g.out_, g.in_);
    return g;
  }

  /// All (u, v) with v a successor of u; undirected edges appear once with u <= v.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    for (NodeId u = 0; u < node_count(); ++u) {
      for (NodeId v : out_->neighbors(u)) {
        if (directed_ || u <= v) result.emplace_back(u, v);
      }
    }
    return result;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && *a.out_ == *b.out_ && *a.in_ == *b.in_ &&
           a.labels_->names == b.labels_->names;
  }

 private:
  struct Labels {
    std::vector<std::string> names;
    std::unordered_map<std::string, NodeId> index;
  };

  NodeId check(NodeId u) const {
    if (u >= node_count()) {
      throw InvalidArgument("node id " + std::to_string(u) + " out of range [0, " +
                            std::to_string(node_count()) + ")");
    }
    return u;
  }

  std::shared_ptr<const Csr> out_;
  std::shared_ptr<const Csr> in_;
  std::shared_ptr<const Labels> labels_;
  bool directed_ = true;
  std::size_t edge_count_ = 0;
};

inline Graph reverse(const Graph& g) { return g.reversed(); }

/// Same labels and same labeled edge set, regardless of internal id order.
inline bool equivalent(const Graph& a, const Graph& b) {
  if (a.directed() != b.directed() || a.node_count() != b.node_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  for (NodeId u = 0; u < a.node_count(); ++u) {
    auto mapped = b.find(a.label(u));
    if (!mapped) return false;
    if (a.out_degree(u) != b.out_degree(*mapped)) return false;
    for (NodeId v : a.successors(u)) {
      auto w = b.find(a.label(v));
      if (!w || !b.has_edge(*mapped, *w)) return false;
    }
  }
  return true;
}

/// Simple undirected projection: symmetric, no self-loops, no duplicates.
inline Csr undirected_projection(const Graph& g) {
  std::vector<Edge> pairs;
  pairs.reserve(2 * g.edge_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.successors(u)) {
      if (u == v) continue;
      pairs.emplace_back(u, v);
      pairs.emplace_back(v, u);
    }
  }
  return Csr::from_pairs(g.node_count(), std::move(pairs));
}

/// Subgraph induced by `nodes`; node i of the result is nodes[i] of g.
inline Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::unordered_map<NodeId, NodeId> remap;
  std::vector<std::string> labels;
  for (NodeId u : nodes) {
    if (remap.emplace(u, static_cast<NodeId>(remap.size())).second) labels.push_back(g.label(u));
  }
  if (labels.size() != nodes.size()) throw InvalidArgument("induced_subgraph: repeated node");
  std::vector<Edge> edges;
  for (NodeId u : nodes) {
    for (NodeId v : g.successors(u)) {
      auto it = remap.find(v);
      if (it != remap.end() && (g.directed() || u <= v)) edges.emplace_back(remap[u], it->second);
    }
  }
  return Graph::from_edges(nodes.size(), edges, g.directed(), std::move(labels));
}

// ---------------------------------------------------------------------------
// Edge-list I/O

/// Reads `src<TAB>dst` lines. `#` lines and blank lines are skipped. Node ids
/// are assigned in first-seen order.
inline Graph load_edge_list(std::istream& in, bool directed) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view name) {
    auto [it, fresh] = ids.emplace(std::string(name), static_cast<NodeId>(labels.size()));
    if (fresh) labels.emplace_back(name);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected 'src<TAB>dst', got a single field (singleton nodes are not allowed)",
                       line_no);
    }
    std::string_view src(line.data(), tab);
    std::string_view dst(line.data() + tab + 1, line.size() - tab - 1);
    if (dst.find('\t') != std::string_view::npos) {
      throw ParseError("expected exactly two tab-separated fields", line_no);
    }
    if (src.empty() || dst.empty()) throw ParseError("empty node id", line_no);
    NodeId u = intern(src);
    NodeId v = intern(dst);
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw EmptyGraphError();
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, directed, std::move(labels));
}

inline Graph load_edge_list_file(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return load_edge_list(in, directed);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path);
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) out << g.label(u) << '\t' << g.label(v) << '\n';
}

}  // namespace fbsim
