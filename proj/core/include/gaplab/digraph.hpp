#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gaplab {

using NodeId = std::uint32_t;

enum class Direction { in, out, total };

struct Edge {
  NodeId source = 0;
  NodeId target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed multigraph produced during growth. Loops and parallel edges are
/// allowed; degree tallies are maintained on every insertion.
class MultiDigraph {
public:
  MultiDigraph() = default;
  explicit MultiDigraph(std::size_t node_count);

  std::size_t node_count() const noexcept { return in_degree_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::size_t in_degree(NodeId v) const { return in_degree_.at(v); }
  std::size_t out_degree(NodeId v) const { return out_degree_.at(v); }
  std::size_t total_degree(NodeId v) const { return in_degree(v) + out_degree(v); }

  NodeId add_node();
  void add_edge(NodeId source, NodeId target);
  void reserve_edges(std::size_t count) { edges_.reserve(count); }

  /// Same graph with every edge direction flipped.
  MultiDigraph reversed() const;

private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::size_t> out_degree_;
};

/// Unweighted, loop-free directed graph stored as sorted out-adjacency (CSR).
/// Immutable once built.
class SimpleDigraph {
public:
  SimpleDigraph() = default;

  /// Builds from arbitrary edges: duplicates collapse and loops are dropped.
  /// Throws invalid-parameter for endpoints outside [0, node_count).
  static SimpleDigraph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return in_degree_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t in_degree(NodeId v) const { return in_degree_[v]; }
  bool has_edge(NodeId source, NodeId target) const;

  /// Edges in lexicographic (source, target) order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleDigraph&, const SimpleDigraph&) = default;

private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<std::size_t> in_degree_;
};

}  // namespace gaplab
