#include "gaplab/digraph.hpp"

#include <algorithm>
#include <string>

#include "gaplab/error.hpp"

namespace gaplab {

MultiDigraph::MultiDigraph(std::size_t node_count)
    : in_degree_(node_count, 0), out_degree_(node_count, 0) {}

NodeId MultiDigraph::add_node() {
  in_degree_.push_back(0);
  out_degree_.push_back(0);
  return static_cast<NodeId>(in_degree_.size() - 1);
}

void MultiDigraph::add_edge(NodeId source, NodeId target) {
  require(source < node_count() && target < node_count(), ErrorKind::invalid_parameter,
          "MultiDigraph::add_edge: endpoint out of range");
  edges_.push_back({source, target});
  ++out_degree_[source];
  ++in_degree_[target];
}

MultiDigraph MultiDigraph::reversed() const {
  MultiDigraph result;
  result.edges_.reserve(edges_.size());
  for (const Edge& e : edges_) result.edges_.push_back({e.target, e.source});
  result.in_degree_ = out_degree_;
  result.out_degree_ = in_degree_;
  return result;
}

SimpleDigraph SimpleDigraph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  require(node_count >= 1, ErrorKind::invalid_parameter,
          "SimpleDigraph: node_count must be positive");
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.source >= node_count || e.target >= node_count) {
      throw Error(ErrorKind::invalid_parameter,
                  "SimpleDigraph: edge (" + std::to_string(e.source) + ", " +
                      std::to_string(e.target) + ") outside node range");
    }
    if (e.source != e.target) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  SimpleDigraph g;
  g.offsets_.assign(node_count + 1, 0);
  g.in_degree_.assign(node_count, 0);
  g.targets_.reserve(kept.size());
  for (const Edge& e : kept) {
    ++g.offsets_[e.source + 1];
    ++g.in_degree_[e.target];
    g.targets_.push_back(e.target);
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  return g;
}

bool SimpleDigraph::has_edge(NodeId source, NodeId target) const {
  if (source >= node_count()) return false;
  auto row = out_neighbors(source);
  return std::binary_search(row.begin(), row.end(), target);
}

std::vector<Edge> SimpleDigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId v = 0; v < node_count(); ++v)
    for (NodeId t : out_neighbors(v)) out.push_back({v, t});
  return out;
}

}  // namespace gaplab
