#include "gaplab/netgen.hpp"

#include <cmath>
#include <type_traits>
#include <vector>

#include <fmt/format.h>

#include "gaplab/error.hpp"

namespace gaplab {
namespace {

void require_probability_open(double p, const char* name) {
  require(std::isfinite(p) && p > 0.0 && p < 1.0, ErrorKind::invalid_parameter,
          fmt::format("{} must lie in (0, 1), got {}", name, p));
}

void require_growable(int m, std::size_t n) {
  require(m >= 1, ErrorKind::invalid_parameter, fmt::format("m must be >= 1, got {}", m));
  require(n >= static_cast<std::size_t>(m) + 1, ErrorKind::invalid_parameter,
          fmt::format("n must be >= m + 1 = {}, got {}", m + 1, n));
}

// Draws a vertex among the first `count` with probability proportional to
// (tally(v) + alpha), where `endpoints` lists v once per unit of tally.
NodeId pick_offset_preferential(const std::vector<NodeId>& endpoints, std::size_t count,
                                double alpha, Rng& rng) {
  const double degree_mass = static_cast<double>(endpoints.size());
  const double total = degree_mass + alpha * static_cast<double>(count);
  const double u = rng.uniform() * total;
  if (u < degree_mass) {
    auto index = static_cast<std::size_t>(u);
    if (index >= endpoints.size()) index = endpoints.size() - 1;
    return endpoints[index];
  }
  auto index = static_cast<std::size_t>((u - degree_mass) / alpha);
  if (index >= count) index = count - 1;
  return static_cast<NodeId>(index);
}

}  // namespace

void validate(const PaParams& params, bool allow_unbalanced) {
  require(params.m_x >= 1 && params.m_y >= 1, ErrorKind::invalid_parameter,
          "PA: m_x and m_y must be >= 1");
  require(allow_unbalanced || params.m_x == params.m_y, ErrorKind::invalid_parameter,
          fmt::format("PA: composite requires m_x == m_y (got {} and {})", params.m_x, params.m_y));
}

void validate(const CopyParams& params, bool allow_unbalanced) {
  require(params.m_x >= 1 && params.m_y >= 1, ErrorKind::invalid_parameter,
          "copy: m_x and m_y must be >= 1");
  require(allow_unbalanced || params.m_x == params.m_y, ErrorKind::invalid_parameter,
          fmt::format("copy: composite requires m_x == m_y (got {} and {})", params.m_x,
                      params.m_y));
  require_probability_open(params.p_x, "copy: p_x");
  require_probability_open(params.p_y, "copy: p_y");
}

void validate(const AlphaPaParams& params) {
  require_probability_open(params.p1, "alpha_pa: p1");
  require_probability_open(params.p2, "alpha_pa: p2");
  require(params.p1 + params.p2 <= 1.0, ErrorKind::invalid_parameter,
          "alpha_pa: p1 + p2 must be <= 1");
  require(std::isfinite(params.alpha) && params.alpha >= 0.0, ErrorKind::invalid_parameter,
          "alpha_pa: alpha must be finite and >= 0");
}

std::string model_tag(const ModelParams& params) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PaParams>) return "pa";
        else if constexpr (std::is_same_v<T, CopyParams>) return "copy";
        else if constexpr (std::is_same_v<T, AlphaPaParams>) return "alpha_pa";
        else return "empty";
      },
      params);
}

std::string params_echo(const ModelParams& params) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PaParams>) {
          return fmt::format("m_x={};m_y={}", p.m_x, p.m_y);
        } else if constexpr (std::is_same_v<T, CopyParams>) {
          return fmt::format("m_x={};m_y={};p_x={:.12g};p_y={:.12g}", p.m_x, p.m_y, p.p_x, p.p_y);
        } else if constexpr (std::is_same_v<T, AlphaPaParams>) {
          return fmt::format("p1={:.12g};p2={:.12g};alpha={:.12g}", p.p1, p.p2, p.alpha);
        } else {
          return "";
        }
      },
      params);
}

MultiDigraph seed_graph(int m) {
  require(m >= 1, ErrorKind::invalid_parameter, fmt::format("seed_graph: m must be >= 1, got {}", m));
  const auto size = static_cast<std::size_t>(m) + 1;
  MultiDigraph g(size);
  g.reserve_edges(size * size);
  for (NodeId i = 0; i < size; ++i)
    for (NodeId j = 0; j < size; ++j) g.add_edge(i, j);
  return g;
}

MultiDigraph grow_pa(int m, std::size_t n, Rng& rng, bool reversed) {
  require_growable(m, n);
  MultiDigraph g = seed_graph(m);
  g.reserve_edges(g.edge_count() + (n - g.node_count()) * static_cast<std::size_t>(m));

  // Each vertex appears once per unit of total degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * (g.edge_count() + n * static_cast<std::size_t>(m)));
  for (const Edge& e : g.edges()) {
    endpoints.push_back(e.source);
    endpoints.push_back(e.target);
  }

  while (g.node_count() < n) {
    const NodeId v = g.add_node();
    for (int k = 0; k < m; ++k) {
      NodeId target;
      do {
        target = endpoints[rng.below(endpoints.size())];
      } while (target == v);
      g.add_edge(v, target);
      endpoints.push_back(v);
      endpoints.push_back(target);
    }
  }
  return reversed ? g.reversed() : g;
}

MultiDigraph grow_copy(int m, double p, std::size_t n, Rng& rng, bool reversed) {
  require_growable(m, n);
  require_probability_open(p, "grow_copy: p");

  MultiDigraph g = seed_graph(m);
  g.reserve_edges(g.edge_count() + (n - g.node_count()) * static_cast<std::size_t>(m));

  // Copyable out-lists. Seed vertices list every other seed vertex.
  std::vector<std::vector<NodeId>> copyable(g.node_count());
  for (const Edge& e : g.edges())
    if (e.source != e.target) copyable[e.source].push_back(e.target);

  while (g.node_count() < n) {
    const std::size_t existing = g.node_count();
    std::vector<NodeId> targets;
    targets.reserve(static_cast<std::size_t>(m));
    if (rng.bernoulli(p)) {
      for (int k = 0; k < m; ++k) targets.push_back(static_cast<NodeId>(rng.below(existing)));
    } else {
      const auto star = static_cast<NodeId>(rng.below(existing));
      targets = copyable[star];
    }
    const NodeId v = g.add_node();
    for (NodeId t : targets) g.add_edge(v, t);
    copyable.push_back(std::move(targets));
  }
  return reversed ? g.reversed() : g;
}

MultiDigraph grow_alpha_pa(const AlphaPaParams& params, std::size_t n, Rng& rng) {
  validate(params);
  require(n >= 2, ErrorKind::invalid_parameter, "grow_alpha_pa: n must be >= 2");

  MultiDigraph g = seed_graph(1);
  const double vertex_steps = params.p1 + params.p2;
  const auto expected_edges = static_cast<std::size_t>(static_cast<double>(n) / vertex_steps);
  g.reserve_edges(expected_edges + 16);

  std::vector<NodeId> heads;  // edge targets: in-degree tally
  std::vector<NodeId> tails;  // edge sources: out-degree tally
  heads.reserve(expected_edges + 16);
  tails.reserve(expected_edges + 16);
  auto record = [&](NodeId source, NodeId target) {
    g.add_edge(source, target);
    tails.push_back(source);
    heads.push_back(target);
  };
  for (const Edge& e : g.edges()) {
    tails.push_back(e.source);
    heads.push_back(e.target);
  }

  while (g.node_count() < n) {
    const std::size_t existing = g.node_count();
    const double r = rng.uniform();
    if (r < params.p1) {
      const NodeId target = pick_offset_preferential(heads, existing, params.alpha, rng);
      record(g.add_node(), target);
    } else if (r < vertex_steps) {
      const NodeId source = pick_offset_preferential(tails, existing, params.alpha, rng);
      record(source, g.add_node());
    } else {
      const NodeId target = pick_offset_preferential(heads, existing, params.alpha, rng);
      const NodeId source = pick_offset_preferential(tails, existing, params.alpha, rng);
      record(source, target);
    }
  }
  return g;
}

SimpleDigraph compose_and_simplify(const MultiDigraph& x, const MultiDigraph& y) {
  require(x.node_count() == y.node_count(), ErrorKind::invalid_parameter,
          fmt::format("compose_and_simplify: node counts differ ({} vs {})", x.node_count(),
                      y.node_count()));
  std::vector<Edge> edges;
  edges.reserve(x.edge_count() + y.edge_count());
  edges.insert(edges.end(), x.edges().begin(), x.edges().end());
  edges.insert(edges.end(), y.edges().begin(), y.edges().end());
  return SimpleDigraph::from_edges(x.node_count(), edges);
}

SimpleDigraph simplify(const MultiDigraph& graph) {
  return SimpleDigraph::from_edges(graph.node_count(), graph.edges());
}

MultiDigraph generate_multigraph(const ModelParams& params, std::size_t n, Rng& rng,
                                 bool allow_unbalanced) {
  auto side_by_side = [](const MultiDigraph& x, const MultiDigraph& y) {
    require(x.node_count() == y.node_count(), ErrorKind::invalid_parameter,
            "composite components differ in size");
    MultiDigraph sum(x.node_count());
    sum.reserve_edges(x.edge_count() + y.edge_count());
    for (const Edge& e : x.edges()) sum.add_edge(e.source, e.target);
    for (const Edge& e : y.edges()) sum.add_edge(e.source, e.target);
    return sum;
  };
  return std::visit(
      [&](const auto& p) -> MultiDigraph {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PaParams>) {
          validate(p, allow_unbalanced);
          const MultiDigraph x = grow_pa(p.m_x, n, rng, false);
          return side_by_side(x, grow_pa(p.m_y, n, rng, true));
        } else if constexpr (std::is_same_v<T, CopyParams>) {
          validate(p, allow_unbalanced);
          const MultiDigraph x = grow_copy(p.m_x, p.p_x, n, rng, false);
          return side_by_side(x, grow_copy(p.m_y, p.p_y, n, rng, true));
        } else if constexpr (std::is_same_v<T, AlphaPaParams>) {
          return grow_alpha_pa(p, n, rng);
        } else {
          require(n >= 1, ErrorKind::invalid_parameter, "empty model: n must be >= 1");
          return MultiDigraph(n);
        }
      },
      params);
}

SimpleDigraph generate_graph(const ModelParams& params, std::size_t n, Rng& rng,
                             bool allow_unbalanced) {
  return simplify(generate_multigraph(params, n, rng, allow_unbalanced));
}

ExponentPair predicted_exponents(const PaParams& params) {
  validate(params);
  return {3.0, 3.0};
}

ExponentPair predicted_exponents(const CopyParams& params) {
  validate(params);
  return {(2.0 - params.p_x) / (1.0 - params.p_x), (2.0 - params.p_y) / (1.0 - params.p_y)};
}

ExponentPair predicted_exponents(const AlphaPaParams& params) {
  validate(params);
  const double shift = (params.p1 + params.p2) * params.alpha;
  return {(2.0 + shift - params.p2) / (1.0 - params.p2),
          (2.0 + shift - params.p1) / (1.0 - params.p1)};
}

ExponentPair predicted_exponents(const ModelParams& params) {
  return std::visit(
      [](const auto& p) -> ExponentPair {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, EmptyModel>) {
          throw Error(ErrorKind::invalid_parameter, "empty model has no degree exponents");
        } else {
          return predicted_exponents(p);
        }
      },
      params);
}

double composite_offset_prediction(int m_x, int m_y, double k, Direction direction) {
  require(m_x >= 1 && m_y >= 1, ErrorKind::invalid_parameter,
          "composite_offset_prediction: m_x and m_y must be >= 1");
  require(direction != Direction::total, ErrorKind::invalid_parameter,
          "composite_offset_prediction: direction must be in or out");
  const double offset = direction == Direction::in ? m_x - m_y : m_y - m_x;
  const double shifted = k + offset;
  require(shifted > 0.0, ErrorKind::undefined_domain,
          fmt::format("composite_offset_prediction: k + offset = {} is not positive", shifted));
  return std::pow(shifted, -3.0);
}

}  // namespace gaplab
