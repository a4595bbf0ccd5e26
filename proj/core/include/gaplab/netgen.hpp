#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "gaplab/digraph.hpp"
#include "gaplab/random.hpp"

namespace gaplab {

/// Composite preferential attachment: X grows with m_x out-edges per new
/// vertex, Y with m_y in-edges. Scale-free only when m_x == m_y.
struct PaParams {
  int m_x = 1;
  int m_y = 1;
};

/// Composite copying model. p_x / p_y are the probabilities that a new vertex
/// links uniformly at random instead of copying its star vertex.
struct CopyParams {
  int m_x = 1;
  int m_y = 1;
  double p_x = 0.5;
  double p_y = 0.5;
};

/// Directed preferential attachment with offset alpha. Per step: new vertex
/// with one out-edge (p1), new vertex with one in-edge (p2), or a bare edge.
struct AlphaPaParams {
  double p1 = 0.25;
  double p2 = 0.25;
  double alpha = 1.0;
};

/// Degenerate stub: n isolated vertices. Every node is dangling, so the
/// Google matrix equals the complete-graph reference.
struct EmptyModel {};

using ModelParams = std::variant<PaParams, CopyParams, AlphaPaParams, EmptyModel>;

struct ExponentPair {
  double gamma_in = 0.0;
  double gamma_out = 0.0;
};

void validate(const PaParams& params, bool allow_unbalanced = false);
void validate(const CopyParams& params, bool allow_unbalanced = false);
void validate(const AlphaPaParams& params);

std::string model_tag(const ModelParams& params);
/// Compact, fixed-precision echo of the parameter values, e.g. "m_x=1;m_y=1".
std::string params_echo(const ModelParams& params);

/// Directed complete graph on m+1 vertices, loops included.
MultiDigraph seed_graph(int m);

/// Total-degree preferential attachment from seed_graph(m). Each new vertex
/// emits m edges to pre-existing vertices, degrees updated after every edge.
/// reversed flips every edge (the Y component of a composite).
MultiDigraph grow_pa(int m, std::size_t n, Rng& rng, bool reversed = false);

/// Copying model from seed_graph(m). The new vertex copies the out-edges of a
/// uniformly chosen star vertex with probability 1-p, otherwise emits m edges
/// to uniform targets (with replacement). A seed star's self-loop is not
/// copied, so every new vertex receives exactly m edges.
MultiDigraph grow_copy(int m, double p, std::size_t n, Rng& rng, bool reversed = false);

/// Alpha preferential attachment from seed_graph(1), stepping until exactly n
/// vertices exist. Bare-edge steps do not add vertices and may create loops.
MultiDigraph grow_alpha_pa(const AlphaPaParams& params, std::size_t n, Rng& rng);

/// Adds adjacency matrices, caps weights at one and removes the diagonal.
SimpleDigraph compose_and_simplify(const MultiDigraph& x, const MultiDigraph& y);
SimpleDigraph simplify(const MultiDigraph& graph);

/// Growth output before simplification: for composite models the edges of X
/// and Y side by side, for alpha_pa the grown multigraph. Degree tallies here
/// count edge multiplicity.
MultiDigraph generate_multigraph(const ModelParams& params, std::size_t n, Rng& rng,
                                 bool allow_unbalanced = false);

/// Draws one final graph of n vertices; simplify(generate_multigraph(...)). Composite models grow X then Y from
/// the same stream. allow_unbalanced admits m_x != m_y (distorted degree
/// distributions); otherwise that is invalid-parameter.
SimpleDigraph generate_graph(const ModelParams& params, std::size_t n, Rng& rng,
                             bool allow_unbalanced = false);

ExponentPair predicted_exponents(const PaParams& params);
ExponentPair predicted_exponents(const CopyParams& params);
ExponentPair predicted_exponents(const AlphaPaParams& params);
ExponentPair predicted_exponents(const ModelParams& params);

/// Unnormalized degree probability of composite PA with unequal component
/// sizes: (k + m_x - m_y)^-3 for in-degree, (k - m_x + m_y)^-3 for out-degree.
/// Throws undefined-domain when the shifted degree is not positive.
double composite_offset_prediction(int m_x, int m_y, double k, Direction direction = Direction::in);

}  // namespace gaplab
