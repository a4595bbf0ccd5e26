#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gaplab/digraph.hpp"

namespace gaplab {

/// Random-surfer transition matrix P of a simple digraph, kept sparse.
/// Row i is uniform over the out-neighbours of i, or uniform over all n
/// vertices when i is dangling.
class TransitionMatrix {
public:
  explicit TransitionMatrix(const SimpleDigraph& graph);

  std::size_t size() const noexcept { return graph_.node_count(); }
  const SimpleDigraph& graph() const noexcept { return graph_; }
  std::span<const NodeId> dangling() const noexcept { return dangling_; }
  bool is_dangling(NodeId i) const { return graph_.out_degree(i) == 0; }

  /// P(i, j).
  double entry(NodeId i, NodeId j) const;

  Eigen::MatrixXd dense() const;

private:
  SimpleDigraph graph_;
  std::vector<NodeId> dangling_;
};

inline constexpr double kDefaultDamping = 0.85;

/// G = alpha_g P^T + (1 - alpha_g)/n * ones. The uniform term is scaled by 1/n
/// so that G stays column-stochastic; it is never materialized.
class GoogleMatrix {
public:
  explicit GoogleMatrix(const SimpleDigraph& graph, double alpha_g = kDefaultDamping);

  std::size_t size() const noexcept { return transition_.size(); }
  double damping() const noexcept { return alpha_g_; }
  const TransitionMatrix& transition() const noexcept { return transition_; }

  /// out = G v in O(edges + n).
  void apply(std::span<const double> v, std::span<double> out) const;
  /// out = G^T v in O(edges + n).
  void apply_transpose(std::span<const double> v, std::span<double> out) const;

  std::vector<double> apply(std::span<const double> v) const;

private:
  TransitionMatrix transition_;
  double alpha_g_;
};

GoogleMatrix google_matrix(const SimpleDigraph& graph, double alpha_g = kDefaultDamping);

/// Google matrix of the complete graph with loops on n vertices. Its P is
/// uniform in every row, which is the same matrix as for n isolated
/// (all-dangling) vertices, so it is stored that way: G_c = ones / n.
GoogleMatrix complete_reference(std::size_t n, double alpha_g = kDefaultDamping);

inline constexpr std::size_t kDenseGoogleLimit = 8192;

/// Explicit n x n matrix. Throws resource-limit above max_n.
Eigen::MatrixXd dense_google(const GoogleMatrix& google, std::size_t max_n = kDenseGoogleLimit);

struct RankVector {
  std::vector<double> values;  // 1-norm 1, entrywise positive
  std::size_t iterations = 0;
  double residual = 0.0;  // last 1-norm change
};

/// Power iteration v <- G v from the uniform vector until the 1-norm change
/// drops below tol. Throws ConvergenceError after max_iter steps.
RankVector pagerank_power(const GoogleMatrix& google, double tol = 1e-12,
                          std::size_t max_iter = 100000);

/// "index,value" rows with a header line.
void write_rank_csv(std::ostream& out, const RankVector& rank);

}  // namespace gaplab
