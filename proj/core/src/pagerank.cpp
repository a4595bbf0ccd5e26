#include "gaplab/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "gaplab/error.hpp"

namespace gaplab {

TransitionMatrix::TransitionMatrix(const SimpleDigraph& graph) : graph_(graph) {
  for (NodeId i = 0; i < graph_.node_count(); ++i)
    if (graph_.out_degree(i) == 0) dangling_.push_back(i);
}

double TransitionMatrix::entry(NodeId i, NodeId j) const {
  require(i < size() && j < size(), ErrorKind::dimension_mismatch,
          "TransitionMatrix::entry: index out of range");
  const std::size_t degree = graph_.out_degree(i);
  if (degree == 0) return 1.0 / static_cast<double>(size());
  return graph_.has_edge(i, j) ? 1.0 / static_cast<double>(degree) : 0.0;
}

Eigen::MatrixXd TransitionMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (NodeId i = 0; i < size(); ++i) {
    const std::size_t degree = graph_.out_degree(i);
    if (degree == 0) {
      p.row(i).setConstant(1.0 / static_cast<double>(n));
      continue;
    }
    for (NodeId j : graph_.out_neighbors(i)) p(i, j) = 1.0 / static_cast<double>(degree);
  }
  return p;
}

GoogleMatrix::GoogleMatrix(const SimpleDigraph& graph, double alpha_g)
    : transition_(graph), alpha_g_(alpha_g) {
  require(std::isfinite(alpha_g) && alpha_g > 0.0 && alpha_g < 1.0, ErrorKind::invalid_parameter,
          fmt::format("damping alpha_g must lie in (0, 1), got {}", alpha_g));
}

void GoogleMatrix::apply(std::span<const double> v, std::span<double> out) const {
  const std::size_t n = size();
  require(v.size() == n && out.size() == n, ErrorKind::dimension_mismatch,
          fmt::format("GoogleMatrix::apply: expected length {}, got {} -> {}", n, v.size(),
                      out.size()));
  const SimpleDigraph& g = transition_.graph();
  double dangling_mass = 0.0;
  for (NodeId i : transition_.dangling()) dangling_mass += v[i];
  const double total_mass = std::accumulate(v.begin(), v.end(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(n);
  const double uniform = alpha_g_ * dangling_mass * inv_n + (1.0 - alpha_g_) * total_mass * inv_n;

  std::fill(out.begin(), out.end(), uniform);
  for (NodeId i = 0; i < n; ++i) {
    auto row = g.out_neighbors(i);
    if (row.empty()) continue;
    const double share = alpha_g_ * v[i] / static_cast<double>(row.size());
    for (NodeId j : row) out[j] += share;
  }
}

void GoogleMatrix::apply_transpose(std::span<const double> v, std::span<double> out) const {
  const std::size_t n = size();
  require(v.size() == n && out.size() == n, ErrorKind::dimension_mismatch,
          fmt::format("GoogleMatrix::apply_transpose: expected length {}, got {} -> {}", n,
                      v.size(), out.size()));
  const SimpleDigraph& g = transition_.graph();
  const double total_mass = std::accumulate(v.begin(), v.end(), 0.0);
  const double mean = total_mass / static_cast<double>(n);
  const double uniform = (1.0 - alpha_g_) * mean;
  for (NodeId i = 0; i < n; ++i) {
    auto row = g.out_neighbors(i);
    if (row.empty()) {
      out[i] = uniform + alpha_g_ * mean;
      continue;
    }
    double sum = 0.0;
    for (NodeId j : row) sum += v[j];
    out[i] = uniform + alpha_g_ * sum / static_cast<double>(row.size());
  }
}

std::vector<double> GoogleMatrix::apply(std::span<const double> v) const {
  std::vector<double> out(size());
  apply(v, out);
  return out;
}

GoogleMatrix google_matrix(const SimpleDigraph& graph, double alpha_g) {
  return GoogleMatrix(graph, alpha_g);
}

GoogleMatrix complete_reference(std::size_t n, double alpha_g) {
  require(n >= 1, ErrorKind::invalid_parameter, "complete_reference: n must be >= 1");
  return GoogleMatrix(SimpleDigraph::from_edges(n, {}), alpha_g);
}

Eigen::MatrixXd dense_google(const GoogleMatrix& google, std::size_t max_n) {
  const std::size_t n = google.size();
  require(n <= max_n, ErrorKind::resource_limit,
          fmt::format("dense_google: n = {} exceeds the dense limit {}", n, max_n));
  const double alpha = google.damping();
  Eigen::MatrixXd g = alpha * google.transition().dense().transpose();
  g.array() += (1.0 - alpha) / static_cast<double>(n);
  return g;
}

RankVector pagerank_power(const GoogleMatrix& google, double tol, std::size_t max_iter) {
  require(tol > 0.0, ErrorKind::invalid_parameter, "pagerank_power: tol must be positive");
  const std::size_t n = google.size();
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);

  RankVector result;
  double change = 0.0;
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    google.apply(v, next);
    const double mass = std::accumulate(next.begin(), next.end(), 0.0);
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= mass;
      change += std::abs(next[i] - v[i]);
    }
    v.swap(next);
    if (change < tol) {
      result.values = std::move(v);
      result.iterations = iter;
      result.residual = change;
      return result;
    }
  }
  throw ConvergenceError(
      fmt::format("pagerank_power: no convergence in {} iterations (residual {:.3e})", max_iter,
                  change),
      change);
}

void write_rank_csv(std::ostream& out, const RankVector& rank) {
  out << "index,value\n";
  for (std::size_t i = 0; i < rank.values.size(); ++i)
    out << fmt::format("{},{:.17g}\n", i, rank.values[i]);
}

}  // namespace gaplab
