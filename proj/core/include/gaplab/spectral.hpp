#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gaplab/pagerank.hpp"

namespace gaplab {

enum class SolverMode {
  automatic,   // dense up to kDenseSolverLimit, iterative above
  dense,
  iterative,
};

inline constexpr std::size_t kDenseSolverLimit = 1024;

std::string_view to_string(SolverMode mode) noexcept;
SolverMode parse_solver_mode(std::string_view text);
SolverMode resolve(SolverMode mode, std::size_t n) noexcept;

/// H(s) = s h(G) + (1 - s) h(G_c) with h(X) = (I - X)^T (I - X).
/// Symmetric positive semidefinite for s in [0, 1]. The two Google matrices
/// are shared and immutable, so operators for many s are cheap to create and
/// safe to apply concurrently.
class HamiltonianOperator {
public:
  HamiltonianOperator(std::shared_ptr<const GoogleMatrix> target,
                      std::shared_ptr<const GoogleMatrix> reference, double s);

  std::size_t size() const noexcept { return target_->size(); }
  double s() const noexcept { return s_; }
  const GoogleMatrix& target() const noexcept { return *target_; }
  const GoogleMatrix& reference() const noexcept { return *reference_; }

  /// out = H(s) v using only structured G and G^T products.
  void apply(std::span<const double> v, std::span<double> out) const;

  Eigen::MatrixXd dense() const;

private:
  std::shared_ptr<const GoogleMatrix> target_;
  std::shared_ptr<const GoogleMatrix> reference_;
  double s_;
};

/// (I - G)^T (I - G), materialized.
Eigen::MatrixXd dense_h(const GoogleMatrix& google);

/// h(G) alone (s = 1) against the complete-graph reference of the same size.
HamiltonianOperator h_of(const GoogleMatrix& google);

/// Throws invalid-parameter when s is outside [0, 1] or the sizes differ.
HamiltonianOperator H_of(const GoogleMatrix& target, const GoogleMatrix& reference, double s);
HamiltonianOperator H_of(std::shared_ptr<const GoogleMatrix> target,
                         std::shared_ptr<const GoogleMatrix> reference, double s);

inline constexpr double kPsdFloor = -1e-10;

struct SpectrumPair {
  double lambda0 = 0.0;  // clamped to 0 when in [kPsdFloor, 0)
  double lambda1 = 0.0;
  double raw_lambda0 = 0.0;
  double raw_lambda1 = 0.0;
  double residual = 0.0;  // iterative mode only
  SolverMode mode = SolverMode::dense;

  double gap() const noexcept { return lambda1 - lambda0; }
};

/// The two smallest eigenvalues. Dense mode runs a full symmetric
/// eigendecomposition; iterative mode runs Lanczos with residual <= tol.
/// n = 1 throws degenerate-dimension (no excited state).
SpectrumPair two_lowest(const HamiltonianOperator& op, SolverMode mode = SolverMode::automatic,
                        double tol = 1e-10);

struct GroundState {
  double energy = 0.0;
  std::vector<double> vector;  // 2-normalized, sign fixed so the sum is >= 0
};

GroundState ground_state(const HamiltonianOperator& op, SolverMode mode = SolverMode::automatic,
                         double tol = 1e-10);

struct GapOptions {
  SolverMode mode = SolverMode::automatic;
  double tol = 1e-10;              // iterative eigen-residual
  std::size_t n_scan = 21;         // inclusive uniform grid on [0, 1]
  double s_tol = 1e-4;             // simplex width
  double f_tol = 1e-10;            // best-value improvement over the last step
  std::size_t max_refine_iter = 200;
  double tie_tol = 1e-12;          // probes this close to the best count as ties
};

/// delta(s) = lambda1(s) - lambda0(s) of H(s). Requires n >= 2.
double gap(const GoogleMatrix& target, const GoogleMatrix& reference, double s,
           const GapOptions& options = {});

struct GapProbe {
  double s = 0.0;
  double delta = 0.0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
};

struct GapResult {
  double delta = 0.0;
  double s_star = 0.0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double raw_lambda0 = 0.0;
  std::vector<GapProbe> evaluations;  // in evaluation order
  bool refinement_converged = false;
  std::size_t refinement_iterations = 0;
  SolverMode mode = SolverMode::dense;
};

/// Minimizes delta(s) over [0, 1]: a uniform scan (endpoints included), then a
/// one-dimensional Nelder-Mead simplex started at the best grid point and
/// clamped to the interval. Ties resolve to the largest s. Deterministic.
GapResult min_gap(const GoogleMatrix& google, const GapOptions& options = {});

}  // namespace gaplab
