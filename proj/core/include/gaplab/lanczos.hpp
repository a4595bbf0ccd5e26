#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gaplab {

/// y = A x for a symmetric operator A.
using SymmetricApply = std::function<void(std::span<const double>, std::span<double>)>;

struct LanczosOptions {
  std::size_t wanted = 2;
  double tol = 1e-10;           // on ||A u - theta u|| for each wanted pair
  std::size_t max_basis = 64;   // clipped to n
  std::size_t keep = 24;        // Ritz vectors retained on restart
  std::size_t max_restarts = 2000;
  std::uint64_t start_seed = 0x5eed5eed5eedULL;
};

struct LanczosResult {
  std::vector<double> values;   // ascending
  Eigen::MatrixXd vectors;      // n x wanted, orthonormal columns
  std::vector<double> residuals;
  std::size_t matvecs = 0;
  std::size_t restarts = 0;
};

/// Lowest eigenpairs of a symmetric operator by thick-restart Lanczos with
/// full reorthogonalization. The projected matrix is formed explicitly from
/// stored products, so restarts need no extra applications. The start vector
/// is a fixed pseudo-random vector; results are deterministic.
/// Throws ConvergenceError (worst wanted residual) when restarts run out.
LanczosResult lowest_eigenpairs(std::size_t n, const SymmetricApply& apply,
                                const LanczosOptions& options = {});

}  // namespace gaplab
