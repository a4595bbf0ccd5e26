#include "gaplab/lanczos.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gaplab/error.hpp"
#include "gaplab/random.hpp"

namespace gaplab {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Classical Gram-Schmidt, applied twice. Returns the norm left over.
double orthogonalize(const MatrixXd& basis, Index count, VectorXd& q) {
  for (int pass = 0; pass < 2; ++pass) {
    if (count == 0) break;
    const VectorXd coeffs = basis.leftCols(count).transpose() * q;
    q.noalias() -= basis.leftCols(count) * coeffs;
  }
  return q.norm();
}

VectorXd random_vector(Index n, Rng& rng) {
  VectorXd q(n);
  for (Index i = 0; i < n; ++i) q[i] = rng.uniform() - 0.5;
  return q;
}

}  // namespace

LanczosResult lowest_eigenpairs(std::size_t n, const SymmetricApply& apply,
                                const LanczosOptions& options) {
  require(n >= 1, ErrorKind::invalid_parameter, "lowest_eigenpairs: empty operator");
  require(options.wanted >= 1 && options.wanted <= n, ErrorKind::invalid_parameter,
          "lowest_eigenpairs: wanted must lie in [1, n]");
  require(options.tol > 0.0, ErrorKind::invalid_parameter, "lowest_eigenpairs: tol must be positive");

  const auto dim = static_cast<Index>(n);
  const auto wanted = static_cast<Index>(options.wanted);
  const Index max_basis = std::min<Index>(dim, std::max<Index>(static_cast<Index>(options.max_basis), wanted + 2));
  const Index keep = std::clamp<Index>(static_cast<Index>(options.keep), wanted, std::max<Index>(wanted, max_basis - 2));

  MatrixXd basis(dim, max_basis);
  MatrixXd products(dim, max_basis);
  Rng rng(options.start_seed);

  LanczosResult result;
  VectorXd q = random_vector(dim, rng);
  Index filled = 0;
  double worst = 0.0;

  for (std::size_t cycle = 0;; ++cycle) {
    while (filled < max_basis) {
      const double before = q.norm();
      double after = orthogonalize(basis, filled, q);
      // Breakdown: the Krylov space is invariant. Continue with a fresh
      // direction so no part of the spectrum is skipped.
      int attempts = 0;
      while (!(after > 1e-10 * std::max(before, 1.0)) && attempts < 8) {
        q = random_vector(dim, rng);
        after = orthogonalize(basis, filled, q);
        ++attempts;
      }
      if (!(after > 0.0)) break;
      basis.col(filled) = q / after;
      apply(std::span<const double>(basis.col(filled).data(), n),
            std::span<double>(products.col(filled).data(), n));
      ++result.matvecs;
      q = products.col(filled);
      ++filled;
    }

    MatrixXd projected = basis.leftCols(filled).transpose() * products.leftCols(filled);
    projected = 0.5 * (projected + projected.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> small(projected);
    const VectorXd& theta = small.eigenvalues();
    const MatrixXd& coeffs = small.eigenvectors();

    const Index retained = std::min(filled, std::max(keep, wanted));
    MatrixXd ritz = basis.leftCols(filled) * coeffs.leftCols(retained);
    MatrixXd ritz_products = products.leftCols(filled) * coeffs.leftCols(retained);

    worst = 0.0;
    Index first_unconverged = -1;
    std::vector<double> residuals(static_cast<std::size_t>(wanted));
    for (Index k = 0; k < wanted; ++k) {
      const double r = (ritz_products.col(k) - theta[k] * ritz.col(k)).norm();
      residuals[static_cast<std::size_t>(k)] = r;
      worst = std::max(worst, r);
      if (r > options.tol && first_unconverged < 0) first_unconverged = k;
    }

    if (first_unconverged < 0 || filled == dim) {
      result.values.assign(theta.data(), theta.data() + wanted);
      result.vectors = ritz.leftCols(wanted);
      result.residuals = std::move(residuals);
      result.restarts = cycle;
      return result;
    }
    if (cycle >= options.max_restarts) break;

    q = ritz_products.col(first_unconverged) - theta[first_unconverged] * ritz.col(first_unconverged);
    basis.leftCols(retained) = ritz;
    products.leftCols(retained) = ritz_products;
    filled = retained;
  }

  throw ConvergenceError(
      fmt::format("lowest_eigenpairs: no convergence after {} restarts (residual {:.3e})",
                  options.max_restarts, worst),
      worst);
}

}  // namespace gaplab
