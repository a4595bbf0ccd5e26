#include "gaplab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "gaplab/error.hpp"
#include "gaplab/lanczos.hpp"

namespace gaplab {
namespace {

using Eigen::MatrixXd;

double psd_floor(double lambda) { return (lambda < 0.0 && lambda >= kPsdFloor) ? 0.0 : lambda; }

SpectrumPair make_pair(double raw0, double raw1, SolverMode mode, double residual) {
  SpectrumPair pair;
  pair.raw_lambda0 = raw0;
  pair.raw_lambda1 = raw1;
  pair.lambda0 = psd_floor(raw0);
  pair.lambda1 = psd_floor(raw1);
  pair.mode = mode;
  pair.residual = residual;
  return pair;
}

SpectrumPair dense_two_lowest(const MatrixXd& h, SolverMode mode) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorKind::convergence_failure,
          "dense symmetric eigensolver failed");
  return make_pair(solver.eigenvalues()[0], solver.eigenvalues()[1], mode, 0.0);
}

SpectrumPair iterative_two_lowest(const HamiltonianOperator& op, double tol) {
  LanczosOptions options;
  options.wanted = 2;
  options.tol = tol;
  const LanczosResult r = lowest_eigenpairs(
      op.size(), [&op](std::span<const double> v, std::span<double> out) { op.apply(v, out); },
      options);
  const double residual = *std::max_element(r.residuals.begin(), r.residuals.end());
  return make_pair(r.values[0], r.values[1], SolverMode::iterative, residual);
}

void require_pair(std::size_t n) {
  require(n >= 2, ErrorKind::degenerate_dimension,
          "a one-vertex Hamiltonian has no excited state");
}

// Adds coeff * (I - X)^T (I - X) v to out.
void accumulate_h(const GoogleMatrix& google, double coeff, std::span<const double> v,
                  std::span<double> out, std::vector<double>& scratch_a,
                  std::vector<double>& scratch_b) {
  const std::size_t n = v.size();
  google.apply(v, scratch_a);
  for (std::size_t i = 0; i < n; ++i) scratch_a[i] = v[i] - scratch_a[i];
  google.apply_transpose(scratch_a, scratch_b);
  for (std::size_t i = 0; i < n; ++i) out[i] += coeff * (scratch_a[i] - scratch_b[i]);
}

// Evaluates the spectrum of H(s) for one graph, reusing whatever can be
// precomputed for the chosen solver.
class GapEvaluator {
public:
  GapEvaluator(const GoogleMatrix& google, SolverMode mode, double tol)
      : target_(std::make_shared<const GoogleMatrix>(google)),
        reference_(std::make_shared<const GoogleMatrix>(
            complete_reference(google.size(), google.damping()))),
        mode_(resolve(mode, google.size())),
        tol_(tol) {
    if (mode_ == SolverMode::dense) {
      h_target_ = dense_h(*target_);
      h_reference_ = dense_h(*reference_);
    }
  }

  SolverMode mode() const noexcept { return mode_; }

  SpectrumPair operator()(double s) const {
    if (mode_ == SolverMode::dense) {
      if (s == 1.0) return dense_two_lowest(h_target_, mode_);
      if (s == 0.0) return dense_two_lowest(h_reference_, mode_);
      MatrixXd h = s * h_target_ + (1.0 - s) * h_reference_;
      return dense_two_lowest(h, mode_);
    }
    return iterative_two_lowest(HamiltonianOperator(target_, reference_, s), tol_);
  }

private:
  std::shared_ptr<const GoogleMatrix> target_;
  std::shared_ptr<const GoogleMatrix> reference_;
  SolverMode mode_;
  double tol_;
  MatrixXd h_target_;
  MatrixXd h_reference_;
};

}  // namespace

std::string_view to_string(SolverMode mode) noexcept {
  switch (mode) {
    case SolverMode::automatic: return "auto";
    case SolverMode::dense: return "dense";
    case SolverMode::iterative: return "iterative";
  }
  return "auto";
}

SolverMode parse_solver_mode(std::string_view text) {
  if (text == "auto") return SolverMode::automatic;
  if (text == "dense") return SolverMode::dense;
  if (text == "iterative") return SolverMode::iterative;
  throw Error(ErrorKind::invalid_parameter,
              fmt::format("unknown solver mode '{}' (expected auto, dense or iterative)", text));
}

SolverMode resolve(SolverMode mode, std::size_t n) noexcept {
  if (mode != SolverMode::automatic) return mode;
  return n <= kDenseSolverLimit ? SolverMode::dense : SolverMode::iterative;
}

HamiltonianOperator::HamiltonianOperator(std::shared_ptr<const GoogleMatrix> target,
                                         std::shared_ptr<const GoogleMatrix> reference, double s)
    : target_(std::move(target)), reference_(std::move(reference)), s_(s) {
  require(target_ && reference_, ErrorKind::invalid_parameter,
          "HamiltonianOperator: null Google matrix");
  require(target_->size() == reference_->size(), ErrorKind::dimension_mismatch,
          "HamiltonianOperator: target and reference sizes differ");
  require(s >= 0.0 && s <= 1.0, ErrorKind::invalid_parameter,
          fmt::format("interpolation parameter s must lie in [0, 1], got {}", s));
}

void HamiltonianOperator::apply(std::span<const double> v, std::span<double> out) const {
  const std::size_t n = size();
  require(v.size() == n && out.size() == n, ErrorKind::dimension_mismatch,
          "HamiltonianOperator::apply: length mismatch");
  std::fill(out.begin(), out.end(), 0.0);
  std::vector<double> a(n);
  std::vector<double> b(n);
  if (s_ > 0.0) accumulate_h(*target_, s_, v, out, a, b);
  if (s_ < 1.0) accumulate_h(*reference_, 1.0 - s_, v, out, a, b);
}

MatrixXd HamiltonianOperator::dense() const {
  if (s_ == 1.0) return dense_h(*target_);
  if (s_ == 0.0) return dense_h(*reference_);
  return s_ * dense_h(*target_) + (1.0 - s_) * dense_h(*reference_);
}

MatrixXd dense_h(const GoogleMatrix& google) {
  const auto n = static_cast<Eigen::Index>(google.size());
  MatrixXd m = MatrixXd::Identity(n, n) - dense_google(google);
  MatrixXd h(n, n);
  h.noalias() = m.transpose() * m;
  return 0.5 * (h + h.transpose());
}

HamiltonianOperator h_of(const GoogleMatrix& google) {
  return HamiltonianOperator(std::make_shared<const GoogleMatrix>(google),
                             std::make_shared<const GoogleMatrix>(
                                 complete_reference(google.size(), google.damping())),
                             1.0);
}

HamiltonianOperator H_of(const GoogleMatrix& target, const GoogleMatrix& reference, double s) {
  return H_of(std::make_shared<const GoogleMatrix>(target),
              std::make_shared<const GoogleMatrix>(reference), s);
}

HamiltonianOperator H_of(std::shared_ptr<const GoogleMatrix> target,
                         std::shared_ptr<const GoogleMatrix> reference, double s) {
  return HamiltonianOperator(std::move(target), std::move(reference), s);
}

SpectrumPair two_lowest(const HamiltonianOperator& op, SolverMode mode, double tol) {
  require(tol > 0.0, ErrorKind::invalid_parameter, "two_lowest: tol must be positive");
  require_pair(op.size());
  const SolverMode resolved = resolve(mode, op.size());
  if (resolved == SolverMode::dense) return dense_two_lowest(op.dense(), resolved);
  return iterative_two_lowest(op, tol);
}

GroundState ground_state(const HamiltonianOperator& op, SolverMode mode, double tol) {
  const std::size_t n = op.size();
  GroundState result;
  Eigen::VectorXd v;
  if (resolve(mode, n) == SolverMode::dense) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(op.dense());
    require(solver.info() == Eigen::Success, ErrorKind::convergence_failure,
            "dense symmetric eigensolver failed");
    result.energy = solver.eigenvalues()[0];
    v = solver.eigenvectors().col(0);
  } else {
    LanczosOptions options;
    options.wanted = std::min<std::size_t>(2, n);
    options.tol = tol;
    const LanczosResult r = lowest_eigenpairs(
        n, [&op](std::span<const double> x, std::span<double> out) { op.apply(x, out); }, options);
    result.energy = r.values[0];
    v = r.vectors.col(0);
  }
  v.normalize();
  if (v.sum() < 0.0) v = -v;
  result.vector.assign(v.data(), v.data() + v.size());
  return result;
}

double gap(const GoogleMatrix& target, const GoogleMatrix& reference, double s,
           const GapOptions& options) {
  require_pair(target.size());
  return two_lowest(H_of(target, reference, s), options.mode, options.tol).gap();
}

GapResult min_gap(const GoogleMatrix& google, const GapOptions& options) {
  require_pair(google.size());
  require(options.n_scan >= 2, ErrorKind::invalid_parameter, "min_gap: n_scan must be >= 2");
  require(options.s_tol > 0.0 && options.f_tol >= 0.0, ErrorKind::invalid_parameter,
          "min_gap: tolerances must be positive");

  const GapEvaluator evaluate(google, options.mode, options.tol);
  GapResult result;
  result.mode = evaluate.mode();

  std::map<double, double> seen;
  std::map<double, double> raw_lambda0;
  auto objective = [&](double s) {
    s = std::clamp(s, 0.0, 1.0);
    if (auto it = seen.find(s); it != seen.end()) return it->second;
    const SpectrumPair pair = evaluate(s);
    result.evaluations.push_back({s, pair.gap(), pair.lambda0, pair.lambda1});
    raw_lambda0[s] = pair.raw_lambda0;
    seen.emplace(s, pair.gap());
    return pair.gap();
  };

  const std::size_t last = options.n_scan - 1;
  std::vector<double> grid(options.n_scan);
  for (std::size_t i = 0; i <= last; ++i)
    grid[i] = i == last ? 1.0 : static_cast<double>(i) / static_cast<double>(last);
  std::vector<double> grid_values(grid.size());
  for (std::size_t i = 0; i <= last; ++i) grid_values[i] = objective(grid[i]);

  std::size_t best_index = 0;
  for (std::size_t i = 1; i <= last; ++i)
    if (grid_values[i] <= grid_values[best_index] + options.tie_tol) best_index = i;

  // Second simplex vertex: the lower of the two grid neighbours.
  std::size_t other_index;
  if (best_index == 0) other_index = 1;
  else if (best_index == last) other_index = last - 1;
  else other_index = grid_values[best_index - 1] < grid_values[best_index + 1] ? best_index - 1
                                                                               : best_index + 1;

  double best = grid[best_index];
  double worst = grid[other_index];
  double f_best = grid_values[best_index];
  double f_worst = grid_values[other_index];

  double f_previous = f_best;
  for (std::size_t iter = 0; iter < options.max_refine_iter; ++iter) {
    if (f_worst < f_best) {
      std::swap(best, worst);
      std::swap(f_best, f_worst);
    }
    if (std::abs(best - worst) < options.s_tol && f_previous - f_best < options.f_tol) {
      result.refinement_converged = true;
      result.refinement_iterations = iter;
      break;
    }
    result.refinement_iterations = iter + 1;
    f_previous = f_best;

    const double step = best - worst;
    const double reflected = std::clamp(best + step, 0.0, 1.0);
    if (reflected == best) {
      // Best vertex sits on the boundary: only an inside contraction moves.
      worst = std::clamp(best - 0.5 * step, 0.0, 1.0);
      f_worst = objective(worst);
      continue;
    }
    const double f_reflected = objective(reflected);
    if (f_reflected < f_best) {
      const double expanded = std::clamp(best + 2.0 * step, 0.0, 1.0);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        worst = expanded;
        f_worst = f_expanded;
      } else {
        worst = reflected;
        f_worst = f_reflected;
      }
    } else if (f_reflected < f_worst) {
      const double outside = std::clamp(best + 0.5 * step, 0.0, 1.0);
      const double f_outside = objective(outside);
      if (f_outside <= f_reflected) {
        worst = outside;
        f_worst = f_outside;
      } else {
        worst = std::clamp(best - 0.5 * step, 0.0, 1.0);
        f_worst = objective(worst);
      }
    } else {
      worst = std::clamp(best - 0.5 * step, 0.0, 1.0);
      f_worst = objective(worst);
    }
  }

  double minimum = result.evaluations.front().delta;
  for (const GapProbe& p : result.evaluations) minimum = std::min(minimum, p.delta);
  const GapProbe* chosen = nullptr;
  for (const GapProbe& p : result.evaluations)
    if (p.delta <= minimum + options.tie_tol && (!chosen || p.s > chosen->s)) chosen = &p;

  result.delta = minimum;
  result.s_star = chosen->s;
  result.lambda0 = chosen->lambda0;
  result.lambda1 = chosen->lambda1;
  result.raw_lambda0 = raw_lambda0.at(chosen->s);
  return result;
}

}  // namespace gaplab
