#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/netgen.hpp"
#include "gaplab/params.hpp"
#include "gaplab/spectral.hpp"

namespace gaplab {

struct ExponentTargets {
  double gamma_in = 3.0;
  double gamma_out = 3.0;
  double mean_degree = 2.0;
};

/// One ensemble sweep. Parsed from JSON:
///
///   {
///     "model": "copy",                        // pa | copy | alpha_pa | empty
///     "params":  { "m": 1, "p_x": 0.5, "p_y": 0.5 },
///     "targets": { "gamma_in": 3, "gamma_out": 3, "mean_degree": 2 },
///     "allow_unbalanced": false,
///     "sizes": [64, 128, 256, 512],
///     "instances_per_size": 100,
///     "master_seed": 20130705,
///     "alpha_g": 0.85,
///     "solver": { "mode": "auto", "tol": 1e-10, "n_scan": 21 },
///     "s_t": 200,
///     "output_dir": "runs/copy",
///     "workers": 0                            // 0: one per hardware thread
///   }
///
/// Exactly one of "params" and "targets" is given (neither for "empty").
struct ExperimentConfig {
  ModelKind model = ModelKind::copy;
  ModelParams params = CopyParams{};
  std::optional<ExponentTargets> targets;
  bool allow_unbalanced = false;
  std::vector<std::size_t> sizes{64, 128, 256, 512};
  std::size_t instances_per_size = 100;
  std::uint64_t master_seed = 20130705;
  double alpha_g = 0.85;
  GapOptions solver;
  std::int64_t s_t = 200;
  std::filesystem::path output_dir = "gaplab-out";
  std::size_t workers = 0;
};

/// Throws invalid-parameter (or the params_for_targets errors).
void validate(const ExperimentConfig& config);

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

std::size_t effective_workers(const ExperimentConfig& config);

/// Rough single-thread CPU estimate for the whole sweep with the dense
/// solver, used to flag full-scale schedules.
double estimate_cpu_seconds(const ExperimentConfig& config);

}  // namespace gaplab
