#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gaplab/analysis.hpp"
#include "gaplab/config.hpp"
#include "gaplab/records.hpp"

namespace gaplab {

/// Files written under ExperimentConfig::output_dir.
inline constexpr const char* kRecordsFile = "records.jsonl";
inline constexpr const char* kPartialRecordsFile = "records.partial.jsonl";
inline constexpr const char* kTimingsFile = "timings.csv";

/// generate -> google_matrix -> min_gap for one ensemble member. Library
/// errors become error rows; nothing escapes.
RunRecord run_instance(const ExperimentConfig& config, std::size_t n, std::size_t instance_id);

struct ExperimentOutcome {
  std::vector<RunRecord> records;  // sorted by (n, instance_id)
  std::size_t computed = 0;
  std::size_t resumed = 0;
  std::filesystem::path records_path;
};

using ProgressCallback = std::function<void(const RunRecord&, std::size_t done, std::size_t total)>;

/// Runs every (n, instance_id) of the config on a bounded worker pool.
/// Completed records are appended to records.partial.jsonl as they arrive;
/// at the end records.jsonl is rewritten sorted by (n, instance_id) and the
/// partial file removed. Pairs already present in either file are skipped,
/// which makes an interrupted sweep resumable. The sorted file is identical
/// for any worker count. Throws Error(io) on file failures and
/// invalid-parameter when existing records belong to another configuration.
ExperimentOutcome run_experiment(const ExperimentConfig& config,
                                 const ProgressCallback& progress = {});

/// Semilog, power-law and polylog fits of per-size mean inverse gaps.
std::vector<FitResult> fit_all(std::span<const SizeSummary> summaries);

/// Writes summary.csv, fits.csv, histogram.csv (when a histogram is present)
/// and the semilog / log-log SVG plots into dir. Output bytes depend only on
/// the inputs; label names the series in the plots.
void emit_outputs(const std::filesystem::path& dir, std::span<const SizeSummary> summaries,
                  std::span<const FitResult> fits, const std::string& label = "ensemble");

}  // namespace gaplab
