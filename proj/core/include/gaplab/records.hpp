#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaplab/analysis.hpp"

namespace gaplab {

/// Outcome of one ensemble member. Error rows keep their ids and carry the
/// failure class in `status` instead of "ok".
struct RunRecord {
  std::string model;
  std::string params;
  std::size_t n = 0;
  std::size_t instance_id = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";
  double delta = 0.0;
  double inverse_delta = 0.0;
  double s_star = 0.0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  std::string solver;
  std::string message;              // error rows only
  std::optional<double> wall_time;  // seconds; never in the sorted record file

  bool ok() const noexcept { return status == "ok"; }
};

/// One JSON object per line with the fixed key order
///   model, params, n, instance, seed, status, delta, inverse_delta, s_star,
///   lambda0, lambda1, solver[, error][, wall_time]
std::string to_json_line(const RunRecord& record, bool include_wall_time = false);
RunRecord parse_json_line(std::string_view line);

/// Reads a record file. A truncated final line (interrupted append) is
/// skipped; malformed interior lines throw Error(io).
std::vector<RunRecord> read_records(std::istream& in);
std::vector<RunRecord> read_records(const std::filesystem::path& path);

void sort_records(std::vector<RunRecord>& records);

struct SizeSummary {
  std::size_t n = 0;
  std::size_t count = 0;   // ok records
  std::size_t errors = 0;  // error rows at this size
  double mean = 0.0;       // of inverse_delta
  double std_dev = 0.0;    // sample standard deviation, 0 for one record
  double std_error = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::optional<Histogram> histogram;  // largest size only
};

/// Per-size statistics of inverse_delta, ascending in n. Throws empty-input
/// when there are no records or some size has only error rows.
std::vector<SizeSummary> summarize(std::span<const RunRecord> records);

std::vector<ScalingPoint> scaling_points(std::span<const SizeSummary> summaries);

/// n,mean,std,count,stderr,min,max,errors
void write_summary_csv(std::ostream& out, std::span<const SizeSummary> summaries);
std::vector<SizeSummary> read_summary_csv(std::istream& in);

}  // namespace gaplab
