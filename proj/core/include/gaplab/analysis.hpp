#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "gaplab/digraph.hpp"

namespace gaplab {

std::string_view to_string(Direction direction) noexcept;
Direction parse_direction(std::string_view text);

/// Pooled degree tallies: degree -> number of (graph, vertex) observations.
struct DegreeCounts {
  Direction direction = Direction::in;
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t total_observations = 0;

  void add(const SimpleDigraph& graph);
  /// Degrees counting edge multiplicity; self-loops are skipped.
  void add(const MultiDigraph& graph);
  double mean_degree() const;
};

/// Throws empty-input for an empty collection.
DegreeCounts degree_counts(std::span<const SimpleDigraph> graphs, Direction direction);

struct DegreeBin {
  double mean_degree = 0.0;       // count-weighted
  double mean_probability = 0.0;  // samples / (total_observations * degree_span)
  std::int64_t samples = 0;
  std::int64_t degree_span = 0;   // integer degrees covered by the bin
};

struct BinnedDistribution {
  std::vector<DegreeBin> bins;
  std::int64_t threshold = 200;
};

inline constexpr std::int64_t kDefaultSampleThreshold = 200;

/// Ascending sweep over degrees: a degree with at least s_t samples is its
/// own bin, sparser degrees are pooled with their successors until the pool
/// reaches s_t. A short leftover tail joins the previous bin. Bins tile the
/// integer range [min degree, max degree] so the per-degree density times
/// span recovers the bin mass exactly.
BinnedDistribution adaptive_bin(const DegreeCounts& counts,
                                std::int64_t s_t = kDefaultSampleThreshold);

enum class FitForm { semilog, powerlaw, polylog };

std::string_view to_string(FitForm form) noexcept;
FitForm parse_fit_form(std::string_view text);

struct ScalingPoint {
  double n = 0.0;
  double y = 0.0;
};

/// semilog:  y = a ln n + b
/// powerlaw: y = a n^b
/// polylog:  y = a (ln n)^b
/// Coefficients come from unweighted least squares in the linearizing
/// coordinates; residual is the RMS misfit there.
struct FitResult {
  FitForm form = FitForm::semilog;
  double a = 0.0;
  double b = 0.0;
  double residual = 0.0;
  std::size_t points_used = 0;

  double evaluate(double n) const;
};

FitResult fit_semilog(std::span<const ScalingPoint> points);
FitResult fit_powerlaw(std::span<const ScalingPoint> points);
FitResult fit_polylog(std::span<const ScalingPoint> points);
FitResult fit(FitForm form, std::span<const ScalingPoint> points);

/// Default tail start: twice the mean degree of the binned sample.
double default_tail_start(const BinnedDistribution& binned);

/// Negative log-log slope of mean_probability against mean_degree over bins
/// with mean_degree >= k_min (bins with zero probability are skipped).
/// Throws empty-input with fewer than three qualifying bins.
double tail_exponent(const BinnedDistribution& binned, double k_min);
double tail_exponent(const BinnedDistribution& binned);

struct Histogram {
  double origin = 0.0;
  double bin_width = 1.0;
  std::vector<std::int64_t> counts;  // bin i covers [origin + i w, origin + (i+1) w)

  double lower_edge(std::size_t i) const { return origin + static_cast<double>(i) * bin_width; }
};

/// Fixed-width histogram over [min, max]; the maximum lands in the last bin.
Histogram value_histogram(std::span<const double> values, double bin_width);

/// 2 IQR m^(-1/3); falls back to range / sqrt(m), then to 1, for flat data.
double freedman_diaconis_width(std::span<const double> values);

// CSV with fixed headers; doubles are written with round-trip precision.
//   degree,probability,samples,span
//   form,a,b,residual,points
//   lower,upper,count
void write_binned_csv(std::ostream& out, const BinnedDistribution& binned);
BinnedDistribution read_binned_csv(std::istream& in);
void write_fits_csv(std::ostream& out, std::span<const FitResult> fits);
std::vector<FitResult> read_fits_csv(std::istream& in);
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

}  // namespace gaplab
