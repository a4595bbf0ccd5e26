#include "gaplab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "gaplab/error.hpp"
#include "csv_util.hpp"

namespace gaplab {
namespace {

using detail::parse_number;
using detail::read_csv_rows;

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

// Ordinary least squares z = slope x + intercept on centred sums.
Line least_squares(std::span<const double> x, std::span<const double> z) {
  const auto count = static_cast<double>(x.size());
  const double x_mean = std::accumulate(x.begin(), x.end(), 0.0) / count;
  const double z_mean = std::accumulate(z.begin(), z.end(), 0.0) / count;
  double sxx = 0.0;
  double sxz = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - x_mean) * (x[i] - x_mean);
    sxz += (x[i] - x_mean) * (z[i] - z_mean);
  }
  require(sxx > 0.0, ErrorKind::invalid_parameter,
          "least squares: all abscissae are equal (degenerate fit)");
  Line line;
  line.slope = sxz / sxx;
  line.intercept = z_mean - line.slope * x_mean;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = z[i] - (line.slope * x[i] + line.intercept);
    sum_sq += r * r;
  }
  line.rms = std::sqrt(sum_sq / count);
  return line;
}

void require_points(std::span<const ScalingPoint> points, const char* who) {
  require(points.size() >= 2, ErrorKind::invalid_parameter,
          fmt::format("{}: at least two points are required", who));
  for (const ScalingPoint& p : points)
    require(std::isfinite(p.n) && std::isfinite(p.y), ErrorKind::invalid_parameter,
            fmt::format("{}: non-finite point", who));
}

}  // namespace

std::string_view to_string(Direction direction) noexcept {
  switch (direction) {
    case Direction::in: return "in";
    case Direction::out: return "out";
    case Direction::total: return "total";
  }
  return "in";
}

Direction parse_direction(std::string_view text) {
  if (text == "in") return Direction::in;
  if (text == "out") return Direction::out;
  if (text == "total") return Direction::total;
  throw Error(ErrorKind::invalid_parameter, fmt::format("unknown degree direction '{}'", text));
}

void DegreeCounts::add(const SimpleDigraph& graph) {
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    std::size_t k = 0;
    switch (direction) {
      case Direction::in: k = graph.in_degree(v); break;
      case Direction::out: k = graph.out_degree(v); break;
      case Direction::total: k = graph.in_degree(v) + graph.out_degree(v); break;
    }
    ++counts[static_cast<std::int64_t>(k)];
  }
  total_observations += static_cast<std::int64_t>(graph.node_count());
}

void DegreeCounts::add(const MultiDigraph& graph) {
  std::vector<std::int64_t> in(graph.node_count(), 0);
  std::vector<std::int64_t> out(graph.node_count(), 0);
  for (const Edge& e : graph.edges()) {
    if (e.source == e.target) continue;
    ++out[e.source];
    ++in[e.target];
  }
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    switch (direction) {
      case Direction::in: ++counts[in[v]]; break;
      case Direction::out: ++counts[out[v]]; break;
      case Direction::total: ++counts[in[v] + out[v]]; break;
    }
  }
  total_observations += static_cast<std::int64_t>(graph.node_count());
}

double DegreeCounts::mean_degree() const {
  require(total_observations > 0, ErrorKind::empty_input, "DegreeCounts: no observations");
  double sum = 0.0;
  for (const auto& [k, c] : counts) sum += static_cast<double>(k) * static_cast<double>(c);
  return sum / static_cast<double>(total_observations);
}

DegreeCounts degree_counts(std::span<const SimpleDigraph> graphs, Direction direction) {
  require(!graphs.empty(), ErrorKind::empty_input, "degree_counts: no graphs");
  DegreeCounts counts;
  counts.direction = direction;
  for (const SimpleDigraph& g : graphs) counts.add(g);
  return counts;
}

BinnedDistribution adaptive_bin(const DegreeCounts& counts, std::int64_t s_t) {
  require(s_t >= 1, ErrorKind::invalid_parameter, "adaptive_bin: s_t must be >= 1");
  BinnedDistribution binned;
  binned.threshold = s_t;
  if (counts.total_observations <= 0) return binned;

  using Entry = std::pair<std::int64_t, std::int64_t>;
  std::vector<std::vector<Entry>> groups;
  std::vector<Entry> pending;
  std::int64_t pending_samples = 0;
  for (const auto& [k, c] : counts.counts) {
    if (c <= 0) continue;
    pending.emplace_back(k, c);
    pending_samples += c;
    if (pending_samples >= s_t) {
      groups.push_back(std::move(pending));
      pending.clear();
      pending_samples = 0;
    }
  }
  if (!pending.empty()) {
    if (groups.empty()) groups.push_back(std::move(pending));
    else groups.back().insert(groups.back().end(), pending.begin(), pending.end());
  }

  const auto total = static_cast<double>(counts.total_observations);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& group = groups[i];
    const std::int64_t lo = group.front().first;
    const std::int64_t hi = i + 1 < groups.size() ? groups[i + 1].front().first - 1 : group.back().first;
    DegreeBin bin;
    double weighted = 0.0;
    for (const auto& [k, c] : group) {
      bin.samples += c;
      weighted += static_cast<double>(k) * static_cast<double>(c);
    }
    bin.degree_span = hi - lo + 1;
    bin.mean_degree = weighted / static_cast<double>(bin.samples);
    bin.mean_probability =
        static_cast<double>(bin.samples) / (total * static_cast<double>(bin.degree_span));
    binned.bins.push_back(bin);
  }
  return binned;
}

std::string_view to_string(FitForm form) noexcept {
  switch (form) {
    case FitForm::semilog: return "semilog";
    case FitForm::powerlaw: return "powerlaw";
    case FitForm::polylog: return "polylog";
  }
  return "semilog";
}

FitForm parse_fit_form(std::string_view text) {
  if (text == "semilog") return FitForm::semilog;
  if (text == "powerlaw") return FitForm::powerlaw;
  if (text == "polylog") return FitForm::polylog;
  throw Error(ErrorKind::io, fmt::format("unknown fit form '{}'", text));
}

double FitResult::evaluate(double n) const {
  switch (form) {
    case FitForm::semilog: return a * std::log(n) + b;
    case FitForm::powerlaw: return a * std::pow(n, b);
    case FitForm::polylog: return a * std::pow(std::log(n), b);
  }
  return 0.0;
}

FitResult fit_semilog(std::span<const ScalingPoint> points) {
  require_points(points, "fit_semilog");
  std::vector<double> x;
  std::vector<double> z;
  for (const ScalingPoint& p : points) {
    require(p.n > 1.0, ErrorKind::undefined_domain, "fit_semilog: n must exceed 1");
    x.push_back(std::log(p.n));
    z.push_back(p.y);
  }
  const Line line = least_squares(x, z);
  return {FitForm::semilog, line.slope, line.intercept, line.rms, points.size()};
}

FitResult fit_powerlaw(std::span<const ScalingPoint> points) {
  require_points(points, "fit_powerlaw");
  std::vector<double> x;
  std::vector<double> z;
  for (const ScalingPoint& p : points) {
    require(p.n > 1.0 && p.y > 0.0, ErrorKind::undefined_domain,
            "fit_powerlaw: requires n > 1 and y > 0");
    x.push_back(std::log(p.n));
    z.push_back(std::log(p.y));
  }
  const Line line = least_squares(x, z);
  return {FitForm::powerlaw, std::exp(line.intercept), line.slope, line.rms, points.size()};
}

FitResult fit_polylog(std::span<const ScalingPoint> points) {
  require_points(points, "fit_polylog");
  std::vector<double> x;
  std::vector<double> z;
  for (const ScalingPoint& p : points) {
    require(p.n > std::exp(1.0) && p.y > 0.0, ErrorKind::undefined_domain,
            "fit_polylog: requires n > e and y > 0");
    x.push_back(std::log(std::log(p.n)));
    z.push_back(std::log(p.y));
  }
  const Line line = least_squares(x, z);
  return {FitForm::polylog, std::exp(line.intercept), line.slope, line.rms, points.size()};
}

FitResult fit(FitForm form, std::span<const ScalingPoint> points) {
  switch (form) {
    case FitForm::semilog: return fit_semilog(points);
    case FitForm::powerlaw: return fit_powerlaw(points);
    case FitForm::polylog: return fit_polylog(points);
  }
  return fit_semilog(points);
}

double default_tail_start(const BinnedDistribution& binned) {
  double weighted = 0.0;
  double samples = 0.0;
  for (const DegreeBin& bin : binned.bins) {
    weighted += bin.mean_degree * static_cast<double>(bin.samples);
    samples += static_cast<double>(bin.samples);
  }
  require(samples > 0.0, ErrorKind::empty_input, "default_tail_start: empty distribution");
  return 2.0 * weighted / samples;
}

double tail_exponent(const BinnedDistribution& binned, double k_min) {
  std::vector<double> x;
  std::vector<double> z;
  for (const DegreeBin& bin : binned.bins) {
    if (bin.mean_degree < k_min || bin.mean_degree <= 0.0 || bin.mean_probability <= 0.0) continue;
    x.push_back(std::log(bin.mean_degree));
    z.push_back(std::log(bin.mean_probability));
  }
  require(x.size() >= 3, ErrorKind::empty_input,
          fmt::format("tail_exponent: {} bins at degree >= {}, need 3", x.size(), k_min));
  return -least_squares(x, z).slope;
}

double tail_exponent(const BinnedDistribution& binned) {
  return tail_exponent(binned, default_tail_start(binned));
}

Histogram value_histogram(std::span<const double> values, double bin_width) {
  require(!values.empty(), ErrorKind::empty_input, "value_histogram: no values");
  require(std::isfinite(bin_width) && bin_width > 0.0, ErrorKind::invalid_parameter,
          "value_histogram: bin width must be positive");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  Histogram h;
  h.origin = *lo;
  h.bin_width = bin_width;
  const auto bins = static_cast<std::size_t>(std::floor((*hi - *lo) / bin_width)) + 1;
  h.counts.assign(bins, 0);
  for (double v : values) {
    auto index = static_cast<std::size_t>(std::floor((v - h.origin) / bin_width));
    ++h.counts[std::min(index, bins - 1)];
  }
  return h;
}

double freedman_diaconis_width(std::span<const double> values) {
  require(!values.empty(), ErrorKind::empty_input, "freedman_diaconis_width: no values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto i = static_cast<std::size_t>(std::floor(pos));
    const std::size_t j = std::min(i + 1, sorted.size() - 1);
    return sorted[i] + (pos - static_cast<double>(i)) * (sorted[j] - sorted[i]);
  };
  const auto m = static_cast<double>(sorted.size());
  const double width = 2.0 * (quantile(0.75) - quantile(0.25)) * std::cbrt(1.0 / m);
  if (width > 0.0) return width;
  const double range = sorted.back() - sorted.front();
  if (range > 0.0) return range / std::sqrt(m);
  return 1.0;
}

void write_binned_csv(std::ostream& out, const BinnedDistribution& binned) {
  out << "degree,probability,samples,span\n";
  for (const DegreeBin& bin : binned.bins)
    out << fmt::format("{:.17g},{:.17g},{},{}\n", bin.mean_degree, bin.mean_probability,
                       bin.samples, bin.degree_span);
}

BinnedDistribution read_binned_csv(std::istream& in) {
  BinnedDistribution binned;
  for (const auto& row : read_csv_rows(in, "degree,probability,samples,span")) {
    DegreeBin bin;
    bin.mean_degree = parse_number(row[0]);
    bin.mean_probability = parse_number(row[1]);
    bin.samples = static_cast<std::int64_t>(parse_number(row[2]));
    bin.degree_span = static_cast<std::int64_t>(parse_number(row[3]));
    binned.bins.push_back(bin);
  }
  return binned;
}

void write_fits_csv(std::ostream& out, std::span<const FitResult> fits) {
  out << "form,a,b,residual,points\n";
  for (const FitResult& f : fits)
    out << fmt::format("{},{:.17g},{:.17g},{:.17g},{}\n", to_string(f.form), f.a, f.b, f.residual,
                       f.points_used);
}

std::vector<FitResult> read_fits_csv(std::istream& in) {
  std::vector<FitResult> fits;
  for (const auto& row : read_csv_rows(in, "form,a,b,residual,points")) {
    FitResult f;
    f.form = parse_fit_form(row[0]);
    f.a = parse_number(row[1]);
    f.b = parse_number(row[2]);
    f.residual = parse_number(row[3]);
    f.points_used = static_cast<std::size_t>(parse_number(row[4]));
    fits.push_back(f);
  }
  return fits;
}

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
  out << "lower,upper,count\n";
  for (std::size_t i = 0; i < histogram.counts.size(); ++i)
    out << fmt::format("{:.17g},{:.17g},{}\n", histogram.lower_edge(i), histogram.lower_edge(i + 1),
                       histogram.counts[i]);
}

}  // namespace gaplab
