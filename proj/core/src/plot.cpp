#include "gaplab/plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>

namespace gaplab {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;
  bool log_y;

  double px(double n) const {
    return kLeft + (std::log(n) - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    const double v = log_y ? std::log10(y) : y;
    return kHeight - kBottom - (v - y_lo) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
  }
};

std::string describe(const FitResult& f) {
  switch (f.form) {
    case FitForm::semilog: return fmt::format("{:.3g} ln(n) {:+.3g}", f.a, f.b);
    case FitForm::powerlaw: return fmt::format("{:.3g} n^{:.3g}", f.a, f.b);
    case FitForm::polylog: return fmt::format("{:.3g} ln^{:.3g}(n)", f.a, f.b);
  }
  return "";
}

}  // namespace

void write_scaling_svg(std::ostream& out, std::span<const PlotSeries> series, PlotScale scale) {
  const bool log_y = scale == PlotScale::loglog;
  double n_lo = std::numeric_limits<double>::infinity();
  double n_hi = -n_lo;
  double y_lo = n_lo;
  double y_hi = -n_lo;
  for (const PlotSeries& s : series)
    for (const SizeSummary& p : s.summaries) {
      n_lo = std::min(n_lo, static_cast<double>(p.n));
      n_hi = std::max(n_hi, static_cast<double>(p.n));
      y_lo = std::min(y_lo, p.mean - p.std_error);
      y_hi = std::max(y_hi, p.mean + p.std_error);
    }
  if (!std::isfinite(n_lo)) {
    n_lo = 2.0;
    n_hi = 4.0;
    y_lo = 1.0;
    y_hi = 2.0;
  }
  if (n_hi <= n_lo) n_hi = n_lo * 2.0;
  if (log_y) {
    y_lo = std::log10(std::max(y_lo, 1e-12));
    y_hi = std::log10(std::max(y_hi, 1e-12));
  } else {
    y_lo = std::min(0.0, y_lo);
  }
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  const double pad = 0.05 * (y_hi - y_lo);
  const Frame frame{std::log(n_lo) - 0.05, std::log(n_hi) + 0.05, log_y ? y_lo - pad : y_lo,
                    y_hi + pad, log_y};

  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight, kWidth, kHeight);
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  out << fmt::format(
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
      "stroke=\"black\"/>\n",
      x0, y1, x1 - x0, y0 - y1);

  // x ticks at powers of two spanning the data
  for (double n = std::exp2(std::floor(std::log2(n_lo))); n <= n_hi * 1.0001; n *= 2.0) {
    if (n < n_lo * 0.9999) continue;
    const double x = frame.px(n);
    out << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                       x, y0, x, y0 + 5);
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:.0f}</text>\n", x,
                       y0 + 20, n);
  }
  // y ticks: decades on log scale, five even steps on linear scale
  if (log_y) {
    for (double d = std::floor(frame.y_lo); d <= std::ceil(frame.y_hi); d += 1.0) {
      if (d < frame.y_lo || d > frame.y_hi) continue;
      const double y = frame.py(std::pow(10.0, d));
      out << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                         x0 - 5, y, x0, y);
      out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">1e{:.0f}</text>\n",
                         x0 - 8, y + 4, d);
    }
  } else {
    for (int i = 0; i <= 5; ++i) {
      const double v = frame.y_lo + (frame.y_hi - frame.y_lo) * i / 5.0;
      const double y = frame.py(v);
      out << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                         x0 - 5, y, x0, y);
      out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n",
                         x0 - 8, y + 4, v);
    }
  }
  out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">n (log scale)</text>\n",
                     (x0 + x1) / 2, kHeight - 15);
  out << fmt::format(
      "<text x=\"20\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2f})\">"
      "mean inverse gap{}</text>\n",
      (y0 + y1) / 2, (y0 + y1) / 2, log_y ? " (log scale)" : "");

  double legend_y = kTop + 10;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const PlotSeries& s = series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    for (const FitResult& f : s.fits) {
      const bool drawn = log_y ? f.form != FitForm::semilog : f.form == FitForm::semilog;
      if (!drawn) continue;
      std::string path;
      constexpr int kSamples = 64;
      for (int k = 0; k <= kSamples; ++k) {
        const double n = std::exp(std::log(n_lo) + (std::log(n_hi) - std::log(n_lo)) * k / kSamples);
        const double y = f.evaluate(n);
        if (!std::isfinite(y) || (log_y && y <= 0.0)) continue;
        path += fmt::format("{}{:.2f},{:.2f}", path.empty() ? "" : " ", frame.px(n), frame.py(y));
      }
      out << fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\"{}/>\n", path, color,
                         f.form == FitForm::polylog ? " stroke-dasharray=\"6 4\"" : "");
      out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"{}\">{}: {}</text>\n", x1 + 10,
                         legend_y, color, to_string(f.form), describe(f));
      legend_y += 16;
    }
    for (const SizeSummary& p : s.summaries) {
      const double x = frame.px(static_cast<double>(p.n));
      const double lo = log_y ? std::max(p.mean - p.std_error, p.mean * 1e-3) : p.mean - p.std_error;
      out << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\"/>\n",
                         x, frame.py(lo), x, frame.py(p.mean + p.std_error), color);
      out << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3.5\" fill=\"{}\"/>\n", x,
                         frame.py(p.mean), color);
    }
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"{}\">{}</text>\n", x1 + 10, legend_y,
                       color, s.label);
    legend_y += 22;
  }
  out << "</svg>\n";
}

}  // namespace gaplab
