#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gaplab/analysis.hpp"
#include "gaplab/records.hpp"

namespace gaplab {

enum class PlotScale { semilog, loglog };

struct PlotSeries {
  std::string label;
  std::vector<SizeSummary> summaries;
  std::vector<FitResult> fits;
};

/// Standalone SVG of mean inverse gap against n with standard-error bars
/// and the fitted curves. The semilog plot draws semilog fits, the log-log
/// plot draws power-law and polylog fits. Byte-stable for identical input.
void write_scaling_svg(std::ostream& out, std::span<const PlotSeries> series, PlotScale scale);

}  // namespace gaplab
