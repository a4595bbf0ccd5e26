#pragma once

#include <filesystem>
#include <iosfwd>

#include "gaplab/digraph.hpp"

namespace gaplab {

// Edge-list text format:
//   n <node_count>
//   <source> <target>
//   ...
// 0-indexed, one edge per line, edges in lexicographic order on write.

void write_edge_list(std::ostream& out, const SimpleDigraph& g);
void write_edge_list(const std::filesystem::path& path, const SimpleDigraph& g);

/// Parses the format above. Loops and repeated lines are discarded by the
/// usual simplification; malformed input throws Error(io).
SimpleDigraph read_edge_list(std::istream& in);
SimpleDigraph read_edge_list(const std::filesystem::path& path);

}  // namespace gaplab
