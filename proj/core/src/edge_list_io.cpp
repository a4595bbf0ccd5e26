#include "gaplab/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gaplab/error.hpp"

namespace gaplab {

void write_edge_list(std::ostream& out, const SimpleDigraph& g) {
  out << "n " << g.node_count() << '\n';
  for (const Edge& e : g.edges()) out << e.source << ' ' << e.target << '\n';
}

void write_edge_list(const std::filesystem::path& path, const SimpleDigraph& g) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::io, "cannot open " + path.string() + " for writing");
  write_edge_list(out, g);
  require(static_cast<bool>(out), ErrorKind::io, "write failed: " + path.string());
}

SimpleDigraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::io, "edge list line " + std::to_string(line_no) + ": " + why);
  };

  std::size_t node_count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream header(line);
    std::string tag;
    if (!(header >> tag >> node_count) || tag != "n") fail("expected header 'n <node_count>'");
    break;
  }
  if (node_count == 0) fail("missing or zero node count");

  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    long long source = -1;
    long long target = -1;
    std::string trailing;
    if (!(row >> source >> target) || (row >> trailing)) fail("expected '<source> <target>'");
    if (source < 0 || target < 0 || static_cast<std::size_t>(source) >= node_count ||
        static_cast<std::size_t>(target) >= node_count)
      fail("endpoint out of range");
    edges.push_back({static_cast<NodeId>(source), static_cast<NodeId>(target)});
  }
  return SimpleDigraph::from_edges(node_count, edges);
}

SimpleDigraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open " + path.string());
  return read_edge_list(in);
}

}  // namespace gaplab
