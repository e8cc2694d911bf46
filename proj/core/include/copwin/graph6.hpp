#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 record (no trailing newline). Throws Graph6Error on a
/// malformed header, bad length, out-of-range byte, nonzero padding or an
/// order above kMaxOrder.
Graph parse_graph6(std::string_view line);

std::string write_graph6(const Graph& g);

/// Reads every non-empty record of a stream; an optional ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace copwin
