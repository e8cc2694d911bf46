#include "copwin/graph6.hpp"

#include <fstream>
#include <istream>

namespace copwin {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int bit_count(int n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) throw Graph6Error("empty graph6 record");
  for (char c : line) {
    if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of range in '" + std::string(line) + "'");
  }
  int n = 0;
  std::size_t pos = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    // 126 introduces an 18-bit order; anything that large exceeds capacity.
    if (line.size() < 4 || line[1] == 126) throw Graph6Error("graph6 order beyond capacity");
    n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
    pos = 4;
  }
  if (n > kMaxOrder) {
    throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds capacity " + std::to_string(kMaxOrder));
  }
  const int bits = bit_count(n);
  const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != groups) {
    throw Graph6Error("graph6 record has " + std::to_string(line.size() - pos) + " data bytes, expected " +
                      std::to_string(groups));
  }
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < static_cast<int>(groups) * 6; ++k) {
    int byte = line[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw Graph6Error("graph6 padding bits are not zero");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++k == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        k = 0;
      }
    }
  }
  if (k > 0) out.push_back(static_cast<char>((acc << (6 - k)) + 63));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line == kHeader) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Graph6Error("cannot open " + path);
  return read_graph6_stream(in);
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw Graph6Error("cannot write " + path);
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
}

}  // namespace copwin
