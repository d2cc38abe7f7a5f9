#include "minorforge/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "minorforge/error.hpp"

namespace minorforge {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) fail(line_no, "duplicate header");
      if (tok.size() != 3) fail(line_no, "header must be 'p <n> <m>'");
      const auto pn = to_int(tok[1]);
      const auto pm = to_int(tok[2]);
      if (!pn || !pm || *pn < 0 || *pm < 0) fail(line_no, "bad header counts");
      if (*pn > (1 << 20)) fail(line_no, "vertex count too large");
      if (*pm > *pn * (*pn - 1) / 2) fail(line_no, "edge count exceeds n(n-1)/2");
      n = *pn;
      m = *pm;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (tok[0] == "e") {
      if (n < 0) fail(line_no, "edge before header");
      if (tok.size() != 3) fail(line_no, "edge must be 'e <u> <v>'");
      const auto u = to_int(tok[1]);
      const auto v = to_int(tok[2]);
      if (!u || !v) fail(line_no, "non-integer endpoint");
      if (*u < 1 || *v < 1 || *u > n || *v > n) fail(line_no, "endpoint out of range");
      if (*u >= *v) fail(line_no, "endpoints must satisfy u < v");
      if (!seen.emplace(static_cast<int>(*u), static_cast<int>(*v)).second) fail(line_no, "duplicate edge");
      if (static_cast<long long>(edges.size()) == m) fail(line_no, "more edges than declared");
      edges.push_back({static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1)});
      continue;
    }
    fail(line_no, "unknown record '" + std::string(tok[0]) + "'");
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorCode::ParseError,
                "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_branch_map(std::ostream& out, const BranchDecomposition& d) {
  for (int i = 0; i < d.part_count(); ++i) {
    out << "part " << i + 1 << ':';
    for (Vertex v : d.parts[static_cast<std::size_t>(i)]) out << ' ' << v + 1;
    out << '\n';
  }
}

}  // namespace minorforge
