#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ulab/graph.hpp"

namespace ulab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename Int>
bool parse_uint(std::string_view token, Int& out) {
  if (token.empty() || token.front() == '-' || token.front() == '+') return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::kMalformed, "line " + std::to_string(line_no) + ": " + why);
}

// Calls fn(line_no, tokens) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) fn(line_no, split_ws(line));
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kMalformed, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<int> declared;
  bool seen_record = false;
  int max_vertex = -1;
  std::vector<Edge> edges;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
    if (tok.front() == "n") {
      if (seen_record) malformed(line_no, "vertex count must be the first record");
      int count = 0;
      if (tok.size() != 2 || !parse_uint(tok[1], count)) malformed(line_no, "expected `n <count>`");
      declared = count;
      seen_record = true;
      return;
    }
    seen_record = true;
    Vertex u = 0;
    Vertex v = 0;
    if (tok.size() != 2 || !parse_uint(tok[0], u) || !parse_uint(tok[1], v)) {
      malformed(line_no, "expected `u v`");
    }
    if (declared && (u >= *declared || v >= *declared)) {
      throw Error(ErrorKind::kVertexOutOfRange,
                  "line " + std::to_string(line_no) + ": endpoint exceeds declared count " +
                      std::to_string(*declared));
    }
    max_vertex = std::max({max_vertex, u, v});
    edges.push_back({u, v});
  });
  return Graph(declared.value_or(max_vertex + 1), std::move(edges));
}

std::string render_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

EdgeLabeling parse_labeling(std::string_view text, const Graph& g) {
  EdgeLabeling l(g.edge_count());
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
    Vertex u = 0;
    Vertex v = 0;
    Label x = 0;
    if (tok.size() != 3 || !parse_uint(tok[0], u) || !parse_uint(tok[1], v) ||
        !parse_uint(tok[2], x) || x < 1) {
      malformed(line_no, "expected `u v label` with a positive label");
    }
    const auto e = g.find_edge(u, v);
    if (!e) malformed(line_no, "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    if (l.has(*e)) malformed(line_no, "edge labeled twice");
    l.set(*e, x);
  });
  return l;
}

std::string render_labeling(const Graph& g, const EdgeLabeling& l) {
  std::string out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!l.has(e)) continue;
    out += std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) + " " +
           std::to_string(l.at(e)) + "\n";
  }
  return out;
}

EdgeLabeling read_labeling_file(const std::string& path, const Graph& g) {
  return parse_labeling(slurp(path), g);
}

}  // namespace ulab
