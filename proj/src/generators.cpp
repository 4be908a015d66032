#include <charconv>
#include <string>
#include <vector>

#include "ulab/graph.hpp"
#include "ulab/random.hpp"

namespace ulab {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

[[noreturn]] void bad(std::string_view descriptor, const std::string& why) {
  throw Error(ErrorKind::kInvalidParameter,
              "generator `" + std::string(descriptor) + "`: " + why);
}

long long as_int(std::string_view descriptor, std::string_view token) {
  long long x = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc{} || ptr != token.data() + token.size()) bad(descriptor, "expected an integer");
  return x;
}

std::uint64_t as_seed(std::string_view descriptor, std::string_view token) {
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc{} || ptr != token.data() + token.size()) bad(descriptor, "expected an unsigned seed");
  return x;
}

double as_real(std::string_view descriptor, std::string_view token) {
  try {
    std::size_t used = 0;
    const std::string s(token);
    const double x = std::stod(s, &used);
    if (used != s.size()) bad(descriptor, "expected a number");
    return x;
  } catch (const std::logic_error&) {
    bad(descriptor, "expected a number");
  }
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({n - 1, 0});
  return Graph(n, std::move(edges));
}

Graph star(int m) {
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) edges.push_back({0, i});
  return Graph(m + 1, std::move(edges));
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, std::move(edges));
}

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
Graph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  }
  std::vector<Edge> edges;
  for (int a = 0; a < 10; ++a) {
    for (int b = a + 1; b < 10; ++b) {
      const auto [p, q] = subsets[static_cast<std::size_t>(a)];
      const auto [r, s] = subsets[static_cast<std::size_t>(b)];
      if (p != r && p != s && q != r && q != s) edges.push_back({a, b});
    }
  }
  return Graph(10, std::move(edges));
}

// Uniform attachment to an earlier vertex that still has spare degree.
Graph random_tree(int n, int max_degree, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> open{0};
  for (Vertex v = 1; v < n; ++v) {
    const auto pick = static_cast<std::size_t>(uniform_below(rng, open.size()));
    const Vertex parent = open[pick];
    edges.push_back({parent, v});
    if (++degree[static_cast<std::size_t>(parent)] == max_degree) {
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    if (++degree[static_cast<std::size_t>(v)] < max_degree) open.push_back(v);
  }
  return Graph(n, std::move(edges));
}

Graph gnp(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform_unit(rng) < p) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

Graph generate(std::string_view descriptor) {
  const auto parts = split(descriptor, ':');
  const std::string_view kind = parts.front();
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) bad(descriptor, "expected " + std::to_string(k) + " parameter(s)");
  };
  auto positive = [&](long long x, long long min) {
    if (x < min || x > 1'000'000) bad(descriptor, "size out of range");
    return static_cast<int>(x);
  };

  if (kind == "path") {
    arity(1);
    return path(positive(as_int(descriptor, parts[1]), 1));
  }
  if (kind == "cycle") {
    arity(1);
    return cycle(positive(as_int(descriptor, parts[1]), 3));
  }
  if (kind == "star") {
    arity(1);
    return star(positive(as_int(descriptor, parts[1]), 1));
  }
  if (kind == "complete") {
    arity(1);
    return complete(positive(as_int(descriptor, parts[1]), 1));
  }
  if (kind == "complete_bipartite") {
    arity(1);
    const auto sides = split(parts[1], ',');
    if (sides.size() != 2) bad(descriptor, "expected `a,b`");
    return complete_bipartite(positive(as_int(descriptor, sides[0]), 1),
                              positive(as_int(descriptor, sides[1]), 1));
  }
  if (kind == "petersen") {
    arity(0);
    return petersen();
  }
  if (kind == "random_tree") {
    arity(3);
    const int n = positive(as_int(descriptor, parts[1]), 1);
    const int max_degree = positive(as_int(descriptor, parts[2]), 1);
    if (n > 2 && max_degree < 2) bad(descriptor, "a tree on more than 2 vertices needs max degree >= 2");
    return random_tree(n, max_degree, as_seed(descriptor, parts[3]));
  }
  if (kind == "gnp") {
    arity(3);
    const int n = positive(as_int(descriptor, parts[1]), 1);
    const double p = as_real(descriptor, parts[2]);
    if (!(p >= 0.0 && p <= 1.0)) bad(descriptor, "p must lie in [0,1]");
    return gnp(n, p, as_seed(descriptor, parts[3]));
  }
  bad(descriptor, "unknown generator");
}

std::vector<CatalogEntry> catalog(std::string_view name) {
  if (name != "small") {
    throw Error(ErrorKind::kInvalidParameter, "unknown catalog `" + std::string(name) + "`");
  }
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& d) { out.push_back({d, d}); };
  for (int n = 3; n <= 6; ++n) add("path:" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) add("cycle:" + std::to_string(n));
  for (int m = 2; m <= 5; ++m) add("star:" + std::to_string(m));
  add("complete:4");
  return out;
}

}  // namespace ulab
