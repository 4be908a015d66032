#include <doctest.h>

#include <deque>

#include "test_support.hpp"
#include "ulab/graph.hpp"

using namespace ulab;

namespace {

ErrorKind parse_error(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ErrorKind::kMalformed;
}

int girth(const Graph& g) {
  int best = 1 << 30;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> q{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(y)] = x;
          q.push_back(y);
        } else if (parent[static_cast<std::size_t>(x)] != y) {
          best = std::min(best, dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("parse_graph reads edges in file order") {
  const Graph g = parse_graph("0 1\n1 2");
  CHECK(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{1, 2});
}

TEST_CASE("parse_graph honours comments and a declared vertex count") {
  const Graph g = parse_graph("# a path plus two isolated vertices\nn 5\n0 1  # first\n\n1 2\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(4) == 0);
}

TEST_CASE("parse_graph rejects non-simple or malformed input") {
  CHECK(parse_error("0 0") == ErrorKind::kLoop);
  CHECK(parse_error("0 1\n0 1") == ErrorKind::kDuplicateEdge);
  CHECK(parse_error("0 1\n1 0") == ErrorKind::kDuplicateEdge);
  CHECK(parse_error("0 x") == ErrorKind::kMalformed);
  CHECK(parse_error("0 1 2") == ErrorKind::kMalformed);
  CHECK(parse_error("-1 2") == ErrorKind::kMalformed);
  CHECK(parse_error("0 1\nn 3") == ErrorKind::kMalformed);
  CHECK(parse_error("n 2\n0 2") == ErrorKind::kVertexOutOfRange);
}

TEST_CASE("an empty file is the empty graph") {
  const Graph g = parse_graph("# nothing\n");
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("render then parse reproduces generated graphs") {
  const std::vector<std::string> descriptors = {
      "path:1",        "path:6",  "cycle:7", "star:4",           "complete:5", "complete_bipartite:2,3",
      "petersen",      "random_tree:40:3:9", "gnp:20:0.3:4", "gnp:12:0:1"};
  for (const auto& d : descriptors) {
    CAPTURE(d);
    const Graph g = generate(d);
    const Graph back = parse_graph(render_graph(g));
    CHECK(back.vertex_count() == g.vertex_count());
    REQUIRE(back.edge_count() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(back.edge(e) == g.edge(e));
  }
}

TEST_CASE("labeling files round trip and must name real edges") {
  const Graph g = generate("path:3");
  const EdgeLabeling l = parse_labeling("1 2 7\n0 1 3\n", g);
  CHECK(l.at(0) == 3);
  CHECK(l.at(1) == 7);
  CHECK(parse_labeling(render_labeling(g, l), g) == l);
  CHECK_THROWS_AS(parse_labeling("0 2 1\n", g), Error);
  CHECK_THROWS_AS(parse_labeling("0 1 0\n", g), Error);
  CHECK_THROWS_AS(parse_labeling("0 1 1\n1 0 2\n", g), Error);
}

TEST_CASE("generate builds the named instances") {
  SUBCASE("star:3") {
    const Graph g = generate("star:3");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(0) == 3);
  }
  SUBCASE("cycle:5") {
    const Graph g = generate("cycle:5");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.is_regular(2));
  }
  SUBCASE("petersen") {
    const Graph g = generate("petersen");
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    CHECK(g.is_regular(3));
    CHECK(girth(g) == 5);
  }
  SUBCASE("complete_bipartite:3,3") {
    const Graph g = generate("complete_bipartite:3,3");
    CHECK(g.edge_count() == 9);
    CHECK(g.is_regular(3));
  }
}

TEST_CASE("generate rejects nonsensical parameters") {
  for (const char* d : {"path:0", "cycle:2", "star:0", "gnp:5:1.5:1", "gnp:5:-0.1:1", "random_tree:5:1:0",
                        "complete:x", "wheel:5", "petersen:3", "complete_bipartite:3"}) {
    CAPTURE(d);
    CHECK_THROWS_AS(generate(d), Error);
  }
}

TEST_CASE("random generators are seeded and respect their constraints") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::string d = "random_tree:60:3:" + std::to_string(seed);
    const Graph t = generate(d);
    CHECK(t.is_tree());
    CHECK(t.max_degree() <= 3);
    CHECK(render_graph(t) == render_graph(generate(d)));
  }
  CHECK(render_graph(generate("gnp:30:0.2:5")) == render_graph(generate("gnp:30:0.2:5")));
  CHECK(render_graph(generate("gnp:30:0.2:5")) != render_graph(generate("gnp:30:0.2:6")));
  CHECK(generate("gnp:10:1:0").edge_count() == 45);
}

TEST_CASE("star:m has one centre of degree m and m leaves") {
  for (int m = 1; m <= 12; ++m) {
    const Graph g = generate("star:" + std::to_string(m));
    int centres = 0;
    int leaves = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == m) ++centres;
      if (g.degree(v) == 1) ++leaves;
    }
    if (m == 1) {
      CHECK(leaves == 2);
    } else {
      CHECK(centres == 1);
      CHECK(leaves == m);
    }
  }
}

TEST_CASE("bfs_levels") {
  CHECK(bfs_levels(generate("path:3"), 0) == std::vector<int>{0, 1, 2});
  CHECK(bfs_levels(generate("star:3"), 0) == std::vector<int>{0, 1, 1, 1});
  CHECK(bfs_levels(generate("cycle:4"), 0) == std::vector<int>{0, 1, 2, 1});
  CHECK(bfs_levels(parse_graph("n 3\n0 1"), 0) == std::vector<int>{0, 1, kUnreachable});
  CHECK_THROWS_AS(bfs_levels(generate("path:3"), 3), Error);
}

TEST_CASE("bfs depths differ by at most one across every edge") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 12)), 30);
    const Vertex root = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.vertex_count())));
    const auto depth = bfs_levels(g, root);
    for (const Edge& e : g.edges()) {
      const int a = depth[static_cast<std::size_t>(e.u)];
      const int b = depth[static_cast<std::size_t>(e.v)];
      CHECK((a == kUnreachable) == (b == kUnreachable));
      if (a != kUnreachable) CHECK(std::abs(a - b) <= 1);
    }
  }
}

TEST_CASE("structure predicates and derived graphs") {
  CHECK(generate("random_tree:20:4:1").is_tree());
  CHECK_FALSE(generate("cycle:4").is_tree());
  CHECK_FALSE(parse_graph("n 4\n0 1\n2 3").is_connected());
  const Graph c = generate("cycle:5");
  const Graph p = without_edge(c, 4);
  CHECK(p.edge_count() == 4);
  CHECK(p.is_tree());
  const std::vector<EdgeId> keep{0, 2};
  const Graph sub = edge_subgraph(c, keep);
  CHECK(sub.vertex_count() == 5);
  CHECK(sub.edge(1) == c.edge(2));
  CHECK(c.find_edge(4, 0) == 4);
  CHECK_FALSE(c.find_edge(0, 2).has_value());
}

TEST_CASE("orientation and labeling invariants") {
  const Graph g = generate("path:3");
  CHECK_THROWS_AS(Orientation(g, {0, 0}), Error);
  CHECK_THROWS_AS(Orientation(g, {1}), Error);
  const auto o = Orientation::from_mask(g, 0b10);
  CHECK(o.head(0) == 0);
  CHECK(o.head(1) == 2);
  EdgeLabeling l(2);
  CHECK_FALSE(l.is_total());
  CHECK_THROWS_AS(l.at(0), Error);
  CHECK_THROWS_AS(l.set(0, 0), Error);
  l.set(0, 4);
  l.set(1, 9);
  CHECK(l.is_total());
  CHECK(l.max_label() == 9);
}

TEST_CASE("the small catalog lists the regression graphs") {
  const auto small = catalog("small");
  CHECK(small.size() == 14);
  for (const auto& entry : small) CHECK_NOTHROW(generate(entry.descriptor));
  CHECK_THROWS_AS(catalog("huge"), Error);
}
