#include <doctest.h>

#include "test_support.hpp"
#include "ulab/verify.hpp"

using namespace ulab;

namespace {

Graph triangle() { return generate("cycle:3"); }

// Independent replay: orient per the witness and compare the endpoint sums.
bool replays(const Graph& g, const EdgeLabeling& l, const Witness& w) {
  const auto sums = in_sums(g, l, witness_orientation(g, w));
  const Edge ed = g.edge(w.edge);
  return sums[static_cast<std::size_t>(ed.u)] == sums[static_cast<std::size_t>(ed.v)];
}

}  // namespace

TEST_CASE("in_sums") {
  const Graph k2 = generate("path:2");
  CHECK(in_sums(k2, EdgeLabeling(std::vector<Label>{5}), Orientation(k2, {1})) == std::vector<Label>{0, 5});
  const Graph p3 = generate("path:3");
  CHECK(in_sums(p3, EdgeLabeling({1, 2}), Orientation(p3, {1, 2})) == std::vector<Label>{0, 1, 2});
  // edges 01, 12, 20; cyclic orientation
  const Graph t = triangle();
  REQUIRE(t.edge(2) == Edge{2, 0});
  CHECK(in_sums(t, EdgeLabeling({1, 2, 4}), Orientation(t, {1, 2, 0})) == std::vector<Label>{4, 1, 2});
  CHECK_THROWS_AS(in_sums(p3, EdgeLabeling(2), Orientation(p3, {1, 2})), Error);
}

TEST_CASE("brute force verdicts") {
  const Graph p3 = generate("path:3");
  CHECK(verify_brute(p3, EdgeLabeling({1, 2})).universal);

  const auto bad = verify_brute(p3, EdgeLabeling({1, 1}));
  CHECK_FALSE(bad.universal);
  REQUIRE(bad.witness);
  CHECK(replays(p3, EdgeLabeling({1, 1}), *bad.witness));

  const auto tri = verify_brute(triangle(), EdgeLabeling({1, 2, 3}));
  CHECK_FALSE(tri.universal);
  REQUIRE(tri.witness);
  CHECK(replays(triangle(), EdgeLabeling({1, 2, 3}), *tri.witness));
  CHECK(verify_brute(triangle(), EdgeLabeling({1, 2, 4})).universal);
}

TEST_CASE("the brute force witness comes from the lowest failing mask") {
  const Graph p3 = generate("path:3");
  const auto r = verify_brute(p3, EdgeLabeling({1, 1}));
  REQUIRE(r.witness);
  // mask 0: both edges into vertex 0 / 1 -> sums (1,1,0), conflict on edge 0.
  CHECK(r.witness->edge == 0);
}

TEST_CASE("local verdicts") {
  CHECK(verify_local(generate("path:3"), EdgeLabeling({1, 2})).universal);
  CHECK(verify_local(generate("star:3"), EdgeLabeling({2, 3, 4})).universal);
  CHECK_FALSE(verify_local(generate("star:3"), EdgeLabeling({2, 3, 5})).universal);
  CHECK(verify_local(generate("path:2"), EdgeLabeling(std::vector<Label>{7})).universal);
  CHECK(verify_local(parse_graph("n 3"), EdgeLabeling(0)).universal);
}

TEST_CASE("caps are enforced with structured errors") {
  const Graph big = generate("path:23");
  const EdgeLabeling l(std::vector<Label>(22, 1));
  try {
    verify_brute(big, l);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapExceeded);
  }
  CHECK_NOTHROW(verify_brute(big, l, 22));
  const Graph star = generate("star:26");
  std::vector<Label> labels(26);
  for (int i = 0; i < 26; ++i) labels[static_cast<std::size_t>(i)] = 25 + i;
  CHECK_THROWS_AS(verify_local(star, EdgeLabeling(labels)), Error);
  CHECK(verify_local(star, EdgeLabeling(labels), 26).universal);
}

TEST_CASE("local and brute agree with the definition on random instances") {
  Rng rng(20240501);
  int negatives = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 6));
    const Graph g = testing::random_graph(rng, n, 12);
    const EdgeLabeling l = testing::random_labeling(rng, g.edge_count(), 8);
    const bool truth = testing::universal_by_definition(g, l.raw());
    const auto brute = verify_brute(g, l);
    const auto local = verify_local(g, l);
    CAPTURE(render_graph(g));
    CHECK(brute.universal == truth);
    CHECK(local.universal == truth);
    CHECK(brute.universal == !brute.witness.has_value());
    CHECK(local.universal == !local.witness.has_value());
    if (!truth) {
      ++negatives;
      CHECK(replays(g, l, *brute.witness));
      CHECK(replays(g, l, *local.witness));
    }
  }
  CHECK(negatives > 100);
}

TEST_CASE("improper labelings are never universal") {
  Rng rng(7);
  int improper = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = testing::random_graph(rng, 3 + static_cast<int>(uniform_below(rng, 8)), 20);
    const EdgeLabeling l = testing::random_labeling(rng, g.edge_count(), 4);
    if (is_proper_edge_coloring(g, l)) continue;
    ++improper;
    CHECK_FALSE(verify_local(g, l).universal);
  }
  CHECK(improper > 50);
}

TEST_CASE("deleting an edge keeps a universal labeling universal") {
  Rng rng(99);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 3 + static_cast<int>(uniform_below(rng, 5)), 10);
    const EdgeLabeling l = testing::random_labeling(rng, g.edge_count(), 16);
    if (!verify_local(g, l).universal) continue;
    ++checked;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      std::vector<Label> rest;
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f != e) rest.push_back(l.at(f));
      }
      const Graph h = without_edge(g, e);
      CHECK(verify_local(h, EdgeLabeling(rest)).universal);
      CHECK(testing::universal_by_definition(h, rest));
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("a witness on a partial labeling holds for every completion") {
  const Graph p4 = generate("path:4");
  EdgeLabeling partial(3);
  partial.set(0, 1);
  partial.set(1, 1);
  REQUIRE(find_edge_witness(p4, partial, 0));
  for (Label x = 1; x <= 4; ++x) {
    EdgeLabeling full = partial;
    full.set(2, x);
    CHECK_FALSE(testing::universal_by_definition(p4, full.raw()));
  }
  EdgeLabeling ok(3);
  ok.set(0, 1);
  ok.set(1, 2);
  CHECK_FALSE(find_edge_witness(p4, ok, 0).has_value());
}

TEST_CASE("is_proper_edge_coloring") {
  CHECK(is_proper_edge_coloring(generate("path:3"), EdgeLabeling({1, 2})));
  CHECK_FALSE(is_proper_edge_coloring(generate("path:3"), EdgeLabeling({1, 1})));
  CHECK(is_proper_edge_coloring(triangle(), EdgeLabeling({1, 2, 4})));
}

TEST_CASE("is_sum_free") {
  const auto sf = [](std::vector<Label> s) { return is_sum_free(s); };
  CHECK(sf({1, 2, 4}));
  CHECK(sf({2, 3, 4}));
  CHECK_FALSE(sf({1, 2, 3}));
  CHECK_FALSE(sf({2, 3, 4, 5}));
  CHECK(sf({}));
  CHECK(sf({5}));
  CHECK_FALSE(sf({1, 2, 4, 7}));  // 1 + 2 + 4
}

TEST_CASE("is_sum_free matches subset enumeration") {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::set<Label> s;
    const int size = 1 + static_cast<int>(uniform_below(rng, 6));
    while (static_cast<int>(s.size()) < size) s.insert(1 + static_cast<Label>(uniform_below(rng, 20)));
    const std::vector<Label> v(s.begin(), s.end());
    bool expected = true;
    for (std::uint32_t mask = 0; mask < (1U << v.size()); ++mask) {
      if (std::popcount(mask) < 2) continue;
      Label sum = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask >> i & 1U) sum += v[i];
      }
      if (s.count(sum)) expected = false;
    }
    CHECK(is_sum_free(v) == expected);
  }
}

TEST_CASE("report json") {
  const Graph p3 = generate("path:3");
  const auto ok = to_json(p3, verify_local(p3, EdgeLabeling({1, 2})));
  CHECK(ok["universal"] == true);
  CHECK(ok["method"] == "local");
  CHECK(ok["witness"].is_null());
  const auto bad = to_json(p3, verify_brute(p3, EdgeLabeling({1, 1})));
  CHECK(bad["universal"] == false);
  CHECK(bad["method"] == "brute");
  CHECK(bad["witness"]["edge"].size() == 2);
  const std::string dir = bad["witness"]["direction"];
  CHECK((dir == "u" || dir == "v"));
}
