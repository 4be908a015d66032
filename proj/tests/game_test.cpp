#include <doctest.h>

#include "test_support.hpp"
#include "ulab/construct.hpp"
#include "ulab/game.hpp"
#include "ulab/verify.hpp"

using namespace ulab;

namespace {

// Plain minimax without memo or pruning tricks.
bool first_wins_oracle(const Graph& g, int k, std::vector<Label>& label, std::vector<Vertex>& head) {
  bool done = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (label[static_cast<std::size_t>(e)] != 0) continue;
    done = false;
    for (Label x = 1; x <= k; ++x) {
      label[static_cast<std::size_t>(e)] = x;
      bool all = true;
      for (Vertex h : {g.edge(e).u, g.edge(e).v}) {
        head[static_cast<std::size_t>(e)] = h;
        if (!first_wins_oracle(g, k, label, head)) {
          all = false;
          break;
        }
      }
      label[static_cast<std::size_t>(e)] = 0;
      head[static_cast<std::size_t>(e)] = -1;
      if (all) return true;
    }
  }
  if (!done) return false;
  std::vector<Label> sums(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    sums[static_cast<std::size_t>(head[static_cast<std::size_t>(e)])] += label[static_cast<std::size_t>(e)];
  }
  for (const Edge& ed : g.edges()) {
    if (sums[static_cast<std::size_t>(ed.u)] == sums[static_cast<std::size_t>(ed.v)]) return false;
  }
  return true;
}

bool first_wins_oracle(const Graph& g, int k) {
  std::vector<Label> label(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<Vertex> head(static_cast<std::size_t>(g.edge_count()), -1);
  return first_wins_oracle(g, k, label, head);
}

// Scripted second player for engine tests.
class Scripted : public SecondPlayer {
 public:
  explicit Scripted(std::vector<bool> into_v) : into_v_(std::move(into_v)) {}
  Vertex move(const GameState& s) override {
    const Edge ed = s.graph().edge(*s.pending());
    return into_v_[i_++ % into_v_.size()] ? ed.v : ed.u;
  }

 private:
  std::vector<bool> into_v_;
  std::size_t i_ = 0;
};

class Cheater : public FirstPlayer {
 public:
  LabelMove move(const GameState&) override { return {0, 99}; }
};

}  // namespace

TEST_CASE("game state bookkeeping") {
  const Graph p3 = generate("path:3");
  GameState s(p3, 2);
  CHECK_FALSE(s.pending());
  CHECK_THROWS_AS(s.orient(1), Error);
  s.label_edge(0, 2);
  CHECK(s.pending() == 0);
  CHECK_THROWS_AS(s.label_edge(1, 1), Error);
  CHECK_THROWS_AS(s.orient(2), Error);
  s.orient(1);
  CHECK(s.sums()[1] == 2);
  CHECK(s.head(0) == 1);
  CHECK_FALSE(s.head(1));
  CHECK_THROWS_AS(s.label_edge(0, 1), Error);
  CHECK_THROWS_AS(s.label_edge(1, 3), Error);
  CHECK_THROWS_AS(s.label_edge(1, 0), Error);
  s.label_edge(1, 1);
  s.orient(2);
  CHECK(s.finished());
  CHECK(s.history().size() == 2);
  CHECK(s.sums_proper());
  CHECK_THROWS_AS(GameState(p3, 0), Error);
}

TEST_CASE("play examples") {
  for (auto sp : {SecondStrategy::kExhaustive, SecondStrategy::kRandom}) {
    const auto out = play(generate("path:3"), 2, FirstStrategy::kTwoLabel, sp, 5);
    CHECK(out.winner == Winner::kFirst);
  }
  for (auto fp : {FirstStrategy::kTwoLabel, FirstStrategy::kGreedy}) {
    const auto out = play(generate("cycle:3"), 2, fp, SecondStrategy::kOddCycle);
    CHECK(out.winner == Winner::kSecond);
  }
  const auto star = play(generate("star:3"), 6, FirstStrategy::kGreedy, SecondStrategy::kExhaustive);
  CHECK(star.winner == Winner::kFirst);
  CHECK_FALSE(star.forfeit);
}

TEST_CASE("outcome judging agrees with in_sums") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 3 + static_cast<int>(uniform_below(rng, 5)), 9);
    if (g.edge_count() == 0) continue;
    const int k = 2 * std::max(1, g.max_degree());
    const auto out = play(g, k, FirstStrategy::kGreedy, SecondStrategy::kRandom, static_cast<std::uint64_t>(trial));
    if (out.forfeit) continue;
    REQUIRE(out.transcript.size() == static_cast<std::size_t>(g.edge_count()));
    EdgeLabeling l(g.edge_count());
    std::vector<Vertex> heads(static_cast<std::size_t>(g.edge_count()));
    for (const Move& mv : out.transcript) {
      l.set(mv.edge, mv.label);
      heads[static_cast<std::size_t>(mv.edge)] = mv.head;
    }
    const auto sums = in_sums(g, l, Orientation(g, heads));
    CHECK(sums == out.final_sums);
    bool proper = true;
    for (const Edge& ed : g.edges()) proper = proper && sums[static_cast<std::size_t>(ed.u)] != sums[static_cast<std::size_t>(ed.v)];
    CHECK((out.winner == Winner::kFirst) == proper);
  }
}

TEST_CASE("illegal moves forfeit") {
  const Graph p3 = generate("path:3");
  Cheater cheat;
  Scripted sp({true});
  const auto out = play(p3, 2, cheat, sp);
  CHECK(out.winner == Winner::kSecond);
  CHECK(out.forfeit);
  CHECK(out.transcript.empty());
}

TEST_CASE("two_label follows the alternating pattern") {
  const Graph p4 = generate("path:4");
  for (std::vector<bool> script : {std::vector<bool>{true}, {false}, {true, false}}) {
    Scripted sp(script);
    auto fp = make_first_player(FirstStrategy::kTwoLabel, p4, 2);
    const auto out = play(p4, 2, *fp, sp);
    std::vector<Label> labels(3);
    for (const Move& mv : out.transcript) labels[static_cast<std::size_t>(mv.edge)] = mv.label;
    CHECK(labels == std::vector<Label>{1, 2, 1});
    CHECK(out.winner == Winner::kFirst);
  }
  CHECK_THROWS_AS(make_first_player(FirstStrategy::kTwoLabel, generate("star:3"), 2), Error);
}

TEST_CASE("greedy forbidden set on an untouched star") {
  const Graph s = generate("star:3");
  GameState st(s, 6);
  CHECK(forbidden_labels(st, 0).empty());
  const auto mv = fp_move(FirstStrategy::kGreedy, st);
  CHECK(mv.edge == 0);
  CHECK(mv.label == 1);
}

TEST_CASE("greedy forbidden set after some rounds") {
  const Graph p4 = generate("path:4");
  GameState st(p4, 4);
  st.label_edge(0, 3);
  st.orient(1);  // S = (0,3,0,0)
  // edge {1,2}: head 1 needs S(1)+x != S(0)=0 and != S(2); head 2 needs S(2)+x not in {S(1), S(3)} = {3, 0}
  CHECK(forbidden_labels(st, 1) == std::vector<Label>{3});
  CHECK(fp_move(FirstStrategy::kGreedy, st).label == 1);
}

TEST_CASE("greedy raises when the palette is covered") {
  const Graph p4 = generate("path:4");
  GameState st(p4, 1);
  st.label_edge(0, 1);
  st.orient(1);
  CHECK_THROWS_AS(fp_move(FirstStrategy::kGreedy, st), Error);
}

TEST_CASE("odd_cycle orients every cycle edge around the cycle") {
  const Graph c3 = generate("cycle:3");
  auto fp = make_first_player(FirstStrategy::kTwoLabel, c3, 2);
  auto sp = make_second_player(SecondStrategy::kOddCycle, c3, 2);
  const auto out = play(c3, 2, *fp, *sp);
  REQUIRE(out.transcript.size() == 3);
  std::vector<int> indeg(3, 0);
  for (const Move& mv : out.transcript) ++indeg[static_cast<std::size_t>(mv.head)];
  CHECK(indeg == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(make_second_player(SecondStrategy::kOddCycle, generate("cycle:4"), 2), Error);
}

TEST_CASE("odd_cycle points pendant edges away from the cycle") {
  const Graph g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4");
  GameState st(g, 3);
  st.label_edge(4, 1);
  CHECK(sp_move(SecondStrategy::kOddCycle, st) == 4);
  st.orient(4);
  st.label_edge(3, 1);
  CHECK(sp_move(SecondStrategy::kOddCycle, st) == 3);
}

TEST_CASE("high_degree case analysis") {
  // v = 0 with v1, v2, v3 = 1, 2, 3
  const Graph s = generate("star:3");
  auto sp = make_second_player(SecondStrategy::kHighDegree, s, 2);
  GameState st(s, 2);
  st.label_edge(0, 1);
  CHECK(sp->move(st) == 1);  // v -> v1
  st.orient(1);
  st.label_edge(1, 1);
  CHECK(sp->move(st) == 0);  // v2 -> v
  st.orient(0);
  st.label_edge(2, 2);
  CHECK(sp->move(st) == 3);  // v -> v3
  CHECK_THROWS_AS(make_second_player(SecondStrategy::kHighDegree, generate("cycle:5"), 2), Error);
}

TEST_CASE("high_degree beats two labels on bipartite graphs with a vertex of degree three") {
  for (const char* d : {"star:3", "complete_bipartite:2,3", "complete_bipartite:3,3"}) {
    CAPTURE(d);
    const Graph g = generate(d);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto out = play(g, 2, FirstStrategy::kGreedy, SecondStrategy::kHighDegree, seed);
      CHECK(out.winner == Winner::kSecond);
    }
  }
}

TEST_CASE("exhaustive picks an optimal direction") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 3 + static_cast<int>(uniform_below(rng, 3)), 5);
    if (g.edge_count() < 2) continue;
    const int k = 2 + static_cast<int>(uniform_below(rng, 2));
    GameState st(g, k);
    const EdgeId e = static_cast<EdgeId>(uniform_below(rng, static_cast<std::uint64_t>(g.edge_count())));
    st.label_edge(e, 1 + static_cast<Label>(uniform_below(rng, static_cast<std::uint64_t>(k))));
    GameSolver solver(g, k);
    const auto via_v = solver.solve_after(st, g.edge(e).v);
    const auto via_u = solver.solve_after(st, g.edge(e).u);
    REQUIRE(via_v);
    REQUIRE(via_u);
    const Vertex chosen = sp_move(SecondStrategy::kExhaustive, st);
    const auto value = chosen == g.edge(e).v ? *via_v : *via_u;
    if (*via_v == Winner::kSecond || *via_u == Winner::kSecond) CHECK(value == Winner::kSecond);
  }
}

TEST_CASE("solve_game examples") {
  CHECK(solve_game(generate("cycle:3"), 2) == Winner::kSecond);
  CHECK(solve_game(generate("cycle:4"), 2) == Winner::kFirst);
  CHECK(solve_game(generate("path:2"), 1) == Winner::kFirst);
  CHECK_FALSE(solve_game(generate("cycle:5"), 3, 10).has_value());
}

TEST_CASE("solver agrees with plain minimax") {
  Rng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 4)), 5);
    if (g.edge_count() == 0) continue;
    const int k = 1 + static_cast<int>(uniform_below(rng, 3));
    CAPTURE(render_graph(g));
    CAPTURE(k);
    const auto w = solve_game(g, k);
    REQUIRE(w);
    CHECK((*w == Winner::kFirst) == first_wins_oracle(g, k));
    ++checked;
  }
}

TEST_CASE("game number examples") {
  CHECK(game_number(generate("path:3"), 6).value == 2);
  const auto c3 = game_number(generate("cycle:3"), 6);
  REQUIRE(c3.value);
  CHECK(*c3.value >= 3);
  CHECK(*c3.value <= 4);
  CHECK(*c3.value == (first_wins_oracle(generate("cycle:3"), 3) ? 3 : 4));
  const auto s3 = game_number(generate("star:3"), 6);
  REQUIRE(s3.value);
  CHECK(*s3.value >= 3);
  CHECK(*s3.value <= 4);
  const auto capped = game_number(generate("cycle:3"), 2);
  CHECK_FALSE(capped.value);
  CHECK(capped.lower == 3);
}

TEST_CASE("palette monotonicity and the universal number bound") {
  for (const auto& entry : catalog("small")) {
    const Graph g = generate(entry.descriptor);
    if (g.edge_count() > 6) continue;
    CAPTURE(entry.descriptor);
    const auto gn = game_number(g, 8);
    REQUIRE(gn.value);
    for (int k = *gn.value; k <= *gn.value + 2; ++k) CHECK(solve_game(g, k) == Winner::kFirst);
    const auto mu = min_universal_number(g);
    if (mu.exact) CHECK(*gn.value <= *mu.exact);
  }
}

TEST_CASE("greedy with twice the max degree beats every adversary") {
  Rng rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(rng, 3 + static_cast<int>(uniform_below(rng, 4)), 7);
    if (g.edge_count() == 0) continue;
    CAPTURE(render_graph(g));
    CHECK(beats_every_adversary(g, 2 * g.max_degree(), FirstStrategy::kGreedy));
  }
}

TEST_CASE("tree strategy with one extra label beats every adversary") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& t : testing::all_trees(n)) {
      CAPTURE(render_graph(t));
      CHECK(beats_every_adversary(t, t.max_degree() + 1, FirstStrategy::kTree));
    }
  }
  CHECK_THROWS_AS(make_first_player(FirstStrategy::kTree, generate("cycle:4"), 3), Error);
}

TEST_CASE("two_label against the exhaustive adversary") {
  for (int n = 3; n <= 7; ++n) {
    const auto out = play(generate("cycle:" + std::to_string(n)), 2, FirstStrategy::kTwoLabel,
                          SecondStrategy::kExhaustive);
    CHECK((out.winner == Winner::kFirst) == (n % 2 == 0));
  }
  for (int n = 2; n <= 6; ++n) {
    CHECK(play(generate("path:" + std::to_string(n)), 2, FirstStrategy::kTwoLabel, SecondStrategy::kExhaustive)
              .winner == Winner::kFirst);
  }
}

TEST_CASE("strategy names round trip") {
  for (auto s : {FirstStrategy::kTwoLabel, FirstStrategy::kGreedy, FirstStrategy::kTree}) {
    CHECK(parse_first_strategy(to_string(s)) == s);
  }
  for (auto s : {SecondStrategy::kOddCycle, SecondStrategy::kHighDegree, SecondStrategy::kExhaustive,
                 SecondStrategy::kRandom}) {
    CHECK(parse_second_strategy(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_first_strategy("nope"), Error);
}

TEST_CASE("transcript json") {
  const Graph p3 = generate("path:3");
  const auto out = play(p3, 2, FirstStrategy::kTwoLabel, SecondStrategy::kRandom, 3);
  const auto j = transcript_json(p3, out);
  CHECK(j["winner"] == "first");
  REQUIRE(j["transcript"].size() == 2);
  CHECK(j["transcript"][0]["round"] == 1);
  const std::string dir = j["transcript"][0]["direction"];
  CHECK((dir == "uv" || dir == "vu"));
  CHECK(j["final_sums"].size() == 3);
}
