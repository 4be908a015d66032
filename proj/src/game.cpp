#include "ulab/game.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "ulab/random.hpp"

namespace ulab {

GameState::GameState(const Graph& g, int k)
    : graph_(&g),
      k_(k),
      labeling_(g.edge_count()),
      heads_(static_cast<std::size_t>(g.edge_count()), -1),
      sums_(static_cast<std::size_t>(g.vertex_count()), 0) {
  if (k < 1) throw Error(ErrorKind::kInvalidParameter, "palette size must be at least 1");
}

std::optional<Vertex> GameState::head(EdgeId e) const {
  const Vertex h = heads_.at(static_cast<std::size_t>(e));
  if (h < 0) return std::nullopt;
  return h;
}

bool GameState::finished() const noexcept {
  return !pending_ && static_cast<int>(history_.size()) == graph_->edge_count();
}

void GameState::label_edge(EdgeId e, Label label) {
  if (pending_) throw Error(ErrorKind::kIllegalMove, "an edge is still waiting for its direction");
  if (e < 0 || e >= graph_->edge_count()) {
    throw Error(ErrorKind::kIllegalMove, "edge " + std::to_string(e) + " does not exist");
  }
  if (labeling_.has(e)) throw Error(ErrorKind::kIllegalMove, "edge " + std::to_string(e) + " is already labeled");
  if (label < 1 || label > k_) {
    throw Error(ErrorKind::kIllegalMove, "label " + std::to_string(label) + " outside 1.." + std::to_string(k_));
  }
  labeling_.set(e, label);
  pending_ = e;
}

void GameState::orient(Vertex head) {
  if (!pending_) throw Error(ErrorKind::kIllegalMove, "no edge is waiting for a direction");
  const EdgeId e = *pending_;
  const Edge& ed = graph_->edge(e);
  if (head != ed.u && head != ed.v) {
    throw Error(ErrorKind::kIllegalMove, "vertex " + std::to_string(head) + " is not an endpoint of the edge");
  }
  heads_[static_cast<std::size_t>(e)] = head;
  sums_[static_cast<std::size_t>(head)] += labeling_.at(e);
  history_.push_back({e, labeling_.at(e), head});
  pending_.reset();
}

bool GameState::sums_proper() const {
  return std::none_of(graph_->edges().begin(), graph_->edges().end(), [&](const Edge& ed) {
    return sums_[static_cast<std::size_t>(ed.u)] == sums_[static_cast<std::size_t>(ed.v)];
  });
}

std::string_view to_string(FirstStrategy s) {
  switch (s) {
    case FirstStrategy::kTwoLabel: return "two_label";
    case FirstStrategy::kGreedy: return "greedy";
    case FirstStrategy::kTree: return "tree";
  }
  return "?";
}

std::string_view to_string(SecondStrategy s) {
  switch (s) {
    case SecondStrategy::kOddCycle: return "odd_cycle";
    case SecondStrategy::kHighDegree: return "high_degree";
    case SecondStrategy::kExhaustive: return "exhaustive";
    case SecondStrategy::kRandom: return "random";
  }
  return "?";
}

FirstStrategy parse_first_strategy(std::string_view name) {
  for (auto s : {FirstStrategy::kTwoLabel, FirstStrategy::kGreedy, FirstStrategy::kTree}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown first-player strategy `" + std::string(name) + "`");
}

SecondStrategy parse_second_strategy(std::string_view name) {
  for (auto s : {SecondStrategy::kOddCycle, SecondStrategy::kHighDegree, SecondStrategy::kExhaustive,
                 SecondStrategy::kRandom}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown second-player strategy `" + std::string(name) + "`");
}

std::string_view to_string(Winner w) { return w == Winner::kFirst ? "first" : "second"; }

std::vector<Label> forbidden_labels(const GameState& s, EdgeId e) {
  const Graph& g = s.graph();
  const auto sums = s.sums();
  std::set<Label> out;
  for (const Vertex x : {g.edge(e).u, g.edge(e).v}) {
    for (const Vertex z : g.neighbors(x)) {
      const Label diff = sums[static_cast<std::size_t>(z)] - sums[static_cast<std::size_t>(x)];
      if (diff >= 1 && diff <= s.k()) out.insert(diff);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

[[noreturn]] void inapplicable(std::string_view strategy, const std::string& why) {
  throw Error(ErrorKind::kStrategyInapplicable, std::string(strategy) + ": " + why);
}

Vertex smallest_max_degree_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == g.max_degree()) return v;
  }
  return 0;
}

// Alternating 1,2 along every path and cycle component.
class TwoLabelPlayer final : public FirstPlayer {
 public:
  explicit TwoLabelPlayer(const Graph& g) : pattern_(static_cast<std::size_t>(g.edge_count()), 0) {
    if (g.max_degree() > 2) inapplicable("two_label", "max degree exceeds 2");
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    auto walk = [&](Vertex start) {
      Vertex x = start;
      EdgeId came = -1;
      Label next = 1;
      seen[static_cast<std::size_t>(x)] = true;
      while (true) {
        EdgeId step = -1;
        for (EdgeId e : g.incident(x)) {
          if (e != came && pattern_[static_cast<std::size_t>(e)] == 0) step = e;
        }
        if (step < 0) break;
        pattern_[static_cast<std::size_t>(step)] = next;
        next = 3 - next;
        came = step;
        x = g.other(step, x);
        seen[static_cast<std::size_t>(x)] = true;
      }
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!seen[static_cast<std::size_t>(v)] && g.degree(v) <= 1) walk(v);
    }
    // Remaining components are cycles; on an odd one the alternation has to
    // repeat a label where it closes.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!seen[static_cast<std::size_t>(v)]) walk(v);
    }
  }

  LabelMove move(const GameState& s) override {
    for (EdgeId e = 0; e < s.graph().edge_count(); ++e) {
      if (!s.labeling().has(e)) return {e, pattern_[static_cast<std::size_t>(e)]};
    }
    throw Error(ErrorKind::kIllegalMove, "no unlabeled edge left");
  }

 private:
  std::vector<Label> pattern_;
};

// Takes edges in a fixed order and the smallest label outside the forbidden set.
class ForbiddenSetPlayer final : public FirstPlayer {
 public:
  explicit ForbiddenSetPlayer(std::vector<EdgeId> order) : order_(std::move(order)) {}

  LabelMove move(const GameState& s) override {
    for (EdgeId e : order_) {
      if (s.labeling().has(e)) continue;
      const auto forbidden = forbidden_labels(s, e);
      for (Label x = 1; x <= s.k(); ++x) {
        if (!std::binary_search(forbidden.begin(), forbidden.end(), x)) return {e, x};
      }
      throw Error(ErrorKind::kNoLegalLabel,
                  "every label in 1.." + std::to_string(s.k()) + " is forbidden on edge " + std::to_string(e));
    }
    throw Error(ErrorKind::kIllegalMove, "no unlabeled edge left");
  }

 private:
  std::vector<EdgeId> order_;
};

std::vector<EdgeId> bfs_edge_order(const Graph& t, Vertex root) {
  std::vector<EdgeId> order;
  std::vector<bool> seen(static_cast<std::size_t>(t.vertex_count()), false);
  std::deque<Vertex> queue{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : t.incident(x)) {
      const Vertex y = t.other(e, x);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      order.push_back(e);
      queue.push_back(y);
    }
  }
  return order;
}

// Shortest odd cycle as a vertex sequence, empty when the graph is bipartite.
std::vector<Vertex> shortest_odd_cycle(const Graph& g) {
  std::vector<Vertex> best;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto dist = bfs_levels(g, s);
    std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      for (Vertex y : g.neighbors(x)) {
        if (dist[static_cast<std::size_t>(y)] == dist[static_cast<std::size_t>(x)] - 1 &&
            parent[static_cast<std::size_t>(x)] < 0) {
          parent[static_cast<std::size_t>(x)] = y;
        }
      }
    }
    for (const Edge& ed : g.edges()) {
      const int da = dist[static_cast<std::size_t>(ed.u)];
      if (da == kUnreachable || da != dist[static_cast<std::size_t>(ed.v)]) continue;
      if (!best.empty() && 2 * da + 1 >= static_cast<int>(best.size())) continue;
      std::vector<Vertex> left{ed.u};
      std::vector<Vertex> right{ed.v};
      while (left.back() != s) left.push_back(parent[static_cast<std::size_t>(left.back())]);
      while (right.back() != s) right.push_back(parent[static_cast<std::size_t>(right.back())]);
      // s, ..., u, v, ..., back to s; skip closed walks that are not cycles.
      std::vector<Vertex> cycle(left.rbegin(), left.rend());
      cycle.insert(cycle.end(), right.begin(), right.end() - 1);
      std::set<Vertex> distinct(cycle.begin(), cycle.end());
      if (distinct.size() == cycle.size()) best = std::move(cycle);
    }
  }
  return best;
}

class OddCyclePlayer final : public SecondPlayer {
 public:
  explicit OddCyclePlayer(const Graph& g) : heads_(static_cast<std::size_t>(g.edge_count())) {
    const auto cycle = shortest_odd_cycle(g);
    if (cycle.empty()) inapplicable("odd_cycle", "graph has no odd cycle");
    std::vector<bool> on_cycle(static_cast<std::size_t>(g.vertex_count()), false);
    for (Vertex x : cycle) on_cycle[static_cast<std::size_t>(x)] = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      Vertex head = ed.v;
      if (on_cycle[static_cast<std::size_t>(ed.u)] != on_cycle[static_cast<std::size_t>(ed.v)]) {
        head = on_cycle[static_cast<std::size_t>(ed.u)] ? ed.v : ed.u;
      }
      heads_[static_cast<std::size_t>(e)] = head;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex to = cycle[(i + 1) % cycle.size()];
      heads_[static_cast<std::size_t>(*g.find_edge(cycle[i], to))] = to;
    }
  }

  Vertex move(const GameState& s) override { return heads_[static_cast<std::size_t>(*s.pending())]; }

 private:
  std::vector<Vertex> heads_;
};

// Fixes v with degree >= 3 and neighbours v1, v2, v3; everything else points
// away from them, and the three edges vv_i are answered by label comparison.
class HighDegreePlayer final : public SecondPlayer {
 public:
  explicit HighDegreePlayer(const Graph& g) : g_(g) {
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (g.degree(x) >= 3) {
        center_ = x;
        break;
      }
    }
    if (center_ < 0) inapplicable("high_degree", "no vertex of degree at least 3");
    for (int i = 0; i < 3; ++i) {
      const EdgeId e = g.incident(center_)[static_cast<std::size_t>(i)];
      special_.push_back(e);
      spokes_.push_back(g.other(e, center_));
    }
  }

  Vertex move(const GameState& s) override {
    const EdgeId e = *s.pending();
    const Edge& ed = g_.edge(e);
    if (std::find(special_.begin(), special_.end(), e) != special_.end()) {
      std::vector<EdgeId> seen;
      for (const Move& m : s.history()) {
        if (std::find(special_.begin(), special_.end(), m.edge) != special_.end()) seen.push_back(m.edge);
      }
      const Vertex spoke = g_.other(e, center_);
      const auto& l = s.labeling();
      switch (seen.size()) {
        case 0:
          return spoke;
        case 1:
          return l.at(e) == l.at(seen[0]) ? center_ : spoke;
        default:
          return l.at(seen[1]) == l.at(seen[0]) ? spoke : center_;
      }
    }
    if (ed.u == center_ || ed.v == center_) return g_.other(e, center_);
    const bool u_spoke = is_spoke(ed.u);
    const bool v_spoke = is_spoke(ed.v);
    if (u_spoke != v_spoke) return u_spoke ? ed.v : ed.u;
    return ed.v;
  }

 private:
  bool is_spoke(Vertex x) const { return std::find(spokes_.begin(), spokes_.end(), x) != spokes_.end(); }

  const Graph& g_;
  Vertex center_ = -1;
  std::vector<EdgeId> special_;
  std::vector<Vertex> spokes_;
};

class ExhaustivePlayer final : public SecondPlayer {
 public:
  ExhaustivePlayer(const Graph& g, int k, std::uint64_t budget) : solver_(g, k, budget) {}

  Vertex move(const GameState& s) override {
    const Edge& ed = s.graph().edge(*s.pending());
    for (const Vertex head : {ed.v, ed.u}) {
      if (solver_.solve_after(s, head) == Winner::kSecond) return head;
    }
    return ed.v;
  }

 private:
  GameSolver solver_;
};

class RandomPlayer final : public SecondPlayer {
 public:
  explicit RandomPlayer(std::uint64_t seed) : seed_(seed) {}

  Vertex move(const GameState& s) override {
    const Edge& ed = s.graph().edge(*s.pending());
    const std::uint64_t coin = splitmix64(seed_ ^ splitmix64(s.history().size()));
    return (coin & 1U) ? ed.v : ed.u;
  }

 private:
  std::uint64_t seed_;
};

}  // namespace

std::unique_ptr<FirstPlayer> make_first_player(FirstStrategy strategy, const Graph& g, int /*k*/) {
  switch (strategy) {
    case FirstStrategy::kTwoLabel:
      return std::make_unique<TwoLabelPlayer>(g);
    case FirstStrategy::kGreedy: {
      std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
      for (EdgeId e = 0; e < g.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
      return std::make_unique<ForbiddenSetPlayer>(std::move(order));
    }
    case FirstStrategy::kTree:
      if (!g.is_tree()) inapplicable("tree", "graph is not a tree");
      return std::make_unique<ForbiddenSetPlayer>(bfs_edge_order(g, smallest_max_degree_vertex(g)));
  }
  inapplicable("first player", "unknown strategy");
}

std::unique_ptr<SecondPlayer> make_second_player(SecondStrategy strategy, const Graph& g, int k,
                                                 std::uint64_t seed, std::uint64_t budget) {
  switch (strategy) {
    case SecondStrategy::kOddCycle: return std::make_unique<OddCyclePlayer>(g);
    case SecondStrategy::kHighDegree: return std::make_unique<HighDegreePlayer>(g);
    case SecondStrategy::kExhaustive: return std::make_unique<ExhaustivePlayer>(g, k, budget);
    case SecondStrategy::kRandom: return std::make_unique<RandomPlayer>(seed);
  }
  inapplicable("second player", "unknown strategy");
}

LabelMove fp_move(FirstStrategy strategy, const GameState& s) {
  return make_first_player(strategy, s.graph(), s.k())->move(s);
}

Vertex sp_move(SecondStrategy strategy, const GameState& s, std::uint64_t seed) {
  if (!s.pending()) throw Error(ErrorKind::kIllegalMove, "no edge is waiting for a direction");
  return make_second_player(strategy, s.graph(), s.k(), seed)->move(s);
}

GameOutcome play(const Graph& g, int k, FirstPlayer& first, SecondPlayer& second) {
  GameState state(g, k);
  GameOutcome out;
  auto finish = [&](Winner w) {
    out.winner = w;
    out.transcript.assign(state.history().begin(), state.history().end());
    out.final_sums.assign(state.sums().begin(), state.sums().end());
    return out;
  };
  while (!state.finished()) {
    try {
      const LabelMove m = first.move(state);
      state.label_edge(m.edge, m.label);
    } catch (const Error& err) {
      out.forfeit = "first player: " + std::string(err.what());
      return finish(Winner::kSecond);
    }
    try {
      state.orient(second.move(state));
    } catch (const Error& err) {
      out.forfeit = "second player: " + std::string(err.what());
      return finish(Winner::kFirst);
    }
  }
  return finish(state.sums_proper() ? Winner::kFirst : Winner::kSecond);
}

GameOutcome play(const Graph& g, int k, FirstStrategy fp, SecondStrategy sp, std::uint64_t seed,
                 std::uint64_t budget) {
  const auto first = make_first_player(fp, g, k);
  const auto second = make_second_player(sp, g, k, seed, budget);
  return play(g, k, *first, *second);
}

GameSolver::GameSolver(const Graph& g, int k, std::uint64_t budget)
    : g_(g),
      k_(k),
      budget_(budget),
      label_(static_cast<std::size_t>(g.edge_count()), 0),
      sums_(static_cast<std::size_t>(g.vertex_count()), 0),
      open_(static_cast<std::size_t>(g.vertex_count()), 0) {
  if (k < 1) throw Error(ErrorKind::kInvalidParameter, "palette size must be at least 1");
  const std::uint64_t base = 2 * static_cast<std::uint64_t>(k) + 1;
  std::uint64_t place = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    place_.push_back(place);
    if (place > std::numeric_limits<std::uint64_t>::max() / base / base) {
      throw Error(ErrorKind::kCapExceeded, "game too large for the exact solver");
    }
    place *= base;
  }
}

void GameSolver::load(const GameState& s) {
  std::fill(label_.begin(), label_.end(), 0);
  std::fill(sums_.begin(), sums_.end(), 0);
  for (Vertex v = 0; v < g_.vertex_count(); ++v) open_[static_cast<std::size_t>(v)] = g_.degree(v);
  key_ = 0;
  assigned_ = 0;
  for (const Move& m : s.history()) assign(m.edge, m.label, m.head == g_.edge(m.edge).v);
}

void GameSolver::assign(EdgeId e, Label label, bool into_v) {
  const Edge& ed = g_.edge(e);
  label_[static_cast<std::size_t>(e)] = label;
  sums_[static_cast<std::size_t>(into_v ? ed.v : ed.u)] += label;
  --open_[static_cast<std::size_t>(ed.u)];
  --open_[static_cast<std::size_t>(ed.v)];
  key_ += place_[static_cast<std::size_t>(e)] * static_cast<std::uint64_t>(2 * (label - 1) + (into_v ? 2 : 1));
  ++assigned_;
}

void GameSolver::unassign(EdgeId e, bool into_v) {
  const Edge& ed = g_.edge(e);
  const Label label = label_[static_cast<std::size_t>(e)];
  key_ -= place_[static_cast<std::size_t>(e)] * static_cast<std::uint64_t>(2 * (label - 1) + (into_v ? 2 : 1));
  sums_[static_cast<std::size_t>(into_v ? ed.v : ed.u)] -= label;
  ++open_[static_cast<std::size_t>(ed.u)];
  ++open_[static_cast<std::size_t>(ed.v)];
  label_[static_cast<std::size_t>(e)] = 0;
  --assigned_;
}

// A pair is settled once both endpoints have no open edges; only pairs at the
// endpoints of the last assigned edge can have just become settled.
bool GameSolver::conflict_after(EdgeId e) const {
  for (const Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
    if (open_[static_cast<std::size_t>(x)] != 0) continue;
    for (EdgeId f : g_.incident(x)) {
      const Vertex y = g_.other(f, x);
      if (open_[static_cast<std::size_t>(y)] == 0 &&
          sums_[static_cast<std::size_t>(x)] == sums_[static_cast<std::size_t>(y)]) {
        return true;
      }
    }
  }
  return false;
}

bool GameSolver::survives_all_directions(EdgeId e, Label label) {
  for (const bool into_v : {true, false}) {
    assign(e, label, into_v);
    const bool ok = !conflict_after(e) && first_wins();
    unassign(e, into_v);
    if (!ok) return false;
  }
  return true;
}

bool GameSolver::first_wins() {
  if (assigned_ == g_.edge_count()) return true;
  if (const auto it = memo_.find(key_); it != memo_.end()) return it->second;
  if (++nodes_ > budget_) {
    exhausted_ = true;
    return false;
  }
  bool result = false;
  for (EdgeId e = 0; e < g_.edge_count() && !result; ++e) {
    if (label_[static_cast<std::size_t>(e)] != 0) continue;
    for (Label x = 1; x <= k_ && !result; ++x) {
      result = survives_all_directions(e, x);
      if (exhausted_) return false;
    }
  }
  memo_.emplace(key_, result);
  return result;
}

std::optional<Winner> GameSolver::solve(const GameState& s) {
  if (s.pending()) throw Error(ErrorKind::kInvalidParameter, "position is waiting for a direction");
  load(s);
  exhausted_ = false;
  if (s.finished()) return s.sums_proper() ? Winner::kFirst : Winner::kSecond;
  const bool first = first_wins();
  if (exhausted_) return std::nullopt;
  return first ? Winner::kFirst : Winner::kSecond;
}

std::optional<Winner> GameSolver::solve_after(const GameState& s, Vertex head) {
  if (!s.pending()) throw Error(ErrorKind::kInvalidParameter, "no edge is waiting for a direction");
  load(s);
  exhausted_ = false;
  const EdgeId e = *s.pending();
  assign(e, s.labeling().at(e), head == g_.edge(e).v);
  if (conflict_after(e)) return Winner::kSecond;
  const bool first = first_wins();
  if (exhausted_) return std::nullopt;
  return first ? Winner::kFirst : Winner::kSecond;
}

std::optional<Winner> solve_game(const Graph& g, int k, std::uint64_t budget) {
  GameSolver solver(g, k, budget);
  return solver.solve(GameState(g, k));
}

GameNumberResult game_number(const Graph& g, int k_max, std::uint64_t budget) {
  GameNumberResult out;
  for (int k = 1; k <= k_max; ++k) {
    const auto w = solve_game(g, k, budget);
    if (!w) return out;
    if (*w == Winner::kFirst) {
      out.value = k;
      out.lower = k;
      return out;
    }
    out.lower = k + 1;
  }
  return out;
}

namespace {

bool beats_from(GameState& state, FirstPlayer& first) {
  if (state.finished()) return state.sums_proper();
  GameState labeled = state;
  try {
    const LabelMove m = first.move(state);
    labeled.label_edge(m.edge, m.label);
  } catch (const Error&) {
    return false;
  }
  const Edge& ed = state.graph().edge(*labeled.pending());
  for (const Vertex head : {ed.v, ed.u}) {
    GameState next = labeled;
    next.orient(head);
    if (!beats_from(next, first)) return false;
  }
  return true;
}

}  // namespace

bool beats_every_adversary(const Graph& g, int k, FirstStrategy fp) {
  const auto first = make_first_player(fp, g, k);
  GameState state(g, k);
  return beats_from(state, *first);
}

nlohmann::json transcript_json(const Graph& g, const GameOutcome& outcome) {
  nlohmann::json rounds = nlohmann::json::array();
  for (std::size_t i = 0; i < outcome.transcript.size(); ++i) {
    const Move& m = outcome.transcript[i];
    const Edge& ed = g.edge(m.edge);
    rounds.push_back({{"round", i + 1},
                      {"edge", {ed.u, ed.v}},
                      {"label", m.label},
                      {"direction", m.head == ed.v ? "uv" : "vu"}});
  }
  nlohmann::json j{{"transcript", rounds}, {"winner", std::string(to_string(outcome.winner))},
                   {"final_sums", outcome.final_sums}};
  if (outcome.forfeit) j["forfeit"] = *outcome.forfeit;
  return j;
}

}  // namespace ulab
