#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "ulab/graph.hpp"

namespace ulab {

enum class Winner { kFirst, kSecond };

struct Move {
  EdgeId edge = -1;
  Label label = 0;
  Vertex head = -1;
};

/// Position in the labeling game on (g, k). Each round the first player labels
/// an unlabeled edge from 1..k, then the second player picks its head. The
/// graph must outlive the state.
class GameState {
 public:
  GameState(const Graph& g, int k);

  const Graph& graph() const noexcept { return *graph_; }
  int k() const noexcept { return k_; }
  const EdgeLabeling& labeling() const noexcept { return labeling_; }
  std::optional<Vertex> head(EdgeId e) const;
  /// Edge labeled this round and still waiting for its direction.
  std::optional<EdgeId> pending() const noexcept { return pending_; }
  bool finished() const noexcept;
  std::span<const Move> history() const noexcept { return history_; }
  /// Running incoming sums S(v) over oriented edges.
  std::span<const Label> sums() const noexcept { return sums_; }

  void label_edge(EdgeId e, Label label);
  void orient(Vertex head);

  /// Every adjacent pair has distinct running sums.
  bool sums_proper() const;

 private:
  const Graph* graph_;
  int k_;
  EdgeLabeling labeling_;
  std::vector<Vertex> heads_;
  std::vector<Label> sums_;
  std::optional<EdgeId> pending_;
  std::vector<Move> history_;
};

enum class FirstStrategy { kTwoLabel, kGreedy, kTree };
enum class SecondStrategy { kOddCycle, kHighDegree, kExhaustive, kRandom };

std::string_view to_string(FirstStrategy s);
std::string_view to_string(SecondStrategy s);
FirstStrategy parse_first_strategy(std::string_view name);
SecondStrategy parse_second_strategy(std::string_view name);

struct LabelMove {
  EdgeId edge = -1;
  Label label = 0;
};

class FirstPlayer {
 public:
  virtual ~FirstPlayer() = default;
  virtual LabelMove move(const GameState& s) = 0;
};

class SecondPlayer {
 public:
  virtual ~SecondPlayer() = default;
  /// Head for the pending edge.
  virtual Vertex move(const GameState& s) = 0;
};

inline constexpr std::uint64_t kDefaultGameBudget = 50'000'000;

/// Throws kStrategyInapplicable when the graph does not fit the strategy.
std::unique_ptr<FirstPlayer> make_first_player(FirstStrategy strategy, const Graph& g, int k);
std::unique_ptr<SecondPlayer> make_second_player(SecondStrategy strategy, const Graph& g, int k,
                                                 std::uint64_t seed = 0,
                                                 std::uint64_t budget = kDefaultGameBudget);

LabelMove fp_move(FirstStrategy strategy, const GameState& s);
Vertex sp_move(SecondStrategy strategy, const GameState& s, std::uint64_t seed = 0);

/// Labels 1..k that keep the new head's sum away from all its neighbours'
/// current sums, whichever end becomes the head. Only values in 1..k count.
std::vector<Label> forbidden_labels(const GameState& s, EdgeId e);

struct GameOutcome {
  Winner winner = Winner::kSecond;
  std::vector<Move> transcript;
  std::vector<Label> final_sums;
  /// Set when a player lost by an illegal or impossible move.
  std::optional<std::string> forfeit;
};

GameOutcome play(const Graph& g, int k, FirstPlayer& first, SecondPlayer& second);
GameOutcome play(const Graph& g, int k, FirstStrategy fp, SecondStrategy sp, std::uint64_t seed = 0,
                 std::uint64_t budget = kDefaultGameBudget);

/// Alternating minimax with a transposition table keyed by the set of
/// (edge, label, direction) assignments. Reusable across positions of the
/// same (g, k); the table persists.
class GameSolver {
 public:
  GameSolver(const Graph& g, int k, std::uint64_t budget = kDefaultGameBudget);

  /// Value of a position awaiting a label; nullopt when the budget runs out.
  std::optional<Winner> solve(const GameState& s);
  /// Value after the pending edge of s is given the head `head`.
  std::optional<Winner> solve_after(const GameState& s, Vertex head);

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void load(const GameState& s);
  void assign(EdgeId e, Label label, bool into_v);
  void unassign(EdgeId e, bool into_v);
  bool conflict_after(EdgeId e) const;
  bool first_wins();
  bool survives_all_directions(EdgeId e, Label label);

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Label> label_;
  std::vector<Label> sums_;
  std::vector<int> open_;  // unassigned incident edges per vertex
  std::vector<std::uint64_t> place_;
  std::uint64_t key_ = 0;
  int assigned_ = 0;
  std::unordered_map<std::uint64_t, bool> memo_;
};

std::optional<Winner> solve_game(const Graph& g, int k, std::uint64_t budget = kDefaultGameBudget);

struct GameNumberResult {
  std::optional<int> value;
  /// Every k below this is a second-player win.
  int lower = 1;
};

GameNumberResult game_number(const Graph& g, int k_max, std::uint64_t budget = kDefaultGameBudget);

/// Plays the strategy against every possible sequence of directions.
/// Returns false at the first line where the second player wins.
bool beats_every_adversary(const Graph& g, int k, FirstStrategy fp);

std::string_view to_string(Winner w);
nlohmann::json transcript_json(const Graph& g, const GameOutcome& outcome);

}  // namespace ulab
