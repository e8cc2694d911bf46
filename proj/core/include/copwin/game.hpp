#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

inline constexpr int kMaxCops = 4;

enum class Side { kCops, kRobber };

/// A position of the game: where the cops stand, where the robber stands,
/// and whose turn it is. Cops are interchangeable; the canonical
/// representative keeps `cops` sorted ascending.
struct GameState {
  std::vector<int> cops;
  int robber = 0;
  Side to_move = Side::kCops;

  bool operator==(const GameState&) const = default;
};

/// Exact solver for the k-cop game on one graph.
///
/// For every cop multiset C the solver keeps two robber-position masks:
/// cop_win_[C] (cops to move) and robber_turn_win_[C] (robber to move). Both
/// start from the capture positions (robber on a cop) plus any targets and
/// grow to the least fixpoint of the backward-induction operator by worklist
/// propagation, 32 robber positions at a time.
///
/// Rules: the cops place first, then the robber (placing on a cop is an
/// immediate capture); the cops move first and each piece may stay or move
/// along one edge.
///
/// A solver is single-use and not thread-safe; distinct instances are independent.
class CopGame {
 public:
  /// Throws std::invalid_argument when g is empty or k is outside 1..kMaxCops.
  CopGame(const Graph& g, int k);

  /// Marks `state` as a cop success. Cop tuples are canonicalized (sorted).
  /// Throws std::invalid_argument when the state does not use exactly k valid cops
  /// or the robber vertex is invalid. Must be called before solve().
  void add_target(const GameState& state);

  /// Runs the fixpoint. When `stop_on_win` is set, the search may stop as soon
  /// as a winning cop placement is known; per-state queries are then incomplete.
  void solve(bool stop_on_win = false);

  /// True when some cop placement wins against every robber placement.
  bool cops_win() const;

  /// Whether the cops win (or reach a target) from `state`. Requires a full solve().
  bool cops_win_from(const GameState& state) const;

  /// Number of game states, C(n+k-1, k) * n * 2.
  std::uint64_t state_count() const;
  /// Number of states ever marked as cop wins; each state is marked at most once.
  std::uint64_t marked_states() const { return marked_; }
  /// True when one more application of the backward-induction operator
  /// changes nothing (the solved table is a fixpoint).
  bool is_fixpoint() const;

  int multiset_count() const { return static_cast<int>(multisets_.size()); }
  /// Rank of a sorted cop tuple in the combinatorial number system.
  int rank(const std::vector<int>& sorted_cops) const;

 private:
  void build_moves();
  uint32_t robber_turn_closure(uint32_t cop_mask) const;
  void mark_cop(int c, uint32_t bits);
  void mark_robber(int c, uint32_t bits);
  int checked_rank(const GameState& state) const;

  Graph g_;
  int n_;
  int k_;
  std::vector<std::vector<int>> multisets_;
  std::vector<uint32_t> occupied_;
  std::vector<int> move_offset_;
  std::vector<int> moves_;
  std::vector<uint32_t> cop_win_;
  std::vector<uint32_t> robber_turn_win_;
  std::vector<uint32_t> target_cop_;
  std::vector<uint32_t> target_robber_;
  std::vector<int> worklist_;
  std::vector<uint32_t> pending_;
  std::uint64_t marked_ = 0;
  bool solved_ = false;
  bool complete_ = false;
  bool won_ = false;
};

/// c(G) <= k. Throws std::invalid_argument when k is outside 1..kMaxCops or g is empty.
bool cops_can_win(const Graph& g, int k);

/// Least k <= k_max with cops_can_win(g, k); std::nullopt means c(G) > k_max.
std::optional<int> cop_number(const Graph& g, int k_max);

/// Repeatedly deletes a vertex x with N[x] ⊆ N[u] for some u != x; true iff K1 is reached.
bool is_dismantlable(const Graph& g);

/// Whether k cops can force the play into one of `targets` (or a capture)
/// from their free initial placement. An empty target set reduces to cops_can_win.
bool can_force(const Graph& g, int k, const std::vector<GameState>& targets);

}  // namespace copwin
