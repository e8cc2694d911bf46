#include "copwin/game.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace copwin {

namespace {

constexpr int kBinomRows = kMaxOrder + kMaxCops + 1;

constexpr std::array<std::array<std::uint64_t, kMaxCops + 2>, kBinomRows> make_binomials() {
  std::array<std::array<std::uint64_t, kMaxCops + 2>, kBinomRows> c{};
  for (int n = 0; n < kBinomRows; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= kMaxCops + 1; ++k) c[n][k] = n == 0 ? 0 : c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

constexpr auto kBinom = make_binomials();

// Cop tuples packed 5 bits per cop, sorted ascending, for cheap dedup.
uint32_t pack(const std::array<int, kMaxCops>& t, int len) {
  uint32_t key = 0;
  for (int i = 0; i < len; ++i) key = (key << 5) | static_cast<uint32_t>(t[i]);
  return key;
}

void unpack(uint32_t key, int len, std::array<int, kMaxCops>& t) {
  for (int i = len - 1; i >= 0; --i) {
    t[i] = static_cast<int>(key & 31u);
    key >>= 5;
  }
}

}  // namespace

CopGame::CopGame(const Graph& g, int k) : g_(g), n_(g.order()), k_(k) {
  if (n_ < 1) throw std::invalid_argument("cop game needs a nonempty graph");
  if (k < 1 || k > kMaxCops) {
    throw std::invalid_argument("number of cops must be in 1.." + std::to_string(kMaxCops) + ", got " +
                                std::to_string(k));
  }
  const auto count = static_cast<std::size_t>(kBinom[n_ + k_ - 1][k_]);
  multisets_.resize(count);
  occupied_.resize(count);
  std::vector<int> t(k_, 0);
  // Enumerate non-decreasing tuples and place each at its rank.
  while (true) {
    const int r = rank(t);
    multisets_[r] = t;
    uint32_t occ = 0;
    for (int c : t) occ |= uint32_t{1} << c;
    occupied_[r] = occ;
    int i = k_ - 1;
    while (i >= 0 && t[i] == n_ - 1) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k_; ++j) t[j] = t[i];
  }
  cop_win_.assign(count, 0);
  robber_turn_win_.assign(count, 0);
  target_cop_.assign(count, 0);
  target_robber_.assign(count, 0);
  build_moves();
}

int CopGame::rank(const std::vector<int>& sorted_cops) const {
  std::uint64_t r = 0;
  for (int i = 0; i < k_; ++i) r += kBinom[sorted_cops[i] + i][i + 1];
  return static_cast<int>(r);
}

// Moves of a multiset are generated cop by cop, deduplicating the sorted
// multiset of already-moved cops after each step, so the work is bounded by
// the number of distinct intermediate multisets rather than the product of
// closed-neighbourhood sizes.
void CopGame::build_moves() {
  move_offset_.assign(multisets_.size() + 1, 0);
  std::vector<uint32_t> layer, next;
  std::array<int, kMaxCops> t{};
  for (std::size_t c = 0; c < multisets_.size(); ++c) {
    const std::vector<int>& cops = multisets_[c];
    layer.assign(1, 0);
    for (int i = 0; i < k_; ++i) {
      next.clear();
      for (uint32_t key : layer) {
        unpack(key, i, t);
        for (int to : g_.closed_neighborhood(cops[i])) {
          std::array<int, kMaxCops> u = t;
          int pos = i;
          while (pos > 0 && u[pos - 1] > to) {
            u[pos] = u[pos - 1];
            --pos;
          }
          u[pos] = to;
          next.push_back(pack(u, i + 1));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      layer.swap(next);
    }
    for (uint32_t key : layer) {
      unpack(key, k_, t);
      std::uint64_t r = 0;
      for (int i = 0; i < k_; ++i) r += kBinom[t[i] + i][i + 1];
      moves_.push_back(static_cast<int>(r));
    }
    move_offset_[c + 1] = static_cast<int>(moves_.size());
  }
}

int CopGame::checked_rank(const GameState& state) const {
  if (static_cast<int>(state.cops.size()) != k_) {
    throw std::invalid_argument("state has " + std::to_string(state.cops.size()) + " cops, expected " +
                                std::to_string(k_));
  }
  for (int c : state.cops) {
    if (c < 0 || c >= n_) throw std::invalid_argument("cop vertex out of range");
  }
  if (state.robber < 0 || state.robber >= n_) throw std::invalid_argument("robber vertex out of range");
  std::vector<int> sorted = state.cops;
  std::sort(sorted.begin(), sorted.end());
  return rank(sorted);
}

void CopGame::add_target(const GameState& state) {
  if (solved_) throw std::logic_error("targets must be added before solve()");
  const int c = checked_rank(state);
  const uint32_t bit = uint32_t{1} << state.robber;
  if (state.to_move == Side::kCops) {
    target_cop_[c] |= bit;
  } else {
    target_robber_[c] |= bit;
  }
}

// Robber positions that lose when the robber moves against cops at c, given
// the cop-to-move winning mask: every closed neighbour is already lost.
uint32_t CopGame::robber_turn_closure(uint32_t cop_mask) const {
  uint32_t lost = 0;
  const uint32_t escape = ~cop_mask;
  for (int r = 0; r < n_; ++r) {
    if (((g_.row(r) | (uint32_t{1} << r)) & escape) == 0) lost |= uint32_t{1} << r;
  }
  return lost;
}

void CopGame::mark_cop(int c, uint32_t bits) {
  bits &= ~cop_win_[c];
  if (!bits) return;
  cop_win_[c] |= bits;
  marked_ += static_cast<std::uint64_t>(std::popcount(bits));
  if (cop_win_[c] == VertexSet::range(n_).bits()) won_ = true;
  mark_robber(c, robber_turn_closure(cop_win_[c]));
}

void CopGame::mark_robber(int c, uint32_t bits) {
  bits &= ~robber_turn_win_[c];
  if (!bits) return;
  robber_turn_win_[c] |= bits;
  marked_ += static_cast<std::uint64_t>(std::popcount(bits));
  if (!pending_[c]) worklist_.push_back(c);
  pending_[c] |= bits;
}

void CopGame::solve(bool stop_on_win) {
  if (solved_) return;
  solved_ = true;
  pending_.assign(multisets_.size(), 0);
  for (std::size_t c = 0; c < multisets_.size(); ++c) {
    const int ci = static_cast<int>(c);
    mark_cop(ci, occupied_[c] | target_cop_[c]);
    mark_robber(ci, occupied_[c] | target_robber_[c]);
  }
  // A robber-turn win at c' becomes a cop-turn win at every c that can move
  // to c'. The move relation is symmetric, so moves of c' are exactly the
  // predecessors.
  while (!worklist_.empty()) {
    if (stop_on_win && won_) return;
    const int c = worklist_.back();
    worklist_.pop_back();
    const uint32_t delta = pending_[c];
    pending_[c] = 0;
    for (int i = move_offset_[c]; i < move_offset_[c + 1]; ++i) mark_cop(moves_[i], delta);
  }
  complete_ = true;
}

bool CopGame::cops_win() const {
  if (!solved_) throw std::logic_error("solve() has not been called");
  return won_;
}

bool CopGame::cops_win_from(const GameState& state) const {
  if (!complete_) throw std::logic_error("per-state queries need a complete solve()");
  const int c = checked_rank(state);
  const uint32_t mask = state.to_move == Side::kCops ? cop_win_[c] : robber_turn_win_[c];
  return (mask >> state.robber) & 1u;
}

std::uint64_t CopGame::state_count() const { return static_cast<std::uint64_t>(multisets_.size()) * n_ * 2; }

bool CopGame::is_fixpoint() const {
  if (!complete_) return false;
  for (std::size_t c = 0; c < multisets_.size(); ++c) {
    uint32_t cop = occupied_[c] | target_cop_[c];
    for (int i = move_offset_[c]; i < move_offset_[c + 1]; ++i) cop |= robber_turn_win_[moves_[i]];
    const uint32_t robber =
        occupied_[c] | target_robber_[c] | robber_turn_closure(cop_win_[c]);
    if (cop != cop_win_[c] || robber != robber_turn_win_[c]) return false;
  }
  return true;
}

bool cops_can_win(const Graph& g, int k) {
  CopGame game(g, k);
  game.solve(/*stop_on_win=*/true);
  return game.cops_win();
}

std::optional<int> cop_number(const Graph& g, int k_max) {
  if (k_max < 1 || k_max > kMaxCops) throw std::invalid_argument("k_max must be in 1..4");
  for (int k = 1; k <= k_max; ++k) {
    if (cops_can_win(g, k)) return k;
  }
  return std::nullopt;
}

bool is_dismantlable(const Graph& g) {
  if (g.order() == 0) return false;
  uint32_t alive = g.vertices().bits();
  bool removed = true;
  while (removed && std::popcount(alive) > 1) {
    removed = false;
    for (uint32_t xs = alive; xs && !removed; xs &= xs - 1) {
      const int x = std::countr_zero(xs);
      const uint32_t nx = (g.row(x) | (uint32_t{1} << x)) & alive;
      for (uint32_t us = alive & ~(uint32_t{1} << x); us; us &= us - 1) {
        const int u = std::countr_zero(us);
        const uint32_t nu = (g.row(u) | (uint32_t{1} << u)) & alive;
        if ((nx & ~nu) == 0) {
          alive &= ~(uint32_t{1} << x);
          removed = true;
          break;
        }
      }
    }
  }
  return std::popcount(alive) == 1;
}

bool can_force(const Graph& g, int k, const std::vector<GameState>& targets) {
  CopGame game(g, k);
  for (const GameState& t : targets) game.add_target(t);
  game.solve(/*stop_on_win=*/true);
  return game.cops_win();
}

}  // namespace copwin
