#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "dwsynth/vector_game.hpp"

namespace dwsynth {

struct SolveOptions {
  std::size_t max_states = 10'000'000;  // memo entries
  std::size_t max_configs = 1'000'000;  // interned configs per player
  std::size_t plan_budget = 2'000'000;  // per-config move enumeration
};

// Exactly solved game at fixed pebble counts: full configuration spaces,
// minimax outcome per state, and the chosen move per explored state.
// Environment moves first; play ends at the first double pass; the final
// configuration is judged against the victory condition.
class SolvedGame {
 public:
  SolvedGame(GameSpec spec, int n_sys, int n_env, const SolveOptions& opts);

  Winner winner() const;
  const GameSpec& spec() const { return spec_; }
  int n_sys() const { return n_sys_; }
  int n_env() const { return n_env_; }

  GameState initial_state() const;
  Winner outcome(const GameState& state) const;
  // The stored optimal move for the state's mover (their new config).
  // In positions where every move loses, this is the pass move.
  PlayerConfig chosen_move(const GameState& state) const;

  std::size_t explored_states() const { return explored_; }

 private:
  struct StateRef {
    std::uint32_t sys_id, env_id;
    Player turn;
    bool last_pass;
  };
  std::size_t state_index(const StateRef& s) const;
  StateRef to_ref(const GameState& state) const;
  std::int8_t solve_rec(const StateRef& s) const;
  std::uint32_t config_id(const PlayerConfig& c, Player p) const;

  GameSpec spec_;
  int n_sys_, n_env_;
  SolveOptions opts_;
  std::vector<PlayerConfig> sys_configs_, env_configs_;
  // Solved lazily on demand; one SolvedGame instance is therefore not
  // safe to query from several threads (grid cells use one each).
  mutable std::vector<std::vector<std::uint32_t>> sys_succ_, env_succ_;
  mutable std::vector<std::int8_t> outcome_;  // 0 unknown, 1 Sys, 2 Env, 3 open
  mutable std::vector<std::int32_t> chosen_;  // successor config id, -1 unknown
  mutable std::size_t explored_ = 0;
};

// Convenience wrapper: solve and return the winner.
Winner solve_winner(const GameSpec& spec, int n_sys, int n_env,
                    const SolveOptions& opts = {});

// Positional strategy read off a solved game's table.
std::function<PlayerConfig(const GameState&)> table_strategy(
    const std::shared_ptr<const SolvedGame>& game, Player player);

// Environment strategy for (n_sys, n_env+1) pebbles built from a strategy
// for (n_sys, n_env): mirrors the base strategy on the first n_env pebbles
// and keeps the extra pebble on a moving anchor location that satisfies P
// with at least K pebbles beneath it, so the extra pebble can never flip a
// victory constraint. Requires n_env >= minind.
class LiftedEnvStrategy {
 public:
  LiftedEnvStrategy(GameSpec spec, int n_sys, int n_env,
                    std::function<PlayerConfig(const GameState&)> base);

  struct Memory {
    PlayerConfig base_env;
    Location anchor;
  };
  Memory initial_memory() const;

  // Given the lifted game state (with n_env+1 pebbles) and the strategy's
  // memory, returns the lifted move and the updated memory.
  std::pair<PlayerConfig, Memory> choose(const GameState& lifted,
                                         const Memory& mem) const;

  int k() const { return k_; }

 private:
  GameSpec spec_;
  int n_sys_, n_env_, k_;
  std::function<PlayerConfig(const GameState&)> base_;
};

LiftedEnvStrategy lift_env_strategy(
    const GameSpec& spec, int n_sys, int n_env,
    std::function<PlayerConfig(const GameState&)> base_env);

// One play between two strategies; asserts the protocol invariants
// (double-pass ending, non-pass move bound) and reports them.
struct PlayRecord {
  std::size_t moves = 0;
  std::size_t non_pass_moves = 0;
  bool ended_by_double_pass = false;
  GameState final_state;
  Winner winner;
};
PlayRecord play_game(const GameSpec& spec, int n_sys, int n_env,
                     const std::function<PlayerConfig(const GameState&)>& sys,
                     const std::function<PlayerConfig(const GameState&)>& env,
                     std::size_t max_moves = 100000);

// Play the lifted Environment strategy against a System strategy in the
// (n_sys, n_env+1) game, threading the anchor memory along.
PlayRecord play_lifted(const GameSpec& spec, int n_sys,
                       const LiftedEnvStrategy& lifted,
                       const std::function<PlayerConfig(const GameState&)>& sys,
                       std::size_t max_moves = 100000);

// Strongest verification of the lift: the lifted Environment strategy
// wins against EVERY System behavior (universal branching over System
// moves, Environment moves fixed by the strategy).
bool env_strategy_wins_all(const GameSpec& spec, int n_sys,
                           const LiftedEnvStrategy& lifted,
                           const SolveOptions& opts = {});

// Theorem-style bounded search: winners over [0,cut] x [0,minind].
struct GridCell {
  std::optional<Winner> winner;  // empty: budget exceeded
};
struct GridResult {
  std::size_t cut = 0;
  std::uint64_t minind = 0;
  // cells[nE][nS]
  std::vector<std::vector<GridCell>> cells;
  bool system_wins_somewhere = false;
  std::size_t budget_exceeded_cells = 0;
};
GridResult decide_grid(const GameSpec& spec, std::size_t cut,
                       std::optional<std::uint64_t> minind_override = {},
                       const SolveOptions& opts = {}, std::size_t jobs = 1);

// Heuristic probe for a plateau: smallest nS such that for every
// nE <= minind the winner stays constant over `window` consecutive values
// of nS. Not the exact cutoff from the underlying theory (which is not
// computed here) — output must always be flagged as heuristic.
struct ProbeResult {
  std::size_t cut = 0;
  bool heuristic = true;
};
ProbeResult probe_cut(const GameSpec& spec, std::size_t window,
                      std::size_t max_probe = 16,
                      const SolveOptions& opts = {});

}  // namespace dwsynth
