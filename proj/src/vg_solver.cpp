#include "dwsynth/vg_solver.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "dwsynth/errors.hpp"

namespace dwsynth {

namespace {

// All distributions of n pebbles over the full location lattice of one
// player, sorted; aborts past the budget.
std::vector<PlayerConfig> enumerate_config_space(const GameSpec& spec,
                                                 Player player, int n,
                                                 std::size_t max_configs) {
  const std::vector<Location> locations =
      upward_closure(spec.initial_location(player), spec.bound);
  std::vector<PlayerConfig> out;
  PlayerConfig acc;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx + 1 == locations.size()) {
      if (left) acc.add(locations[idx], left);
      if (out.size() >= max_configs)
        throw BudgetError("configuration space exceeds the budget of " +
                          std::to_string(max_configs));
      out.push_back(acc);
      if (left) acc.add(locations[idx], -left);
      return;
    }
    for (int here = left; here >= 0; --here) {
      if (here) acc.add(locations[idx], here);
      rec(idx + 1, left - here);
      if (here) acc.add(locations[idx], -here);
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SolvedGame::SolvedGame(GameSpec spec, int n_sys, int n_env,
                       const SolveOptions& opts)
    : spec_(std::move(spec)), n_sys_(n_sys), n_env_(n_env), opts_(opts) {
  if (n_sys < 0 || n_env < 0)
    throw InputError("pebble counts must be >= 0");
  spec_.validate();
  sys_configs_ =
      enumerate_config_space(spec_, Player::System, n_sys, opts.max_configs);
  env_configs_ = enumerate_config_space(spec_, Player::Environment, n_env,
                                        opts.max_configs);
  const std::size_t states =
      sys_configs_.size() * env_configs_.size() * 4;
  if (states > opts.max_states)
    throw BudgetError("state space of " + std::to_string(states) +
                      " exceeds the memo budget of " +
                      std::to_string(opts.max_states));
  outcome_.assign(states, 0);
  chosen_.assign(states, -1);
  sys_succ_.resize(sys_configs_.size());
  env_succ_.resize(env_configs_.size());
}

std::uint32_t SolvedGame::config_id(const PlayerConfig& c, Player p) const {
  const auto& space = p == Player::System ? sys_configs_ : env_configs_;
  auto it = std::lower_bound(space.begin(), space.end(), c);
  if (it == space.end() || !(*it == c))
    throw Error("configuration is not in the interned space");
  return static_cast<std::uint32_t>(it - space.begin());
}

SolvedGame::StateRef SolvedGame::to_ref(const GameState& state) const {
  return {config_id(state.sys, Player::System),
          config_id(state.env, Player::Environment), state.turn,
          state.last_move_was_pass};
}

std::size_t SolvedGame::state_index(const StateRef& s) const {
  return ((static_cast<std::size_t>(s.sys_id) * env_configs_.size() +
           s.env_id) *
              2 +
          (s.turn == Player::System ? 1 : 0)) *
             2 +
         (s.last_pass ? 1 : 0);
}

std::int8_t SolvedGame::solve_rec(const StateRef& s) const {
  const std::size_t idx = state_index(s);
  if (outcome_[idx] == 1 || outcome_[idx] == 2) return outcome_[idx];
  if (outcome_[idx] == 3)
    throw Error("cycle in the game graph; the potential argument is broken");
  outcome_[idx] = 3;
  ++explored_;

  const bool sys_turn = s.turn == Player::System;
  const std::uint32_t mover_id = sys_turn ? s.sys_id : s.env_id;
  auto& succ_table = sys_turn ? sys_succ_ : env_succ_;
  if (succ_table[mover_id].empty()) {
    const auto& space = sys_turn ? sys_configs_ : env_configs_;
    std::vector<PlayerConfig> moves =
        enumerate_moves(space[mover_id], spec_,
                        sys_turn ? Player::System : Player::Environment,
                        opts_.plan_budget);
    std::vector<std::uint32_t> ids;
    ids.reserve(moves.size());
    for (const auto& m : moves)
      ids.push_back(config_id(m, sys_turn ? Player::System
                                          : Player::Environment));
    succ_table[mover_id] = std::move(ids);
  }

  const std::int8_t mover_wins = sys_turn ? 1 : 2;
  const std::int8_t opponent_wins = sys_turn ? 2 : 1;
  std::int8_t result = opponent_wins;
  std::int32_t chosen = static_cast<std::int32_t>(mover_id);  // pass default

  for (std::uint32_t next_id : succ_table[mover_id]) {
    const bool is_pass = next_id == mover_id;
    std::int8_t child;
    if (is_pass && s.last_pass) {
      child = config_satisfies(sys_configs_[s.sys_id], env_configs_[s.env_id],
                               spec_.victory)
                  ? 1
                  : 2;
    } else {
      StateRef next{s.sys_id, s.env_id,
                    sys_turn ? Player::Environment : Player::System, is_pass};
      if (sys_turn)
        next.sys_id = next_id;
      else
        next.env_id = next_id;
      child = solve_rec(next);
    }
    if (child == mover_wins) {
      result = mover_wins;
      chosen = static_cast<std::int32_t>(next_id);
      break;
    }
  }
  outcome_[idx] = result;
  chosen_[idx] = chosen;
  return result;
}

GameState SolvedGame::initial_state() const {
  GameState st;
  st.sys = PlayerConfig::all_at(spec_.initial_location(Player::System), n_sys_);
  st.env =
      PlayerConfig::all_at(spec_.initial_location(Player::Environment), n_env_);
  st.turn = Player::Environment;
  st.last_move_was_pass = false;
  return st;
}

Winner SolvedGame::winner() const {
  const std::int8_t r = solve_rec(to_ref(initial_state()));
  return r == 1 ? Winner::System : Winner::Environment;
}

Winner SolvedGame::outcome(const GameState& state) const {
  return solve_rec(to_ref(state)) == 1 ? Winner::System
                                       : Winner::Environment;
}

PlayerConfig SolvedGame::chosen_move(const GameState& state) const {
  const StateRef s = to_ref(state);
  solve_rec(s);
  const std::int32_t id = chosen_[state_index(s)];
  const auto& space =
      state.turn == Player::System ? sys_configs_ : env_configs_;
  return space[static_cast<std::size_t>(id)];
}

Winner solve_winner(const GameSpec& spec, int n_sys, int n_env,
                    const SolveOptions& opts) {
  return SolvedGame(spec, n_sys, n_env, opts).winner();
}

std::function<PlayerConfig(const GameState&)> table_strategy(
    const std::shared_ptr<const SolvedGame>& game, Player player) {
  return [game, player](const GameState& state) {
    if (state.turn != player)
      throw Error("table strategy asked to move out of turn");
    return game->chosen_move(state);
  };
}

LiftedEnvStrategy::LiftedEnvStrategy(
    GameSpec spec, int n_sys, int n_env,
    std::function<PlayerConfig(const GameState&)> base)
    : spec_(std::move(spec)),
      n_sys_(n_sys),
      n_env_(n_env),
      k_(spec_.max_constant()),
      base_(std::move(base)) {
  const std::uint64_t minind = compute_minind(spec_);
  if (static_cast<std::uint64_t>(n_env_) < minind)
    throw InputError("lift requires nE >= minind (" + std::to_string(minind) +
                     "), got " + std::to_string(n_env_));
}

LiftedEnvStrategy::Memory LiftedEnvStrategy::initial_memory() const {
  Memory mem;
  mem.base_env = PlayerConfig::all_at(
      spec_.initial_location(Player::Environment), n_env_);
  mem.anchor = find_anchor(mem.base_env, k_, spec_);
  return mem;
}

std::pair<PlayerConfig, LiftedEnvStrategy::Memory> LiftedEnvStrategy::choose(
    const GameState& lifted, const Memory& mem) const {
  GameState base_state;
  base_state.sys = lifted.sys;
  base_state.env = mem.base_env;
  base_state.turn = Player::Environment;
  base_state.last_move_was_pass = lifted.last_move_was_pass;
  PlayerConfig base_move = base_(base_state);
  // Environment pebbles only move forward, so P persists at the anchor in
  // the moved configuration; descend from there.
  Location next_anchor = find_anchor(base_move, k_, spec_, mem.anchor);
  PlayerConfig lifted_move = base_move;
  lifted_move.add(next_anchor, 1);
  return {std::move(lifted_move), Memory{std::move(base_move),
                                         std::move(next_anchor)}};
}

LiftedEnvStrategy lift_env_strategy(
    const GameSpec& spec, int n_sys, int n_env,
    std::function<PlayerConfig(const GameState&)> base_env) {
  return LiftedEnvStrategy(spec, n_sys, n_env, std::move(base_env));
}

PlayRecord play_game(const GameSpec& spec, int n_sys, int n_env,
                     const std::function<PlayerConfig(const GameState&)>& sys,
                     const std::function<PlayerConfig(const GameState&)>& env,
                     std::size_t max_moves) {
  GameState state;
  state.sys = PlayerConfig::all_at(spec.initial_location(Player::System),
                                   n_sys);
  state.env = PlayerConfig::all_at(spec.initial_location(Player::Environment),
                                   n_env);
  state.turn = Player::Environment;
  state.last_move_was_pass = false;

  PlayRecord rec;
  while (true) {
    if (rec.moves >= max_moves)
      throw Error("play did not terminate within the move cap");
    const bool sys_turn = state.turn == Player::System;
    const PlayerConfig& cur = sys_turn ? state.sys : state.env;
    PlayerConfig next = sys_turn ? sys(state) : env(state);
    if (next.total() != cur.total())
      throw Error("strategy changed the pebble count");
    const bool is_pass = next == cur;
    if (!is_pass) {
      // Redistribution must move pebbles forward only.
      std::vector<PlayerConfig> legal = enumerate_moves(
          cur, spec, sys_turn ? Player::System : Player::Environment);
      if (!std::binary_search(legal.begin(), legal.end(), next))
        throw Error("strategy made an unreachable move");
    }
    ++rec.moves;
    if (!is_pass) ++rec.non_pass_moves;
    if (is_pass && state.last_move_was_pass) {
      rec.ended_by_double_pass = true;
      rec.final_state = state;
      rec.winner = config_satisfies(state.sys, state.env, spec.victory)
                       ? Winner::System
                       : Winner::Environment;
      return rec;
    }
    if (sys_turn)
      state.sys = std::move(next);
    else
      state.env = std::move(next);
    state.turn = sys_turn ? Player::Environment : Player::System;
    state.last_move_was_pass = is_pass;
  }
}

PlayRecord play_lifted(const GameSpec& spec, int n_sys,
                       const LiftedEnvStrategy& lifted,
                       const std::function<PlayerConfig(const GameState&)>& sys,
                       std::size_t max_moves) {
  LiftedEnvStrategy::Memory mem = lifted.initial_memory();
  auto env_fn = [&lifted, &mem](const GameState& state) {
    auto [move, mem2] = lifted.choose(state, mem);
    mem = std::move(mem2);
    return move;
  };
  // One extra pebble relative to the base game.
  const int n_env_lifted = mem.base_env.total() + 1;
  return play_game(spec, n_sys, n_env_lifted, sys, env_fn, max_moves);
}

namespace {

struct UniKey {
  PlayerConfig sys, env;
  Location anchor;
  bool sys_turn, last_pass;
  bool operator<(const UniKey& o) const {
    return std::tie(sys, env, anchor, sys_turn, last_pass) <
           std::tie(o.sys, o.env, o.anchor, o.sys_turn, o.last_pass);
  }
};

}  // namespace

bool env_strategy_wins_all(const GameSpec& spec, int n_sys,
                           const LiftedEnvStrategy& lifted,
                           const SolveOptions& opts) {
  std::map<UniKey, bool> memo;

  std::function<bool(const GameState&, const LiftedEnvStrategy::Memory&)>
      wins = [&](const GameState& state,
                 const LiftedEnvStrategy::Memory& mem) -> bool {
    UniKey key{state.sys, state.env, mem.anchor,
               state.turn == Player::System, state.last_move_was_pass};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (memo.size() > opts.max_states)
      throw BudgetError("universal verification exceeded the memo budget");

    bool result;
    if (state.turn == Player::Environment) {
      auto [move, mem2] = lifted.choose(state, mem);
      const bool is_pass = move == state.env;
      if (is_pass && state.last_move_was_pass) {
        result = !config_satisfies(state.sys, state.env, spec.victory);
      } else {
        GameState next = state;
        next.env = std::move(move);
        next.turn = Player::System;
        next.last_move_was_pass = is_pass;
        result = wins(next, mem2);
      }
    } else {
      result = true;
      for (const PlayerConfig& move :
           enumerate_moves(state.sys, spec, Player::System,
                           opts.plan_budget)) {
        const bool is_pass = move == state.sys;
        bool child;
        if (is_pass && state.last_move_was_pass) {
          child = !config_satisfies(state.sys, state.env, spec.victory);
        } else {
          GameState next = state;
          next.sys = move;
          next.turn = Player::Environment;
          next.last_move_was_pass = is_pass;
          child = wins(next, mem);
        }
        if (!child) {
          result = false;
          break;
        }
      }
    }
    memo[key] = result;
    return result;
  };

  LiftedEnvStrategy::Memory mem = lifted.initial_memory();
  GameState initial;
  initial.sys =
      PlayerConfig::all_at(spec.initial_location(Player::System), n_sys);
  initial.env = mem.base_env;
  initial.env.add(mem.anchor, 1);
  initial.turn = Player::Environment;
  initial.last_move_was_pass = false;
  return wins(initial, mem);
}

GridResult decide_grid(const GameSpec& spec, std::size_t cut,
                       std::optional<std::uint64_t> minind_override,
                       const SolveOptions& opts, std::size_t jobs) {
  GridResult grid;
  grid.cut = cut;
  grid.minind = minind_override ? *minind_override : compute_minind(spec);
  const std::uint64_t rows = grid.minind + 1;
  const std::uint64_t cols = cut + 1;
  if (rows * cols > 100000)
    throw BudgetError("grid of " + std::to_string(rows * cols) +
                      " cells is too large; pass a smaller cut or minind");
  grid.cells.assign(rows, std::vector<GridCell>(cols));

  std::atomic<std::uint64_t> next_cell{0};
  const std::uint64_t total = rows * cols;
  auto worker = [&]() {
    while (true) {
      const std::uint64_t cell = next_cell.fetch_add(1);
      if (cell >= total) return;
      const std::size_t ne = static_cast<std::size_t>(cell / cols);
      const std::size_t ns = static_cast<std::size_t>(cell % cols);
      try {
        grid.cells[ne][ns].winner = solve_winner(
            spec, static_cast<int>(ns), static_cast<int>(ne), opts);
      } catch (const BudgetError&) {
        grid.cells[ne][ns].winner = std::nullopt;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (const auto& row : grid.cells) {
    for (const auto& cell : row) {
      if (!cell.winner)
        ++grid.budget_exceeded_cells;
      else if (*cell.winner == Winner::System)
        grid.system_wins_somewhere = true;
    }
  }
  return grid;
}

ProbeResult probe_cut(const GameSpec& spec, std::size_t window,
                      std::size_t max_probe, const SolveOptions& opts) {
  if (window < 1) throw InputError("probe window must be >= 1");
  const std::uint64_t minind = compute_minind(spec);
  if (minind > 1000)
    throw BudgetError("probe over " + std::to_string(minind + 1) +
                      " rows is too large");
  std::map<std::pair<std::size_t, std::size_t>, Winner> cache;
  auto winner_at = [&](std::size_t ns, std::size_t ne) {
    auto key = std::make_pair(ns, ne);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Winner w =
        solve_winner(spec, static_cast<int>(ns), static_cast<int>(ne), opts);
    cache.emplace(key, w);
    return w;
  };
  for (std::size_t c = 0; c <= max_probe; ++c) {
    bool plateau = true;
    for (std::uint64_t ne = 0; ne <= minind && plateau; ++ne) {
      const Winner first = winner_at(c, static_cast<std::size_t>(ne));
      for (std::size_t w = 1; w < window; ++w) {
        if (winner_at(c + w, static_cast<std::size_t>(ne)) != first) {
          plateau = false;
          break;
        }
      }
    }
    if (plateau) return {c, true};
  }
  throw BudgetError("no winner plateau of width " + std::to_string(window) +
                    " found with nS <= " + std::to_string(max_probe));
}

}  // namespace dwsynth
