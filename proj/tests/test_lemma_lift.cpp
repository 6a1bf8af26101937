#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwsynth/errors.hpp"
#include "dwsynth/vg_solver.hpp"
#include "generators.hpp"

using namespace dwsynth;

TEST_CASE("lift on the degenerate B=0 lattice is the identity placement") {
  GameSpec spec = load_game_file("tests/fixtures/b0_one_env.vg");
  REQUIRE(compute_minind(spec) == 1);
  auto base = std::make_shared<SolvedGame>(spec, 0, 1, SolveOptions{});
  LiftedEnvStrategy lifted =
      lift_env_strategy(spec, 0, 1, table_strategy(base, Player::Environment));
  const Location only{0};  // a single letter pinned at zero
  auto mem = lifted.initial_memory();
  CHECK(mem.anchor == only);
  GameState state;
  state.sys = PlayerConfig::all_at(Location{0}, 0);
  state.env = PlayerConfig::all_at(only, 2);
  state.turn = Player::Environment;
  auto [move, mem2] = lifted.choose(state, mem);
  CHECK(move == PlayerConfig::all_at(only, 2));
  CHECK(mem2.anchor == only);
}

TEST_CASE("lift rejects pebble counts below minind") {
  GameSpec spec = load_game_file("tests/fixtures/s1e1.vg");
  REQUIRE(compute_minind(spec) == 2);
  auto base = std::make_shared<SolvedGame>(spec, 1, 1, SolveOptions{});
  CHECK_THROWS_AS(
      lift_env_strategy(spec, 1, 1, table_strategy(base, Player::Environment)),
      InputError);
}

TEST_CASE("small fixture: the lifted strategy beats every System behavior") {
  // d_E = 1, B = 1, K = 1, minind = 2; Environment wins at (1, 2) by
  // parking a pebble on the forbidden location.
  GameSpec spec = load_game_file("tests/fixtures/s1e1.vg");
  const int ns = 1, ne = 2;
  auto base = std::make_shared<SolvedGame>(spec, ns, ne, SolveOptions{});
  REQUIRE(base->winner() == Winner::Environment);
  LiftedEnvStrategy lifted = lift_env_strategy(
      spec, ns, ne, table_strategy(base, Player::Environment));

  // Against the solver's optimal System strategy of the bigger game.
  auto bigger = std::make_shared<SolvedGame>(spec, ns, ne + 1, SolveOptions{});
  PlayRecord rec =
      play_lifted(spec, ns, lifted, table_strategy(bigger, Player::System));
  CHECK(rec.winner == Winner::Environment);
  CHECK(rec.ended_by_double_pass);

  // And against every System behavior (exhaustive branching).
  CHECK(env_strategy_wins_all(spec, ns, lifted));
}

TEST_CASE("monotone winners above minind on random small games") {
  testgen::Rng rng(60304);
  int specs_checked = 0;
  std::size_t budget_cells = 0, total_cells = 0;
  while (specs_checked < 40) {
    GameSpec spec = testgen::random_game_spec(rng);
    std::uint64_t minind = compute_minind(spec);
    if (minind > 6) continue;  // keep the unit suite quick
    ++specs_checked;
    for (int ns = 0; ns <= 2; ++ns) {
      std::optional<Winner> prev;
      for (std::uint64_t ne = minind; ne <= minind + 3; ++ne) {
        ++total_cells;
        std::optional<Winner> cur;
        try {
          cur = solve_winner(spec, ns, static_cast<int>(ne));
        } catch (const BudgetError&) {
          ++budget_cells;
        }
        if (prev && cur && *prev == Winner::Environment)
          CHECK(*cur == Winner::Environment);
        prev = cur;
      }
    }
  }
  // The sample must be essentially fully solved to be meaningful.
  CHECK(budget_cells * 20 < total_cells);
}

TEST_CASE("constructive lift on a found Environment-winning game") {
  testgen::Rng rng(515);
  int verified = 0;
  while (verified < 5) {
    GameSpec spec = testgen::random_game_spec(rng);
    const std::uint64_t minind = compute_minind(spec);
    if (minind == 0 || minind > 4) continue;
    const int ne = static_cast<int>(minind);
    for (int ns = 0; ns <= 1 && verified < 5; ++ns) {
      auto base = std::make_shared<SolvedGame>(spec, ns, ne, SolveOptions{});
      if (base->winner() != Winner::Environment) continue;
      LiftedEnvStrategy lifted = lift_env_strategy(
          spec, ns, ne, table_strategy(base, Player::Environment));
      auto bigger =
          std::make_shared<SolvedGame>(spec, ns, ne + 1, SolveOptions{});
      PlayRecord rec = play_lifted(spec, ns, lifted,
                                   table_strategy(bigger, Player::System));
      CHECK(rec.winner == Winner::Environment);
      CHECK(env_strategy_wins_all(spec, ns, lifted));
      ++verified;
    }
  }
  CHECK(verified == 5);
}

TEST_CASE("lifted plays maintain the anchor invariants move by move") {
  GameSpec spec = load_game_file("tests/fixtures/s1e1.vg");
  const int ns = 2, ne = 2;
  auto base = std::make_shared<SolvedGame>(spec, ns, ne, SolveOptions{});
  REQUIRE(base->winner() == Winner::Environment);
  LiftedEnvStrategy lifted = lift_env_strategy(
      spec, ns, ne, table_strategy(base, Player::Environment));
  const int k = lifted.k();

  auto bigger = std::make_shared<SolvedGame>(spec, ns, ne + 1, SolveOptions{});
  auto sys = table_strategy(bigger, Player::System);

  GameState state;
  state.sys = PlayerConfig::all_at(spec.initial_location(Player::System), ns);
  auto mem = lifted.initial_memory();
  state.env = mem.base_env;
  state.env.add(mem.anchor, 1);
  state.turn = Player::Environment;
  state.last_move_was_pass = false;
  for (int move = 0; move < 40; ++move) {
    if (state.turn == Player::Environment) {
      auto [next, mem2] = lifted.choose(state, mem);
      // The anchor always carries at least K base pebbles and keeps P.
      CHECK(mem2.base_env.count_at(mem2.anchor) >= k);
      CHECK(holds_P(mem2.base_env, mem2.anchor, k, spec));
      // The lifted move is exactly the base move plus the extra pebble.
      PlayerConfig reconstructed = mem2.base_env;
      reconstructed.add(mem2.anchor, 1);
      CHECK(next == reconstructed);
      const bool pass = next == state.env;
      if (pass && state.last_move_was_pass) break;
      state.env = next;
      mem = mem2;
      state.turn = Player::System;
      state.last_move_was_pass = pass;
    } else {
      PlayerConfig next = sys(state);
      const bool pass = next == state.sys;
      if (pass && state.last_move_was_pass) break;
      state.sys = next;
      state.turn = Player::Environment;
      state.last_move_was_pass = pass;
    }
  }
  CHECK_FALSE(config_satisfies(state.sys, state.env, spec.victory));
}
