#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwsynth/arena.hpp"
#include "dwsynth/evaluate.hpp"
#include "dwsynth/structure.hpp"
#include "generators.hpp"
#include "harness.hpp"

using namespace dwsynth;
using namespace dwsynth::testharness;

namespace {

MinskyMachine paper_machine() {
  return load_machine_file("tests/fixtures/paper_machine.mm");
}

struct Fixture {
  MinskyMachine machine = paper_machine();
  CompiledSpec spec = compile_to_fo2_ord(machine);
  Run run = run_machine(machine, {"t0", "t0", "t1", "t2", "t3"});
  SystemStrategy honest = strategy_from_run(machine, run);

  bool sat(const Formula& f, const DataWord& w,
           const ProcessPools& pools) const {
    return evaluate(f, to_structure(w, pools, spec.signature));
  }
};

}  // namespace

TEST_CASE("honest strategy vs compliant environment replays the fixture") {
  Fixture fx;
  ProcessPools pools({"0", "1"}, {"e"});
  SimResult sim = simulate(fx.spec.signature, pools, fx.honest,
                           compliant_env_policy(fx.spec));
  CHECK(sim.stop == StopReason::BothPassed);
  auto [expected, expected_pools] =
      load_word_file("tests/fixtures/paper_word.dw");
  CHECK(sim.word == expected);
  CHECK(fx.sat(fx.spec.win_condition, sim.word, pools));
}

TEST_CASE("blocker: the word ends on the unacknowledged oks") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  SimResult sim =
      simulate(fx.spec.signature, pools, fx.honest, blocker_policy());
  REQUIRE(sim.word.size() == 1);
  CHECK(sim.word.back().action == "oks");
  CHECK(fx.sat(fx.spec.env_stalled, sim.word, pools));
  CHECK(fx.sat(fx.spec.win_condition, sim.word, pools));
}

TEST_CASE("double oke draws the kos report and wins") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  SimResult sim = simulate(fx.spec.signature, pools, fx.honest,
                           scripted_policy(parse_script("!oke,oke")));
  REQUIRE(sim.word.size() >= 4);
  CHECK(sim.word.back().action == "kos");
  CHECK(fx.sat(fx.spec.kos_justified, sim.word, pools));
  CHECK(fx.sat(fx.spec.win_condition, sim.word, pools));
}

TEST_CASE("environment cheat classes all lose against the honest strategy") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  for (const EnvCheatCase& c : env_cheat_cases()) {
    CAPTURE(c.name);
    SimResult sim = simulate(fx.spec.signature, pools, fx.honest,
                             scripted_policy(parse_script(c.script)));
    const bool kos_played =
        std::any_of(sim.word.begin(), sim.word.end(),
                    [](const Position& p) { return p.action == "kos"; });
    CHECK(kos_played == c.expect_kos);
    CHECK(fx.sat(fx.spec.win_condition, sim.word, pools));
  }
}

TEST_CASE("an oke after the report is an immediate loss for Environment") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  SimResult sim =
      simulate(fx.spec.signature, pools, fx.honest,
               scripted_policy(parse_script("!oke,oke,pass,oke")));
  REQUIRE(!sim.word.empty());
  CHECK(sim.word.back().action == "oke");
  CHECK(fx.sat(fx.spec.env_moved_after_ko, sim.word, pools));
  CHECK(fx.sat(fx.spec.win_condition, sim.word, pools));
}

TEST_CASE("system cheat classes: compliant environment koes, formula fails") {
  Fixture fx;
  for (const SysCheatCase& c : system_cheat_cases(fx.machine)) {
    CAPTURE(c.name);
    ProcessPools pools = make_pools(c.n_sys);
    SystemStrategy cheater = planned_system_strategy(c.plan, c.name);
    SimResult sim = simulate(fx.spec.signature, pools, cheater,
                             compliant_env_policy(fx.spec));
    const bool koe_played =
        std::any_of(sim.word.begin(), sim.word.end(),
                    [](const Position& p) { return p.action == "koe"; });
    CHECK(koe_played == c.expect_koe);
    CHECK_FALSE(fx.sat(fx.spec.win_condition, sim.word, pools));
    CHECK(fx.sat(detector_formula(fx.spec, c.detector), sim.word, pools));
  }
}

TEST_CASE("every simulated word is compatible and window-fair") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  ScheduleConfig sched;
  std::vector<EnvironmentPolicy> policies = {
      compliant_env_policy(fx.spec), blocker_policy(),
      scripted_policy(parse_script("!oke,pass,oke"))};
  for (int seed = 0; seed < 10; ++seed)
    policies.push_back(random_policy(seed));
  for (const auto& policy : policies) {
    SimResult sim =
        simulate(fx.spec.signature, pools, fx.honest, policy, sched);
    CHECK(check_compatibility(sim.word, fx.honest, pools,
                              fx.spec.signature));
    CHECK(check_fairness_window(sim.word, fx.honest, pools,
                                fx.spec.signature, sched.fairness_window));
  }
}

TEST_CASE("compliant environment never koes an honest play") {
  Fixture fx;
  testgen::Rng rng(4242);
  // The fixture machine plus random machines with reachable halting runs.
  std::vector<MinskyMachine> machines = {fx.machine};
  while (machines.size() < 4) {
    MinskyMachine m = testgen::random_machine(rng);
    if (bounded_halting_search(m, 32).has_value()) machines.push_back(m);
  }
  for (const auto& m : machines) {
    auto run = bounded_halting_search(m, 32);
    REQUIRE(run.has_value());
    CompiledSpec spec = compile_to_fo2_ord(m);
    ProcessPools pools = make_pools(required_processes(*run));
    SimResult sim = simulate(spec.signature, pools, strategy_from_run(m, *run),
                             compliant_env_policy(spec));
    for (const Position& p : sim.word) CHECK(p.action != "koe");
    CHECK(evaluate(spec.win_condition,
                   to_structure(sim.word, pools, spec.signature)));
  }
}

TEST_CASE("identical seeds give identical plays") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  SimResult a =
      simulate(fx.spec.signature, pools, fx.honest, random_policy(7));
  SimResult b =
      simulate(fx.spec.signature, pools, fx.honest, random_policy(7));
  SimResult c =
      simulate(fx.spec.signature, pools, fx.honest, random_policy(8));
  CHECK(a.word == b.word);
  CHECK(a.rounds == b.rounds);
  // Different seeds usually differ; these two do.
  CHECK(a.word != c.word);
}

TEST_CASE("ownership violations stop the play and are flagged") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  EnvironmentPolicy rogue("rogue",
                          [](const DataWord&, const ProcessPools& p) -> Move {
                            return Position{"oke", p.sys()[0]};
                          });
  SimResult sim = simulate(fx.spec.signature, pools, fx.honest, rogue);
  CHECK(sim.stop == StopReason::OwnershipViolation);
  CHECK(sim.violation_by_env);
  SystemStrategy rogue_sys("rogue-sys",
                           [](const DataWord&, const ProcessPools& p) -> Move {
                             return Position{"oks", p.env()[0]};
                           });
  SimResult sim2 = simulate(fx.spec.signature, pools, rogue_sys,
                            blocker_policy());
  CHECK(sim2.stop == StopReason::OwnershipViolation);
  CHECK(sim2.violation_by_system);
}

TEST_CASE("the fairness scheduler forces a hogged System move through") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  // Environment acknowledges once, then spams okes; the strategy answers
  // with kos, which must land despite the spam.
  SimResult sim = simulate(fx.spec.signature, pools, fx.honest,
                           scripted_policy(parse_script(
                               "!oke,oke,oke,oke,oke,oke,oke,oke,oke,oke")),
                           {64, 4});
  const bool kos_played =
      std::any_of(sim.word.begin(), sim.word.end(),
                  [](const Position& p) { return p.action == "kos"; });
  CHECK(kos_played);
  CHECK(check_fairness_window(sim.word, fx.honest, pools, fx.spec.signature,
                              4));
  CHECK(sim.forced_moves >= 1);
}

TEST_CASE("verify_play: honest suite is clean, empty suite is vacuous") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  std::vector<EnvironmentPolicy> suite = {
      compliant_env_policy(fx.spec), blocker_policy(),
      scripted_policy(parse_script("!oke,pass,oke")), random_policy(3)};
  VerifyReport report = verify_play(fx.spec.win_condition, fx.spec.signature,
                                    pools, fx.honest, suite);
  CHECK(report.all_satisfied);
  CHECK_FALSE(report.vacuous);
  CHECK(report.outcomes.size() == 4);
  for (const auto& o : report.outcomes) {
    CHECK(o.compatible);
    CHECK(o.fair);
    CHECK(o.satisfied);
  }
  VerifyReport empty = verify_play(fx.spec.win_condition, fx.spec.signature,
                                   pools, fx.honest, {});
  CHECK(empty.vacuous);

  // A cheating strategy is caught by the compliant policy in the suite.
  auto cheats = system_cheat_cases(fx.machine);
  const SysCheatCase& s6 = cheats[5];
  REQUIRE(s6.name == "S6-double-inc");
  VerifyReport bad = verify_play(
      fx.spec.win_condition, fx.spec.signature, make_pools(s6.n_sys),
      planned_system_strategy(s6.plan, s6.name),
      {compliant_env_policy(fx.spec)});
  CHECK_FALSE(bad.all_satisfied);
}

TEST_CASE("trace rendering stays loadable as a word file") {
  Fixture fx;
  ProcessPools pools = make_pools(2);
  SimResult sim = simulate(fx.spec.signature, pools, fx.honest,
                           compliant_env_policy(fx.spec));
  const std::string trace = render_trace(sim, pools, "policy: compliant");
  auto parsed = parse_word_file_text(trace);
  CHECK(parsed.word == sim.word);
}
