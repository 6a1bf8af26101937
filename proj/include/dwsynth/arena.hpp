#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwsynth/formula.hpp"
#include "dwsynth/mm_compile.hpp"
#include "dwsynth/strategies.hpp"

namespace dwsynth {

struct ScheduleConfig {
  std::size_t max_rounds = 512;
  // Environment may grab strictly fewer than this many consecutive turns
  // while System has a pending move; then the pending move is forced
  // through. Guarantees every produced word passes the fairness check at
  // exactly this window.
  std::size_t fairness_window = 8;
};

enum class StopReason { BothPassed, MaxRounds, OwnershipViolation };

struct SimResult {
  DataWord word;
  StopReason stop = StopReason::BothPassed;
  std::size_t rounds = 0;
  std::size_t forced_moves = 0;
  bool violation_by_system = false;
  bool violation_by_env = false;
  std::string violation_detail;
};

// Round scheduler: each round first offers Environment a move; System's
// pending move is taken when Environment passes, or forced when
// Environment has been hogging the turn. Stops on double pass, the round
// cap, or an ownership violation (recorded, not thrown).
SimResult simulate(const Signature& sig, const ProcessPools& pools,
                   const SystemStrategy& strat,
                   const EnvironmentPolicy& policy,
                   const ScheduleConfig& sched = {});

// Word file plus `# meta` trailer lines; still loadable as a word file.
std::string render_trace(const SimResult& sim, const ProcessPools& pools,
                         const std::string& extra = "");

// --- built-in Environment policies --------------------------------------

// Never moves.
EnvironmentPolicy blocker_policy();

// Plays scripted moves, one per offer, then passes forever. Tokens:
//   oke | koe | pass        play that move (on the first E process) / pass
//   !oke | !koe | !pass     hold (pass) until the history ends with oks,
//                           then the token fires
// A trailing `@process` overrides the process, e.g. `oke@e`.
struct ScriptToken {
  enum class What { Pass, Oke, Koe } what = What::Pass;
  bool await_oks = false;
  std::string process;  // empty: first Environment process
};
EnvironmentPolicy scripted_policy(std::vector<ScriptToken> tokens);
std::vector<ScriptToken> parse_script(const std::string& text);

// Seeded coin-flip between passing and playing oke; a pure function of
// (seed, history), so identical seeds give identical plays.
EnvironmentPolicy random_policy(std::uint64_t seed);

// The referee opponent for a compiled machine specification: acknowledges
// each oks with one oke while the cheat formula is false, plays koe once
// as soon as it holds, and stops afterwards.
EnvironmentPolicy compliant_env_policy(const MinskyMachine& machine,
                                       const CompileOptions& opts = {});
EnvironmentPolicy compliant_env_policy(const CompiledSpec& spec);

// --- sampled verification ------------------------------------------------

struct PolicyOutcome {
  std::string policy;
  SimResult sim;
  bool compatible = false;
  bool fair = false;
  bool satisfied = false;
};

struct VerifyReport {
  std::vector<PolicyOutcome> outcomes;
  bool all_satisfied = false;
  bool vacuous = false;  // empty policy list
};

// Plays the strategy against each policy and model-checks the produced
// word. A clean report means "no falsifying policy found" — it samples
// executions, it does not prove the strategy winning.
VerifyReport verify_play(const Formula& spec, const Signature& sig,
                         const ProcessPools& pools,
                         const SystemStrategy& strat,
                         const std::vector<EnvironmentPolicy>& policies,
                         const ScheduleConfig& sched = {});

}  // namespace dwsynth
