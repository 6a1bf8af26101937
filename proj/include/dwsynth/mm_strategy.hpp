#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dwsynth/minsky.hpp"
#include "dwsynth/strategies.hpp"

namespace dwsynth {

// System processes the honest strategy needs: one per inc step of the run
// (each increment lands on a fresh process), at least one overall.
std::size_t required_processes(const Run& run);

// A planned System move: action plus the index of the System process to
// play it on (resolved against the pool order at play time).
struct PlannedMove {
  std::string action;
  std::size_t proc_index = 0;

  bool operator==(const PlannedMove& other) const {
    return action == other.action && proc_index == other.proc_index;
  }
};

// The full move plan for a play: segment 0 is the opening oks, segment j
// (1-based) is the pattern state->transition->upkeep->oks for run step j,
// and the final segment is the lone halting-state letter. The strategy
// plays one segment per Environment acknowledgment.
struct SystemPlan {
  std::vector<std::vector<PlannedMove>> segments;
};

// Derives the plan from a halting run: pattern letters ride on process 0,
// each inc takes the next fresh process, each dec the first process
// carrying a matching inc without a dec yet.
SystemPlan plan_from_run(const MinskyMachine& m, const Run& run);

// Turns a plan into a strategy that additionally follows the protocol
// etiquette: after an Environment koe it stops; if Environment breaks the
// acknowledgment alternation it plays kos once and stops. The cheat test
// is a direct scan (one oke per unanswered oks), not the compiled
// formula. Pure function of the history.
SystemStrategy planned_system_strategy(SystemPlan plan,
                                       std::string name = "planned");

// The honest strategy for a halting run; rejects non-halting runs.
SystemStrategy strategy_from_run(const MinskyMachine& m, const Run& run);

// True iff Environment has broken the acknowledgment protocol in
// `history`: some oke without a pending unanswered oks before it.
bool env_broke_protocol(const DataWord& history);

}  // namespace dwsynth
