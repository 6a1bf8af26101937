#include "dwsynth/mm_strategy.hpp"

#include <algorithm>

#include "dwsynth/errors.hpp"

namespace dwsynth {

std::size_t required_processes(const Run& run) {
  std::size_t incs = 0;
  // Configs track the kind through the step relation: an inc step raises
  // the counter sum by one.
  for (std::size_t j = 0; j + 1 < run.configs.size(); ++j) {
    const auto& a = run.configs[j];
    const auto& b = run.configs[j + 1];
    if (b.v0 + b.v1 == a.v0 + a.v1 + 1) ++incs;
  }
  return std::max<std::size_t>(1, incs);
}

SystemPlan plan_from_run(const MinskyMachine& m, const Run& run) {
  SystemPlan plan;
  plan.segments.push_back({{"oks", 0}});
  std::vector<bool> has_inc[2], has_dec[2];
  std::size_t next_fresh = 0;
  for (std::size_t j = 0; j < run.transitions.size(); ++j) {
    const Transition& t = m.transition(run.transitions[j]);
    const std::string& src = run.configs[j].state;
    PlannedMove upkeep;
    switch (t.kind) {
      case TransitionKind::Inc: {
        const std::size_t idx = next_fresh++;
        for (auto* v : {&has_inc[0], &has_inc[1], &has_dec[0], &has_dec[1]})
          if (v->size() <= idx) v->resize(idx + 1, false);
        has_inc[t.counter][idx] = true;
        upkeep = {"inc" + std::to_string(t.counter), idx};
        break;
      }
      case TransitionKind::Dec: {
        std::size_t idx = has_inc[t.counter].size();
        for (std::size_t i = 0; i < has_inc[t.counter].size(); ++i) {
          if (has_inc[t.counter][i] && !has_dec[t.counter][i]) {
            idx = i;
            break;
          }
        }
        if (idx == has_inc[t.counter].size())
          throw Error("plan_from_run: no open increment for a decrement");
        has_dec[t.counter][idx] = true;
        upkeep = {"dec" + std::to_string(t.counter), idx};
        break;
      }
      case TransitionKind::Zero:
        upkeep = {"noop", 0};
        break;
    }
    plan.segments.push_back(
        {{src, 0}, {t.name, 0}, upkeep, {"oks", 0}});
  }
  plan.segments.push_back({{run.configs.back().state, 0}});
  return plan;
}

bool env_broke_protocol(const DataWord& history) {
  bool pending = false;
  for (const Position& pos : history) {
    if (pos.action == "oks") {
      pending = true;
    } else if (pos.action == "oke") {
      if (!pending) return true;
      pending = false;
    }
  }
  return false;
}

SystemStrategy planned_system_strategy(SystemPlan plan, std::string name) {
  auto fn = [plan = std::move(plan)](const DataWord& history,
                                     const ProcessPools& pools) -> Move {
    auto played = [&](const char* action) {
      return std::any_of(history.begin(), history.end(),
                         [&](const Position& p) { return p.action == action; });
    };
    // Stop for good once Environment alleges a cheat.
    if (played("koe")) return std::nullopt;
    // Report a broken acknowledgment protocol once, then stop.
    if (env_broke_protocol(history)) {
      if (played("kos") || pools.sys().empty()) return std::nullopt;
      return Position{"kos", pools.sys()[0]};
    }
    // Segment = number of acknowledgments so far; progress within the
    // segment = System letters since the last oke.
    std::size_t seg = 0;
    std::size_t progress = 0;
    for (const Position& pos : history) {
      if (pos.action == "oke") {
        ++seg;
        progress = 0;
      } else if (pos.action != "koe") {
        ++progress;  // System letter (ownership enforced by the arena)
      }
    }
    if (seg >= plan.segments.size()) return std::nullopt;
    const auto& segment = plan.segments[seg];
    if (progress >= segment.size()) return std::nullopt;
    const PlannedMove& mv = segment[progress];
    if (mv.proc_index >= pools.sys().size()) return std::nullopt;
    return Position{mv.action, pools.sys()[mv.proc_index]};
  };
  return SystemStrategy(std::move(name), std::move(fn));
}

SystemStrategy strategy_from_run(const MinskyMachine& m, const Run& run) {
  if (!run.halting)
    throw InputError("strategy_from_run requires a halting run");
  return planned_system_strategy(plan_from_run(m, run), "run-replay");
}

}  // namespace dwsynth
