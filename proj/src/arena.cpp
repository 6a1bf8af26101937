#include "dwsynth/arena.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "dwsynth/errors.hpp"
#include "dwsynth/evaluate.hpp"
#include "dwsynth/structure.hpp"

namespace dwsynth {

SimResult simulate(const Signature& sig, const ProcessPools& pools,
                   const SystemStrategy& strat,
                   const EnvironmentPolicy& policy,
                   const ScheduleConfig& sched) {
  if (sched.max_rounds < 1 || sched.fairness_window < 1)
    throw InputError("schedule bounds must be >= 1");
  SimResult result;
  std::size_t env_streak = 0;  // consecutive env moves with System pending

  auto env_move_ok = [&](const Position& p, std::string& why) {
    if (!sig.is_env_action(p.action)) {
      why = "policy played non-Environment action '" + p.action + "'";
      return false;
    }
    if (!pools.env_playable(p.process)) {
      why = "policy played on unavailable process '" + p.process + "'";
      return false;
    }
    return true;
  };
  auto sys_move_ok = [&](const Position& p, std::string& why) {
    if (!sig.is_sys_action(p.action)) {
      why = "strategy played non-System action '" + p.action + "'";
      return false;
    }
    if (!pools.sys_playable(p.process)) {
      why = "strategy played on unavailable process '" + p.process + "'";
      return false;
    }
    return true;
  };

  while (result.rounds < sched.max_rounds) {
    ++result.rounds;
    Move env_move = policy.move(result.word, pools);
    Move sys_move = strat.move(result.word, pools);
    if (!env_move && !sys_move) {
      result.stop = StopReason::BothPassed;
      return result;
    }
    const bool force_system =
        sys_move && env_move && env_streak + 1 >= sched.fairness_window;
    if (env_move && !force_system) {
      std::string why;
      if (!env_move_ok(*env_move, why)) {
        result.stop = StopReason::OwnershipViolation;
        result.violation_by_env = true;
        result.violation_detail = why;
        return result;
      }
      result.word.push_back(*env_move);
      env_streak = sys_move ? env_streak + 1 : 0;
    } else {
      std::string why;
      if (!sys_move_ok(*sys_move, why)) {
        result.stop = StopReason::OwnershipViolation;
        result.violation_by_system = true;
        result.violation_detail = why;
        return result;
      }
      if (force_system) ++result.forced_moves;
      result.word.push_back(*sys_move);
      env_streak = 0;
    }
  }
  result.stop = StopReason::MaxRounds;
  return result;
}

std::string render_trace(const SimResult& sim, const ProcessPools& pools,
                         const std::string& extra) {
  std::ostringstream out;
  out << render_word_file(sim.word, pools);
  out << "# meta stop: "
      << (sim.stop == StopReason::BothPassed    ? "both-pass"
          : sim.stop == StopReason::MaxRounds   ? "round-cap"
                                                : "ownership-violation")
      << "\n";
  out << "# meta rounds: " << sim.rounds << "\n";
  out << "# meta forced-moves: " << sim.forced_moves << "\n";
  if (sim.violation_by_system || sim.violation_by_env)
    out << "# meta violation: " << sim.violation_detail << "\n";
  else
    out << "# meta violation: none\n";
  if (!extra.empty()) out << "# meta " << extra << "\n";
  return out.str();
}

EnvironmentPolicy blocker_policy() {
  return EnvironmentPolicy(
      "blocker", [](const DataWord&, const ProcessPools&) -> Move {
        return std::nullopt;
      });
}

EnvironmentPolicy scripted_policy(std::vector<ScriptToken> tokens) {
  auto fn = [tokens = std::move(tokens)](const DataWord& history,
                                         const ProcessPools& pools) -> Move {
    // Replay the script against the history to find the live token. Each
    // position of the history was preceded by one offer to Environment:
    // an Environment position means the token fired; a System position
    // means we passed that offer — consuming the token if it was a `pass`
    // whose wait condition (if any) was met, holding otherwise. A playing
    // token can also be left unconsumed when the scheduler forced
    // System's pending move through.
    std::size_t idx = 0;
    for (std::size_t j = 0; j < history.size() && idx < tokens.size(); ++j) {
      const Position& p = history[j];
      if (p.action == "oke" || p.action == "koe") {
        ++idx;
        continue;
      }
      const ScriptToken& tok = tokens[idx];
      const bool met =
          !tok.await_oks || (j > 0 && history[j - 1].action == "oks");
      if (tok.what == ScriptToken::What::Pass && met) ++idx;
    }
    if (idx >= tokens.size()) return std::nullopt;
    const ScriptToken& tok = tokens[idx];
    if (tok.await_oks &&
        (history.empty() || history.back().action != "oks"))
      return std::nullopt;
    if (tok.what == ScriptToken::What::Pass) return std::nullopt;
    std::string process = tok.process;
    if (process.empty()) {
      if (pools.env().empty()) return std::nullopt;
      process = pools.env()[0];
    }
    return Position{tok.what == ScriptToken::What::Oke ? "oke" : "koe",
                    process};
  };
  return EnvironmentPolicy("scripted", std::move(fn));
}

std::vector<ScriptToken> parse_script(const std::string& text) {
  std::vector<ScriptToken> tokens;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    ScriptToken tok;
    std::string body = part;
    if (!body.empty() && body[0] == '!') {
      tok.await_oks = true;
      body.erase(0, 1);
    }
    std::size_t at = body.find('@');
    if (at != std::string::npos) {
      tok.process = body.substr(at + 1);
      body.erase(at);
    }
    if (body == "oke")
      tok.what = ScriptToken::What::Oke;
    else if (body == "koe")
      tok.what = ScriptToken::What::Koe;
    else if (body == "pass")
      tok.what = ScriptToken::What::Pass;
    else
      throw InputError("unknown script token '" + part + "'");
    tokens.push_back(std::move(tok));
  }
  if (tokens.empty()) throw InputError("empty script");
  return tokens;
}

EnvironmentPolicy random_policy(std::uint64_t seed) {
  auto fn = [seed](const DataWord& history, const ProcessPools& pools) -> Move {
    if (pools.env().empty()) return std::nullopt;
    std::uint64_t h = seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull;
    h ^= history.size() * 0xBF58476D1CE4E5B9ull;
    for (const Position& p : history) {
      for (char c : p.action) h = h * 1099511628211ull + c;
      for (char c : p.process) h = h * 1099511628211ull + c;
    }
    std::mt19937_64 rng(h);
    // Play oke a bit less than half the time; never koe (an unjustified
    // koe forfeits the run-validity branch for both sides, see README).
    if (rng() % 5 < 2) return Position{"oke", pools.env()[0]};
    return std::nullopt;
  };
  return EnvironmentPolicy("random", std::move(fn));
}

EnvironmentPolicy compliant_env_policy(const CompiledSpec& spec) {
  auto fn = [spec](const DataWord& history, const ProcessPools& pools) -> Move {
    if (pools.env().empty()) return std::nullopt;
    for (const Position& p : history)
      if (p.action == "koe") return std::nullopt;  // already alleged, stop
    const WordStructure s = to_structure(history, pools, spec.signature);
    if (evaluate(spec.koe_justified, s))
      return Position{"koe", pools.env()[0]};
    if (!history.empty() && history.back().action == "oks")
      return Position{"oke", pools.env()[0]};
    return std::nullopt;
  };
  return EnvironmentPolicy("compliant", std::move(fn));
}

EnvironmentPolicy compliant_env_policy(const MinskyMachine& machine,
                                       const CompileOptions& opts) {
  return compliant_env_policy(compile_to_fo2_ord(machine, opts));
}

VerifyReport verify_play(const Formula& spec, const Signature& sig,
                         const ProcessPools& pools,
                         const SystemStrategy& strat,
                         const std::vector<EnvironmentPolicy>& policies,
                         const ScheduleConfig& sched) {
  VerifyReport report;
  if (policies.empty()) {
    report.vacuous = true;
    report.all_satisfied = true;
    return report;
  }
  report.all_satisfied = true;
  for (const auto& policy : policies) {
    PolicyOutcome out;
    out.policy = policy.name();
    out.sim = simulate(sig, pools, strat, policy, sched);
    out.compatible = check_compatibility(out.sim.word, strat, pools, sig);
    out.fair = check_fairness_window(out.sim.word, strat, pools, sig,
                                     sched.fairness_window);
    out.satisfied = evaluate(spec, to_structure(out.sim.word, pools, sig));
    report.all_satisfied = report.all_satisfied && out.satisfied;
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

}  // namespace dwsynth
