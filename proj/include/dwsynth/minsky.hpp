#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dwsynth {

enum class TransitionKind { Inc, Dec, Zero };

struct Transition {
  std::string name;
  std::string source;
  std::string target;
  TransitionKind kind;
  int counter;  // 0 or 1
};

// Two-counter Minsky machine. State and transition names double as
// action names in the compiled specification, so they must be valid
// action identifiers, mutually distinct, and must avoid the fixed
// letters inc0, dec0, inc1, dec1, noop, oks, kos, oke, koe.
class MinskyMachine {
 public:
  MinskyMachine(std::vector<std::string> states, std::string initial,
                std::string halting, std::vector<Transition> transitions);

  const std::vector<std::string>& states() const { return states_; }
  const std::string& initial_state() const { return initial_; }
  const std::string& halting_state() const { return halting_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  const Transition& transition(const std::string& name) const;
  bool has_state(const std::string& name) const;

 private:
  std::vector<std::string> states_;
  std::string initial_;
  std::string halting_;
  std::vector<Transition> transitions_;
};

struct MachineConfig {
  std::string state;
  std::int64_t v0 = 0;
  std::int64_t v1 = 0;

  bool operator==(const MachineConfig& other) const {
    return state == other.state && v0 == other.v0 && v1 == other.v1;
  }
};

// A validated transition sequence together with the configurations it
// induces from (initial, 0, 0). configs.size() == transitions.size()+1.
struct Run {
  std::vector<std::string> transitions;
  std::vector<MachineConfig> configs;
  bool halting = false;
};

// One step of the machine; throws StepError (wrong source state,
// decrement at zero, zero test at nonzero, unknown transition).
MachineConfig step(const MinskyMachine& m, const MachineConfig& cfg,
                   const std::string& transition_name);

// Folds `step` from the initial configuration; a StepError gains the
// index of the offending step.
Run run_machine(const MinskyMachine& m,
                const std::vector<std::string>& transition_names);

// Breadth-first search for a shortest halting run of length <= max_steps;
// visited set keyed on (state, v0, v1). Counter values never exceed the
// step budget, so the search space is finite.
std::optional<Run> bounded_halting_search(const MinskyMachine& m,
                                          std::size_t max_steps,
                                          std::size_t visited_budget =
                                              5'000'000);

// Machine file:
//   states i q1 q2 h
//   init i
//   halt h
//   t0: i -> i inc c0
//   t3: q2 -> h zero c0
MinskyMachine load_machine_file(const std::string& path);
MinskyMachine parse_machine_file_text(const std::string& text);

}  // namespace dwsynth
