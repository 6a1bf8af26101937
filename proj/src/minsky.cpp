#include "dwsynth/minsky.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dwsynth/errors.hpp"
#include "dwsynth/signature.hpp"

namespace dwsynth {

namespace {

const std::array<const char*, 9> kFixedLetters = {
    "inc0", "dec0", "inc1", "dec1", "noop", "oks", "kos", "oke", "koe"};

bool is_fixed_letter(const std::string& s) {
  return std::any_of(kFixedLetters.begin(), kFixedLetters.end(),
                     [&](const char* w) { return s == w; });
}

void check_name(const std::string& name, const char* what) {
  if (!Signature::valid_action_name(name))
    throw InputError(std::string(what) + " name '" + name +
                     "' is not a valid action identifier");
  if (is_fixed_letter(name))
    throw InputError(std::string(what) + " name '" + name +
                     "' collides with a fixed letter of the encoding");
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

MinskyMachine::MinskyMachine(std::vector<std::string> states,
                             std::string initial, std::string halting,
                             std::vector<Transition> transitions)
    : states_(std::move(states)),
      initial_(std::move(initial)),
      halting_(std::move(halting)),
      transitions_(std::move(transitions)) {
  if (states_.empty()) throw InputError("machine has no states");
  for (const auto& q : states_) check_name(q, "state");
  for (std::size_t i = 0; i < states_.size(); ++i)
    for (std::size_t j = i + 1; j < states_.size(); ++j)
      if (states_[i] == states_[j])
        throw InputError("duplicate state '" + states_[i] + "'");
  if (!has_state(initial_))
    throw InputError("initial state '" + initial_ + "' is not declared");
  if (!has_state(halting_))
    throw InputError("halting state '" + halting_ + "' is not declared");
  for (const auto& t : transitions_) {
    check_name(t.name, "transition");
    if (std::find(states_.begin(), states_.end(), t.name) != states_.end())
      throw InputError("transition name '" + t.name + "' is also a state");
    if (!has_state(t.source))
      throw InputError("transition '" + t.name + "': unknown source state '" +
                       t.source + "'");
    if (!has_state(t.target))
      throw InputError("transition '" + t.name + "': unknown target state '" +
                       t.target + "'");
    if (t.counter != 0 && t.counter != 1)
      throw InputError("transition '" + t.name + "': counter must be 0 or 1");
  }
  for (std::size_t i = 0; i < transitions_.size(); ++i)
    for (std::size_t j = i + 1; j < transitions_.size(); ++j)
      if (transitions_[i].name == transitions_[j].name)
        throw InputError("duplicate transition '" + transitions_[i].name +
                         "'");
}

const Transition& MinskyMachine::transition(const std::string& name) const {
  for (const auto& t : transitions_)
    if (t.name == name) return t;
  throw StepError(StepErrorKind::UnknownTransition,
                  "unknown transition '" + name + "'");
}

bool MinskyMachine::has_state(const std::string& name) const {
  return std::find(states_.begin(), states_.end(), name) != states_.end();
}

MachineConfig step(const MinskyMachine& m, const MachineConfig& cfg,
                   const std::string& transition_name) {
  const Transition& t = m.transition(transition_name);
  if (t.source != cfg.state)
    throw StepError(StepErrorKind::WrongSourceState,
                    "transition '" + t.name + "' starts in '" + t.source +
                        "' but the machine is in '" + cfg.state + "'");
  MachineConfig next = cfg;
  next.state = t.target;
  std::int64_t& v = t.counter == 0 ? next.v0 : next.v1;
  switch (t.kind) {
    case TransitionKind::Inc:
      v += 1;
      break;
    case TransitionKind::Dec:
      if (v == 0)
        throw StepError(StepErrorKind::DecrementAtZero,
                        "transition '" + t.name + "' decrements counter c" +
                            std::to_string(t.counter) + " at zero");
      v -= 1;
      break;
    case TransitionKind::Zero:
      if (v != 0)
        throw StepError(StepErrorKind::ZeroTestNonzero,
                        "transition '" + t.name + "' tests counter c" +
                            std::to_string(t.counter) + " for zero but it is " +
                            std::to_string(v));
      break;
  }
  return next;
}

Run run_machine(const MinskyMachine& m,
                const std::vector<std::string>& transition_names) {
  Run r;
  r.transitions = transition_names;
  r.configs.push_back({m.initial_state(), 0, 0});
  for (std::size_t i = 0; i < transition_names.size(); ++i) {
    try {
      r.configs.push_back(step(m, r.configs.back(), transition_names[i]));
    } catch (const StepError& e) {
      throw StepError(e.kind(),
                      "step " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  r.halting = r.configs.back().state == m.halting_state();
  return r;
}

std::optional<Run> bounded_halting_search(const MinskyMachine& m,
                                          std::size_t max_steps,
                                          std::size_t visited_budget) {
  struct Key {
    std::string state;
    std::int64_t v0, v1;
    bool operator==(const Key& o) const {
      return state == o.state && v0 == o.v0 && v1 == o.v1;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<std::string>()(k.state);
      h = h * 1000003 + static_cast<std::size_t>(k.v0);
      h = h * 1000003 + static_cast<std::size_t>(k.v1);
      return h;
    }
  };
  struct Entry {
    Key key;
    std::size_t depth;
    std::int64_t idx;  // position of key in `order`
  };
  // parent[key] = (parent key index, transition taken)
  std::unordered_map<Key, std::pair<std::int64_t, std::string>, KeyHash>
      parent;
  std::deque<Entry> queue;
  std::vector<Key> order;

  const Key start{m.initial_state(), 0, 0};
  parent[start] = {-1, ""};
  order.push_back(start);
  queue.push_back({start, 0, 0});

  auto reconstruct = [&](Key key) {
    std::vector<std::string> names;
    while (true) {
      auto& [parent_idx, trans] = parent[key];
      if (parent_idx < 0) break;
      names.push_back(trans);
      key = order[static_cast<std::size_t>(parent_idx)];
    }
    std::reverse(names.begin(), names.end());
    return run_machine(m, names);
  };

  if (start.state == m.halting_state()) return reconstruct(start);

  while (!queue.empty()) {
    Entry cur = queue.front();
    queue.pop_front();
    if (cur.depth == max_steps) continue;
    const std::int64_t cur_idx = cur.idx;
    for (const Transition& t : m.transitions()) {
      if (t.source != cur.key.state) continue;
      MachineConfig cfg{cur.key.state, cur.key.v0, cur.key.v1};
      MachineConfig next;
      try {
        next = step(m, cfg, t.name);
      } catch (const StepError&) {
        continue;
      }
      Key nk{next.state, next.v0, next.v1};
      if (parent.count(nk)) continue;
      if (parent.size() >= visited_budget)
        throw BudgetError("halting search exceeded visited budget of " +
                          std::to_string(visited_budget));
      parent[nk] = {cur_idx, t.name};
      order.push_back(nk);
      if (nk.state == m.halting_state()) return reconstruct(nk);
      queue.push_back({nk, cur.depth + 1,
                       static_cast<std::int64_t>(order.size() - 1)});
    }
  }
  return std::nullopt;
}

MinskyMachine parse_machine_file_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> states;
  std::string init, halt;
  std::vector<Transition> transitions;
  bool saw_states = false, saw_init = false, saw_halt = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    auto fail = [&](const std::string& msg) -> void {
      throw InputError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (head == "states") {
      std::string s;
      while (ls >> s) states.push_back(s);
      if (states.empty()) fail("`states` needs at least one name");
      saw_states = true;
    } else if (head == "init") {
      if (!(ls >> init)) fail("`init` needs a state name");
      saw_init = true;
    } else if (head == "halt") {
      if (!(ls >> halt)) fail("`halt` needs a state name");
      saw_halt = true;
    } else {
      // t0: i -> i inc c0
      if (head.empty() || head.back() != ':')
        fail("expected `name: src -> tgt kind counter`");
      Transition t;
      t.name = head.substr(0, head.size() - 1);
      std::string src, arrow, tgt, kind, counter;
      if (!(ls >> src >> arrow >> tgt >> kind >> counter) || arrow != "->")
        fail("expected `name: src -> tgt kind counter`");
      t.source = src;
      t.target = tgt;
      if (kind == "inc")
        t.kind = TransitionKind::Inc;
      else if (kind == "dec")
        t.kind = TransitionKind::Dec;
      else if (kind == "zero")
        t.kind = TransitionKind::Zero;
      else
        fail("unknown transition kind '" + kind + "' (inc, dec or zero)");
      if (counter == "c0")
        t.counter = 0;
      else if (counter == "c1")
        t.counter = 1;
      else
        fail("unknown counter '" + counter + "' (c0 or c1)");
      std::string extra;
      if (ls >> extra) fail("trailing input '" + extra + "'");
      transitions.push_back(std::move(t));
    }
  }
  if (!saw_states) throw InputError("machine file has no `states` line");
  if (!saw_init) throw InputError("machine file has no `init` line");
  if (!saw_halt) throw InputError("machine file has no `halt` line");
  return MinskyMachine(std::move(states), std::move(init), std::move(halt),
                       std::move(transitions));
}

MinskyMachine load_machine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open machine file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_machine_file_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace dwsynth
