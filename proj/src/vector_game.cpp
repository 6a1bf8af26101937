#include "dwsynth/vector_game.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "dwsynth/errors.hpp"
#include "dwsynth/signature.hpp"

namespace dwsynth {

PlayerConfig PlayerConfig::all_at(const Location& loc, int n) {
  PlayerConfig c;
  if (n > 0) c.entries_.emplace_back(loc, n);
  return c;
}

int PlayerConfig::count_at(const Location& loc) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), loc,
      [](const auto& e, const Location& l) { return e.first < l; });
  if (it != entries_.end() && it->first == loc) return it->second;
  return 0;
}

int PlayerConfig::total() const {
  int t = 0;
  for (const auto& [loc, n] : entries_) t += n;
  return t;
}

void PlayerConfig::add(const Location& loc, int n) {
  if (n == 0) return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), loc,
      [](const auto& e, const Location& l) { return e.first < l; });
  if (it != entries_.end() && it->first == loc) {
    it->second += n;
    if (it->second == 0) entries_.erase(it);
    else if (it->second < 0)
      throw Error("pebble count went negative");
  } else {
    if (n < 0) throw Error("pebble count went negative");
    entries_.insert(it, {loc, n});
  }
}

int GameSpec::max_constant() const {
  int k = 0;
  for (const auto& cond : victory) {
    for (const auto& [loc, c] : cond.sys_constraints) k = std::max(k, c.bound);
    for (const auto& [loc, c] : cond.env_constraints) k = std::max(k, c.bound);
  }
  return k;
}

void GameSpec::validate() const {
  if (bound < 0) throw InputError("bound must be >= 0");
  for (const auto& side : {&sys_letters, &env_letters}) {
    for (const auto& l : *side)
      if (!Signature::valid_action_name(l))
        throw InputError("invalid letter name '" + l + "'");
    for (std::size_t i = 0; i < side->size(); ++i)
      for (std::size_t j = i + 1; j < side->size(); ++j)
        if ((*side)[i] == (*side)[j])
          throw InputError("duplicate letter '" + (*side)[i] + "'");
  }
  for (const auto& l : sys_letters)
    if (std::find(env_letters.begin(), env_letters.end(), l) !=
        env_letters.end())
      throw InputError("letter '" + l + "' declared for both players");
  auto check_constraints =
      [&](const std::vector<std::pair<Location, LocationConstraint>>& cs,
          std::size_t dim) {
        for (const auto& [loc, c] : cs) {
          if (loc.size() != dim)
            throw InputError("constraint location has wrong dimension");
          for (int v : loc)
            if (v < 0 || v > bound)
              throw InputError("constraint location outside [0,B]");
          if (c.bound < 0) throw InputError("constraint constant must be >= 0");
        }
      };
  for (const auto& cond : victory) {
    check_constraints(cond.sys_constraints, sys_letters.size());
    check_constraints(cond.env_constraints, env_letters.size());
  }
}

bool reachable(const Location& from, const Location& to) {
  if (from.size() != to.size())
    throw InputError("location dimension mismatch");
  for (std::size_t i = 0; i < from.size(); ++i)
    if (to[i] < from[i]) return false;
  return true;
}

std::vector<Location> upward_closure(const Location& from, int bound) {
  std::vector<Location> out;
  Location cur = from;
  while (true) {
    out.push_back(cur);
    // Next location >= `from` in lexicographic order.
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < bound) {
        ++cur[i];
        for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = from[j];
        break;
      }
      if (i == 0) return out;
    }
    if (cur.empty()) return out;  // zero-dimensional: only one location
  }
}

std::vector<Location> location_successors(const Location& loc, int bound) {
  std::vector<Location> out;
  for (std::size_t i = 0; i < loc.size(); ++i) {
    if (loc[i] < bound) {
      Location next = loc;
      ++next[i];
      out.push_back(std::move(next));
    }
  }
  return out;
}

namespace {

void distribute(const std::vector<Location>& targets, std::size_t idx,
                int pebbles, PlayerConfig& acc,
                const std::function<void(const PlayerConfig&)>& emit,
                std::size_t& plans, std::size_t plan_budget) {
  if (idx + 1 == targets.size()) {
    acc.add(targets[idx], pebbles);
    if (++plans > plan_budget)
      throw BudgetError("move enumeration exceeded its plan budget");
    emit(acc);
    acc.add(targets[idx], -pebbles);
    return;
  }
  for (int here = pebbles; here >= 0; --here) {
    if (here) acc.add(targets[idx], here);
    distribute(targets, idx + 1, pebbles - here, acc, emit, plans,
               plan_budget);
    if (here) acc.add(targets[idx], -here);
  }
}

}  // namespace

std::vector<PlayerConfig> enumerate_moves(const PlayerConfig& conf,
                                          const GameSpec& spec, Player player,
                                          std::size_t plan_budget) {
  const int bound = spec.bound;
  for (const auto& [loc, n] : conf.entries())
    if (loc.size() != spec.dim(player))
      throw InputError("configuration dimension does not match the player");
  std::set<PlayerConfig> out;
  std::size_t plans = 0;

  // Recurse over source locations; each location's pebbles spread over its
  // upward closure.
  std::function<void(std::size_t, PlayerConfig&)> rec =
      [&](std::size_t entry_idx, PlayerConfig& acc) {
        if (entry_idx == conf.entries().size()) {
          out.insert(acc);
          return;
        }
        const auto& [loc, n] = conf.entries()[entry_idx];
        const std::vector<Location> targets = upward_closure(loc, bound);
        distribute(
            targets, 0, n, acc,
            [&](const PlayerConfig&) { rec(entry_idx + 1, acc); }, plans,
            plan_budget);
      };
  PlayerConfig acc;
  rec(0, acc);
  return std::vector<PlayerConfig>(out.begin(), out.end());
}

bool config_satisfies(const PlayerConfig& sys, const PlayerConfig& env,
                      const std::vector<AcceptanceCondition>& victory) {
  for (const auto& cond : victory) {
    bool ok = true;
    for (const auto& [loc, c] : cond.sys_constraints) {
      if (!c.satisfied_by(sys.count_at(loc))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const auto& [loc, c] : cond.env_constraints) {
        if (!c.satisfied_by(env.count_at(loc))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

int potential(const Location& loc, int bound) {
  int p = 0;
  for (int v : loc) p += bound - v;
  return p;
}

std::uint64_t compute_minind(const GameSpec& spec) {
  const std::uint64_t k = static_cast<std::uint64_t>(spec.max_constant());
  if (k == 0) return 0;
  const std::uint64_t base = spec.env_letters.size() + 1;
  const std::uint64_t exponent =
      spec.env_letters.size() * static_cast<std::uint64_t>(spec.bound);
  std::uint64_t result = k;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (result > UINT64_MAX / base)
      throw BudgetError("minind overflows 64 bits (K=" + std::to_string(k) +
                        ", d=" + std::to_string(spec.env_letters.size()) +
                        ", B=" + std::to_string(spec.bound) + ")");
    result *= base;
  }
  return result;
}

int num_after(const PlayerConfig& env_conf, const Location& loc) {
  int sum = 0;
  for (const auto& [l, n] : env_conf.entries())
    if (reachable(loc, l)) sum += n;
  return sum;
}

namespace {

// K * (d+1)^pot, capped: anything past the cap cannot be met by a pebble
// count anyway.
std::uint64_t p_threshold(int k, std::size_t d, int pot) {
  std::uint64_t result = static_cast<std::uint64_t>(k);
  const std::uint64_t base = d + 1;
  for (int i = 0; i < pot; ++i) {
    if (result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

}  // namespace

bool holds_P(const PlayerConfig& env_conf, const Location& loc, int k,
             const GameSpec& spec) {
  const std::uint64_t threshold =
      p_threshold(k, spec.env_letters.size(), potential(loc, spec.bound));
  return static_cast<std::uint64_t>(num_after(env_conf, loc)) >= threshold;
}

Location find_anchor(const PlayerConfig& env_conf, int k,
                     const GameSpec& spec, std::optional<Location> start) {
  Location cur = start ? *start : spec.initial_location(Player::Environment);
  // With P at the start the counting step guarantees each descent exists;
  // getting stuck means the precondition was violated.
  while (env_conf.count_at(cur) < k) {
    bool descended = false;
    for (const Location& next : location_successors(cur, spec.bound)) {
      if (holds_P(env_conf, next, k, spec)) {
        cur = next;
        descended = true;
        break;
      }
    }
    if (!descended)
      throw InputError(
          "find_anchor: no successor satisfies P; the starting location did "
          "not satisfy it either");
  }
  return cur;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Location parse_location_vector(const std::string& text, std::size_t lineno) {
  // "<1,0>" -> {1,0}; "<>" -> {}
  if (text.size() < 2 || text.front() != '<' || text.back() != '>')
    throw InputError("line " + std::to_string(lineno) +
                     ": expected a location vector like S<1,0>");
  Location loc;
  std::string inner = text.substr(1, text.size() - 2);
  if (trim(inner).empty()) return loc;
  std::istringstream ss(inner);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument("");
      loc.push_back(v);
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(lineno) +
                       ": bad count '" + part + "' in location vector");
    }
  }
  return loc;
}

}  // namespace

GameSpec parse_game_file_text(const std::string& text) {
  GameSpec spec;
  bool saw_sys = false, saw_env = false, saw_bound = false;
  bool in_accept = false;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw InputError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("letters", 0) == 0) {
      std::istringstream ls(line);
      std::string kw, side, eq;
      ls >> kw >> side >> eq;
      if ((side != "S" && side != "E") || eq != "=")
        fail("expected `letters S = ...` or `letters E = ...`");
      std::vector<std::string> names;
      std::string name;
      while (ls >> name) names.push_back(name);
      if (side == "S") {
        if (saw_sys) fail("duplicate `letters S` line");
        saw_sys = true;
        spec.sys_letters = std::move(names);
      } else {
        if (saw_env) fail("duplicate `letters E` line");
        saw_env = true;
        spec.env_letters = std::move(names);
      }
    } else if (line.rfind("bound", 0) == 0) {
      std::istringstream ls(line);
      std::string kw, eq;
      int b;
      if (!(ls >> kw >> eq >> b) || eq != "=") fail("expected `bound = N`");
      if (saw_bound) fail("duplicate `bound` line");
      saw_bound = true;
      spec.bound = b;
    } else if (line == "accept:") {
      spec.victory.emplace_back();
      in_accept = true;
    } else if (line[0] == 'S' || line[0] == 'E') {
      if (!in_accept) fail("constraint line outside an accept: block");
      const bool sys_side = line[0] == 'S';
      std::size_t close = line.find('>', 1);
      if (close == std::string::npos) fail("expected `S<..> op n`");
      Location loc = parse_location_vector(line.substr(1, close), lineno);
      std::string rest = trim(line.substr(close + 1));
      LocationConstraint c;
      if (rest.rfind(">=", 0) == 0) {
        c.kind = LocationConstraint::Kind::Geq;
        rest = trim(rest.substr(2));
      } else if (rest.rfind("=", 0) == 0) {
        c.kind = LocationConstraint::Kind::Eq;
        rest = trim(rest.substr(1));
      } else {
        fail("expected `>=` or `=` after the location vector");
      }
      try {
        std::size_t used = 0;
        c.bound = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail("bad constraint constant '" + rest + "'");
      }
      auto& constraints = sys_side ? spec.victory.back().sys_constraints
                                   : spec.victory.back().env_constraints;
      for (const auto& [l, _] : constraints)
        if (l == loc) fail("duplicate constraint for one location");
      constraints.emplace_back(std::move(loc), c);
    } else {
      fail("unrecognized line '" + line + "'");
    }
  }
  if (!saw_sys || !saw_env)
    throw InputError("game file needs `letters S = ...` and `letters E = ...`");
  if (!saw_bound) throw InputError("game file needs a `bound = N` line");
  spec.validate();
  return spec;
}

GameSpec load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open game file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_game_file_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace dwsynth
