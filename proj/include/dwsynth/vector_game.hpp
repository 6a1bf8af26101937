#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dwsynth {

// A location is a count vector over one player's letters, componentwise
// in [0, B]. Pebbles only ever move "forward" (componentwise >=).
using Location = std::vector<int>;

enum class Player { System, Environment };
enum class Winner { System, Environment };

// Multiset of pebbles over locations: sorted sparse entries, zero counts
// omitted, so equal configurations have identical representations.
class PlayerConfig {
 public:
  PlayerConfig() = default;

  static PlayerConfig all_at(const Location& loc, int n);

  int count_at(const Location& loc) const;
  int total() const;
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<Location, int>>& entries() const {
    return entries_;
  }

  void add(const Location& loc, int n);  // n may be negative; keeps canon

  bool operator==(const PlayerConfig& other) const {
    return entries_ == other.entries_;
  }
  bool operator<(const PlayerConfig& other) const {
    return entries_ < other.entries_;
  }

 private:
  std::vector<std::pair<Location, int>> entries_;
};

struct LocationConstraint {
  enum class Kind { Eq, Geq };
  Kind kind = Kind::Geq;
  int bound = 0;

  bool satisfied_by(int count) const {
    return kind == Kind::Eq ? count == bound : count >= bound;
  }
};

// Conjunction of per-location constraints; unmentioned locations default
// to ">= 0" (always satisfied).
struct AcceptanceCondition {
  std::vector<std::pair<Location, LocationConstraint>> sys_constraints;
  std::vector<std::pair<Location, LocationConstraint>> env_constraints;
};

struct GameSpec {
  std::vector<std::string> sys_letters;
  std::vector<std::string> env_letters;
  int bound = 0;  // B
  std::vector<AcceptanceCondition> victory;  // disjunction; empty = no win

  std::size_t dim(Player p) const {
    return p == Player::System ? sys_letters.size() : env_letters.size();
  }
  Location initial_location(Player p) const {
    return Location(dim(p), 0);
  }
  // Largest constant occurring in the victory condition (0 if none).
  int max_constant() const;

  void validate() const;
};

struct GameState {
  PlayerConfig sys, env;
  Player turn = Player::Environment;
  bool last_move_was_pass = false;
};

// Componentwise >= test; reflexive. Throws on dimension mismatch.
bool reachable(const Location& from, const Location& to);

// All locations reachable from `from` (upward closure), in lexicographic
// order; includes `from` itself.
std::vector<Location> upward_closure(const Location& from, int bound);

// Immediate successors: exactly one coordinate bumped by one.
std::vector<Location> location_successors(const Location& loc, int bound);

// All configurations reachable from `conf` in one move, including `conf`
// itself (pass). Every pebble may move to any location reachable from its
// current one.
std::vector<PlayerConfig> enumerate_moves(const PlayerConfig& conf,
                                          const GameSpec& spec, Player player,
                                          std::size_t plan_budget = 2'000'000);

bool config_satisfies(const PlayerConfig& sys, const PlayerConfig& env,
                      const std::vector<AcceptanceCondition>& victory);

// Number of remaining pebble moves from `loc`: sum of (B - count_i).
int potential(const Location& loc, int bound);

// K * (d+1)^(d*B) with d the number of Environment letters; the threshold
// beyond which an extra Environment pebble never hurts Environment.
// Overflow past 64 bits is reported as an error.
std::uint64_t compute_minind(const GameSpec& spec);

// Pebbles in the upward closure of `loc`.
int num_after(const PlayerConfig& env_conf, const Location& loc);

// num_after(loc) >= K * (d+1)^potential(loc).
bool holds_P(const PlayerConfig& env_conf, const Location& loc, int k,
             const GameSpec& spec);

// Starting from `start` (default: the initial E-location), walks down
// successor locations while the local pebble count is below K, keeping
// the invariant P at every step. Returns a location with P and count >= K.
// Requires holds_P(env_conf, start).
Location find_anchor(const PlayerConfig& env_conf, int k,
                     const GameSpec& spec,
                     std::optional<Location> start = std::nullopt);

// Game file:
//   letters S = a b
//   letters E = c
//   bound = 2
//   accept:
//   S<1,0> >= 1
//   E<0> = 0
GameSpec load_game_file(const std::string& path);
GameSpec parse_game_file_text(const std::string& text);

}  // namespace dwsynth
