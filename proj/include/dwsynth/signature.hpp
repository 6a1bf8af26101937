#pragma once

#include <string>
#include <vector>

namespace dwsynth {

// Action alphabet, partitioned into System and Environment actions.
// Declaration order is kept: it fixes the order of generated disjunctions
// and of letter vectors, so everything downstream stays deterministic.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<std::string> sys_actions,
            std::vector<std::string> env_actions);

  const std::vector<std::string>& sys_actions() const { return sys_; }
  const std::vector<std::string>& env_actions() const { return env_; }

  bool is_sys_action(const std::string& name) const;
  bool is_env_action(const std::string& name) const;
  bool contains(const std::string& name) const {
    return is_sys_action(name) || is_env_action(name);
  }

  bool operator==(const Signature& other) const {
    return sys_ == other.sys_ && env_ == other.env_;
  }

  // Valid action name: identifier that is not a reserved word of the
  // concrete formula syntax (E, A, true, false, ProcS, ProcE, ProcM).
  static bool valid_action_name(const std::string& name);
  static bool is_identifier(const std::string& name);
  static bool is_reserved_word(const std::string& name);

 private:
  std::vector<std::string> sys_;
  std::vector<std::string> env_;
};

}  // namespace dwsynth
