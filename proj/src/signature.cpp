#include "dwsynth/signature.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "dwsynth/errors.hpp"

namespace dwsynth {

namespace {

bool contains_name(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

Signature::Signature(std::vector<std::string> sys_actions,
                     std::vector<std::string> env_actions)
    : sys_(std::move(sys_actions)), env_(std::move(env_actions)) {
  if (sys_.empty() && env_.empty())
    throw InputError("signature must declare at least one action");
  for (const auto* side : {&sys_, &env_}) {
    for (const auto& name : *side) {
      if (!valid_action_name(name))
        throw InputError("invalid action name '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < sys_.size(); ++i) {
    for (std::size_t j = i + 1; j < sys_.size(); ++j)
      if (sys_[i] == sys_[j])
        throw InputError("duplicate action name '" + sys_[i] + "'");
  }
  for (std::size_t i = 0; i < env_.size(); ++i) {
    for (std::size_t j = i + 1; j < env_.size(); ++j)
      if (env_[i] == env_[j])
        throw InputError("duplicate action name '" + env_[i] + "'");
  }
  for (const auto& name : sys_) {
    if (contains_name(env_, name))
      throw InputError("action '" + name +
                       "' declared for both System and Environment");
  }
}

bool Signature::is_sys_action(const std::string& name) const {
  return contains_name(sys_, name);
}

bool Signature::is_env_action(const std::string& name) const {
  return contains_name(env_, name);
}

bool Signature::is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool Signature::is_reserved_word(const std::string& name) {
  static const std::array<const char*, 7> kReserved = {
      "E", "A", "true", "false", "ProcS", "ProcE", "ProcM"};
  return std::any_of(kReserved.begin(), kReserved.end(),
                     [&](const char* w) { return name == w; });
}

bool Signature::valid_action_name(const std::string& name) {
  return is_identifier(name) && !is_reserved_word(name);
}

}  // namespace dwsynth
