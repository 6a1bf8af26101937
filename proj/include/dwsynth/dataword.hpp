#pragma once

#include <string>
#include <vector>

#include "dwsynth/signature.hpp"

namespace dwsynth {

// Pairwise-disjoint process pools. Declaration order is kept so that
// strategies picking "the first free process" are deterministic.
class ProcessPools {
 public:
  ProcessPools() = default;
  ProcessPools(std::vector<std::string> sys, std::vector<std::string> env,
               std::vector<std::string> mixed = {});

  const std::vector<std::string>& sys() const { return sys_; }
  const std::vector<std::string>& env() const { return env_; }
  const std::vector<std::string>& mixed() const { return mixed_; }

  bool sys_playable(const std::string& process) const;
  bool env_playable(const std::string& process) const;
  bool contains(const std::string& process) const;
  std::size_t total() const {
    return sys_.size() + env_.size() + mixed_.size();
  }

 private:
  std::vector<std::string> sys_, env_, mixed_;
};

// One played action on one process.
struct Position {
  std::string action;
  std::string process;

  bool operator==(const Position& other) const {
    return action == other.action && process == other.process;
  }
};

using DataWord = std::vector<Position>;

// Checks that every position plays an action from `sig` on a pool its
// player owns; throws OwnershipError / InputError otherwise.
void validate_word(const DataWord& word, const ProcessPools& pools,
                   const Signature& sig);

// Word file: `pools S={0,1} E={e} M={}` header, then `action@process`
// lines; `#` comments.
struct WordFileContents {
  DataWord word;
  ProcessPools pools;
};
WordFileContents load_word_file(const std::string& path);
WordFileContents parse_word_file_text(const std::string& text);
std::string render_word_file(const DataWord& word, const ProcessPools& pools);
std::string render_pools_spec(const ProcessPools& pools);
ProcessPools parse_pools_spec(const std::string& text);

}  // namespace dwsynth
