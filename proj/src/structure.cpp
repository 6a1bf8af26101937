#include "dwsynth/structure.hpp"

#include <unordered_map>

#include "dwsynth/errors.hpp"

namespace dwsynth {

const std::string& WordStructure::action_of(Element e) const {
  return actions_[e];
}

const std::string& WordStructure::process_of(Element e) const {
  return processes_[e];
}

bool WordStructure::atom_action(const std::string& action, Element e) const {
  return is_position(e) && actions_[e] == action;
}

WordStructure to_structure(const DataWord& word, const ProcessPools& pools,
                           const Signature& sig) {
  validate_word(word, pools, sig);
  WordStructure s;
  s.num_positions_ = word.size();
  const std::size_t n = word.size() + pools.total();
  s.actions_.reserve(n);
  s.processes_.reserve(n);
  s.process_ids_.reserve(n);
  s.proc_class_.assign(n, ProcClass::Sys);

  std::unordered_map<std::string, std::uint32_t> intern;
  auto intern_id = [&](const std::string& p) {
    auto [it, _] = intern.emplace(p, static_cast<std::uint32_t>(intern.size()));
    return it->second;
  };

  for (const auto& pos : word) {
    s.actions_.push_back(pos.action);
    s.processes_.push_back(pos.process);
    s.process_ids_.push_back(intern_id(pos.process));
  }
  auto add_pool = [&](const std::vector<std::string>& pool, ProcClass cls) {
    for (const auto& p : pool) {
      s.proc_class_[s.actions_.size()] = cls;
      s.actions_.emplace_back();
      s.processes_.push_back(p);
      s.process_ids_.push_back(intern_id(p));
    }
  };
  add_pool(pools.sys(), ProcClass::Sys);
  add_pool(pools.env(), ProcClass::Env);
  add_pool(pools.mixed(), ProcClass::Mixed);
  return s;
}

}  // namespace dwsynth
