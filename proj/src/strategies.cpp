#include "dwsynth/strategies.hpp"

#include "dwsynth/errors.hpp"

namespace dwsynth {

bool check_compatibility(const DataWord& exec, const SystemStrategy& strat,
                         const ProcessPools& pools, const Signature& sig) {
  DataWord prefix;
  prefix.reserve(exec.size());
  for (const Position& pos : exec) {
    if (sig.is_sys_action(pos.action)) {
      Move want = strat.move(prefix, pools);
      if (!want || !(*want == pos)) return false;
    }
    prefix.push_back(pos);
  }
  return !strat.move(exec, pools).has_value();
}

bool check_fairness_window(const DataWord& exec, const SystemStrategy& strat,
                           const ProcessPools& pools, const Signature& sig,
                           std::size_t window_len) {
  if (window_len < 1) throw InputError("fairness window must be >= 1");
  // pending[j]: the strategy wanted to move on the prefix before position j.
  std::vector<bool> pending(exec.size());
  std::vector<bool> is_sys(exec.size());
  DataWord prefix;
  prefix.reserve(exec.size());
  for (std::size_t j = 0; j < exec.size(); ++j) {
    pending[j] = strat.move(prefix, pools).has_value();
    is_sys[j] = sig.is_sys_action(exec[j].action);
    prefix.push_back(exec[j]);
  }
  std::size_t run = 0;  // current streak of pending-but-not-System positions
  for (std::size_t j = 0; j < exec.size(); ++j) {
    if (pending[j] && !is_sys[j]) {
      if (++run >= window_len) return false;
    } else {
      run = 0;
    }
  }
  return true;
}

}  // namespace dwsynth
