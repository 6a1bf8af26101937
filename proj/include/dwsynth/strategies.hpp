#pragma once

#include <functional>
#include <optional>
#include <string>

#include "dwsynth/dataword.hpp"
#include "dwsynth/signature.hpp"

namespace dwsynth {

// A move is a position to append, or nothing (pass).
using Move = std::optional<Position>;

// Deterministic function from history to a System move. Strategies carry
// no mutable state: everything they need must be recomputed from the
// history, which keeps them re-entrant and replayable.
class SystemStrategy {
 public:
  using Fn = std::function<Move(const DataWord&, const ProcessPools&)>;

  SystemStrategy() = default;
  SystemStrategy(std::string name, Fn fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  Move move(const DataWord& history, const ProcessPools& pools) const {
    return fn_ ? fn_(history, pools) : std::nullopt;
  }
  const std::string& name() const { return name_; }
  explicit operator bool() const { return static_cast<bool>(fn_); }

 private:
  std::string name_;
  Fn fn_;
};

// Same shape for Environment. Seeded-random policies derive their draws
// from (seed, history), so they are still pure functions of the history.
class EnvironmentPolicy {
 public:
  using Fn = std::function<Move(const DataWord&, const ProcessPools&)>;

  EnvironmentPolicy() = default;
  EnvironmentPolicy(std::string name, Fn fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  Move move(const DataWord& history, const ProcessPools& pools) const {
    return fn_ ? fn_(history, pools) : std::nullopt;
  }
  const std::string& name() const { return name_; }
  explicit operator bool() const { return static_cast<bool>(fn_); }

 private:
  std::string name_;
  Fn fn_;
};

// True iff every System position of `exec` equals the strategy's output
// on the strict prefix before it, and the strategy passes at the end of
// the (finite) execution.
bool check_compatibility(const DataWord& exec, const SystemStrategy& strat,
                         const ProcessPools& pools, const Signature& sig);

// True iff no contiguous window of `window_len` positions exists in which
// the strategy wanted to move at every prefix yet no System position
// occurs. Finite stand-in for "Environment cannot silence System forever".
bool check_fairness_window(const DataWord& exec, const SystemStrategy& strat,
                           const ProcessPools& pools, const Signature& sig,
                           std::size_t window_len);

}  // namespace dwsynth
