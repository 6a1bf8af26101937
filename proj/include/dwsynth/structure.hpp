#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwsynth/dataword.hpp"
#include "dwsynth/formula.hpp"
#include "dwsynth/signature.hpp"

namespace dwsynth {

// A data word as a finite logical structure: one element per position,
// plus one element per process (so idle processes can be quantified
// over). Elements 0..positions-1 are the positions in word order, the
// rest are process elements.
//
// Predicate semantics:
//   a(e)      e is a position labeled a (process elements satisfy no action)
//   e < e'    both positions, in word order
//   e = e'+1  both positions, adjacent
//   e ~ e'    same process: relates positions of one process to each other
//             and to that process element; a process element is related
//             only to itself and its positions
//   ProcX(e)  e is a process element of pool X
class WordStructure {
 public:
  using Element = std::uint32_t;

  std::size_t size() const { return actions_.size(); }
  std::size_t num_positions() const { return num_positions_; }

  bool is_position(Element e) const { return e < num_positions_; }
  const std::string& action_of(Element e) const;   // positions only
  const std::string& process_of(Element e) const;  // any element

  bool atom_action(const std::string& action, Element e) const;
  bool atom_eq(Element a, Element b) const { return a == b; }
  bool atom_lt(Element a, Element b) const {
    return is_position(a) && is_position(b) && a < b;
  }
  bool atom_succ(Element a, Element b) const {  // a = b+1
    return is_position(a) && is_position(b) && a == b + 1;
  }
  bool atom_sim(Element a, Element b) const {
    return process_ids_[a] == process_ids_[b];
  }
  bool atom_proc(ProcClass cls, Element e) const {
    return !is_position(e) && proc_class_[e] == cls;
  }

 private:
  friend WordStructure to_structure(const DataWord&, const ProcessPools&,
                                    const Signature&);
  std::size_t num_positions_ = 0;
  std::vector<std::string> actions_;      // per element; empty for processes
  std::vector<std::string> processes_;    // per element: owning process id
  std::vector<std::uint32_t> process_ids_;  // interned process per element
  std::vector<ProcClass> proc_class_;     // meaningful for process elements
};

// Builds the structure; validates ownership against the signature.
WordStructure to_structure(const DataWord& word, const ProcessPools& pools,
                           const Signature& sig);

}  // namespace dwsynth
