#pragma once

#include <set>
#include <string>

#include "dwsynth/formula.hpp"

namespace dwsynth {

// Which logic fragment a formula lives in: how many distinct variable
// names it uses and which of the binary predicates <, +1, ~ occur.
struct FragmentProfile {
  std::set<std::string> variable_names;
  bool uses_order = false;        // <
  bool uses_successor = false;    // +1
  bool uses_equivalence = false;  // ~
  bool uses_equality = false;     // =  (always available, not in the label)

  bool two_variable() const { return variable_names.size() <= 2; }
  // "FO2[~,<]", "FO3[<]", ... — a pure function of the fields above.
  std::string label() const;
};

FragmentProfile classify_fragment(const Formula& f);

// Two-variable formula asserting that the process of `free_var` carries at
// least `k` positions labeled `action`; only k = 1 and k = 2 are
// expressible this way (counting higher needs extra letters playing the
// same role, not extra variables). "Exactly one" is (>=1) & !(>=2).
Formula build_split_counting_formula(const std::string& action, int k,
                                     const std::string& free_var);

}  // namespace dwsynth
