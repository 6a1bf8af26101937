#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dwsynth/formula.hpp"
#include "dwsynth/structure.hpp"

namespace dwsynth {

// Partial assignment of variables to structure elements.
using Assignment =
    std::vector<std::pair<std::string, WordStructure::Element>>;

// Standard Tarskian evaluation by environment-passing recursion.
// Free variables of `f` must be covered by `env`.
bool evaluate(const Formula& f, const WordStructure& s,
              const Assignment& env = {});

// Independent oracle for `evaluate`: expands every quantifier into an
// explicit Boolean combination over all elements (atoms evaluated at the
// leaves), then folds the resulting ground tree bottom-up. Slower by
// construction; exists to cross-check the direct evaluator.
bool evaluate_grounded(const Formula& f, const WordStructure& s,
                       const Assignment& env = {});

}  // namespace dwsynth
