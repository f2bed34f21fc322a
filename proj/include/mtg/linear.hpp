// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mtg/rational.hpp"

namespace mtg {

// One row  coeffs . x  <  rhs  (strict) or  coeffs . x <= rhs  (weak) over
// free rational variables.
struct LinearConstraint {
    std::vector<Rat> coeffs;
    bool strict = false;
    Rat rhs;
};

struct LinearSystem {
    std::vector<std::string> vars;
    std::vector<LinearConstraint> rows;  // every row sized to vars
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rat> witness;  // one value per variable when feasible
    Rat margin;                // slack achieved on the strict rows (capped at 1)
};

// Exact feasibility of a mixed strict/weak rational system.  Decided by
// maximizing a margin variable t added to every strict row (and capped at 1):
// the system has a solution iff the optimum is positive.  Runs a dense
// rational simplex with Bland's rule, so it terminates on every input.
// The returned witness is substituted back into all rows before returning.
FeasibilityResult feasible_linear_system(const LinearSystem& sys);

}  // namespace mtg
