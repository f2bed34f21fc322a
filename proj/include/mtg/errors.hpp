// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mtg {

// Caller-supplied data is invalid: bad family parameters, malformed JSON,
// out-of-range arguments, unsupported requests.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An internal resource cap was reached (e.g. the sign-refinement bit limit).
// Distinct from InputError: the input was legal, the engine gave up.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Every candidate value coincides exactly with an anchor, so no positive gap
// exists to measure.
struct CoincidenceError : std::runtime_error {
    explicit CoincidenceError(const std::string& what) : std::runtime_error(what) {}
};

// A component violated its own postcondition (a constructor emitted a
// representation that fails verification, a solver returned a bogus witness).
// Always a bug, never a user mistake.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mtg
