// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace mtg {

// Exact rationals are GMP mpq_class throughout; Rat is the project-wide alias.
using Rat = mpq_class;

// Canonical "num/den" form with den > 0, e.g. "3/4", "-1/2", "5/1".
std::string rat_to_string(const Rat& q);

// Accepts "num/den" or a bare integer "num". Throws InputError on anything
// else (including a zero denominator).
Rat rat_from_string(const std::string& text);

}  // namespace mtg
