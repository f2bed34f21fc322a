// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "mtg/graph.hpp"

namespace mtg {

// Textual family specs:
//   path:N  cycle:N  complete:N  ladder:N  tent:N
//   lforest:C1,C2,...   (Ci paths on i vertices)
//   cluster:C1,C2,...   (Ci cliques on i vertices)
//   multipartite:A,B,C  (A+B+C >= 2 parts of sizes 1, 2, 3)
//   complement(SPEC)
// Whitespace between tokens is ignored.  Throws InputError with the byte
// position of the first offending character.
FamilySpec parse_family_spec(const std::string& text);

// Rewrite complements with a closed form: complement(cluster) with at most
// three part sizes becomes multipartite and vice versa, a complemented
// single clique becomes isolated vertices, and double complements cancel.
// Anything else is returned unchanged.
FamilySpec normalize_spec(const FamilySpec& spec);

}  // namespace mtg
