// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "mtg/graph.hpp"

namespace mtg {

// Threshold counting sequences.
//   q(m) = m + C(m,3) + 1   capacity-type counts for triangle clusters
//   p(m) = q(m) + 1         multipartite twin of q
//   s(m) = m + C(floor(m/2),3) + C(ceil(m/2),3) + 2   for K4 parts
//   t(m) = s(m) - 1                                    for K4 cliques
struct SequenceValues {
    int m = 0;
    long q = 0;
    long p = 0;
    long s = 0;
    long t = 0;
};

SequenceValues qp_values(int m);  // m >= 0

enum class Sequence { q, p, s, t };

// Smallest m >= 1 with n <= seq(m) - 1, together with whether n sits exactly
// on the lower boundary seq(m-1).  Requires n >= seq(0).
struct SequenceFit {
    int m = 0;
    bool boundary = false;
};
SequenceFit m_from_count(long n, Sequence seq);

// Threshold number of a family member, as an interval [lo, hi] plus the rule
// that produced it.  lo == hi means the value is exact; boundary marks counts
// sitting exactly on a sequence boundary (where the value dips by one).
struct ThetaResult {
    long lo = 0;
    long hi = 0;
    std::string source;
    bool boundary = false;

    bool exact() const { return lo == hi; }
};

// Exact values where a closed form is known; bounds otherwise.  Throws
// InputError for families with no covered rule (e.g. long cycles).
ThetaResult theta_formula(const FamilySpec& spec);

// Flatten a spec into per-size path (resp. clique) counts, adding into
// counts; false if some member is not a path (resp. clique) family.
bool gather_union_paths(const FamilySpec& spec, std::vector<int>& counts);
bool gather_union_cliques(const FamilySpec& spec, std::vector<int>& counts);

}  // namespace mtg
