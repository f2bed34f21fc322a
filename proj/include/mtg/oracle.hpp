// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mtg/graph.hpp"
#include "mtg/linear.hpp"
#include "mtg/represent.hpp"
#include "mtg/theta.hpp"

namespace mtg {

struct OracleBudget {
    long max_nodes = 1000000;   // explored assignment extensions (one LP each)
    double timeout_sec = 60.0;  // wall clock; <= 0 means no time limit
};

enum class SearchStatus { yes, no, budget };

struct ExistsResult {
    SearchStatus status = SearchStatus::no;
    std::optional<Representation> rep;  // verified witness when status == yes
    long nodes = 0;
};

// Decides whether g admits a representation with exactly k thresholds.
// Complete search: pairs are assigned parity-consistent regions one at a
// time (edges first), pruning with an exact rational feasibility check after
// every assignment, so "no" is a proof and "yes" carries a witness.  The
// first threshold is normalized to 0.  workers > 1 splits the top of the
// search tree across threads; any yes wins.
ExistsResult exists_representation(const Graph& g, int k,
                                   const OracleBudget& budget = {},
                                   int workers = 1);

struct ThetaSearchResult {
    ThetaResult theta;                  // exact on success, bounds otherwise
    std::optional<Representation> witness;
    bool exceeded = false;              // a budget stopped the scan
    long nodes = 0;
};

// True threshold number by scanning k = 0, 1, ..., max_k.
ThetaSearchResult theta_search(const Graph& g, int max_k,
                               const OracleBudget& budget = {},
                               int workers = 1);

struct AssignmentVerdict {
    std::vector<int> regions;  // aligned with EnumerateResult::pairs
    bool feasible = false;
    std::vector<Rat> ranks;      // witness ranks when feasible
    std::vector<Rat> thresholds;  // witness thresholds when feasible
};

struct EnumerateResult {
    std::vector<std::pair<int, int>> pairs;  // fixed pair order
    std::vector<AssignmentVerdict> verdicts;  // one per complete assignment
};

// Exhaustive log over every parity-consistent complete region assignment at
// exactly k thresholds.  Intended for small instances; throws InputError when
// the assignment count would exceed cap.
EnumerateResult enumerate_assignments(const Graph& g, int k, size_t cap = 65536);

}  // namespace mtg
