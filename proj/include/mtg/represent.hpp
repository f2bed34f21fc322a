// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mtg/exact.hpp"
#include "mtg/graph.hpp"

namespace mtg {

// A multithreshold representation: one rank per vertex and a strictly
// increasing threshold list t_1 < ... < t_k.  A pair {u, v} is an edge iff
// rank(u) + rank(v) >= t_i for an odd number of indices i; equivalently, iff
// the pair sum lies in an odd region (see region_index).
struct Representation {
    std::vector<ExactReal> ranks;
    std::vector<ExactReal> thresholds;

    int order() const { return static_cast<int>(ranks.size()); }
    int threshold_count() const { return static_cast<int>(thresholds.size()); }

    // Throws InputError unless thresholds strictly increase.
    void validate() const;
};

// Number of thresholds <= s.  Thresholds carve the line into regions
// 0..k: region g collects the sums with exactly g thresholds at or below
// them, and a pair is an edge iff its region index is odd.
int region_index(const Representation& rep, const ExactReal& sum);

struct Violation {
    int u = 0;
    int v = 0;
    ExactReal sum;
    int region = 0;      // region the pair sum landed in
    bool is_edge = false;  // adjacency the graph demands
};

struct VerifyReport {
    bool ok = false;
    std::vector<Violation> violations;  // every offending pair, in pair order
};

// Checks the parity condition on all vertex pairs.  Sizes must match.
VerifyReport verify(const Graph& g, const Representation& rep);

// For each listed vertex triple (which must induce a triangle whose three
// pair sums verify as edges), the sorted multiset of colors of its edges,
// where an edge lying in region 2i-1 has color i.
using ColorTriple = std::array<int, 3>;
std::vector<ColorTriple> color_triangles(const Graph& g, const Representation& rep,
                                         const std::vector<std::array<int, 3>>& triangles);

// Admissibility of a family of triangle colorings in one representation:
// no multiset may repeat, and two triples that share a head color i in their
// (i; j, j) reading must agree on j.  A pure triple {i, i, i} reads as
// (i; i, i).  Returns a description of the first conflict, or nullopt.
std::optional<std::string> check_coloring_lemmas(const std::vector<ColorTriple>& colors);

// Representation of the complement graph: one sentinel threshold is placed
// strictly below every pair sum and below the old first threshold, flipping
// every pair's parity.  Requires that rep verifies against g.
Representation complement_representation(const Graph& g, const Representation& rep);

}  // namespace mtg
