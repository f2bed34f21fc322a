// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtg/exact.hpp"
#include "mtg/graph.hpp"
#include "mtg/represent.hpp"
#include "mtg/theta.hpp"

namespace mtg {

// Blueprint behind a cluster / multipartite construction: the radical anchors
// a_1 < ... < a_m, the color triple chosen for every clique of size >= 3 (in
// graph order), and the certified gap data the spacing parameter eps rests on.
struct ClusterPlan {
    int m = 0;
    bool boundary = false;               // count sits on a sequence boundary
    std::vector<ExactReal> anchors;      // a_i = sqrt(prime), pairwise distinct
    std::vector<ColorTriple> triples;
    Rat delta_lb;                        // positive lower bound on the anchor gap
    Rat eps;
};

struct Construction {
    FamilySpec spec;
    Graph graph;
    Representation rep;                  // always passes verify(graph, rep)
    std::optional<ClusterPlan> plan;
    ThetaResult formula;                 // closed-form value or bounds
    bool tight = false;                  // threshold count equals the exact value
    std::string note;                    // set when tight is false
};

// Disjoint union of paths; path_counts[i] paths on i+1 vertices.  Two
// thresholds (-3/2, 3/2); ranks have strictly growing magnitudes and
// alternating signs along each path, restarting two above the previous
// path's end.
Construction construct_linear_forest(const std::vector<int>& path_counts);

Construction construct_ladder(int n);  // n >= 1 rungs
Construction construct_tent(int n);    // path on n >= 2 plus a dominating apex

// Cluster graphs with at most one clique of size >= 3 (direct small-case
// representations; at most two thresholds).
Construction construct_cluster_small(int n1, int n2, int n3);

// The color triples for n3 >= 2 cliques of size >= 3 at level m: all m pure
// triples, then ascending mixed triples; at a boundary count the mixed pool
// shrinks to the colors below m, otherwise the lexicographically largest
// mixed triples are dropped to leave exactly n3.
std::vector<ColorTriple> select_triples(int m, long n3);

// Main construction for n1 K1 + n2 K2 + n3 K3 with n3 >= 2.
Construction construct_cluster_main(int n1, int n2, int n3);

// Clusters with arbitrary clique sizes; cliques of size >= 4 each take a
// dedicated pure color, so their count must not exceed m.
Construction construct_cluster_general(const std::vector<int>& counts);

// Complete multipartite with part sizes <= 3: complement transform of the
// cluster construction, upgraded to an oracle witness for the small cases
// where the transform overshoots the exact value by one.
Construction construct_multipartite(int n1, int n2, int n3);

// Dispatcher covering every constructible family spec.
Construction construct_for(const FamilySpec& spec);

}  // namespace mtg
