// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mtg {

// Finite simple undirected graph on vertices 0..n-1.  Edges are stored as
// ordered pairs (u < v) in a sorted set, so iteration order is deterministic.
struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges;
    std::map<int, std::string> labels;  // optional per-vertex tags

    explicit Graph(int order = 0);

    void add_edge(int u, int v);       // validates range, rejects loops
    bool has_edge(int u, int v) const;
    size_t edge_count() const { return edges.size(); }
    std::vector<int> degrees() const;

    bool operator==(const Graph& rhs) const {
        return n == rhs.n && edges == rhs.edges;
    }
};

Graph complement(const Graph& g);
Graph disjoint_union(const std::vector<Graph>& parts);

// Subgraph induced by the listed vertices, relabeled 0..|vs|-1 in the order
// given.  Vertices must be in range and distinct.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

// Graph family selector.  Parameter conventions:
//   path:n cycle:n complete:n ladder:n tent:n       single int n
//   lforest:a1,...,at      a_i = number of paths with i vertices
//   cluster:n1,...,nt      n_i = number of cliques with i vertices
//   multipartite:n1,n2,n3  complete multipartite with n_i parts of size i
//   complement_of / union_of carry child specs instead of params
enum class Family {
    path,
    cycle,
    complete,
    ladder,
    tent,
    lforest,
    cluster,
    multipartite,
    complement_of,
    union_of,
};

struct FamilySpec {
    Family kind = Family::path;
    std::vector<int> params;
    std::vector<FamilySpec> children;

    // Throws InputError explaining the first violated constraint.
    void validate() const;

    // Canonical "name:p1,p2" / "complement(...)" / "union(...|...)" form.
    std::string to_string() const;
};

const char* family_name(Family f);

// Deterministic construction of the graph a spec denotes.  Validates first.
Graph build_family(const FamilySpec& spec);

// For cluster / multipartite specs: the vertex sets of the cliques / parts of
// size >= min_size, in graph order.
std::vector<std::vector<int>> cluster_members(const FamilySpec& spec, int min_size = 1);

}  // namespace mtg
