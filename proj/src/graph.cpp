// SPDX-License-Identifier: Apache-2.0
#include "mtg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mtg/errors.hpp"

namespace mtg {

Graph::Graph(int order) : n(order) {
    if (order < 0) throw InputError("graph order must be nonnegative");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loops are not allowed");
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) != 0;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    return deg;
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    c.labels = g.labels;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const auto& p : parts) total += p.n;
    Graph g(total);
    int base = 0;
    for (const auto& p : parts) {
        for (const auto& [u, v] : p.edges) g.add_edge(base + u, base + v);
        for (const auto& [v, tag] : p.labels) g.labels[base + v] = tag;
        base += p.n;
    }
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::set<int> seen;
    for (int v : vs) {
        if (v < 0 || v >= g.n) throw InputError("induced vertex out of range");
        if (!seen.insert(v).second) throw InputError("induced vertex repeated");
    }
    Graph h(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i) {
        auto it = g.labels.find(vs[i]);
        if (it != g.labels.end()) h.labels[static_cast<int>(i)] = it->second;
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return h;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::ladder: return "ladder";
        case Family::tent: return "tent";
        case Family::lforest: return "lforest";
        case Family::cluster: return "cluster";
        case Family::multipartite: return "multipartite";
        case Family::complement_of: return "complement";
        case Family::union_of: return "union";
    }
    return "?";
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

long checked_sum(const std::vector<int>& xs) {
    long s = 0;
    for (int x : xs) s += x;
    return s;
}

}  // namespace

void FamilySpec::validate() const {
    const std::string name = family_name(kind);
    switch (kind) {
        case Family::path:
        case Family::complete:
            require(params.size() == 1, name + " takes exactly one parameter");
            require(params[0] >= 1, name + " needs n >= 1");
            require(children.empty(), name + " takes no child specs");
            break;
        case Family::cycle:
            require(params.size() == 1, "cycle takes exactly one parameter");
            require(params[0] >= 3, "cycle needs n >= 3");
            require(children.empty(), "cycle takes no child specs");
            break;
        case Family::ladder:
            require(params.size() == 1, "ladder takes exactly one parameter");
            require(params[0] >= 1, "ladder needs n >= 1");
            require(children.empty(), "ladder takes no child specs");
            break;
        case Family::tent:
            require(params.size() == 1, "tent takes exactly one parameter");
            require(params[0] >= 2, "tent needs n >= 2");
            require(children.empty(), "tent takes no child specs");
            break;
        case Family::lforest:
        case Family::cluster:
            require(!params.empty(), name + " needs at least one count");
            for (int c : params) require(c >= 0, name + " counts must be >= 0");
            require(checked_sum(params) >= 1, name + " needs at least one component");
            require(children.empty(), name + " takes no child specs");
            break;
        case Family::multipartite:
            require(params.size() == 3, "multipartite takes exactly three counts");
            for (int c : params) require(c >= 0, "multipartite counts must be >= 0");
            require(checked_sum(params) >= 2, "multipartite needs at least two parts");
            require(children.empty(), "multipartite takes no child specs");
            break;
        case Family::complement_of:
            require(children.size() == 1, "complement takes exactly one child spec");
            require(params.empty(), "complement takes no numeric parameters");
            children[0].validate();
            break;
        case Family::union_of:
            require(!children.empty(), "union needs at least one child spec");
            require(params.empty(), "union takes no numeric parameters");
            for (const auto& c : children) c.validate();
            break;
    }
}

std::string FamilySpec::to_string() const {
    std::ostringstream out;
    out << family_name(kind);
    if (kind == Family::complement_of) {
        out << "(" << children[0].to_string() << ")";
        return out.str();
    }
    if (kind == Family::union_of) {
        out << "(";
        for (size_t i = 0; i < children.size(); ++i) {
            if (i) out << " | ";
            out << children[i].to_string();
        }
        out << ")";
        return out.str();
    }
    for (size_t i = 0; i < params.size(); ++i) out << (i ? "," : ":") << params[i];
    return out.str();
}

namespace {

Graph build_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph build_cycle(int n) {
    Graph g = build_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph build_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Rails u_0..u_{n-1} then v_0..v_{n-1}; rungs u_i v_i.
Graph build_ladder(int n) {
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.labels[i] = "u" + std::to_string(i);
        g.labels[n + i] = "v" + std::to_string(i);
        g.add_edge(i, n + i);
        if (i + 1 < n) {
            g.add_edge(i, i + 1);
            g.add_edge(n + i, n + i + 1);
        }
    }
    return g;
}

// Path b_0..b_{n-1} plus an apex adjacent to every path vertex.
Graph build_tent(int n) {
    Graph g(n + 1);
    for (int i = 0; i < n; ++i) {
        g.labels[i] = "b" + std::to_string(i);
        if (i + 1 < n) g.add_edge(i, i + 1);
        g.add_edge(i, n);
    }
    g.labels[n] = "apex";
    return g;
}

Graph build_lforest(const std::vector<int>& counts) {
    std::vector<Graph> paths;
    for (size_t len = 1; len <= counts.size(); ++len) {
        for (int rep = 0; rep < counts[len - 1]; ++rep) {
            Graph p = build_path(static_cast<int>(len));
            for (int v = 0; v < p.n; ++v)
                p.labels[v] = "P" + std::to_string(len) + "#" + std::to_string(rep + 1);
            paths.push_back(std::move(p));
        }
    }
    return disjoint_union(paths);
}

Graph build_cluster(const std::vector<int>& counts) {
    std::vector<Graph> cliques;
    for (size_t size = 1; size <= counts.size(); ++size) {
        for (int rep = 0; rep < counts[size - 1]; ++rep) {
            Graph k = build_complete(static_cast<int>(size));
            for (int v = 0; v < k.n; ++v)
                k.labels[v] = "K" + std::to_string(size) + "#" + std::to_string(rep + 1);
            cliques.push_back(std::move(k));
        }
    }
    return disjoint_union(cliques);
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case Family::path: return build_path(spec.params[0]);
        case Family::cycle: return build_cycle(spec.params[0]);
        case Family::complete: return build_complete(spec.params[0]);
        case Family::ladder: return build_ladder(spec.params[0]);
        case Family::tent: return build_tent(spec.params[0]);
        case Family::lforest: return build_lforest(spec.params);
        case Family::cluster: return build_cluster(spec.params);
        case Family::multipartite: {
            FamilySpec twin{Family::cluster, spec.params, {}};
            return complement(build_family(twin));
        }
        case Family::complement_of: return complement(build_family(spec.children[0]));
        case Family::union_of: {
            std::vector<Graph> parts;
            for (const auto& c : spec.children) parts.push_back(build_family(c));
            return disjoint_union(parts);
        }
    }
    throw InputError("unknown family");
}

std::vector<std::vector<int>> cluster_members(const FamilySpec& spec, int min_size) {
    if (spec.kind != Family::cluster && spec.kind != Family::multipartite)
        throw InputError("cluster_members needs a cluster or multipartite spec");
    spec.validate();
    std::vector<std::vector<int>> groups;
    int next = 0;
    for (size_t size = 1; size <= spec.params.size(); ++size) {
        for (int rep = 0; rep < spec.params[size - 1]; ++rep) {
            std::vector<int> group;
            for (size_t j = 0; j < size; ++j) group.push_back(next++);
            if (static_cast<int>(size) >= min_size) groups.push_back(std::move(group));
        }
    }
    return groups;
}

}  // namespace mtg
