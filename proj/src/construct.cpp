// SPDX-License-Identifier: Apache-2.0
#include "mtg/construct.hpp"

#include <algorithm>
#include <sstream>

#include "mtg/errors.hpp"
#include "mtg/oracle.hpp"

namespace mtg {

namespace {

ExactReal half(const ExactReal& x) { return Rat(1, 2) * x; }

long nth_prime(int i) {  // 1-based: nth_prime(1) == 2
    long p = 1;
    for (int seen = 0; seen < i;) {
        ++p;
        if (is_prime(p)) ++seen;
    }
    return p;
}

long next_prime_at_least(long x) {
    long p = x;
    while (!is_prime(p)) ++p;
    return p;
}

// Every constructor feeds its output through this gate before returning.
void gate(const Graph& g, const Representation& rep, const char* who) {
    VerifyReport report = verify(g, rep);
    if (!report.ok) {
        std::ostringstream msg;
        msg << who << " produced a failing representation; first bad pair {"
            << report.violations[0].u << "," << report.violations[0].v
            << "} in region " << report.violations[0].region;
        throw InternalError(msg.str());
    }
}

Representation rational_rep(const std::vector<Rat>& ranks, const std::vector<Rat>& thresholds) {
    Representation rep;
    for (const auto& r : ranks) rep.ranks.emplace_back(r);
    for (const auto& t : thresholds) rep.thresholds.emplace_back(t);
    return rep;
}

Construction finish(FamilySpec spec, Graph graph, Representation rep,
                    std::optional<ClusterPlan> plan, const char* who) {
    gate(graph, rep, who);
    Construction c;
    c.spec = std::move(spec);
    c.graph = std::move(graph);
    c.rep = std::move(rep);
    c.plan = std::move(plan);
    c.formula = theta_formula(c.spec);
    long count = c.rep.threshold_count();
    c.tight = c.formula.exact() && count == c.formula.lo;
    if (!c.tight) {
        std::ostringstream note;
        note << "uses " << count << " thresholds; the known value is ";
        if (c.formula.exact())
            note << c.formula.lo;
        else
            note << "in [" << c.formula.lo << "," << c.formula.hi << "]";
        c.note = note.str();
    }
    return c;
}

}  // namespace

Construction construct_linear_forest(const std::vector<int>& path_counts) {
    FamilySpec spec{Family::lforest, path_counts, {}};
    spec.validate();
    Graph g = build_family(spec);
    std::vector<Rat> ranks;
    long start = 1;
    for (size_t len = 1; len <= path_counts.size(); ++len) {
        for (int rep = 0; rep < path_counts[len - 1]; ++rep) {
            long magnitude = start;
            for (size_t j = 0; j < len; ++j, ++magnitude)
                ranks.emplace_back(j % 2 == 0 ? magnitude : -magnitude);
            start = magnitude + 1;  // previous end magnitude plus two
        }
    }
    Representation rep = rational_rep(ranks, {Rat(-3, 2), Rat(3, 2)});
    return finish(spec, std::move(g), std::move(rep), std::nullopt, "linear forest");
}

Construction construct_ladder(int n) {
    FamilySpec spec{Family::ladder, {n}, {}};
    spec.validate();
    Graph g = build_family(spec);
    std::vector<Rat> ranks(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        long u = (i % 2 == 0) ? i + 1 : -(i + 1);
        ranks[static_cast<size_t>(i)] = u;
        ranks[static_cast<size_t>(n + i)] = -u;
    }
    Representation rep = rational_rep(ranks, {Rat(-3, 2), Rat(3, 2)});
    return finish(spec, std::move(g), std::move(rep), std::nullopt, "ladder");
}

Construction construct_tent(int n) {
    FamilySpec spec{Family::tent, {n}, {}};
    spec.validate();
    Graph g = build_family(spec);
    std::vector<Rat> ranks(static_cast<size_t>(n + 1));
    for (int i = 1; i <= n; ++i)
        ranks[static_cast<size_t>(i - 1)] = (i % 2 == 1) ? i : -i;
    ranks[static_cast<size_t>(n)] = 6L * n;  // apex sums stay in [5n, 7n]
    Representation rep = rational_rep(ranks, {Rat(-3, 2), Rat(3, 2), Rat(5L * n)});
    return finish(spec, std::move(g), std::move(rep), std::nullopt, "tent");
}

namespace {

// Small-cluster representation for counts with at most one clique of size
// >= 3; at most two thresholds.
Construction construct_cluster_light(const std::vector<int>& counts) {
    FamilySpec spec{Family::cluster, counts, {}};
    spec.validate();
    long n1 = counts.size() >= 1 ? counts[0] : 0;
    long heavy = 0, nontrivial = 0;
    for (size_t i = 1; i < counts.size(); ++i) {
        nontrivial += counts[i];
        if (i + 1 >= 3) heavy += counts[i];
    }
    if (heavy > 1)
        throw InputError("more than one clique of size >= 3; use the triple construction");
    Graph g = build_family(spec);

    std::vector<Rat> ranks;
    std::vector<Rat> thresholds;
    if (nontrivial == 0) {
        ranks.assign(static_cast<size_t>(n1), Rat(0));
    } else if (nontrivial == 1) {
        // Threshold 0; the lone clique rides above it, singles sink it.
        thresholds = {Rat(0)};
        ranks.assign(static_cast<size_t>(n1), Rat(-2));
        for (int v = static_cast<int>(n1); v < g.n; ++v) ranks.emplace_back(1);
    } else {
        // Thresholds -1/2 and 1/2; all edge sums land on 0 between them.
        thresholds = {Rat(-1, 2), Rat(1, 2)};
        for (long i = 1; i <= n1; ++i) ranks.emplace_back(i);
        long pairs = counts.size() >= 2 ? counts[1] : 0;
        for (long j = 1; j <= pairs; ++j) {
            ranks.emplace_back(n1 + j);
            ranks.emplace_back(-(n1 + j));
        }
        for (int v = static_cast<int>(n1 + 2 * pairs); v < g.n; ++v)
            ranks.emplace_back(0);  // the single big clique, if present
    }
    Representation rep = rational_rep(ranks, thresholds);
    return finish(spec, std::move(g), std::move(rep), std::nullopt, "small cluster");
}

}  // namespace

Construction construct_cluster_small(int n1, int n2, int n3) {
    if (n3 > 1)
        throw InputError("small-cluster construction needs n3 <= 1");
    return construct_cluster_light({n1, n2, n3});
}

std::vector<ColorTriple> select_triples(int m, long n3) {
    if (m < 1) throw InputError("level m must be >= 1");
    if (n3 < 2) throw InputError("triple selection needs at least two cliques");
    SequenceValues lo = qp_values(m - 1);
    SequenceValues hi = qp_values(m);
    if (n3 < lo.q || n3 > hi.q - 1)
        throw InputError("clique count outside the level-m window");
    bool boundary = n3 == lo.q;

    std::vector<ColorTriple> out;
    for (int i = 1; i <= m; ++i) out.push_back({i, i, i});
    int top = boundary ? m - 1 : m;
    std::vector<ColorTriple> mixed;
    for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j)
            for (int l = j + 1; l <= top; ++l) mixed.push_back({i, j, l});
    // mixed is in ascending lexicographic order; trim from the top end.
    size_t keep = static_cast<size_t>(n3) - static_cast<size_t>(m);
    if (keep > mixed.size())
        throw InternalError("triple pool smaller than the requested count");
    mixed.resize(keep);
    out.insert(out.end(), mixed.begin(), mixed.end());
    return out;
}

namespace {

// Shared core of the triple-based cluster constructions.
Construction construct_cluster_core(const std::vector<int>& counts) {
    FamilySpec spec{Family::cluster, counts, {}};
    spec.validate();
    long n1 = counts.size() >= 1 ? counts[0] : 0;
    long n2 = counts.size() >= 2 ? counts[1] : 0;
    long triangles = counts.size() >= 3 ? counts[2] : 0;
    std::vector<int> big_sizes;  // cliques of size >= 4, ascending size
    for (size_t i = 3; i < counts.size(); ++i)
        for (int rep = 0; rep < counts[i]; ++rep)
            big_sizes.push_back(static_cast<int>(i + 1));
    long heavy = triangles + static_cast<long>(big_sizes.size());
    if (heavy < 2)
        throw InputError("triple construction needs at least two cliques of size >= 3");

    SequenceFit fit = m_from_count(heavy, Sequence::q);
    const int m = fit.m;
    if (static_cast<long>(big_sizes.size()) > m)
        throw InputError("more cliques of size >= 4 than available colors");

    // Anchors: square roots of the first m primes; at a boundary count the
    // top anchor jumps to a prime at least four times the previous one, so
    // a_{m-1} <= a_m / 2.
    std::vector<ExactReal> anchors;
    for (int i = 1; i <= m; ++i) {
        long p = (fit.boundary && i == m) ? next_prime_at_least(4 * nth_prime(m - 1))
                                          : nth_prime(i);
        anchors.push_back(ExactReal::sqrt_prime(p));
    }
    auto anchor = [&](int color) { return anchors[static_cast<size_t>(color - 1)]; };

    std::vector<ColorTriple> selection = select_triples(m, heavy);
    // Cliques of size >= 4 take the pure triples of colors 1..F; the
    // triangles pick up the rest in selection order.
    const int F = static_cast<int>(big_sizes.size());
    std::vector<ColorTriple> for_triangles;
    for (const auto& t : selection) {
        bool consumed = t[0] == t[1] && t[1] == t[2] && t[0] <= F;
        if (!consumed) for_triangles.push_back(t);
    }
    if (static_cast<long>(for_triangles.size()) != triangles)
        throw InternalError("triple bookkeeping mismatch");

    // Ranks of the size->=3 block, cluster by cluster in graph order
    // (triangles first, then the larger cliques by ascending size).
    std::vector<ColorTriple> plan_triples;
    std::vector<ExactReal> core_ranks;
    for (long idx = 0; idx < triangles; ++idx) {
        ColorTriple t = for_triangles[static_cast<size_t>(idx)];
        plan_triples.push_back(t);
        if (t[0] == t[2]) {
            ExactReal r = half(anchor(t[0]));
            core_ranks.insert(core_ranks.end(), 3, r);
        } else {
            ExactReal ai = anchor(t[0]), aj = anchor(t[1]), al = anchor(t[2]);
            core_ranks.push_back(half(ai + aj - al));
            core_ranks.push_back(half(ai + al - aj));
            core_ranks.push_back(half(aj + al - ai));
        }
    }
    for (int b = 0; b < F; ++b) {
        plan_triples.push_back({b + 1, b + 1, b + 1});
        ExactReal r = half(anchor(b + 1));
        core_ranks.insert(core_ranks.end(), static_cast<size_t>(big_sizes[static_cast<size_t>(b)]), r);
    }

    // Spacing: eps must keep every satellite sum well clear of the anchors.
    std::vector<ExactReal> sums;
    for (size_t i = 0; i < core_ranks.size(); ++i)
        for (size_t j = i + 1; j < core_ranks.size(); ++j)
            sums.push_back(core_ranks[i] + core_ranks[j]);
    Rat delta_lb = min_positive_gap(sums, anchors);
    Rat eps = delta_lb / Rat(2 * std::max(1L, n1 + n2));

    std::vector<ExactReal> ranks;
    ExactReal base = half(anchor(1));
    for (long i = 1; i <= n1; ++i) ranks.push_back(base + ExactReal(Rat(i) * eps));
    for (long j = 1; j <= n2; ++j) {
        Rat off = Rat(n1 + j) * eps;
        ranks.push_back(base + ExactReal(off));
        ranks.push_back(base - ExactReal(off));
    }
    ranks.insert(ranks.end(), core_ranks.begin(), core_ranks.end());

    Representation rep;
    rep.ranks = std::move(ranks);
    for (int i = 1; i <= m; ++i) {
        rep.thresholds.push_back(anchor(i));
        if (!(fit.boundary && i == m))
            rep.thresholds.push_back(anchor(i) + ExactReal(eps));
    }

    ClusterPlan plan;
    plan.m = m;
    plan.boundary = fit.boundary;
    plan.anchors = std::move(anchors);
    plan.triples = std::move(plan_triples);
    plan.delta_lb = delta_lb;
    plan.eps = eps;

    Graph g = build_family(spec);
    Construction c = finish(spec, std::move(g), std::move(rep), std::move(plan),
                            "cluster triples");
    if (!c.tight)
        throw InternalError("cluster construction missed the closed-form count");
    return c;
}

}  // namespace

Construction construct_cluster_main(int n1, int n2, int n3) {
    if (n3 < 2)
        throw InputError("main cluster construction needs n3 >= 2");
    return construct_cluster_core({n1, n2, n3});
}

Construction construct_cluster_general(const std::vector<int>& counts) {
    long heavy = 0;
    for (size_t i = 2; i < counts.size(); ++i) heavy += counts[i];
    if (heavy <= 1) return construct_cluster_light(counts);
    return construct_cluster_core(counts);
}

Construction construct_multipartite(int n1, int n2, int n3) {
    FamilySpec spec{Family::multipartite, {n1, n2, n3}, {}};
    spec.validate();
    Graph g = build_family(spec);
    ThetaResult formula = theta_formula(spec);

    Construction twin = construct_cluster_general({n1, n2, n3});
    Representation flipped = complement_representation(twin.graph, twin.rep);

    Construction c;
    c.spec = spec;
    c.graph = std::move(g);
    c.formula = formula;
    long count = static_cast<long>(flipped.thresholds.size());
    if (count == formula.lo) {
        c.rep = std::move(flipped);
        c.plan = twin.plan;
        c.tight = true;
        gate(c.graph, c.rep, "multipartite complement");
        return c;
    }

    // The complement transform overshoots by one; for the very small values
    // an exact search can still find a representation of the true size.
    bool try_oracle = formula.lo <= 2 || (formula.lo == 3 && c.graph.n <= 8);
    if (try_oracle) {
        OracleBudget budget;
        budget.max_nodes = 400000;
        budget.timeout_sec = 20.0;
        ExistsResult found = exists_representation(c.graph, static_cast<int>(formula.lo),
                                                   budget, 1);
        if (found.status == SearchStatus::yes) {
            c.rep = *found.rep;
            c.tight = true;
            c.note = "representation found by exact search";
            gate(c.graph, c.rep, "multipartite search");
            return c;
        }
        if (found.status == SearchStatus::no)
            throw InternalError("exact search contradicts the closed form");
    }

    c.rep = std::move(flipped);
    c.plan = twin.plan;
    c.tight = false;
    std::ostringstream note;
    note << "complement transform uses " << count << " thresholds; the exact value is "
         << formula.lo;
    c.note = note.str();
    gate(c.graph, c.rep, "multipartite complement");
    return c;
}

namespace {

// Direct tiny representations so that short paths, small tents, and single
// rungs certify at their true value instead of the generic two-threshold
// constructions.
std::optional<Construction> small_direct(const FamilySpec& spec) {
    auto make = [&](std::vector<Rat> ranks, std::vector<Rat> thresholds,
                    const char* who) {
        Graph g = build_family(spec);
        Representation rep = rational_rep(ranks, thresholds);
        return finish(spec, std::move(g), std::move(rep), std::nullopt, who);
    };
    switch (spec.kind) {
        case Family::path: {
            int n = spec.params[0];
            if (n == 1) return make({Rat(0)}, {}, "path");
            if (n == 2) return make({Rat(0), Rat(0)}, {Rat(0)}, "path");
            if (n == 3) return make({Rat(0), Rat(1), Rat(0)}, {Rat(1)}, "path");
            return std::nullopt;
        }
        case Family::cycle: {
            if (spec.params[0] == 4)
                return make({Rat(1), Rat(-1), Rat(1), Rat(-1)}, {Rat(-1, 2), Rat(1, 2)},
                            "cycle");
            return std::nullopt;
        }
        case Family::tent: {
            int n = spec.params[0];
            if (n == 2) return make({Rat(1), Rat(1), Rat(1)}, {Rat(0)}, "tent");
            if (n == 3)
                return make({Rat(0), Rat(1), Rat(0), Rat(1)}, {Rat(1)}, "tent");
            return std::nullopt;
        }
        case Family::ladder: {
            if (spec.params[0] == 1) return make({Rat(0), Rat(0)}, {Rat(0)}, "ladder");
            return std::nullopt;
        }
        case Family::lforest: {
            // With a single short path (plus isolated vertices) one threshold
            // suffices; sink the singles far below it.
            long nontrivial = 0;
            int longest = 0;
            long singles = spec.params.empty() ? 0 : spec.params[0];
            for (size_t i = 1; i < spec.params.size(); ++i) {
                nontrivial += spec.params[i];
                if (spec.params[i] > 0) longest = static_cast<int>(i + 1);
            }
            if (nontrivial == 0) {
                std::vector<Rat> ranks(static_cast<size_t>(singles), Rat(0));
                return make(std::move(ranks), {}, "linear forest");
            }
            if (nontrivial == 1 && longest <= 3) {
                std::vector<Rat> ranks(static_cast<size_t>(singles), Rat(-2));
                if (longest == 2) {
                    ranks.emplace_back(1);
                    ranks.emplace_back(1);
                    return make(std::move(ranks), {Rat(2)}, "linear forest");
                }
                ranks.emplace_back(0);
                ranks.emplace_back(1);
                ranks.emplace_back(0);
                return make(std::move(ranks), {Rat(1)}, "linear forest");
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

Construction construct_for(const FamilySpec& spec) {
    spec.validate();
    if (auto direct = small_direct(spec)) return *direct;
    switch (spec.kind) {
        case Family::path: {
            // Reuse the linear forest layout for a single long path.
            std::vector<int> counts(static_cast<size_t>(spec.params[0]), 0);
            counts.back() = 1;
            Construction c = construct_linear_forest(counts);
            c.spec = spec;
            c.formula = theta_formula(spec);
            return c;
        }
        case Family::cycle: {
            if (spec.params[0] == 3) {
                Construction c = construct_cluster_light({0, 0, 1});
                c.spec = spec;
                c.formula = theta_formula(spec);
                return c;
            }
            throw InputError("no covered construction for cycles with n >= 5");
        }
        case Family::complete: {
            std::vector<int> counts(static_cast<size_t>(spec.params[0]), 0);
            counts.back() = 1;
            Construction c = construct_cluster_light(counts);
            c.spec = spec;
            c.formula = theta_formula(spec);
            return c;
        }
        case Family::ladder:
            return construct_ladder(spec.params[0]);
        case Family::tent:
            return construct_tent(spec.params[0]);
        case Family::lforest:
            return construct_linear_forest(spec.params);
        case Family::cluster:
            return construct_cluster_general(spec.params);
        case Family::multipartite:
            return construct_multipartite(spec.params[0], spec.params[1], spec.params[2]);
        case Family::complement_of: {
            const FamilySpec& child = spec.children[0];
            if (child.kind == Family::cluster && child.params.size() <= 3) {
                std::vector<int> p = child.params;
                p.resize(3, 0);
                Construction c = construct_multipartite(p[0], p[1], p[2]);
                c.spec = spec;
                return c;
            }
            if (child.kind == Family::multipartite) {
                Construction c = construct_cluster_general(child.params);
                c.spec = spec;
                c.formula = theta_formula(spec);
                return c;
            }
            if (child.kind == Family::complete) {
                Graph g = build_family(spec);
                std::vector<Rat> ranks(static_cast<size_t>(g.n), Rat(0));
                Representation rep = rational_rep(ranks, {});
                return finish(spec, std::move(g), std::move(rep), std::nullopt,
                              "complement of a clique");
            }
            if (child.kind == Family::complement_of)
                return construct_for(child.children[0]);
            Construction inner = construct_for(child);
            Representation flipped = complement_representation(inner.graph, inner.rep);
            Graph g = complement(inner.graph);
            Construction c = finish(spec, std::move(g), std::move(flipped),
                                    std::nullopt, "complement transform");
            return c;
        }
        case Family::union_of: {
            std::vector<int> counts;
            if (gather_union_paths(spec, counts)) {
                Construction c = construct_for(FamilySpec{Family::lforest, counts, {}});
                c.spec = spec;
                return c;
            }
            counts.clear();
            if (gather_union_cliques(spec, counts)) {
                Construction c = construct_cluster_general(counts);
                c.spec = spec;
                return c;
            }
            throw InputError("no covered construction for this union");
        }
    }
    throw InputError("unknown family");
}

}  // namespace mtg
