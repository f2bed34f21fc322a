// SPDX-License-Identifier: Apache-2.0
#include "mtg/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "mtg/errors.hpp"

namespace mtg {

namespace {

using Clock = std::chrono::steady_clock;

struct PairItem {
    int u = 0;
    int v = 0;
    bool edge = false;
};

// Edges first, then nonedges, each block by descending degree sum; ties in
// vertex order.  Edges are the scarce side of the parity split, so failing
// them early keeps the tree narrow.
std::vector<PairItem> pair_order(const Graph& g) {
    std::vector<int> deg = g.degrees();
    std::vector<PairItem> items;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            items.push_back({u, v, g.has_edge(u, v)});
    std::stable_sort(items.begin(), items.end(),
                     [&](const PairItem& a, const PairItem& b) {
                         if (a.edge != b.edge) return a.edge;
                         int da = deg[static_cast<size_t>(a.u)] + deg[static_cast<size_t>(a.v)];
                         int db = deg[static_cast<size_t>(b.u)] + deg[static_cast<size_t>(b.v)];
                         if (da != db) return da > db;
                         return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
                     });
    return items;
}

std::vector<int> region_choices(bool edge, int k) {
    std::vector<int> out;
    for (int r = edge ? 1 : 0; r <= k; r += 2) out.push_back(r);
    return out;
}

// Constraint builder over variables x_0..x_{n-1}, th_2..th_k (th_1 == 0).
struct SystemBuilder {
    int n = 0;
    int k = 0;

    size_t var_count() const {
        return static_cast<size_t>(n) + static_cast<size_t>(std::max(0, k - 1));
    }
    size_t th_col(int i) const {  // threshold index i in 2..k
        return static_cast<size_t>(n + i - 2);
    }

    std::vector<LinearConstraint> base_rows() const {
        std::vector<LinearConstraint> rows;
        for (int i = 2; i <= k; ++i) {
            // th_i > th_{i-1}, with th_1 == 0.
            LinearConstraint row;
            row.coeffs.assign(var_count(), Rat(0));
            row.strict = true;
            row.rhs = 0;
            row.coeffs[th_col(i)] = -1;
            if (i > 2) row.coeffs[th_col(i - 1)] = 1;
            rows.push_back(std::move(row));
        }
        return rows;
    }

    // Rows pinning pair {u, v} to region g: th_g <= x_u + x_v < th_{g+1}.
    std::vector<LinearConstraint> pair_rows(int u, int v, int g) const {
        std::vector<LinearConstraint> rows;
        if (g >= 1) {
            LinearConstraint row;
            row.coeffs.assign(var_count(), Rat(0));
            row.strict = false;
            row.rhs = 0;
            row.coeffs[static_cast<size_t>(u)] -= 1;
            row.coeffs[static_cast<size_t>(v)] -= 1;
            if (g >= 2) row.coeffs[th_col(g)] = 1;
            rows.push_back(std::move(row));
        }
        if (g <= k - 1) {
            LinearConstraint row;
            row.coeffs.assign(var_count(), Rat(0));
            row.strict = true;
            row.rhs = 0;
            row.coeffs[static_cast<size_t>(u)] += 1;
            row.coeffs[static_cast<size_t>(v)] += 1;
            if (g + 1 >= 2) row.coeffs[th_col(g + 1)] = -1;
            rows.push_back(std::move(row));
        }
        return rows;
    }

    Representation to_representation(const std::vector<Rat>& witness) const {
        Representation rep;
        for (int i = 0; i < n; ++i)
            rep.ranks.emplace_back(witness[static_cast<size_t>(i)]);
        if (k >= 1) {
            rep.thresholds.emplace_back(Rat(0));
            for (int i = 2; i <= k; ++i)
                rep.thresholds.emplace_back(witness[th_col(i)]);
        }
        return rep;
    }
};

struct SearchShared {
    std::atomic<bool> found{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<long> nodes{0};
    long max_nodes = 0;
    bool use_deadline = false;
    Clock::time_point deadline;
    std::mutex result_mu;
    std::optional<Representation> rep;
};

struct SearchLocal {
    const Graph* g = nullptr;
    SystemBuilder builder;
    std::vector<PairItem> pairs;
    LinearSystem sys;  // rows grow and shrink with the DFS
};

bool out_of_budget(SearchShared& shared) {
    if (shared.nodes.load(std::memory_order_relaxed) > shared.max_nodes) {
        shared.budget_hit.store(true);
        return true;
    }
    if (shared.use_deadline && Clock::now() > shared.deadline) {
        shared.budget_hit.store(true);
        return true;
    }
    return false;
}

// Returns true when a witness was found (locally or by another worker).
bool dfs(SearchLocal& local, SearchShared& shared, size_t depth) {
    if (shared.found.load(std::memory_order_relaxed)) return true;
    if (depth == local.pairs.size()) {
        FeasibilityResult fin = feasible_linear_system(local.sys);
        if (!fin.feasible)
            throw InternalError("leaf reached with an infeasible system");
        Representation rep = local.builder.to_representation(fin.witness);
        if (!verify(*local.g, rep).ok)
            throw InternalError("oracle witness failed verification");
        std::lock_guard<std::mutex> lock(shared.result_mu);
        if (!shared.rep) shared.rep = std::move(rep);
        shared.found.store(true);
        return true;
    }
    const PairItem& item = local.pairs[depth];
    for (int g : region_choices(item.edge, local.builder.k)) {
        if (shared.found.load(std::memory_order_relaxed)) return true;
        if (out_of_budget(shared)) return false;
        shared.nodes.fetch_add(1, std::memory_order_relaxed);
        auto rows = local.builder.pair_rows(item.u, item.v, g);
        size_t mark = local.sys.rows.size();
        for (auto& r : rows) local.sys.rows.push_back(std::move(r));
        bool ok = feasible_linear_system(local.sys).feasible;
        if (ok && dfs(local, shared, depth + 1)) return true;
        local.sys.rows.resize(mark);
    }
    return false;
}

SearchLocal make_local(const Graph& g, int k) {
    SearchLocal local;
    local.g = &g;
    local.builder = SystemBuilder{g.n, k};
    local.pairs = pair_order(g);
    local.sys.vars.resize(local.builder.var_count());
    for (auto& row : local.builder.base_rows()) local.sys.rows.push_back(std::move(row));
    return local;
}

// Fixed region choices for the first pairs, one task per combination.
std::vector<std::vector<int>> make_prefixes(const std::vector<PairItem>& pairs, int k,
                                            int workers) {
    std::vector<std::vector<int>> tasks{{}};
    size_t depth = 0;
    while (static_cast<int>(tasks.size()) < workers && depth < pairs.size() &&
           depth < 3) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : tasks) {
            for (int g : region_choices(pairs[depth].edge, k)) {
                auto ext = prefix;
                ext.push_back(g);
                next.push_back(std::move(ext));
            }
        }
        tasks = std::move(next);
        ++depth;
    }
    return tasks;
}

}  // namespace

ExistsResult exists_representation(const Graph& g, int k, const OracleBudget& budget,
                                   int workers) {
    if (k < 0) throw InputError("threshold count must be >= 0");
    if (workers < 1) throw InputError("workers must be >= 1");
    if (k == 0) {
        // No thresholds: every pair sum falls in region 0, so only edgeless
        // graphs qualify.
        if (!g.edges.empty()) return {SearchStatus::no, std::nullopt, 0};
        Representation rep;
        rep.ranks.assign(static_cast<size_t>(g.n), ExactReal(0));
        return {SearchStatus::yes, rep, 0};
    }

    SearchShared shared;
    shared.max_nodes = budget.max_nodes;
    if (budget.timeout_sec > 0) {
        shared.use_deadline = true;
        shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(budget.timeout_sec));
    }

    std::vector<PairItem> pairs = pair_order(g);
    auto run_task = [&](const std::vector<int>& prefix) {
        if (shared.found.load() || shared.budget_hit.load()) return;
        SearchLocal local = make_local(g, k);
        // Replay the prefix with pruning checks, then search the rest.
        for (size_t d = 0; d < prefix.size(); ++d) {
            if (shared.found.load() || out_of_budget(shared)) return;
            shared.nodes.fetch_add(1, std::memory_order_relaxed);
            auto rows = local.builder.pair_rows(pairs[d].u, pairs[d].v, prefix[d]);
            for (auto& r : rows) local.sys.rows.push_back(std::move(r));
            if (!feasible_linear_system(local.sys).feasible) return;
        }
        dfs(local, shared, prefix.size());
    };

    if (workers == 1) {
        run_task({});
    } else {
        std::vector<std::vector<int>> tasks = make_prefixes(pairs, k, workers);
        std::atomic<size_t> cursor{0};
        auto worker_loop = [&] {
            for (;;) {
                size_t idx = cursor.fetch_add(1);
                if (idx >= tasks.size()) return;
                run_task(tasks[idx]);
            }
        };
        std::vector<std::thread> pool;
        int count = std::min<int>(workers, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) pool.emplace_back(worker_loop);
        for (auto& t : pool) t.join();
    }

    ExistsResult out;
    out.nodes = shared.nodes.load();
    if (shared.found.load()) {
        out.status = SearchStatus::yes;
        std::lock_guard<std::mutex> lock(shared.result_mu);
        out.rep = shared.rep;
    } else if (shared.budget_hit.load()) {
        out.status = SearchStatus::budget;
    } else {
        out.status = SearchStatus::no;
    }
    return out;
}

ThetaSearchResult theta_search(const Graph& g, int max_k, const OracleBudget& budget,
                               int workers) {
    if (max_k < 0) throw InputError("max_k must be >= 0");
    ThetaSearchResult out;
    long pair_cap = static_cast<long>(g.n) * (g.n - 1) / 2;
    for (int k = 0; k <= max_k; ++k) {
        ExistsResult res = exists_representation(g, k, budget, workers);
        out.nodes += res.nodes;
        if (res.status == SearchStatus::yes) {
            out.theta = {k, k, "oracle", false};
            out.witness = res.rep;
            return out;
        }
        if (res.status == SearchStatus::budget) {
            out.exceeded = true;
            out.theta = {k, std::max<long>(pair_cap, k), "oracle-bounds", false};
            return out;
        }
    }
    long lo = max_k + 1;
    out.theta = {lo, std::max<long>(pair_cap, lo), "oracle-bounds", false};
    return out;
}

EnumerateResult enumerate_assignments(const Graph& g, int k, size_t cap) {
    if (k < 0) throw InputError("threshold count must be >= 0");
    SystemBuilder builder{g.n, k};
    EnumerateResult out;
    std::vector<PairItem> pairs = pair_order(g);
    std::vector<std::vector<int>> choices;
    size_t total = 1;
    for (const auto& p : pairs) {
        choices.push_back(region_choices(p.edge, k));
        if (choices.back().empty()) total = 0;
        if (total > 0 && total > cap / std::max<size_t>(choices.back().size(), 1))
            throw InputError("assignment count exceeds the enumeration cap");
        total *= choices.back().size();
        out.pairs.emplace_back(p.u, p.v);
    }
    if (total == 0) return out;

    std::vector<size_t> idx(pairs.size(), 0);
    for (;;) {
        LinearSystem sys;
        sys.vars.resize(builder.var_count());
        for (auto& row : builder.base_rows()) sys.rows.push_back(std::move(row));
        AssignmentVerdict verdict;
        for (size_t d = 0; d < pairs.size(); ++d) {
            int region = choices[d][idx[d]];
            verdict.regions.push_back(region);
            for (auto& row : builder.pair_rows(pairs[d].u, pairs[d].v, region))
                sys.rows.push_back(std::move(row));
        }
        FeasibilityResult res = feasible_linear_system(sys);
        verdict.feasible = res.feasible;
        if (res.feasible) {
            for (int i = 0; i < g.n; ++i)
                verdict.ranks.push_back(res.witness[static_cast<size_t>(i)]);
            if (k >= 1) {
                verdict.thresholds.emplace_back(0);
                for (int i = 2; i <= k; ++i)
                    verdict.thresholds.push_back(res.witness[builder.th_col(i)]);
            }
        }
        out.verdicts.push_back(std::move(verdict));
        size_t d = pairs.size();
        for (;;) {
            if (d == 0) return out;
            --d;
            if (++idx[d] < choices[d].size()) break;
            idx[d] = 0;
        }
    }
}

}  // namespace mtg
