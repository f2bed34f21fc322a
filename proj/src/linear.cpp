// SPDX-License-Identifier: Apache-2.0
#include "mtg/linear.hpp"

#include <vector>

#include "mtg/errors.hpp"

namespace mtg {

namespace {

// Dense rational tableau for  min cost . y  s.t.  T y = rhs,  y >= 0.
// Bland's rule on both the entering and the leaving choice, so no cycling.
struct Tableau {
    std::vector<std::vector<Rat>> rows;  // each sized cols + 1, last entry rhs
    std::vector<Rat> cost;               // reduced costs, last entry -objective
    std::vector<int> basis;              // basic column per row
    std::vector<bool> active;            // redundant rows get switched off
    std::vector<bool> banned;            // columns barred from entering
    int cols = 0;

    void pivot(int pr, int pc) {
        auto& prow = rows[static_cast<size_t>(pr)];
        Rat pv = prow[static_cast<size_t>(pc)];
        for (auto& x : prow) x /= pv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == pr || !active[i]) continue;
            Rat f = rows[i][static_cast<size_t>(pc)];
            if (f == 0) continue;
            for (size_t j = 0; j < prow.size(); ++j) rows[i][j] -= f * prow[j];
        }
        Rat f = cost[static_cast<size_t>(pc)];
        if (f != 0)
            for (size_t j = 0; j < prow.size(); ++j) cost[j] -= f * prow[j];
        basis[static_cast<size_t>(pr)] = pc;
    }

    void load_cost(const std::vector<Rat>& c) {
        cost.assign(static_cast<size_t>(cols) + 1, Rat(0));
        for (int j = 0; j < cols; ++j) cost[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            Rat cb = c[static_cast<size_t>(basis[i])];
            if (cb == 0) continue;
            for (size_t j = 0; j < rows[i].size(); ++j) cost[j] -= cb * rows[i][j];
        }
    }

    // Returns false on an unbounded objective.
    bool minimize() {
        for (;;) {
            int pc = -1;
            for (int j = 0; j < cols; ++j) {
                if (!banned[static_cast<size_t>(j)] && cost[static_cast<size_t>(j)] < 0) {
                    pc = j;
                    break;
                }
            }
            if (pc < 0) return true;
            int pr = -1;
            Rat best;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (!active[i]) continue;
                const Rat& piv = rows[i][static_cast<size_t>(pc)];
                if (piv <= 0) continue;
                Rat ratio = rows[i].back() / piv;
                if (pr < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[static_cast<size_t>(pr)])) {
                    pr = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (pr < 0) return false;
            pivot(pr, pc);
        }
    }

    Rat objective() const { return -cost.back(); }

    Rat column_value(int col) const {
        for (size_t i = 0; i < rows.size(); ++i)
            if (active[i] && basis[i] == col) return rows[i].back();
        return Rat(0);
    }
};

}  // namespace

FeasibilityResult feasible_linear_system(const LinearSystem& sys) {
    const size_t n = sys.vars.size();
    for (const auto& row : sys.rows)
        if (row.coeffs.size() != n)
            throw InputError("constraint row width differs from variable count");

    // Columns: u_0..u_{n-1}, v_0..v_{n-1} (x = u - v), tp, tn (t = tp - tn),
    // one slack per row (constraints plus the cap row t <= 1), then one
    // artificial per row whose right side starts negative.
    const int tp = static_cast<int>(2 * n);
    const int tn = tp + 1;
    const int slack0 = tn + 1;
    const int nrows = static_cast<int>(sys.rows.size()) + 1;

    int artificials = 0;
    for (const auto& row : sys.rows)
        if (row.rhs < 0) ++artificials;
    const int art0 = slack0 + nrows;
    const int cols = art0 + artificials;

    Tableau tab;
    tab.cols = cols;
    tab.basis.assign(static_cast<size_t>(nrows), -1);
    tab.active.assign(static_cast<size_t>(nrows), true);
    tab.banned.assign(static_cast<size_t>(cols), false);
    tab.rows.assign(static_cast<size_t>(nrows),
                    std::vector<Rat>(static_cast<size_t>(cols) + 1, Rat(0)));

    int next_art = art0;
    for (size_t i = 0; i < sys.rows.size(); ++i) {
        const auto& src = sys.rows[i];
        auto& row = tab.rows[i];
        bool flip = src.rhs < 0;
        Rat s = flip ? Rat(-1) : Rat(1);
        for (size_t j = 0; j < n; ++j) {
            row[j] = s * src.coeffs[j];
            row[n + j] = -row[j];
        }
        if (src.strict) {
            row[static_cast<size_t>(tp)] = s;
            row[static_cast<size_t>(tn)] = -s;
        }
        row[static_cast<size_t>(slack0) + i] = s;
        row.back() = s * src.rhs;
        if (flip) {
            row[static_cast<size_t>(next_art)] = 1;
            tab.basis[i] = next_art++;
        } else {
            tab.basis[i] = slack0 + static_cast<int>(i);
        }
    }
    {
        auto& cap = tab.rows.back();
        cap[static_cast<size_t>(tp)] = 1;
        cap[static_cast<size_t>(tn)] = -1;
        cap[static_cast<size_t>(slack0) + sys.rows.size()] = 1;
        cap.back() = 1;
        tab.basis.back() = slack0 + static_cast<int>(sys.rows.size());
    }

    if (artificials > 0) {
        std::vector<Rat> c1(static_cast<size_t>(cols), Rat(0));
        for (int j = art0; j < cols; ++j) c1[static_cast<size_t>(j)] = 1;
        tab.load_cost(c1);
        if (!tab.minimize())
            throw InternalError("phase-1 objective unbounded below zero");
        if (tab.objective() != 0) return {};  // no weak solution at all
        // Kick leftover artificials out of the basis; rows that cannot shed
        // theirs are redundant and get deactivated.
        for (size_t i = 0; i < tab.rows.size(); ++i) {
            if (!tab.active[i] || tab.basis[i] < art0) continue;
            int pc = -1;
            for (int j = 0; j < art0; ++j) {
                if (tab.rows[i][static_cast<size_t>(j)] != 0) {
                    pc = j;
                    break;
                }
            }
            if (pc >= 0)
                tab.pivot(static_cast<int>(i), pc);  // degenerate: rhs is zero
            else
                tab.active[i] = false;
        }
        for (int j = art0; j < cols; ++j) tab.banned[static_cast<size_t>(j)] = true;
    }

    std::vector<Rat> c2(static_cast<size_t>(cols), Rat(0));
    c2[static_cast<size_t>(tp)] = -1;  // minimize tn - tp, i.e. maximize t
    c2[static_cast<size_t>(tn)] = 1;
    tab.load_cost(c2);
    if (!tab.minimize())
        throw InternalError("margin objective unbounded despite the cap row");

    Rat margin = tab.column_value(tp) - tab.column_value(tn);
    if (margin <= 0) return {};

    FeasibilityResult res;
    res.feasible = true;
    res.margin = margin;
    res.witness.resize(n);
    for (size_t j = 0; j < n; ++j)
        res.witness[j] = tab.column_value(static_cast<int>(j)) -
                         tab.column_value(static_cast<int>(n + j));

    for (const auto& row : sys.rows) {
        Rat lhs(0);
        for (size_t j = 0; j < n; ++j) lhs += row.coeffs[j] * res.witness[j];
        bool ok = row.strict ? lhs < row.rhs : lhs <= row.rhs;
        if (!ok) throw InternalError("simplex witness fails a row it solved");
    }
    return res;
}

}  // namespace mtg
