// SPDX-License-Identifier: Apache-2.0
#include "mtg/represent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mtg/errors.hpp"

namespace mtg {

void Representation::validate() const {
    for (size_t i = 0; i + 1 < thresholds.size(); ++i)
        if (exact_cmp(thresholds[i], thresholds[i + 1]) >= 0)
            throw InputError("thresholds must strictly increase");
}

int region_index(const Representation& rep, const ExactReal& sum) {
    int g = 0;
    for (const auto& t : rep.thresholds) {
        if (exact_cmp(t, sum) <= 0)
            ++g;
        else
            break;  // thresholds increase, so later ones stay above the sum
    }
    return g;
}

VerifyReport verify(const Graph& g, const Representation& rep) {
    if (g.n != rep.order())
        throw InputError("rank count differs from graph order");
    rep.validate();
    VerifyReport report;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            ExactReal sum = rep.ranks[static_cast<size_t>(u)] +
                            rep.ranks[static_cast<size_t>(v)];
            int region = region_index(rep, sum);
            bool want_edge = g.has_edge(u, v);
            if ((region % 2 == 1) != want_edge)
                report.violations.push_back({u, v, sum, region, want_edge});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

std::vector<ColorTriple> color_triangles(const Graph& g, const Representation& rep,
                                         const std::vector<std::array<int, 3>>& triangles) {
    if (g.n != rep.order())
        throw InputError("rank count differs from graph order");
    rep.validate();
    std::vector<ColorTriple> out;
    for (const auto& tri : triangles) {
        ColorTriple colors{};
        int slot = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                int u = tri[static_cast<size_t>(i)];
                int v = tri[static_cast<size_t>(j)];
                if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
                    throw InputError("triangle vertices out of range");
                if (!g.has_edge(u, v))
                    throw InputError("listed triple is not a triangle in the graph");
                ExactReal sum = rep.ranks[static_cast<size_t>(u)] +
                                rep.ranks[static_cast<size_t>(v)];
                int region = region_index(rep, sum);
                if (region % 2 == 0)
                    throw InternalError("triangle edge landed in an even region");
                colors[static_cast<size_t>(slot++)] = (region + 1) / 2;
            }
        }
        std::sort(colors.begin(), colors.end());
        out.push_back(colors);
    }
    return out;
}

std::optional<std::string> check_coloring_lemmas(const std::vector<ColorTriple>& colors) {
    auto describe = [](const ColorTriple& t) {
        std::ostringstream s;
        s << "{" << t[0] << "," << t[1] << "," << t[2] << "}";
        return s.str();
    };
    for (size_t x = 0; x < colors.size(); ++x) {
        for (size_t y = x + 1; y < colors.size(); ++y) {
            ColorTriple a = colors[x], b = colors[y];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a == b)
                return "multiset " + describe(a) + " used by two triangles";
        }
    }
    // (i; j, j) readings: {i, j, j} with any multiplicity arrangement.  A pure
    // triple {i, i, i} reads as head i with pair color i.
    std::map<int, std::pair<int, ColorTriple>> head_pair;  // head -> (j, witness)
    for (const auto& raw : colors) {
        ColorTriple t = raw;
        std::sort(t.begin(), t.end());
        std::vector<std::pair<int, int>> readings;  // (head i, pair j)
        if (t[0] == t[1] && t[1] == t[2]) {
            readings.emplace_back(t[0], t[0]);
        } else if (t[0] == t[1]) {
            readings.emplace_back(t[2], t[0]);
        } else if (t[1] == t[2]) {
            readings.emplace_back(t[0], t[1]);
        }
        for (auto [i, j] : readings) {
            auto it = head_pair.find(i);
            if (it != head_pair.end() && it->second.first != j) {
                return "head color " + std::to_string(i) + " pairs with both " +
                       std::to_string(it->second.first) + " and " + std::to_string(j) +
                       " (" + describe(it->second.second) + " vs " + describe(t) + ")";
            }
            head_pair.emplace(i, std::make_pair(j, t));
        }
    }
    return std::nullopt;
}

Representation complement_representation(const Graph& g, const Representation& rep) {
    VerifyReport report = verify(g, rep);
    if (!report.ok)
        throw InputError("representation does not verify; cannot complement it");
    // The sentinel must sit strictly below every pair sum and below the old
    // first threshold.  2 * min rank bounds all pair sums from below; take the
    // smaller of that and t_1, then step down by 1.
    ExactReal low(Rat(0));
    bool have = false;
    if (!rep.ranks.empty()) {
        ExactReal m = rep.ranks[0];
        for (const auto& r : rep.ranks)
            if (exact_cmp(r, m) < 0) m = r;
        low = m + m;
        have = true;
    }
    if (!rep.thresholds.empty() && (!have || exact_cmp(rep.thresholds[0], low) < 0)) {
        low = rep.thresholds[0];
        have = true;
    }
    (void)have;
    Representation out;
    out.ranks = rep.ranks;
    out.thresholds.reserve(rep.thresholds.size() + 1);
    out.thresholds.push_back(low - ExactReal(1));
    for (const auto& t : rep.thresholds) out.thresholds.push_back(t);
    return out;
}

}  // namespace mtg
