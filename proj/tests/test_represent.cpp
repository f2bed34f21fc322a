// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "mtg/errors.hpp"
#include "mtg/exact.hpp"
#include "mtg/graph.hpp"
#include "mtg/represent.hpp"

using mtg::ExactReal;
using mtg::Family;
using mtg::Graph;
using mtg::Rat;
using mtg::Representation;

namespace {

Representation make_rep(std::vector<Rat> ranks, std::vector<Rat> thresholds) {
    Representation rep;
    for (const auto& r : ranks) rep.ranks.emplace_back(r);
    for (const auto& t : thresholds) rep.thresholds.emplace_back(t);
    return rep;
}

}  // namespace

TEST_CASE("region counting is inclusive at thresholds") {
    Representation rep = make_rep({}, {Rat(-1, 2), Rat(1, 2)});
    CHECK(mtg::region_index(rep, ExactReal(0)) == 1);
    CHECK(mtg::region_index(rep, ExactReal(Rat(1, 2))) == 2);  // sum >= theta counts
    CHECK(mtg::region_index(rep, ExactReal(Rat(-1, 2))) == 1);
    CHECK(mtg::region_index(rep, ExactReal(-5)) == 0);
    Representation empty = make_rep({}, {});
    CHECK(mtg::region_index(empty, ExactReal(7)) == 0);

    CHECK_THROWS_AS(make_rep({}, {Rat(1), Rat(1)}).validate(), mtg::InputError);
    CHECK_THROWS_AS(make_rep({}, {Rat(2), Rat(1)}).validate(), mtg::InputError);
}

TEST_CASE("region index is monotone in the sum") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> v(-8, 8);
    for (int iter = 0; iter < 200; ++iter) {
        Representation rep = make_rep({}, {Rat(v(rng), 3) - 5, Rat(v(rng), 3) + 5});
        ExactReal a = ExactReal(Rat(v(rng), 2)) + Rat(v(rng), 7) * ExactReal::sqrt_prime(2);
        ExactReal b = a + ExactReal(Rat(std::abs(v(rng)), 5));
        CHECK(mtg::region_index(rep, a) <= mtg::region_index(rep, b));
    }
}

TEST_CASE("verify frozen examples") {
    Graph c4 = mtg::build_family({Family::cycle, {4}, {}});
    Representation rep = make_rep({1, -1, 1, -1}, {Rat(-1, 2), Rat(1, 2)});
    CHECK(mtg::verify(c4, rep).ok);

    Graph twop2 = mtg::build_family({Family::lforest, {0, 2}, {}});
    CHECK(mtg::verify(twop2, make_rep({1, -1, 2, -2}, {Rat(-1, 2), Rat(1, 2)})).ok);

    Graph p4 = mtg::build_family({Family::path, {4}, {}});
    mtg::VerifyReport bad = mtg::verify(p4, rep);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].u == 0);
    CHECK(bad.violations[0].v == 3);
    CHECK(bad.violations[0].region == 1);
    CHECK_FALSE(bad.violations[0].is_edge);

    CHECK_THROWS_AS(mtg::verify(c4, make_rep({0, 0}, {})), mtg::InputError);
}

TEST_CASE("triangle coloring") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    Representation one = make_rep({1, 1, 1}, {Rat(1)});
    auto colors = mtg::color_triangles(k3, one, {{0, 1, 2}});
    REQUIRE(colors.size() == 1);
    CHECK(colors[0] == mtg::ColorTriple{1, 1, 1});

    // Two disjoint triangles at separated levels get colors 1 and 2.
    Graph two(6);
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) two.add_edge(base + i, base + j);
    Representation layered =
        make_rep({0, 0, 0, 10, 10, 10}, {Rat(-1), Rat(1), Rat(19)});
    REQUIRE(mtg::verify(two, layered).ok);
    auto pair_colors = mtg::color_triangles(two, layered, {{0, 1, 2}, {3, 4, 5}});
    CHECK(pair_colors[0] == mtg::ColorTriple{1, 1, 1});
    CHECK(pair_colors[1] == mtg::ColorTriple{2, 2, 2});

    // Not a triangle: rejected.
    CHECK_THROWS_AS(mtg::color_triangles(two, layered, {{0, 1, 3}}), mtg::InputError);
}

TEST_CASE("coloring lemmas") {
    using mtg::check_coloring_lemmas;
    CHECK_FALSE(check_coloring_lemmas({{1, 1, 1}, {2, 2, 2}, {1, 2, 3}}).has_value());
    // Repeated multiset.
    auto dup = check_coloring_lemmas({{1, 2, 3}, {1, 2, 3}});
    REQUIRE(dup.has_value());
    // {i,j,j} and {i,l,l} with the same head i and j != l.
    auto heads = check_coloring_lemmas({{1, 2, 2}, {1, 3, 3}});
    REQUIRE(heads.has_value());
    // A pure triple {1,1,1} reads as head 1 pair 1, clashing with {1,2,2}.
    auto pure = check_coloring_lemmas({{1, 1, 1}, {1, 2, 2}});
    REQUIRE(pure.has_value());
    // Same pair color under different heads is fine.
    CHECK_FALSE(check_coloring_lemmas({{1, 2, 2}, {3, 2, 2}}).has_value());
}

TEST_CASE("complement transform") {
    // Edgeless to complete: parity flip with a single sentinel.
    Graph e3(3);
    Representation zero = make_rep({0, 0, 0}, {});
    Representation flipped = mtg::complement_representation(e3, zero);
    REQUIRE(flipped.thresholds.size() == 1);
    CHECK(mtg::verify(mtg::complement(e3), flipped).ok);

    Graph c4 = mtg::build_family({Family::cycle, {4}, {}});
    Representation rep = make_rep({1, -1, 1, -1}, {Rat(-1, 2), Rat(1, 2)});
    Representation comp = mtg::complement_representation(c4, rep);
    CHECK(comp.thresholds.size() == 3);
    CHECK(mtg::verify(mtg::complement(c4), comp).ok);

    // Sentinel must clear an existing threshold that lies below all sums.
    Graph k2(2);
    k2.add_edge(0, 1);
    Representation low = make_rep({0, 0}, {Rat(-100)});
    REQUIRE(mtg::verify(k2, low).ok);
    Representation flipped_low = mtg::complement_representation(k2, low);
    flipped_low.validate();
    CHECK(mtg::verify(mtg::complement(k2), flipped_low).ok);

    // Input must verify.
    CHECK_THROWS_AS(mtg::complement_representation(mtg::complement(c4), rep),
                    mtg::InputError);
}

TEST_CASE("vertex deletion keeps representations valid") {
    Graph c4 = mtg::build_family({Family::cycle, {4}, {}});
    Representation rep = make_rep({1, -1, 1, -1}, {Rat(-1, 2), Rat(1, 2)});
    std::mt19937 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<int> keep;
        for (int v = 0; v < 4; ++v)
            if (rng() % 2) keep.push_back(v);
        Representation sub;
        sub.thresholds = rep.thresholds;
        for (int v : keep) sub.ranks.push_back(rep.ranks[static_cast<size_t>(v)]);
        CHECK(mtg::verify(mtg::induced_subgraph(c4, keep), sub).ok);
    }
}
