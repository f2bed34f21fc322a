// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "mtg/errors.hpp"
#include "mtg/graph.hpp"
#include "mtg/oracle.hpp"
#include "mtg/represent.hpp"

using mtg::Family;
using mtg::FamilySpec;
using mtg::Graph;
using mtg::OracleBudget;
using mtg::SearchStatus;

namespace {

Graph fam(Family kind, std::vector<int> params) {
    return mtg::build_family({kind, std::move(params), {}});
}

long search_value(const Graph& g, int max_k = 6, int workers = 1) {
    mtg::ThetaSearchResult r = mtg::theta_search(g, max_k, {}, workers);
    REQUIRE(r.theta.exact());
    REQUIRE_FALSE(r.exceeded);
    if (r.theta.lo > 0) {
        REQUIRE(r.witness.has_value());
        CHECK(mtg::verify(g, *r.witness).ok);
        CHECK(r.witness->threshold_count() == r.theta.lo);
    }
    return r.theta.lo;
}

}  // namespace

TEST_CASE("ground truth values with verified witnesses") {
    CHECK(search_value(Graph(3)) == 0);
    CHECK(search_value(fam(Family::path, {2})) == 1);
    CHECK(search_value(fam(Family::complete, {5})) == 1);
    CHECK(search_value(fam(Family::path, {4})) == 2);
    CHECK(search_value(fam(Family::cycle, {4})) == 2);
    CHECK(search_value(fam(Family::lforest, {0, 2})) == 2);  // 2P2 = 2K2
    CHECK(search_value(fam(Family::cluster, {0, 2, 0})) == 2);
    CHECK(search_value(fam(Family::tent, {3})) == 1);
    CHECK(search_value(fam(Family::tent, {4})) == 3);
    CHECK(search_value(fam(Family::ladder, {3})) == 2);
    CHECK(search_value(fam(Family::cluster, {0, 0, 2})) == 3);
    CHECK(search_value(fam(Family::multipartite, {0, 0, 2})) == 2);
}

TEST_CASE("witness thresholds are normalized to start at zero") {
    mtg::ThetaSearchResult r = mtg::theta_search(fam(Family::path, {4}), 4);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->thresholds[0] == mtg::ExactReal(0));
}

TEST_CASE("exists is monotone in the threshold count") {
    for (const Graph& g : {fam(Family::path, {4}), fam(Family::cycle, {4}),
                           fam(Family::tent, {4}), fam(Family::cluster, {1, 1, 0})}) {
        int first_yes = -1;
        for (int k = 0; k <= 4; ++k) {
            mtg::ExistsResult r = mtg::exists_representation(g, k);
            REQUIRE(r.status != SearchStatus::budget);
            if (r.status == SearchStatus::yes) {
                if (first_yes < 0) first_yes = k;
                CHECK(mtg::verify(g, *r.rep).ok);
            } else {
                CHECK(first_yes < 0);  // after the first yes everything is yes
            }
        }
        CHECK(first_yes >= 0);
    }
}

TEST_CASE("classic non-threshold graphs need two thresholds") {
    for (const Graph& g :
         {fam(Family::path, {4}), fam(Family::cycle, {4}), fam(Family::lforest, {0, 2})}) {
        CHECK(mtg::exists_representation(g, 1).status == SearchStatus::no);
        CHECK(mtg::exists_representation(g, 2).status == SearchStatus::yes);
    }
}

TEST_CASE("two workers agree with one") {
    for (const Graph& g : {fam(Family::cycle, {4}), fam(Family::cluster, {0, 0, 2}),
                           fam(Family::tent, {4})}) {
        CHECK(search_value(g, 6, 2) == search_value(g, 6, 1));
    }
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    OracleBudget tiny;
    tiny.max_nodes = 3;
    Graph g = fam(Family::cluster, {0, 0, 2});
    mtg::ExistsResult r = mtg::exists_representation(g, 3, tiny);
    CHECK(r.status == SearchStatus::budget);

    mtg::ThetaSearchResult t = mtg::theta_search(g, 6, tiny);
    CHECK(t.exceeded);
    CHECK_FALSE(t.theta.exact());
    CHECK(t.theta.lo <= 3);
    CHECK(t.theta.hi >= 3);
}

TEST_CASE("assignment enumeration at fixed k") {
    // Tent on four path vertices: every k=2 assignment fails the rational
    // feasibility check, proving the value is at least 3.
    Graph t4 = fam(Family::tent, {4});
    mtg::EnumerateResult res = mtg::enumerate_assignments(t4, 2);
    CHECK(res.pairs.size() == 10);
    REQUIRE(res.verdicts.size() == 8);  // three nonedges pick region 0 or 2
    for (const auto& v : res.verdicts) CHECK_FALSE(v.feasible);

    // P3 at k=1 has a single parity-consistent assignment and it works.
    mtg::EnumerateResult p3 = mtg::enumerate_assignments(fam(Family::path, {3}), 1);
    REQUIRE(p3.verdicts.size() == 1);
    CHECK(p3.verdicts[0].feasible);
    CHECK_FALSE(p3.verdicts[0].ranks.empty());

    // The cap guards against exponential blowups.
    CHECK_THROWS_AS(mtg::enumerate_assignments(fam(Family::cycle, {6}), 4, 10),
                    mtg::InputError);
}

// Runs in about a minute; enable by name when wanted.
TEST_CASE("three triangles need five thresholds" * doctest::skip()) {
    Graph g = fam(Family::cluster, {0, 0, 3});
    OracleBudget roomy;
    roomy.max_nodes = 50000000;
    roomy.timeout_sec = 600.0;
    mtg::ThetaSearchResult r = mtg::theta_search(g, 5, roomy, 4);
    REQUIRE(r.theta.exact());
    CHECK(r.theta.lo == 5);
}
