// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>

#include "doctest.h"
#include "mtg/errors.hpp"
#include "mtg/theta.hpp"

using mtg::Family;
using mtg::FamilySpec;
using mtg::Sequence;
using mtg::ThetaResult;

namespace {

// Test-side reimplementation of the counting sequences, written directly
// from their closed forms rather than shared code.
long choose3(long m) { return m * (m - 1) * (m - 2) / 6; }
long q_seq(long m) { return m + choose3(m) + 1; }
long p_seq(long m) { return q_seq(m) + 1; }
long s_seq(long m) { return m + choose3(m / 2) + choose3((m + 1) / 2) + 2; }
long t_seq(long m) { return s_seq(m) - 1; }

// Interval-partition scan: the value on [seq(m-1), seq(m)-1] is low at the
// left endpoint and high elsewhere.
long scan(long n, long (*seq)(long), long low_delta, long high_delta) {
    for (long m = 1;; ++m)
        if (n >= seq(m - 1) && n <= seq(m) - 1)
            return n == seq(m - 1) ? 2 * m + low_delta : 2 * m + high_delta;
}

ThetaResult cluster_value(int n1, int n2, int n3) {
    return mtg::theta_formula({Family::cluster, {n1, n2, n3}, {}});
}

ThetaResult multi_value(int n1, int n2, int n3) {
    return mtg::theta_formula({Family::multipartite, {n1, n2, n3}, {}});
}

}  // namespace

TEST_CASE("sequence tables") {
    long q_expect[] = {1, 2, 3, 5, 9, 16, 27};
    long s_expect[] = {2, 3, 4, 5, 6, 8, 10, 14, 18};
    for (int m = 0; m <= 6; ++m) {
        mtg::SequenceValues v = mtg::qp_values(m);
        CHECK(v.q == q_expect[m]);
        CHECK(v.p == q_expect[m] + 1);
    }
    for (int m = 0; m <= 8; ++m) {
        mtg::SequenceValues v = mtg::qp_values(m);
        CHECK(v.s == s_expect[m]);
        CHECK(v.t == s_expect[m] - 1);
    }
}

TEST_CASE("m_from_count fits and boundaries") {
    mtg::SequenceFit fit = mtg::m_from_count(2, Sequence::q);
    CHECK(fit.m == 2);
    CHECK(fit.boundary);
    fit = mtg::m_from_count(7, Sequence::q);
    CHECK(fit.m == 4);
    CHECK_FALSE(fit.boundary);
    fit = mtg::m_from_count(16, Sequence::q);
    CHECK(fit.m == 6);
    CHECK(fit.boundary);
    fit = mtg::m_from_count(3, Sequence::p);
    CHECK(fit.m == 2);
    CHECK(fit.boundary);
    fit = mtg::m_from_count(1, Sequence::q);  // q_0 = 1 is the smallest count
    CHECK(fit.m == 1);
    CHECK(fit.boundary);
    CHECK_THROWS_AS(mtg::m_from_count(0, Sequence::q), mtg::InputError);
    CHECK_THROWS_AS(mtg::m_from_count(1, Sequence::p), mtg::InputError);
}

TEST_CASE("cluster formula against an independent scan") {
    for (int n3 = 2; n3 <= 60; ++n3) {
        ThetaResult r = cluster_value(0, 0, n3);
        REQUIRE(r.exact());
        CHECK(r.lo == scan(n3, q_seq, -1, 0));
        // Extra singles and pairs never move the value once n3 >= 2.
        CHECK(cluster_value(3, 2, n3).lo == r.lo);
    }
    // Small cases by the piecewise table.
    CHECK(cluster_value(3, 0, 0).lo == 0);
    CHECK(cluster_value(2, 1, 0).lo == 1);
    CHECK(cluster_value(0, 0, 1).lo == 1);
    CHECK(cluster_value(1, 2, 0).lo == 2);
    CHECK(cluster_value(0, 1, 1).lo == 2);
}

TEST_CASE("multipartite formula against an independent scan") {
    for (int n3 = 3; n3 <= 60; ++n3) {
        ThetaResult r = multi_value(0, 0, n3);
        REQUIRE(r.exact());
        CHECK(r.lo == scan(n3, p_seq, 0, 1));
        CHECK(multi_value(2, 2, n3).lo == r.lo);
    }
    CHECK(multi_value(2, 0, 0).lo == 1);
    CHECK(multi_value(5, 0, 0).lo == 1);
    CHECK(multi_value(1, 1, 0).lo == 1);
    CHECK(multi_value(0, 2, 0).lo == 2);
    CHECK(multi_value(0, 0, 2).lo == 2);
    CHECK(multi_value(0, 3, 0).lo == 3);
    CHECK(multi_value(2, 1, 2).lo == 3);
    // A single part is not a multipartite spec (and would be edgeless).
    CHECK_THROWS_AS(mtg::theta_formula({Family::multipartite, {0, 0, 1}, {}}),
                    mtg::InputError);
}

TEST_CASE("quad families follow the s and t sequences") {
    FamilySpec one_quad{Family::cluster, {0, 0, 0, 1}, {}};
    CHECK(mtg::theta_formula(one_quad).lo == 1);
    for (int n = 2; n <= 40; ++n) {
        ThetaResult r = mtg::theta_formula({Family::cluster, {0, 0, 0, n}, {}});
        REQUIRE(r.exact());
        CHECK(r.lo == scan(n, t_seq, -1, 0));
        // K_{n x 4} is spelled as the complement of the clique union.
        ThetaResult c = mtg::theta_formula(
            {Family::complement_of, {}, {{Family::cluster, {0, 0, 0, n}, {}}}});
        REQUIRE(c.exact());
        CHECK(c.lo == scan(n, s_seq, 0, 1));
        // Complement gap at most one, with the parity refinement.
        CHECK(std::abs(r.lo - c.lo) <= 1);
        if (r.lo % 2 == 1) CHECK((c.lo == r.lo || c.lo == r.lo - 1));
        if (r.lo % 2 == 0) CHECK((c.lo == r.lo || c.lo == r.lo + 1));
    }
}

TEST_CASE("cluster and multipartite values stay within the complement gap") {
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2)
            for (int n3 = 0; n3 <= 30; ++n3) {
                if (n1 + n2 + n3 < 2) continue;
                long c = cluster_value(n1, n2, n3).lo;
                long m = multi_value(n1, n2, n3).lo;
                CHECK(std::abs(c - m) <= 1);
                if (c % 2 == 1) CHECK((m == c || m == c - 1));
                if (c % 2 == 0) CHECK((m == c || m == c + 1));
            }
}

TEST_CASE("path variant values") {
    CHECK(mtg::theta_formula({Family::path, {1}, {}}).lo == 0);
    CHECK(mtg::theta_formula({Family::path, {2}, {}}).lo == 1);
    CHECK(mtg::theta_formula({Family::path, {3}, {}}).lo == 1);
    CHECK(mtg::theta_formula({Family::path, {9}, {}}).lo == 2);
    CHECK(mtg::theta_formula({Family::cycle, {3}, {}}).lo == 1);
    CHECK(mtg::theta_formula({Family::cycle, {4}, {}}).lo == 2);
    CHECK_THROWS_AS(mtg::theta_formula({Family::cycle, {5}, {}}), mtg::InputError);
    CHECK(mtg::theta_formula({Family::ladder, {1}, {}}).lo == 1);
    CHECK(mtg::theta_formula({Family::ladder, {7}, {}}).lo == 2);
    CHECK(mtg::theta_formula({Family::tent, {2}, {}}).lo == 1);
    CHECK(mtg::theta_formula({Family::tent, {3}, {}}).lo == 1);
    CHECK(mtg::theta_formula({Family::tent, {4}, {}}).lo == 3);
    CHECK(mtg::theta_formula({Family::tent, {30}, {}}).lo == 3);
    CHECK(mtg::theta_formula({Family::lforest, {4, 0, 0}, {}}).lo == 0);
    CHECK(mtg::theta_formula({Family::lforest, {0, 1}, {}}).lo == 1);
    CHECK(mtg::theta_formula({Family::lforest, {2, 0, 1}, {}}).lo == 1);
    CHECK(mtg::theta_formula({Family::lforest, {0, 2}, {}}).lo == 2);
    CHECK(mtg::theta_formula({Family::lforest, {0, 0, 0, 1}, {}}).lo == 2);
}

TEST_CASE("large cliques gate the general cluster rule") {
    // Sum of K4-or-larger cliques within the color budget: exact.
    CHECK(mtg::theta_formula({Family::cluster, {0, 0, 3, 1}, {}}).lo == 6);
    CHECK(mtg::theta_formula({Family::cluster, {1, 0, 1, 0, 1}, {}}).lo == 3);
    ThetaResult mixed = mtg::theta_formula({Family::cluster, {0, 0, 3, 1}, {}});
    CHECK(mixed.exact());
    // Too many large cliques: only bounds.
    ThetaResult wide = mtg::theta_formula({Family::cluster, {0, 0, 0, 2, 2}, {}});
    CHECK_FALSE(wide.exact());
    CHECK(wide.lo >= 3);
    CHECK(wide.hi >= wide.lo);
}

TEST_CASE("complement and union specs reuse the closed forms") {
    FamilySpec comp{Family::complement_of, {}, {{Family::cluster, {0, 0, 4}, {}}}};
    CHECK(mtg::theta_formula(comp).lo == 6);  // same as multipartite:0,0,4
    FamilySpec comp2{Family::complement_of, {}, {{Family::multipartite, {0, 0, 4}, {}}}};
    CHECK(mtg::theta_formula(comp2).lo == 6);  // same as cluster:0,0,4
    FamilySpec uni{Family::union_of,
                   {},
                   {{Family::path, {2}, {}}, {Family::path, {4}, {}}}};
    CHECK(mtg::theta_formula(uni).lo == 2);
    FamilySpec cliques{Family::union_of,
                       {},
                       {{Family::complete, {3}, {}}, {Family::complete, {3}, {}}}};
    CHECK(mtg::theta_formula(cliques).lo == 3);  // 2K3
    FamilySpec tent_comp{Family::complement_of, {}, {{Family::tent, {9}, {}}}};
    ThetaResult bounds = mtg::theta_formula(tent_comp);
    CHECK_FALSE(bounds.exact());
    CHECK(bounds.lo == 2);
    CHECK(bounds.hi == 3);
}
