#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tk/decomposition.hpp"
#include "tk/families.hpp"
#include "tk/hypomorphy.hpp"
#include "tk/subsets.hpp"

using namespace tk;

namespace {

Tournament random_labeled(int n, std::mt19937_64& rng) {
    std::string bits(static_cast<size_t>(pair_count(n)), '0');
    for (auto& c : bits) c = (rng() & 1) ? '1' : '0';
    return make_tournament(n, bits);
}

// Straight-from-definition hypomorphy: restrict both and brute-force
// isomorphism on every qualifying subset.
bool hypomorphic_bruteforce(const Tournament& t, const Tournament& u, int size) {
    bool ok = true;
    detail::for_each_combination(t.size(), size, [&](const int* verts) {
        VertexSet x = 0;
        for (int i = 0; i < size; ++i) x |= vbit(verts[i]);
        if (!oracle::iso_bruteforce(restrict_to(t, x), restrict_to(u, x))) ok = false;
        return ok;
    });
    return ok;
}

}  // namespace

TEST_CASE("spec normalization") {
    CHECK(HypoSpec::minus(3).subset_sizes(9) == std::vector<int>{6});
    CHECK(HypoSpec::upto(3).subset_sizes(5) == std::vector<int>{1, 2, 3});
    CHECK(HypoSpec{{3, -6}}.subset_sizes(9) == std::vector<int>{3});  // dedup
    CHECK_THROWS_AS(HypoSpec{{0}}.subset_sizes(5), std::invalid_argument);
    CHECK_THROWS_AS(HypoSpec{{6}}.subset_sizes(5), std::invalid_argument);
    CHECK_THROWS_AS(HypoSpec{{-6}}.subset_sizes(5), std::invalid_argument);
}

TEST_CASE("hypomorphy basics") {
    std::mt19937_64 rng(101);
    // Any two tournaments on the same set are (<=2)-hypomorphic.
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Tournament a = random_labeled(n, rng), b = random_labeled(n, rng);
        CHECK(hypomorphic(a, b, HypoSpec::upto(2)));
        CHECK(hypomorphic(a, a, HypoSpec::upto(n)));
    }
    Tournament o4 = Tournament::linear(4);
    Tournament c4 = make_tournament(4, "100111");
    CHECK(hypomorphic(o4, c4, HypoSpec::exactly(3)) == false);
    CHECK_THROWS_AS(hypomorphic(o4, make_tournament(3, "101"), HypoSpec::exactly(3)),
                    std::invalid_argument);

    // A tournament and its dual are always {3}-hypomorphic.
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        Tournament t = random_labeled(n, rng);
        CHECK(hypomorphic(t, dual(t), HypoSpec::exactly(3)));
    }
}

TEST_CASE("hypomorphy agrees with the brute-force definition") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Tournament a = random_labeled(n, rng);
        Tournament b = (rng() & 1) ? dual(a) : random_labeled(n, rng);
        for (int s = 3; s <= n; ++s)
            CHECK(hypomorphic(a, b, HypoSpec::exactly(s)) ==
                  hypomorphic_bruteforce(a, b, s));
    }
}

TEST_CASE("embedding counts") {
    Tournament dplus = make_tournament(4, "101111");
    Tournament c3 = make_tournament(3, "101");
    CHECK(embed_count(dplus, c3, make_set({0, 1})) == 1);
    CHECK(embed_sets(dplus, c3, make_set({0, 1})) ==
          std::vector<VertexSet>{make_set({0, 1, 2})});
    CHECK(embed_count(dplus, dplus, 0) == 1);
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Tournament t = random_labeled(n, rng);
        CHECK(embed_count(t, t, 0) == 1);
    }
    CHECK_THROWS_AS(embed_count(c3, c3, vbit(5)), std::invalid_argument);
}

TEST_CASE("delete-k equal-count property on hypomorphic pairs") {
    // With u = dual(t) and every (n-p)-subtournament self dual, counts of
    // any shape over any anchored family agree between t and u.
    std::mt19937_64 rng(109);
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 25; ++trial) {
        int n = 6 + static_cast<int>(rng() % 2);
        Tournament t = random_labeled(n, rng);
        int p = 2 + static_cast<int>(rng() % 2);
        Tournament u = dual(t);
        if (!hypomorphic(t, u, HypoSpec::minus(p))) continue;
        ++checked;
        int h = 2 + static_cast<int>(rng() % (n - p - 2 + 1));
        Tournament shape = random_labeled(h, rng);
        int xsize = static_cast<int>(rng() % (p + 1));
        VertexSet x = 0;
        while (set_size(x) < xsize) x |= vbit(static_cast<int>(rng() % n));
        CHECK(embed_count(t, shape, x) == embed_count(u, shape, x));
    }
    CHECK(checked == 25);
}

TEST_CASE("self-duality profiles") {
    SelfDualProfile o9 = self_dual_profile(Tournament::linear(9), 3);
    CHECK(o9.self_dual);
    CHECK(o9.strongly_self_dual);
    CHECK(o9.upto_max_k);
    for (const auto& [k, flag] : o9.minus_k) CHECK(flag);

    SelfDualProfile dp = self_dual_profile(make_tournament(4, "101111"), 2);
    CHECK(dp.self_dual == false);
    CHECK(dp.strongly_self_dual == false);

    SelfDualProfile at9 =
        self_dual_profile(gen_named(NamedTournament::almost_transitive, 9), 3);
    CHECK(at9.minus_k.at(3));
    CHECK(at9.strongly_self_dual);

    // Transitive and almost transitive profiles are all-true at every size.
    for (int n = 3; n <= 12; ++n) {
        for (Tournament t : {Tournament::linear(n),
                             gen_named(NamedTournament::almost_transitive, n)}) {
            SelfDualProfile profile = self_dual_profile(t, 3);
            CHECK(profile.self_dual);
            CHECK(profile.strongly_self_dual);
            CHECK(profile.upto_max_k);
            for (const auto& [k, flag] : profile.minus_k) CHECK(flag);
        }
    }
}

TEST_CASE("minus_k_self_dual matches the generic path") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        Tournament t = random_labeled(n, rng);
        int k = 1 + static_cast<int>(rng() % 3);
        if (k > n) continue;
        CHECK(minus_k_self_dual(t, k) == hypomorphic(t, dual(t), HypoSpec::minus(k)));
    }
}

TEST_CASE("three_hypomorphs") {
    Tournament c3 = make_tournament(3, "101");
    auto hs = three_hypomorphs(c3);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0].bit_string() == "010");
    CHECK(hs[1].bit_string() == "101");

    // All six transitive labelings are triple-hypomorphic to the chain.
    auto ts = three_hypomorphs(Tournament::linear(3));
    CHECK(ts.size() == 6);

    // Indecomposable 5-vertex classes: exactly the tournament and its dual.
    std::mt19937_64 rng(127);
    int checked = 0;
    while (checked < 10) {
        Tournament t = random_labeled(5, rng);
        if (is_decomposable(t)) continue;
        ++checked;
        auto got = three_hypomorphs(t);
        REQUIRE(got.size() == 2);
        bool self_found = got[0] == t || got[1] == t;
        bool dual_found = got[0] == dual(t) || got[1] == dual(t);
        CHECK(self_found);
        CHECK(dual_found);
    }

    CHECK_THROWS_AS(three_hypomorphs(Tournament::linear(8)), std::invalid_argument);
}

TEST_CASE("combinatorial lemma checker") {
    // Identical families: hypothesis and conclusion hold.
    std::vector<VertexSet> u{make_set({0, 1}), make_set({2, 3})};
    CombLemmaResult same = combinatorial_lemma_check(5, u, u, 2, 1);
    CHECK(same.hypothesis_holds);
    CHECK(same.conclusion_holds);
    CHECK(same.equality_applicable);
    CHECK(same.sets_equal);
    CHECK(same.ok());

    // Two distinct perfect matchings on 4 points: hypothesis holds, ground
    // too small for the equality clause.
    std::vector<VertexSet> m1{make_set({0, 1}), make_set({2, 3})};
    std::vector<VertexSet> m2{make_set({0, 2}), make_set({1, 3})};
    CombLemmaResult match = combinatorial_lemma_check(4, m1, m2, 2, 1);
    CHECK(match.hypothesis_holds);
    CHECK(match.conclusion_holds);
    CHECK(match.equality_applicable == false);
    CHECK(match.ok());

    // Unequal families break the hypothesis.
    std::vector<VertexSet> w{make_set({0, 1})};
    CombLemmaResult diff = combinatorial_lemma_check(5, u, w, 2, 1);
    CHECK(diff.hypothesis_holds == false);
    CHECK(diff.ok());

    CHECK_THROWS_AS(combinatorial_lemma_check(2, u, u, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(combinatorial_lemma_check(5, {make_set({0, 1, 2})}, {}, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(combinatorial_lemma_check(5, {make_set({0, 1}), make_set({0, 1})},
                                              {}, 2, 1),
                    std::invalid_argument);
}

TEST_CASE("randomized combinatorial lemma instances never violate") {
    std::mt19937_64 rng(131);
    int accepted = 0;
    while (accepted < 200) {
        int p = 1 + static_cast<int>(rng() % 2);
        int r = 1 + static_cast<int>(rng() % 2);
        int n = p + r + static_cast<int>(rng() % 5);
        std::vector<VertexSet> u1, u2;
        detail::for_each_combination(n, p, [&](const int* verts) {
            VertexSet s = 0;
            for (int i = 0; i < p; ++i) s |= vbit(verts[i]);
            if (rng() % 4 == 0) u1.push_back(s);
            if (rng() % 4 == 0) u2.push_back(s);
        });
        CombLemmaResult result = combinatorial_lemma_check(n, u1, u2, p, r);
        if (!result.hypothesis_holds) continue;
        ++accepted;
        CHECK(result.ok());
    }
}
