#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tk/decomposition.hpp"
#include "tk/diamonds.hpp"
#include "tk/shape.hpp"

using namespace tk;

namespace {

Tournament random_labeled(int n, std::mt19937_64& rng) {
    std::string bits(static_cast<size_t>(pair_count(n)), '0');
    for (auto& c : bits) c = (rng() & 1) ? '1' : '0';
    return make_tournament(n, bits);
}

}  // namespace

TEST_CASE("diamond records on the named shapes") {
    Tournament dplus = make_tournament(4, "101111");
    auto recs = diamond_records(dplus);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].sign == +1);
    CHECK(recs[0].center == 3);
    CHECK(recs[0].cycle == make_set({0, 1, 2}));
    CHECK(recs[0].verts == full_set(4));

    CHECK(diamond_records(Tournament::linear(8)).empty());
    CHECK(diamond_records(make_tournament(4, "100111")).empty());  // 4-cycle
    CHECK(classify_shape(make_tournament(4, "100111")) != ShapeTag::diamond_pos);
}

TEST_CASE("diamond records agree with shape classification of 4-sets") {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        Tournament t = random_labeled(n, rng);
        auto recs = diamond_records(t);
        size_t idx = 0;
        // Exhaustive cross-check: every 4-subset, in order.
        std::vector<int> verts(4);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        VertexSet s = make_set({a, b, c, d});
                        ShapeTag tag = classify_shape(restrict_to(t, s));
                        bool dia = tag == ShapeTag::diamond_pos ||
                                   tag == ShapeTag::diamond_neg;
                        if (dia) {
                            REQUIRE(idx < recs.size());
                            CHECK(recs[idx].verts == s);
                            CHECK((recs[idx].sign > 0) ==
                                  (tag == ShapeTag::diamond_pos));
                            // The center closes the record's invariants.
                            CHECK((recs[idx].cycle | vbit(recs[idx].center)) == s);
                            Tournament cyc = restrict_to(t, recs[idx].cycle);
                            CHECK(is_transitive(cyc) == false);
                            ++idx;
                        }
                    }
        CHECK(idx == recs.size());
        CHECK(embeds_diamond(t) == !recs.empty());
    }
}

TEST_CASE("center counts") {
    Tournament dplus = make_tournament(4, "101111");
    CHECK(center_counts(dplus, 3) == std::pair<int, int>{1, 0});
    CHECK(center_counts(dplus, 0) == std::pair<int, int>{0, 0});
    for (int v = 0; v < 5; ++v)
        CHECK(center_counts(Tournament::linear(5), v) == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(center_counts(dplus, 4), std::invalid_argument);
}

TEST_CASE("sign flips under dual") {
    std::mt19937_64 rng(139);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        Tournament t = random_labeled(n, rng);
        auto tr = diamond_records(t);
        auto dr = diamond_records(dual(t));
        REQUIRE(tr.size() == dr.size());
        for (size_t i = 0; i < tr.size(); ++i) {
            CHECK(tr[i].verts == dr[i].verts);
            CHECK(tr[i].center == dr[i].center);
            CHECK(tr[i].cycle == dr[i].cycle);
            CHECK(tr[i].sign == -dr[i].sign);
        }
    }
}

TEST_CASE("pair stats") {
    Tournament dplus = make_tournament(4, "101111");
    PairDiamondStats st = pair_stats(dplus, 0, 1);
    CHECK(st.cycle_mates == vbit(2));
    CHECK(st.through_pair_plus == 1);
    CHECK(st.through_pair_minus == 0);
    CHECK(st.d_plus_cycle == 1);
    CHECK(st.per_mate.at(2) == std::pair<int, int>{1, 0});
    CHECK(st.centered_at_y_plus == 0);

    PairDiamondStats on = pair_stats(Tournament::linear(6), 1, 4);
    CHECK(on.cycle_mates == 0);
    CHECK(on.through_pair_plus == 0);
    CHECK(on.through_pair_minus == 0);

    CHECK_THROWS_AS(pair_stats(dplus, 2, 2), std::invalid_argument);
}

TEST_CASE("pair stats decomposition identities") {
    std::mt19937_64 rng(149);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        Tournament t = random_labeled(n, rng);
        int x = static_cast<int>(rng() % n);
        int y = static_cast<int>((x + 1 + rng() % (n - 1)) % n);
        if (x == y) continue;
        PairDiamondStats st = pair_stats(t, x, y);

        // through-both = center-y(through x) + center-x(through y) + both-in-cycle
        PairDiamondStats rev = pair_stats(t, y, x);
        CHECK(st.through_pair_plus ==
              st.centered_at_y_plus + rev.centered_at_y_plus + st.d_plus_cycle);
        CHECK(st.through_pair_minus ==
              st.centered_at_y_minus + rev.centered_at_y_minus + st.d_minus_cycle);

        // When {x,y} is an interval no diamond contains both, so the
        // posted identity degenerates to zeros.
        if (is_interval(t, vbit(x) | vbit(y))) {
            CHECK(st.through_pair_plus == 0);
            CHECK(st.through_pair_plus == rev.centered_at_y_plus + st.d_plus_cycle);
        }
    }
}

TEST_CASE("almost transitive tournaments never embed diamonds") {
    for (int n = 4; n <= 8; ++n) {
        Tournament t = Tournament::linear(n);
        t.orient(n - 1, 0);
        CHECK(embeds_diamond(t) == false);
    }
}

TEST_CASE("a diamond covers every vertex when one exists") {
    std::mt19937_64 rng(151);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Tournament t = random_labeled(n, rng);
        if (!embeds_diamond(t)) continue;
        VertexSet covered = 0;
        for (const auto& rec : diamond_records(t)) covered |= rec.verts;
        CHECK(covered == full_set(n));
    }
}
