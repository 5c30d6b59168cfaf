#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "tk/decomposition.hpp"
#include "tk/tournament.hpp"

using namespace tk;

TEST_CASE("make_tournament encodings") {
    // The labeled 3-cycle 0->1, 2->0, 1->2.
    Tournament c3 = make_tournament(3, "101");
    CHECK(c3.arc(0, 1));
    CHECK(c3.arc(2, 0));
    CHECK(c3.arc(1, 2));

    // Positive diamond: cycle {0,1,2} dominating center 3.
    Tournament dp = make_tournament(4, "101111");
    for (int v : {0, 1, 2}) CHECK(dp.arc(v, 3));
    CHECK(dp.arc(0, 1));
    CHECK(dp.arc(1, 2));
    CHECK(dp.arc(2, 0));

    Tournament two = make_tournament(2, "1");
    CHECK(two.arc(0, 1));

    CHECK_THROWS_AS(make_tournament(3, "10"), std::invalid_argument);
    CHECK_THROWS_AS(make_tournament(0, ""), std::invalid_argument);
    CHECK_THROWS_AS(make_tournament(3, "10x"), std::invalid_argument);
}

TEST_CASE("dual reverses every arc") {
    CHECK(dual(make_tournament(4, "101111")).bit_string() == "010000");
    CHECK(dual(make_tournament(3, "101")).bit_string() == "010");
    CHECK(dual(make_tournament(4, "111111")).bit_string() == "000000");
}

TEST_CASE("dual is a bit-exact involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        std::string bits(static_cast<size_t>(pair_count(n)), '0');
        for (auto& c : bits) c = (rng() & 1) ? '1' : '0';
        Tournament t = make_tournament(n, bits);
        CHECK(dual(dual(t)) == t);
    }
}

TEST_CASE("restrict_to relabels in increasing order") {
    Tournament dp = make_tournament(4, "101111");
    CHECK(restrict_to(dp, make_set({0, 1, 2})).bit_string() == "101");
    CHECK(restrict_to(dp, full_set(4)) == dp);
    Tournament o4 = Tournament::linear(4);
    CHECK(restrict_to(o4, make_set({0, 2, 3})).bit_string() == "111");
    CHECK_THROWS_AS(restrict_to(o4, VertexSet{0}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_to(o4, vbit(5)), std::invalid_argument);
}

TEST_CASE("restrict commutes with dual") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        std::string bits(static_cast<size_t>(pair_count(n)), '0');
        for (auto& c : bits) c = (rng() & 1) ? '1' : '0';
        Tournament t = make_tournament(n, bits);
        VertexSet x = static_cast<VertexSet>(rng()) & full_set(n);
        if (x == 0) x = vbit(static_cast<int>(rng() % n));
        CHECK(restrict_to(dual(t), x) == dual(restrict_to(t, x)));
    }
}

TEST_CASE("lex_sum composes blocks as intervals") {
    Tournament c3 = make_tournament(3, "101");
    Tournament pt;  // single vertex
    Tournament o2 = Tournament::linear(2);

    SUBCASE("dilating one 3-cycle vertex by a 2-chain gives the almost transitive 4") {
        Tournament t = lex_sum(c3, {o2, pt, pt});
        CHECK(oracle::iso_bruteforce(t, make_tournament(4, "110111")));
    }
    SUBCASE("singleton parts reproduce the shape") {
        CHECK(lex_sum(c3, {pt, pt, pt}) == c3);
        Tournament h = make_tournament(4, "100111");
        CHECK(lex_sum(h, {pt, pt, pt, pt}) == h);
    }
    SUBCASE("each block is an interval of the sum") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            int h = 2 + static_cast<int>(rng() % 3);
            std::string sbits(static_cast<size_t>(pair_count(h)), '0');
            for (auto& c : sbits) c = (rng() & 1) ? '1' : '0';
            Tournament shape = make_tournament(h, sbits);
            std::vector<Tournament> parts;
            int offset = 0;
            std::vector<VertexSet> blocks;
            for (int i = 0; i < h; ++i) {
                int sz = 1 + static_cast<int>(rng() % 3);
                std::string pbits(static_cast<size_t>(pair_count(sz)), '0');
                for (auto& c : pbits) c = (rng() & 1) ? '1' : '0';
                parts.push_back(make_tournament(sz, pbits));
                blocks.push_back(full_set(sz) << offset);
                offset += sz;
            }
            if (offset > kMaxVertices) continue;
            Tournament sum = lex_sum(shape, parts);
            for (VertexSet b : blocks) CHECK(is_interval(sum, b));
        }
    }
    SUBCASE("part count must match") {
        CHECK_THROWS_AS(lex_sum(c3, {pt, pt}), std::invalid_argument);
    }
}

TEST_CASE("arc code round trip and hex form") {
    Tournament dp = make_tournament(4, "101111");
    CHECK(dp.code().hex() == "bc");  // 1011 1100
    CHECK(from_code(dp.code()) == dp);
    CHECK(to_tk_line(dp) == "n=4 bits=bc");
    CHECK(parse_tk_line("n=4 bits=bc") == dp);
    CHECK(parse_tk_line("n=4 bits=BC\n") == dp);

    Tournament one;
    CHECK(to_tk_line(one) == "n=1 bits=");
    CHECK(parse_tk_line("n=1 bits=") == one);

    CHECK_THROWS_AS(parse_tk_line("n=4 bits=bd"), std::invalid_argument);  // padding
    CHECK_THROWS_AS(parse_tk_line("n=4 bits=b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tk_line("bits=bc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tk_line("n=x bits=bc"), std::invalid_argument);
}

TEST_CASE("code round trip is exact on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        std::string bits(static_cast<size_t>(pair_count(n)), '0');
        for (auto& c : bits) c = (rng() & 1) ? '1' : '0';
        Tournament t = make_tournament(n, bits);
        CHECK(parse_tk_line(to_tk_line(t)) == t);
        CHECK(from_code(ArcCode::from_hex(n, t.code().hex())) == t);
    }
}
