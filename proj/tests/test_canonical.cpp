#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tk/canonical.hpp"

using namespace tk;

namespace {

Tournament random_labeled(int n, std::mt19937_64& rng) {
    std::string bits(static_cast<size_t>(pair_count(n)), '0');
    for (auto& c : bits) c = (rng() & 1) ? '1' : '0';
    return make_tournament(n, bits);
}

}  // namespace

TEST_CASE("canonical form equals the all-permutations minimum") {
    // Every labeled tournament on up to 5 vertices, both code paths.
    for (int n = 1; n <= 5; ++n) {
        for (std::uint32_t code = 0; code < (1u << pair_count(n)); ++code) {
            Tournament t = oracle::from_lsb(n, code);
            ArcCode expect = oracle::min_code_bruteforce(t);
            CHECK(canonical_form(t).as_code() == expect);
            CHECK(detail::canonical_search(t).as_code() == expect);
        }
    }
}

TEST_CASE("canonical form: sampled 6- and 7-vertex cross-check") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + static_cast<int>(rng() % 2);
        Tournament t = random_labeled(n, rng);
        CHECK(canonical_form(t).as_code() == oracle::min_code_bruteforce(t));
        CHECK(detail::canonical_search(t) == canonical_form(t));
    }
}

TEST_CASE("the two 3-cycle labelings share a canonical form") {
    CHECK(canonical_form(make_tournament(3, "101")) ==
          canonical_form(make_tournament(3, "010")));
}

TEST_CASE("exactly four classes on four vertices") {
    std::set<CanonicalCode> classes;
    for (std::uint32_t code = 0; code < (1u << 6); ++code)
        classes.insert(canonical_form(oracle::from_lsb(4, code)));
    CHECK(classes.size() == 4);
    // ... and they are the classes of the four named shapes.
    std::set<CanonicalCode> named{
        canonical_form(Tournament::linear(4)),
        canonical_form(make_tournament(4, "100111")),
        canonical_form(make_tournament(4, "101111")),
        canonical_form(make_tournament(4, "010000")),
    };
    CHECK(classes == named);
}

TEST_CASE("twelve classes on five vertices") {
    std::set<CanonicalCode> classes;
    for (std::uint32_t code = 0; code < (1u << 10); ++code)
        classes.insert(canonical_form(oracle::from_lsb(5, code)));
    CHECK(classes.size() == 12);
}

TEST_CASE("canonical form is isomorphism-invariant") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Tournament t = random_labeled(n, rng);
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(t) == canonical_form(oracle::relabel(t, perm)));
    }
}

TEST_CASE("canonical form is a fixed point on its own output") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        CanonicalCode c = canonical_form(random_labeled(n, rng));
        CHECK(canonical_form(from_code(c.as_code())) == c);
    }
}

TEST_CASE("isomorphism checks") {
    Tournament c3 = make_tournament(3, "101");
    CHECK(are_isomorphic(c3, dual(c3)));

    Tournament dplus = make_tournament(4, "101111");
    Tournament dminus = make_tournament(4, "010000");
    CHECK(oracle::iso_bruteforce(dplus, dminus) == false);
    CHECK(are_isomorphic(dplus, dminus) == false);

    Tournament o4 = Tournament::linear(4);
    Tournament c4 = make_tournament(4, "100111");
    CHECK(oracle::iso_bruteforce(o4, c4) == false);
    CHECK(are_isomorphic(o4, c4) == false);

    CHECK(are_isomorphic(c3, o4) == false);  // size mismatch

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Tournament a = random_labeled(n, rng);
        Tournament b = random_labeled(n, rng);
        CHECK(are_isomorphic(a, b) == oracle::iso_bruteforce(a, b));
    }
}

TEST_CASE("self-duality") {
    CHECK(is_self_dual(make_tournament(3, "101")));
    CHECK(is_self_dual(make_tournament(4, "101111")) == false);
    for (int n = 1; n <= 12; ++n) CHECK(is_self_dual(Tournament::linear(n)));
}

TEST_CASE("canonicalization bound is enforced") {
    Tournament t = Tournament::linear(13);
    CHECK_THROWS_AS(canonical_form(t), std::invalid_argument);
    CHECK_NOTHROW(canonical_form(t, 13));
    CHECK_THROWS_AS(are_isomorphic(t, t), std::invalid_argument);
    CHECK(are_isomorphic(t, t, 13));
}
