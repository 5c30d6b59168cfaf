// acceptance.cpp -- the end-to-end acceptance gate.  Runs every criterion,
// prints one PASS/FAIL line each, and exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tk/canonical.hpp"
#include "tk/decomposition.hpp"
#include "tk/diamonds.hpp"
#include "tk/families.hpp"
#include "tk/hypomorphy.hpp"
#include "tk/io.hpp"
#include "tk/shape.hpp"
#include "tk/suites.hpp"

using namespace tk;

namespace {

int failures = 0;

void outcome(int criterion, bool pass, const std::string& what) {
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

SuiteParams params_of(std::initializer_list<std::pair<std::string, std::string>> kv) {
    SuiteParams p;
    for (const auto& [k, v] : kv) p.values[k] = v;
    return p;
}

}  // namespace

int main() {
    CatalogCache cache;

    // ---- 1. enumeration counts -------------------------------------------
    {
        auto start = std::chrono::steady_clock::now();
        const std::size_t expected[] = {0, 1, 1, 2, 4, 12, 56, 456, 6880};
        bool counts_ok = true;
        for (int n = 1; n <= 8; ++n) {
            const Catalog& catalog = cache.get(n);
            if (catalog.codes.size() != expected[n]) {
                counts_ok = false;
                std::printf("        n=%d gave %zu classes, expected %zu\n", n,
                            catalog.codes.size(), expected[n]);
            }
        }
        // Independent oracle at n <= 6: minimum code over all permutations of
        // every labeled tournament.
        for (int n = 1; n <= 6 && counts_ok; ++n) {
            std::set<ArcCode> classes;
            for (std::uint32_t code = 0; code < (1u << pair_count(n)); ++code)
                classes.insert(oracle::min_code_bruteforce(oracle::from_lsb(n, code)));
            std::set<ArcCode> got;
            for (const CanonicalCode& c : cache.get(n).codes) got.insert(c.as_code());
            if (got != classes) counts_ok = false;
        }
        double base_time = seconds_since(start);
        outcome(1, counts_ok && base_time < 60.0,
                "class counts 1,1,2,4,12,56,456,6880 for n=1..8 with the "
                "all-labeled oracle at n<=6 (" +
                    std::to_string(base_time).substr(0, 5) + "s)");

        auto start9 = std::chrono::steady_clock::now();
        cache.put(enumerate_canonical(9, ParentRule::delete_highest, 9));
        double time9 = seconds_since(start9);
        std::size_t count9 = cache.get(9).codes.size();
        outcome(1, count9 == 191536 && time9 < 600.0,
                "extended: n=9 gives " + std::to_string(count9) + " classes in " +
                    std::to_string(time9).substr(0, 6) + "s (< 600s)");
    }

    // ---- 2. decomposable delete-3 self duals at n=9 ----------------------
    {
        auto start = std::chrono::steady_clock::now();
        Report report = run_suite("theorem3", params_of({{"n", "9"}}), cache);
        double elapsed = seconds_since(start);
        outcome(2, report.passed() && elapsed < 900.0,
                "n=9 exhaustive: decomposable delete-3 self duals are exactly "
                "the transitive and almost transitive classes (" +
                    std::to_string(elapsed).substr(0, 6) + "s)");
    }

    // ---- 3. decomposable diamond-embedding tournaments at n=8 ------------
    {
        auto start = std::chrono::steady_clock::now();
        Report report = run_suite("decomposable-diamond", params_of({{"n", "8"}}),
                                  cache);
        double elapsed = seconds_since(start);
        outcome(3, report.passed() && elapsed < 120.0,
                "n=8 exhaustive: no decomposable diamond-embedding class is "
                "delete-3 self dual (" + std::to_string(elapsed).substr(0, 5) +
                    "s)");
    }

    // ---- 4. triple-hypomorph inversion at n=5,6 ---------------------------
    {
        auto start = std::chrono::steady_clock::now();
        Report r5 = run_suite("inversion", params_of({{"n", "5"}}), cache);
        Report r6 = run_suite("inversion", params_of({{"n", "6"}}), cache);
        double elapsed = seconds_since(start);
        outcome(4, r5.passed() && r6.passed() && elapsed < 300.0,
                "every indecomposable class at n=5,6 has exactly the two "
                "triple-hypomorphs (" + std::to_string(elapsed).substr(0, 5) + "s)");
    }

    // ---- 5. partition/quotient characterization ---------------------------
    {
        bool ok = true;
        for (int n = 2; n <= 9; ++n) {
            Report report = run_suite("gallai", params_of({{"n", std::to_string(n)}}),
                                      cache);
            if (!report.passed()) ok = false;
        }
        Report random_report = run_suite(
            "gallai", params_of({{"trials", "10000"}, {"seed", "1"}}), cache);
        ok = ok && random_report.passed();
        outcome(5, ok,
                "partition/quotient characterization, exhaustive n<=9 plus "
                "10^4 random tournaments on 2..16 vertices");
    }

    // ---- 6. witness-extension property suites ----------------------------
    {
        Report ext = run_suite("ext-partition",
                               params_of({{"trials", "500"}, {"seed", "1"}}), cache);
        Report ind = run_suite("indec-extend",
                               params_of({{"trials", "500"}, {"seed", "1"}}), cache);
        Report mn = run_suite("moon", params_of({{"trials", "500"}, {"seed", "1"}}),
                              cache);
        outcome(6, ext.passed() && ind.passed() && mn.passed(),
                "outside-partition, pair-extension and strongly-connected-set "
                "suites, 500 seeded instances each");
    }

    // ---- 7. combinatorial counting lemma ----------------------------------
    {
        Report report = run_suite("comb-lemma",
                                  params_of({{"trials", "1000"}, {"seed", "1"}}),
                                  cache);
        outcome(7, report.passed(),
                "10^3 seeded hypothesis-true family pairs on up to 10 points, "
                "conclusion and equality clauses never violated");
    }

    // ---- 8. the exceptional family at m=9 ---------------------------------
    {
        OmegaReport a = omega(9, cache.get(7), cache.get(8));
        OmegaReport b = omega(9, cache.get(7), cache.get(8));
        bool identical = omega_to_json(a) == omega_to_json(b);
        bool note_ok = !(a.i_small.empty() && a.i_big.empty()) || !a.note.empty();
        Report consistency = run_suite("corollary5", params_of({{"m", "9"}}), cache);
        outcome(8, identical && note_ok && consistency.passed(),
                "family at m=9 computed exhaustively (generators: " +
                    std::to_string(a.i_small.size()) + " at 7, " +
                    std::to_string(a.i_big.size()) + " at 8, members: " +
                    std::to_string(a.members.size()) +
                    "), byte-identical across runs");
    }

    // ---- 9. randomized 8-vertex reconstruction search ---------------------
    {
        Report report = run_suite(
            "eight-vertex", params_of({{"trials", "100000"}, {"seed", "1"}}), cache);
        outcome(9, report.passed(),
                "10^5 constructed candidate pairs on 8 vertices, " +
                    report.params.at("hypomorphic_pairs") +
                    " verified hypomorphic, zero non-isomorphic");
    }

    // ---- 10. determinism across worker counts -----------------------------
    {
        setenv("TK_STABLE_OUTPUT", "1", 1);
        std::vector<std::pair<std::string, SuiteParams>> runs = {
            {"gallai", params_of({{"n", "7"}})},
            {"gallai", params_of({{"trials", "500"}, {"seed", "3"}})},
            {"moon", params_of({{"trials", "100"}, {"seed", "3"}})},
            {"ext-partition", params_of({{"trials", "100"}, {"seed", "3"}})},
            {"indec-extend", params_of({{"trials", "60"}, {"seed", "3"}})},
            {"comb-lemma", params_of({{"trials", "200"}, {"seed", "3"}})},
            {"hypo-descent", params_of({{"trials", "25"}, {"seed", "3"}})},
            {"inversion", params_of({{"n", "5"}})},
            {"quotient-dual", params_of({{"trials", "80"}, {"seed", "3"}})},
            {"interval-transfer", params_of({{"trials", "80"}, {"seed", "3"}})},
            {"prop-degre", params_of({{"trials", "50"}, {"seed", "3"}})},
            {"remark7", params_of({{"trials", "25"}, {"seed", "3"}})},
            {"diamond-free-selfdual", params_of({{"n", "7"}})},
            {"vertex-in-diamond", params_of({{"n", "7"}})},
            {"interval2-not-selfdual", params_of({{"n", "8"}})},
            {"center-everywhere", params_of({{"n", "8"}})},
            {"pair-interval-balance",
             params_of({{"n", "7"}, {"trials", "60"}, {"seed", "3"}})},
            {"decomposable-diamond", params_of({{"n", "8"}})},
            {"theorem3", params_of({{"n", "9"}})},
            {"prop28", params_of({{"trials", "50"}, {"seed", "3"}})},
            {"hereditary-reassembly", params_of({{"trials", "80"}, {"seed", "3"}})},
            {"dilation-iso", params_of({{"trials", "100"}, {"seed", "3"}})},
            {"eight-vertex", params_of({{"trials", "500"}, {"seed", "3"}})},
            {"theorem4-facts", params_of({{"trials", "50"}, {"seed", "3"}})},
            {"corollary5", params_of({{"m", "9"}})},
        };
        bool all_identical = true;
        for (const auto& [name, params] : runs) {
            setenv("TK_JOBS", "1", 1);
            std::string first = report_to_json(run_suite(name, params, cache));
            setenv("TK_JOBS", "3", 1);
            std::string second = report_to_json(run_suite(name, params, cache));
            if (first != second) {
                all_identical = false;
                std::printf("        %s differs across TK_JOBS\n", name.c_str());
            }
        }
        unsetenv("TK_JOBS");
        unsetenv("TK_STABLE_OUTPUT");
        outcome(10, all_identical,
                "every suite run twice with TK_JOBS=1 and TK_JOBS=3 produces "
                "byte-identical reports");
    }

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
