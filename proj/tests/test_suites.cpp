#include <cstdlib>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "tk/io.hpp"
#include "tk/suites.hpp"

using namespace tk;

namespace {

SuiteParams params_of(std::initializer_list<std::pair<std::string, std::string>> kv) {
    SuiteParams p;
    for (const auto& [k, v] : kv) p.values[k] = v;
    return p;
}

}  // namespace

TEST_CASE("registry covers every suite exactly once") {
    const auto& registry = suite_registry();
    CHECK(registry.size() == 24);
    std::set<std::string> names;
    for (const auto& info : registry) {
        CHECK(names.insert(info.name).second);
        CHECK(!info.statement.empty());
    }
    CatalogCache cache;
    CHECK_THROWS_AS(run_suite("nope", SuiteParams{}, cache), std::invalid_argument);
}

TEST_CASE("quick suite passes") {
    CatalogCache cache;
    // Small, fast parameterizations of each suite; all must pass.
    std::vector<std::pair<std::string, SuiteParams>> runs = {
        {"gallai", params_of({{"n", "6"}})},
        {"gallai", params_of({{"trials", "300"}, {"seed", "7"}})},
        {"moon", params_of({{"trials", "60"}, {"seed", "7"}, {"nmax", "10"}})},
        {"ext-partition", params_of({{"trials", "60"}, {"seed", "7"}})},
        {"indec-extend", params_of({{"trials", "40"}, {"seed", "7"}})},
        {"comb-lemma", params_of({{"trials", "120"}, {"seed", "7"}})},
        {"hypo-descent", params_of({{"trials", "25"}, {"seed", "7"}})},
        {"inversion", params_of({{"n", "5"}})},
        {"quotient-dual", params_of({{"trials", "60"}, {"seed", "7"}})},
        {"interval-transfer", params_of({{"trials", "60"}, {"seed", "7"}})},
        {"prop-degre", params_of({{"trials", "40"}, {"seed", "7"}})},
        {"remark7", params_of({{"trials", "25"}, {"seed", "7"}})},
        {"diamond-free-selfdual", params_of({{"n", "7"}})},
        {"vertex-in-diamond", params_of({{"n", "6"}})},
        {"vertex-in-diamond", params_of({{"trials", "200"}, {"seed", "7"}})},
        {"interval2-not-selfdual", params_of({{"n", "8"}})},
        {"center-everywhere", params_of({{"n", "7"}})},
        {"pair-interval-balance", params_of({{"n", "7"}, {"trials", "50"}, {"seed", "7"}})},
        {"decomposable-diamond", params_of({{"n", "8"}})},
        {"prop28", params_of({{"trials", "40"}, {"seed", "7"}})},
        {"hereditary-reassembly", params_of({{"trials", "60"}, {"seed", "7"}})},
        {"dilation-iso", params_of({{"trials", "80"}, {"seed", "7"}})},
        {"eight-vertex", params_of({{"trials", "300"}, {"seed", "7"}})},
        {"theorem4-facts", params_of({{"trials", "40"}, {"seed", "7"}})},
        {"corollary5", params_of({{"m", "8"}})},
    };
    for (const auto& [name, params] : runs) {
        CAPTURE(name);
        Report report = run_suite(name, params, cache);
        CAPTURE(report_to_text(report));
        CHECK(report.passed());
        CHECK(report.instances_checked >= 0);
        CHECK(report.suite == name);
    }
}

TEST_CASE("suite reports are reproducible across worker counts") {
    setenv("TK_STABLE_OUTPUT", "1", 1);
    CatalogCache cache;
    auto render = [&](const char* jobs) {
        setenv("TK_JOBS", jobs, 1);
        Report r = run_suite("gallai", params_of({{"n", "6"}}), cache);
        return report_to_json(r);
    };
    std::string one = render("1");
    std::string four = render("4");
    CHECK(one == four);
    unsetenv("TK_JOBS");
    unsetenv("TK_STABLE_OUTPUT");
}

TEST_CASE("hypothesis-bearing suites actually exercise their hypotheses") {
    CatalogCache cache;
    Report eight = run_suite("eight-vertex",
                             params_of({{"trials", "400"}, {"seed", "11"}}), cache);
    CHECK(std::stoll(eight.params.at("hypomorphic_pairs")) > 0);

    Report p28 = run_suite("prop28", params_of({{"trials", "60"}, {"seed", "11"}}),
                           cache);
    CHECK(std::stoll(p28.params.at("hypomorphic_pairs")) > 0);

    Report t4 = run_suite("theorem4-facts",
                          params_of({{"trials", "60"}, {"seed", "11"}}), cache);
    CHECK(std::stoll(t4.params.at("hypomorphic_pairs")) > 0);

    Report hd = run_suite("hypo-descent",
                          params_of({{"trials", "30"}, {"seed", "11"}}), cache);
    CHECK(std::stoll(hd.params.at("hypotheses")) > 0);

    Report it = run_suite("interval-transfer",
                          params_of({{"trials", "80"}, {"seed", "11"}}), cache);
    CHECK(std::stoll(it.params.at("intervals")) > 0);
}
