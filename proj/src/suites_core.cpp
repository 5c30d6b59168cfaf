#include <algorithm>

#include "suite_util.hpp"
#include "tk/decomposition.hpp"
#include "tk/errors.hpp"
#include "tk/parallel.hpp"
#include "tk/shape.hpp"
#include "tk/subsets.hpp"

namespace tk::suites {

using suite::random_in;
using suite::random_labeled;

namespace {

void check_gallai_claims(const Tournament& t, Report& report) {
    Partition p = gallai_partition(t);
    Tournament q = quotient(t, p);
    bool sc = is_strongly_connected(t);
    bool indec_q = is_indecomposable(q);
    bool big = p.blocks.size() >= 3;
    if (sc != (indec_q && big))
        report.add_violation(to_tk_line(t),
                             "strongly connected <=> indecomposable quotient "
                             "with >= 3 blocks",
                             std::string("sc=") + (sc ? "1" : "0") + " indec=" +
                                 (indec_q ? "1" : "0") + " blocks=" +
                                 std::to_string(p.blocks.size()));
    if (!sc) {
        if (!is_transitive(q))
            report.add_violation(to_tk_line(t), "transitive quotient",
                                 "quotient " + to_tk_line(q));
        auto sccs = scc_order(t);
        std::vector<VertexSet> want(sccs.begin(), sccs.end());
        std::sort(want.begin(), want.end());
        std::vector<VertexSet> got(p.blocks.begin(), p.blocks.end());
        std::sort(got.begin(), got.end());
        if (want != got)
            report.add_violation(to_tk_line(t),
                                 "partition = strongly connected components",
                                 "partition " + p.to_string());
    } else if (is_transitive(q)) {
        report.add_violation(to_tk_line(t), "non-transitive quotient",
                             "quotient " + to_tk_line(q));
    }
}

}  // namespace

Report gallai(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    if (params.has("trials")) {
        int trials = params.get_int("trials", 10000);
        std::uint64_t seed = params.get_u64("seed", 1);
        report.params = {{"mode", "random"},
                         {"trials", std::to_string(trials)},
                         {"seed", std::to_string(seed)},
                         {"nmin", "2"},
                         {"nmax", "16"}};
        std::mt19937_64 rng(seed);
        for (int i = 0; i < trials; ++i) {
            Tournament t = random_labeled(rng, random_in(rng, 2, 16));
            check_gallai_claims(t, report);
        }
        report.instances_checked = trials;
        return report;
    }
    int n = params.get_int("n", 7);
    report.params = {{"mode", "exhaustive"}, {"n", std::to_string(n)}};
    const Catalog& catalog = cache.get(n);
    std::size_t nchunks = (catalog.codes.size() + 1023) / 1024;
    std::vector<Report> chunk_reports(nchunks);
    parallel_chunks(catalog.codes.size(), 1024,
                    [&](std::size_t c, std::size_t lo, std::size_t hi) {
                        for (std::size_t i = lo; i < hi; ++i)
                            check_gallai_claims(
                                from_code(catalog.codes[i].as_code()),
                                chunk_reports[c]);
                    });
    for (const Report& cr : chunk_reports)
        for (const auto& v : cr.violations)
            report.add_violation(v.instance, v.expected, v.observed);
    report.instances_checked = static_cast<std::int64_t>(catalog.codes.size());
    return report;
}

Report moon(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 500);
    std::uint64_t seed = params.get_u64("seed", 1);
    int nmax = params.get_int("nmax", 12);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)},
                     {"nmax", std::to_string(nmax)}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        int n = random_in(rng, 3, nmax);
        Tournament t = suite::random_strongly_connected(rng, n);
        int x = random_in(rng, 0, n - 1);
        int k = random_in(rng, 3, n);
        try {
            VertexSet s = moon_extend(t, x, k);
            if (set_size(s) != k || !(s & vbit(x)) ||
                !is_strongly_connected(restrict_to(t, s)))
                report.add_violation(to_tk_line(t),
                                     "strongly connected " + std::to_string(k) +
                                         "-set through " + std::to_string(x),
                                     "got {" + set_to_string(s) + "}");
        } catch (const TheoremViolation& e) {
            report.add_violation(to_tk_line(t),
                                 "strongly connected " + std::to_string(k) +
                                     "-set through " + std::to_string(x),
                                 e.what());
        }
    }
    report.instances_checked = trials;
    return report;
}

Report ext_partition_suite(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 500);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    int done = 0;
    while (done < trials) {
        int n = random_in(rng, 4, 11);
        Tournament t = random_labeled(rng, n);
        int size = random_in(rng, 3, n - 1);
        VertexSet x = suite::random_subset(rng, n, size);
        if (is_decomposable(restrict_to(t, x))) continue;
        ++done;
        try {
            ExtReport r = ext_partition(t, x);
            VertexSet covered = r.ext | r.bracket;
            for (const auto& [u, s] : r.slots) covered |= s;
            if (covered != (full_set(n) & ~x))
                report.add_violation(to_tk_line(t) + " X={" + set_to_string(x) + "}",
                                     "classification covers the outside",
                                     "covered {" + set_to_string(covered) + "}");
        } catch (const TheoremViolation& e) {
            report.add_violation(to_tk_line(t) + " X={" + set_to_string(x) + "}",
                                 "exactly one category per outside vertex",
                                 e.what());
        }
    }
    report.instances_checked = trials;
    return report;
}

Report indec_extend(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 500);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    int done = 0;
    while (done < trials) {
        int n = random_in(rng, 5, 10);
        Tournament t = random_labeled(rng, n);
        if (is_decomposable(t)) continue;
        int size = random_in(rng, 3, n - 2);
        VertexSet x = suite::random_subset(rng, n, size);
        if (is_decomposable(restrict_to(t, x))) continue;
        ++done;
        try {
            auto [a, b] = indec_extend_pair(t, x);
            if (!is_indecomposable(restrict_to(t, x | vbit(a) | vbit(b))))
                report.add_violation(to_tk_line(t) + " X={" + set_to_string(x) + "}",
                                     "indecomposable 2-extension",
                                     "pair (" + std::to_string(a) + "," +
                                         std::to_string(b) + ") fails");
        } catch (const TheoremViolation& e) {
            report.add_violation(to_tk_line(t) + " X={" + set_to_string(x) + "}",
                                 "an indecomposable 2-extension exists", e.what());
        }
    }
    report.instances_checked = trials;
    return report;
}

namespace {

std::vector<VertexSet> random_family(std::mt19937_64& rng, int n, int p,
                                     int max_members) {
    std::vector<VertexSet> all;
    detail::for_each_combination(n, p, [&](const int* verts) {
        VertexSet s = 0;
        for (int i = 0; i < p; ++i) s |= vbit(verts[i]);
        all.push_back(s);
    });
    std::vector<VertexSet> out;
    for (VertexSet s : all)
        if (rng() % 3 == 0) out.push_back(s);
    if (static_cast<int>(out.size()) > max_members) out.resize(max_members);
    return out;
}

}  // namespace

Report comb_lemma(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 1000);
    std::uint64_t seed = params.get_u64("seed", 1);
    int nmax = params.get_int("nmax", 10);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)},
                     {"nmax", std::to_string(nmax)}};
    std::mt19937_64 rng(seed);

    // The three perfect matchings of a 4-set, used for hypothesis-true
    // instances with distinct families.
    auto matchings = [](const std::vector<int>& q) {
        std::vector<std::vector<VertexSet>> m;
        m.push_back({make_set({q[0], q[1]}), make_set({q[2], q[3]})});
        m.push_back({make_set({q[0], q[2]}), make_set({q[1], q[3]})});
        m.push_back({make_set({q[0], q[3]}), make_set({q[1], q[2]})});
        return m;
    };

    int accepted = 0;
    while (accepted < trials) {
        int strategy = static_cast<int>(rng() % 4);
        int p, r, n;
        std::vector<VertexSet> u1, u2;
        switch (strategy) {
            case 0: {  // identical random families
                p = random_in(rng, 1, 3);
                r = random_in(rng, 1, 3);
                n = random_in(rng, p + r, nmax);
                u1 = random_family(rng, n, p, 20);
                u2 = u1;
                break;
            }
            case 1: {  // distinct perfect matchings on a 4-element ground set
                p = 2;
                r = 1;
                n = 4;
                std::vector<int> q{0, 1, 2, 3};
                auto ms = matchings(q);
                int a = static_cast<int>(rng() % 3);
                int b = (a + 1 + static_cast<int>(rng() % 2)) % 3;
                u1 = ms[static_cast<size_t>(a)];
                u2 = ms[static_cast<size_t>(b)];
                break;
            }
            case 2: {  // p=1 with a single full-ground window
                r = random_in(rng, 1, 3);
                p = 1;
                n = 1 + r;
                int count = random_in(rng, 0, n);
                std::vector<int> verts(static_cast<size_t>(n));
                std::iota(verts.begin(), verts.end(), 0);
                std::shuffle(verts.begin(), verts.end(), rng);
                for (int i = 0; i < count; ++i)
                    u1.push_back(vbit(verts[static_cast<size_t>(i)]));
                std::shuffle(verts.begin(), verts.end(), rng);
                for (int i = 0; i < count; ++i)
                    u2.push_back(vbit(verts[static_cast<size_t>(i)]));
                break;
            }
            default: {  // falsification probe: random unequal pair
                p = random_in(rng, 1, 2);
                r = random_in(rng, 1, 2);
                n = random_in(rng, 2 * p + r, nmax);
                u1 = random_family(rng, n, p, 12);
                u2 = random_family(rng, n, p, 12);
                break;
            }
        }
        CombLemmaResult result = combinatorial_lemma_check(n, u1, u2, p, r);
        if (!result.hypothesis_holds) continue;
        ++accepted;
        if (!result.conclusion_holds)
            report.add_violation("ground_n=" + std::to_string(n) +
                                     " p=" + std::to_string(p) +
                                     " r=" + std::to_string(r),
                                 "sandwiched counts equal", "count mismatch");
        if (result.equality_applicable && !result.sets_equal)
            report.add_violation("ground_n=" + std::to_string(n) +
                                     " p=" + std::to_string(p) +
                                     " r=" + std::to_string(r),
                                 "families equal at ground_n >= 2p+r",
                                 "families differ");
    }
    report.instances_checked = trials;
    return report;
}

}  // namespace tk::suites
