#include <algorithm>

#include "suite_util.hpp"
#include "tk/decomposition.hpp"
#include "tk/diamonds.hpp"
#include "tk/parallel.hpp"
#include "tk/shape.hpp"

namespace tk::suites {

using suite::random_in;
using suite::random_labeled;

namespace {

std::vector<VertexSet> two_intervals(const Tournament& t) {
    std::vector<VertexSet> out;
    int n = t.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            VertexSet s = vbit(a) | vbit(b);
            if (is_interval(t, s)) out.push_back(s);
        }
    return out;
}

bool every_vertex_centers_a_diamond(const Tournament& t) {
    VertexSet centers = 0;
    for (const DiamondRecord& rec : diamond_records(t)) centers |= vbit(rec.center);
    return centers == full_set(t.size());
}

}  // namespace

Report diamond_free_selfdual(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int n = params.get_int("n", 9);
    report.params = {{"n", std::to_string(n)}};
    const Catalog& catalog = cache.get(n);
    std::int64_t diamond_free = 0;
    for (const CanonicalCode& code : catalog.codes) {
        Tournament t = from_code(code.as_code());
        if (embeds_diamond(t)) continue;
        ++diamond_free;
        bool m3 = minus_k_self_dual(t, 3);
        bool strong = hypomorphic(t, dual(t), HypoSpec::upto(n));
        if (n >= 9) {
            if (m3 != strong)
                report.add_violation(to_tk_line(t),
                                     "delete-3 self dual <=> strongly self dual",
                                     std::string("m3=") + (m3 ? "1" : "0") +
                                         " strong=" + (strong ? "1" : "0"));
        } else if (strong && !m3) {
            report.add_violation(to_tk_line(t),
                                 "strongly self dual gives delete-3 self dual",
                                 "fails");
        }
    }
    report.instances_checked = diamond_free;
    report.params["classes_scanned"] = std::to_string(catalog.codes.size());
    return report;
}

Report vertex_in_diamond(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    auto check = [&](const Tournament& t) {
        if (!embeds_diamond(t)) return;
        VertexSet covered = 0;
        for (const DiamondRecord& rec : diamond_records(t)) covered |= rec.verts;
        if (covered != full_set(t.size()))
            report.add_violation(to_tk_line(t), "every vertex lies in a diamond",
                                 "uncovered {" +
                                     set_to_string(full_set(t.size()) & ~covered) +
                                     "}");
    };
    if (params.has("trials")) {
        int trials = params.get_int("trials", 2000);
        std::uint64_t seed = params.get_u64("seed", 1);
        report.params = {{"mode", "random"},
                         {"trials", std::to_string(trials)},
                         {"seed", std::to_string(seed)}};
        std::mt19937_64 rng(seed);
        for (int i = 0; i < trials; ++i) check(random_labeled(rng, random_in(rng, 4, 12)));
        report.instances_checked = trials;
        return report;
    }
    int n = params.get_int("n", 7);
    report.params = {{"mode", "exhaustive"}, {"n", std::to_string(n)}};
    const Catalog& catalog = cache.get(n);
    for (const CanonicalCode& code : catalog.codes) check(from_code(code.as_code()));
    report.instances_checked = static_cast<std::int64_t>(catalog.codes.size());
    return report;
}

Report interval2_not_selfdual(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int n = params.get_int("n", 8);
    report.params = {{"n", std::to_string(n)}};
    if (n < 8) throw std::invalid_argument("interval2-not-selfdual needs n >= 8");
    const Catalog& catalog = cache.get(n);
    std::size_t nchunks = (catalog.codes.size() + 511) / 512;
    std::vector<Report> chunks(nchunks);
    std::vector<std::int64_t> counts(nchunks, 0);
    parallel_chunks(catalog.codes.size(), 512,
                    [&](std::size_t c, std::size_t lo, std::size_t hi) {
                        for (std::size_t i = lo; i < hi; ++i) {
                            Tournament t = from_code(catalog.codes[i].as_code());
                            if (two_intervals(t).empty()) continue;
                            if (!embeds_diamond(t)) continue;
                            ++counts[c];
                            if (minus_k_self_dual(t, 3))
                                chunks[c].add_violation(
                                    to_tk_line(t), "not delete-3 self dual",
                                    "delete-3 self dual with a 2-interval and "
                                    "a diamond");
                        }
                    });
    std::int64_t hypothesis = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        hypothesis += counts[c];
        for (const auto& v : chunks[c].violations)
            report.add_violation(v.instance, v.expected, v.observed);
    }
    report.instances_checked = static_cast<std::int64_t>(catalog.codes.size());
    report.params["hypothesis_instances"] = std::to_string(hypothesis);
    return report;
}

Report center_everywhere(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int n = params.get_int("n", 7);
    report.params = {{"n", std::to_string(n)}};
    if (n < 7) throw std::invalid_argument("center-everywhere needs n >= 7");
    const Catalog& catalog = cache.get(n);
    std::int64_t hypothesis = 0;
    for (const CanonicalCode& code : catalog.codes) {
        Tournament t = from_code(code.as_code());
        if (!embeds_diamond(t)) continue;
        if (!minus_k_self_dual(t, 3)) continue;
        ++hypothesis;
        if (!every_vertex_centers_a_diamond(t))
            report.add_violation(to_tk_line(t), "every vertex centers a diamond",
                                 "some vertex centers none");
    }
    report.instances_checked = static_cast<std::int64_t>(catalog.codes.size());
    report.params["hypothesis_instances"] = std::to_string(hypothesis);
    return report;
}

Report pair_interval_balance(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int n = params.get_int("n", 7);
    int trials = params.get_int("trials", 200);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"n", std::to_string(n)},
                     {"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    if (n < 7) throw std::invalid_argument("pair-interval-balance needs n >= 7");

    std::int64_t hypothesis = 0;
    auto check = [&](const Tournament& t) {
        auto pairs = two_intervals(t);
        if (pairs.empty()) return;
        int tn = t.size();
        bool m2 = tn >= 7 && minus_k_self_dual(t, 2);
        bool m3 = tn >= 8 && minus_k_self_dual(t, 3);
        if (!m2 && !m3) return;
        for (VertexSet pairset : pairs) {
            ++hypothesis;
            for (int a : set_vertices(pairset)) {
                auto [plus, minus] = center_counts(t, a);
                if (plus != minus)
                    report.add_violation(
                        to_tk_line(t) + " {a,b}={" + set_to_string(pairset) + "}",
                        "balanced diamond centers at " + std::to_string(a),
                        std::to_string(plus) + " vs " + std::to_string(minus));
            }
        }
    };

    const Catalog& catalog = cache.get(n);
    for (const CanonicalCode& code : catalog.codes) check(from_code(code.as_code()));
    std::int64_t scanned = static_cast<std::int64_t>(catalog.codes.size());

    // Constructed instances with a forced 2-element interval.
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        int total = random_in(rng, 7, 10);
        int h = random_in(rng, 2, total - 1);
        std::vector<int> sizes = suite::random_composition(rng, total, h);
        std::vector<Tournament> parts;
        bool has_two = false;
        for (int size : sizes) {
            has_two |= size == 2;
            parts.push_back(random_labeled(rng, size));
        }
        if (!has_two) {
            int grow = -1, shrink = -1;
            for (size_t k = 0; k < sizes.size(); ++k) {
                if (sizes[k] == 1 && grow < 0) grow = static_cast<int>(k);
                if (sizes[k] >= 3 && shrink < 0) shrink = static_cast<int>(k);
            }
            if (grow < 0 || shrink < 0) continue;
            sizes[static_cast<size_t>(grow)] = 2;
            sizes[static_cast<size_t>(shrink)] -= 1;
            parts.clear();
            for (int size : sizes) parts.push_back(random_labeled(rng, size));
        }
        check(lex_sum(random_labeled(rng, h), parts));
        ++scanned;
    }
    report.instances_checked = scanned;
    report.params["hypothesis_instances"] = std::to_string(hypothesis);
    return report;
}

Report decomposable_diamond(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int n = params.get_int("n", 8);
    report.params = {{"n", std::to_string(n)}};
    if (n < 8) throw std::invalid_argument("decomposable-diamond needs n >= 8");
    const Catalog& catalog = cache.get(n);
    std::size_t nchunks = (catalog.codes.size() + 511) / 512;
    std::vector<Report> chunks(nchunks);
    std::vector<std::int64_t> counts(nchunks, 0);
    parallel_chunks(catalog.codes.size(), 512,
                    [&](std::size_t c, std::size_t lo, std::size_t hi) {
                        for (std::size_t i = lo; i < hi; ++i) {
                            Tournament t = from_code(catalog.codes[i].as_code());
                            if (!is_decomposable(t)) continue;
                            if (!embeds_diamond(t)) continue;
                            ++counts[c];
                            if (minus_k_self_dual(t, 3))
                                chunks[c].add_violation(
                                    to_tk_line(t), "not delete-3 self dual",
                                    "decomposable diamond-embedding tournament "
                                    "is delete-3 self dual");
                        }
                    });
    std::int64_t hypothesis = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        hypothesis += counts[c];
        for (const auto& v : chunks[c].violations)
            report.add_violation(v.instance, v.expected, v.observed);
    }
    report.instances_checked = static_cast<std::int64_t>(catalog.codes.size());
    report.params["hypothesis_instances"] = std::to_string(hypothesis);
    return report;
}

Report theorem3(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int n = params.get_int("n", 9);
    report.params = {{"n", std::to_string(n)}};
    if (n < 9) throw std::invalid_argument("theorem3 needs n >= 9");
    const Catalog& catalog = cache.get(n);
    std::size_t nchunks = (catalog.codes.size() + 1023) / 1024;
    std::vector<std::vector<CanonicalCode>> found(nchunks);
    parallel_chunks(catalog.codes.size(), 1024,
                    [&](std::size_t c, std::size_t lo, std::size_t hi) {
                        for (std::size_t i = lo; i < hi; ++i) {
                            Tournament t = from_code(catalog.codes[i].as_code());
                            if (!is_decomposable(t)) continue;
                            if (!minus_k_self_dual(t, 3)) continue;
                            found[c].push_back(catalog.codes[i]);
                        }
                    });
    std::vector<CanonicalCode> got;
    for (const auto& chunk : found) got.insert(got.end(), chunk.begin(), chunk.end());
    std::sort(got.begin(), got.end());
    std::vector<CanonicalCode> want{
        canonical_form(Tournament::linear(n), kMaxVertices),
        canonical_form(gen_named(NamedTournament::almost_transitive, n),
                       kMaxVertices)};
    std::sort(want.begin(), want.end());
    if (got != want) {
        for (const CanonicalCode& code : got)
            if (std::find(want.begin(), want.end(), code) == want.end())
                report.add_violation(to_tk_line(from_code(code.as_code())),
                                     "only transitive and almost transitive "
                                     "classes are decomposable and delete-3 "
                                     "self dual",
                                     "unexpected class");
        for (const CanonicalCode& code : want)
            if (std::find(got.begin(), got.end(), code) == got.end())
                report.add_violation(to_tk_line(from_code(code.as_code())),
                                     "expected class present", "missing");
    }
    report.instances_checked = static_cast<std::int64_t>(catalog.codes.size());
    report.params["found"] = std::to_string(got.size());
    return report;
}

}  // namespace tk::suites
