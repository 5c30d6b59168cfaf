#include <algorithm>

#include "suite_util.hpp"
#include "tk/decomposition.hpp"
#include "tk/diamonds.hpp"
#include "tk/errors.hpp"
#include "tk/shape.hpp"
#include "tk/subsets.hpp"

namespace tk::suites {

using suite::random_in;
using suite::random_labeled;
using suite::StructuredPair;

namespace {

// Pair production shared by the triple-hypomorphy suites: structured
// block-dual pairs (triple-hypomorphic by construction, re-verified),
// dual pairs (T, T*), and relabeled pairs.
std::vector<StructuredPair> hypo_pairs(std::mt19937_64& rng, int count, int nmin,
                                       int nmax) {
    std::vector<StructuredPair> pairs;
    while (static_cast<int>(pairs.size()) < count) {
        int n = random_in(rng, nmin, nmax);
        switch (rng() % 3) {
            case 0: {
                pairs.push_back(suite::random_structured_pair(
                    rng, n, /*strongly_connected_shape=*/(rng() & 1) != 0,
                    /*hereditary_bias=*/false));
                break;
            }
            case 1: {
                Tournament t = random_labeled(rng, n);
                pairs.push_back({t, dual(t), {}});
                break;
            }
            default: {
                Tournament t = random_labeled(rng, n);
                pairs.push_back({t, t, {}});
                break;
            }
        }
    }
    return pairs;
}

}  // namespace

Report hypo_descent(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 150);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    auto pairs = hypo_pairs(rng, trials, 4, 9);
    std::int64_t hypotheses = 0;
    for (const auto& pair : pairs) {
        int n = pair.t.size();
        for (int p = 3; p <= n - 1; ++p) {
            if (!hypomorphic(pair.t, pair.u, HypoSpec::exactly(p))) continue;
            ++hypotheses;
            for (int q = 3; q <= std::min(p, n - p); ++q)
                if (!hypomorphic(pair.t, pair.u, HypoSpec::exactly(q)))
                    report.add_violation(
                        suite::pair_line(pair.t, pair.u),
                        "{" + std::to_string(p) + "}-hypomorphy descends to {" +
                            std::to_string(q) + "}",
                        "fails at {" + std::to_string(q) + "}");
        }
        if (n >= 6 && hypomorphic(pair.t, pair.u, HypoSpec::minus(3))) {
            ++hypotheses;
            if (!hypomorphic(pair.t, pair.u, HypoSpec::upto(3)))
                report.add_violation(suite::pair_line(pair.t, pair.u),
                                     "delete-3 hypomorphy gives (<=3)-hypomorphy",
                                     "(<=3) fails");
        }
    }
    report.instances_checked = static_cast<std::int64_t>(pairs.size());
    report.params["hypotheses"] = std::to_string(hypotheses);
    return report;
}

Report inversion(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int n = params.get_int("n", 5);
    report.params = {{"n", std::to_string(n)}};
    const Catalog& catalog = cache.get(n);
    std::int64_t scanned = 0;
    for (const CanonicalCode& code : catalog.codes) {
        Tournament t = from_code(code.as_code());
        if (is_decomposable(t)) continue;
        ++scanned;
        std::vector<Tournament> hypos = three_hypomorphs(t, n);
        std::vector<ArcCode> got;
        for (const Tournament& h : hypos) got.push_back(h.code());
        std::sort(got.begin(), got.end());
        std::vector<ArcCode> want{t.code(), dual(t).code()};
        std::sort(want.begin(), want.end());
        if (got != want)
            report.add_violation(to_tk_line(t),
                                 "triple-hypomorphs are the tournament and its dual",
                                 std::to_string(hypos.size()) + " hypomorphs");
    }
    report.instances_checked = scanned;
    return report;
}

Report quotient_dual(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 300);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    auto pairs = hypo_pairs(rng, trials, 3, 10);
    for (const auto& pair : pairs) {
        const Tournament& t = pair.t;
        const Tournament& u = pair.u;
        if (!hypomorphic(t, u, HypoSpec::exactly(3)))
            report.add_violation(suite::pair_line(t, u),
                                 "constructed pair is triple-hypomorphic",
                                 "construction broke");
        if (t.size() < 2) continue;
        Partition pt = gallai_partition(t);
        Partition pu = gallai_partition(u);
        if (!(pt == pu)) {
            report.add_violation(suite::pair_line(t, u), "equal partitions",
                                 pt.to_string() + " vs " + pu.to_string());
            continue;
        }
        if (is_strongly_connected(t) != is_strongly_connected(u))
            report.add_violation(suite::pair_line(t, u),
                                 "strong connectivity matches", "differs");
        if (is_decomposable(t) != is_decomposable(u))
            report.add_violation(suite::pair_line(t, u),
                                 "decomposability matches", "differs");
        if (is_strongly_connected(t)) {
            Tournament qt = quotient(t, pt);
            Tournament qu = quotient(u, pt);
            if (!(qu == qt) && !(qu == dual(qt)))
                report.add_violation(suite::pair_line(t, u),
                                     "quotients equal or dual",
                                     to_tk_line(qt) + " vs " + to_tk_line(qu));
        }
    }
    report.instances_checked = trials;
    return report;
}

Report interval_transfer(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 300);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    auto pairs = hypo_pairs(rng, trials, 3, 10);
    std::int64_t intervals_checked = 0;
    for (const auto& pair : pairs) {
        for (VertexSet i : all_intervals(pair.t)) {
            if (set_size(i) < 3 || set_size(i) == pair.t.size()) continue;
            if (!is_strongly_connected(restrict_to(pair.t, i))) continue;
            ++intervals_checked;
            if (!is_interval(pair.u, i))
                report.add_violation(suite::pair_line(pair.t, pair.u),
                                     "interval {" + set_to_string(i) +
                                         "} transfers to the partner",
                                     "not an interval there");
        }
    }
    report.instances_checked = trials;
    report.params["intervals"] = std::to_string(intervals_checked);
    return report;
}

Report prop_degre(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int trials = params.get_int("trials", 200);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);

    // Indecomposable parts to dilate: every indecomposable class at 3..7.
    std::vector<Tournament> parts;
    for (int m : {3, 5, 6, 7}) {
        for (const CanonicalCode& code : cache.get(m).codes) {
            Tournament t = from_code(code.as_code());
            if (is_indecomposable(t)) parts.push_back(t);
        }
    }

    std::int64_t hypotheses = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const Tournament& part =
            parts[static_cast<size_t>(rng() % parts.size())];
        int outside = random_in(rng, 2, 5);
        int n = part.size() + outside;
        if (n < 6 || n > 11) continue;
        int h = outside + 1;
        Tournament shape = (rng() & 1) ? suite::random_strongly_connected(rng, h)
                                       : random_labeled(rng, h);
        std::vector<suite::BlockPlan> plans;
        int slot = random_in(rng, 0, h - 1);
        for (int i = 0; i < h; ++i) {
            suite::BlockPlan plan;
            plan.block = i == slot ? part : Tournament{};
            plan.dualize = i == slot ? (rng() & 1) != 0 : false;
            plans.push_back(plan);
        }
        StructuredPair pair = suite::assemble_pair(shape, plans);
        const Tournament& t = pair.t;
        const Tournament& u = pair.u;

        bool h32 = hypomorphic(t, u, HypoSpec{{3, -2}});
        bool hm3 = hypomorphic(t, u, HypoSpec::minus(3));
        if (!h32 && !hm3) continue;

        for (VertexSet i : all_intervals(t)) {
            int isz = set_size(i);
            int out = n - isz;
            if (isz < 3 || !is_indecomposable(restrict_to(t, i))) continue;
            if (isz == n) continue;
            ++hypotheses;
            std::string inst = suite::pair_line(t, u) + " I={" + set_to_string(i) + "}";
            bool claim_iso = (h32 && out >= 2) || (hm3 && out >= 3);
            bool claim_counts = (h32 && out >= 3) || (hm3 && out >= 4);
            bool claim_sets = hm3 && out >= 4;
            if (claim_iso &&
                !are_isomorphic(restrict_to(t, i), restrict_to(u, i), kMaxVertices))
                report.add_violation(inst, "induced subtournaments isomorphic",
                                     "differ");
            if (claim_counts || claim_sets) {
                if (!is_interval(u, i)) {
                    report.add_violation(inst, "interval transfers to partner",
                                         "not an interval there");
                    continue;
                }
                auto [tp, tm] = outside_split(t, i);
                auto [up, um] = outside_split(u, i);
                if (claim_counts &&
                    (set_size(tp) != set_size(up) || set_size(tm) != set_size(um)))
                    report.add_violation(inst, "outside in/out counts equal",
                                         "counts differ");
                if (claim_sets && (tp != up || tm != um))
                    report.add_violation(inst, "outside in/out sets equal",
                                         "{" + set_to_string(tp) + "} vs {" +
                                             set_to_string(up) + "}");
            }
        }
    }
    report.instances_checked = trials;
    report.params["hypotheses"] = std::to_string(hypotheses);
    return report;
}

Report remark7(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int trials = params.get_int("trials", 150);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};

    // Four classes on four vertices, all decomposable.
    const Catalog& cat4 = cache.get(4);
    if (cat4.codes.size() != 4)
        report.add_violation("catalog n=4", "4 classes",
                             std::to_string(cat4.codes.size()));
    for (const CanonicalCode& code : cat4.codes)
        if (!is_decomposable(from_code(code.as_code())))
            report.add_violation(to_tk_line(from_code(code.as_code())),
                                 "decomposable", "indecomposable");

    std::mt19937_64 rng(seed);
    auto pairs = hypo_pairs(rng, trials, 4, 9);
    // Diamond-free non-transitive pairs: rotational tournaments and duals.
    for (int n : {5, 7, 9}) {
        Tournament r = suite::rotational(n);
        pairs.push_back({r, dual(r), {}});
    }
    for (const auto& pair : pairs) {
        const Tournament& t = pair.t;
        const Tournament& u = pair.u;
        int n = t.size();
        if (n < 4) continue;
        if (!hypomorphic(t, u, HypoSpec::exactly(3))) continue;

        bool upto4 = hypomorphic(t, u, HypoSpec::upto(4));
        bool diamonds_match = detail::for_each_combination(n, 4, [&](const int* v) {
            VertexSet x = vbit(v[0]) | vbit(v[1]) | vbit(v[2]) | vbit(v[3]);
            Tournament st = restrict_to(t, x);
            Tournament su = restrict_to(u, x);
            auto tag_t = classify_shape(st);
            auto tag_u = classify_shape(su);
            bool dia_t = tag_t == ShapeTag::diamond_pos || tag_t == ShapeTag::diamond_neg;
            bool dia_u = tag_u == ShapeTag::diamond_pos || tag_u == ShapeTag::diamond_neg;
            if (!dia_t && !dia_u) return true;
            return are_isomorphic(st, su);
        });
        if (upto4 != diamonds_match)
            report.add_violation(suite::pair_line(t, u),
                                 "(<=4)-hypomorphy <=> matching diamonds",
                                 std::string("upto4=") + (upto4 ? "1" : "0") +
                                     " diamonds=" + (diamonds_match ? "1" : "0"));
        if (!embeds_diamond(t) && !hypomorphic(t, u, HypoSpec::exactly(4)))
            report.add_violation(suite::pair_line(t, u),
                                 "diamond-free gives {4}-hypomorphy",
                                 "{4} fails");
    }
    report.instances_checked = static_cast<std::int64_t>(pairs.size());
    return report;
}

}  // namespace tk::suites
