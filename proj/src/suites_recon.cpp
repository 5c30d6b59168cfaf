#include <algorithm>
#include <bit>
#include <numeric>

#include "suite_util.hpp"
#include "tk/decomposition.hpp"
#include "tk/errors.hpp"
#include "tk/io.hpp"
#include "tk/shape.hpp"
#include "tk/subsets.hpp"

namespace tk::suites {

using suite::random_in;
using suite::random_labeled;
using suite::StructuredPair;

Report prop28(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 200);
    int n = params.get_int("n", 9);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"n", std::to_string(n)},
                     {"seed", std::to_string(seed)}};
    if (n < 9) throw std::invalid_argument("prop28 needs n >= 9");
    std::mt19937_64 rng(seed);
    std::int64_t verified = 0;
    for (int trial = 0; trial < trials; ++trial) {
        StructuredPair pair = suite::random_structured_pair(
            rng, n, /*strongly_connected_shape=*/true, /*hereditary_bias=*/true);
        const Tournament& t = pair.t;
        const Tournament& u = pair.u;
        if (!is_strongly_connected(t) || !is_decomposable(t)) continue;
        if (is_almost_transitive(t)) continue;
        if (!hypomorphic(t, u, HypoSpec::minus(3))) continue;
        ++verified;
        Partition pt = gallai_partition(t);
        Partition pu = gallai_partition(u);
        if (!(pt == pu)) {
            report.add_violation(suite::pair_line(t, u), "equal partitions",
                                 pt.to_string() + " vs " + pu.to_string());
            continue;
        }
        if (!(quotient(u, pt) == quotient(t, pt)))
            report.add_violation(suite::pair_line(t, u), "equal quotients",
                                 "quotients differ");
        bool all_small = true;
        for (VertexSet block : pt.blocks) {
            if (set_size(block) > n - 3) all_small = false;
            if (are_isomorphic(restrict_to(t, block), restrict_to(u, block),
                               kMaxVertices))
                continue;
            if (pt.blocks.size() != 3 || set_size(block) != n - 2)
                report.add_violation(
                    suite::pair_line(t, u),
                    "a block mismatch forces 3 blocks and size n-2",
                    "mismatch at {" + set_to_string(block) + "} with " +
                        std::to_string(pt.blocks.size()) + " blocks");
        }
        if (all_small) {
            bool all_iso = true;
            for (VertexSet block : pt.blocks)
                all_iso = all_iso && are_isomorphic(restrict_to(t, block),
                                                    restrict_to(u, block),
                                                    kMaxVertices);
            if (!all_iso || !are_isomorphic(t, u, kMaxVertices))
                report.add_violation(suite::pair_line(t, u),
                                     "small blocks force isomorphy",
                                     "not isomorphic");
        }
    }
    report.instances_checked = trials;
    report.params["hypomorphic_pairs"] = std::to_string(verified);
    return report;
}

Report hereditary_reassembly(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 200);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    std::int64_t glued = 0;
    for (int trial = 0; trial < trials; ++trial) {
        int n = random_in(rng, 4, 10);
        StructuredPair pair = suite::random_structured_pair(
            rng, n, /*strongly_connected_shape=*/false, /*hereditary_bias=*/true);
        const Tournament& t = pair.t;
        const Tournament& u = pair.u;

        // A random non-empty subset A; per-intersected-block isomorphisms,
        // when they all exist, must glue to an isomorphism on A.
        VertexSet a = static_cast<VertexSet>(rng()) & full_set(n);
        if (a == 0) a = vbit(random_in(rng, 0, n - 1));
        std::vector<int> glue(static_cast<size_t>(n), -1);
        bool all_found = true;
        for (VertexSet block : pair.blocks) {
            VertexSet y = block & a;
            if (y == 0) continue;
            if (set_size(y) > 6) { all_found = false; break; }
            auto iso = suite::find_subset_isomorphism(t, u, y);
            if (!iso) {
                all_found = false;
                break;
            }
            std::vector<int> verts = set_vertices(y);
            for (size_t i = 0; i < verts.size(); ++i)
                glue[static_cast<size_t>(verts[i])] = (*iso)[i];
        }
        if (!all_found) continue;
        ++glued;
        bool is_iso = true;
        for (int x : set_vertices(a))
            for (int y : set_vertices(a)) {
                if (x == y) continue;
                if (t.arc(x, y) != u.arc(glue[static_cast<size_t>(x)],
                                         glue[static_cast<size_t>(y)])) {
                    is_iso = false;
                    break;
                }
            }
        if (!is_iso)
            report.add_violation(suite::pair_line(t, u) + " A={" + set_to_string(a) + "}",
                                 "glued map is an isomorphism", "arc mismatch");

        // Hereditarily isomorphic blocks glue to hereditarily isomorphic
        // tournaments; checked exhaustively at small sizes.
        if (n <= 8) {
            bool blocks_hereditary = true;
            for (VertexSet block : pair.blocks) {
                for (VertexSet s = block; s; s = (s - 1) & block) {
                    if (set_size(s) >= 3 &&
                        !are_isomorphic(restrict_to(t, s), restrict_to(u, s)))
                        blocks_hereditary = false;
                    if (!blocks_hereditary) break;
                }
                if (!blocks_hereditary) break;
            }
            if (blocks_hereditary) {
                for (VertexSet s = full_set(n); s; s = (s - 1) & full_set(n)) {
                    if (set_size(s) >= 3 &&
                        !are_isomorphic(restrict_to(t, s), restrict_to(u, s))) {
                        report.add_violation(
                            suite::pair_line(t, u),
                            "hereditarily isomorphic blocks glue hereditarily",
                            "subset {" + set_to_string(s) + "} differs");
                        break;
                    }
                }
            }
        }
    }
    report.instances_checked = trials;
    report.params["glued"] = std::to_string(glued);
    return report;
}

Report dilation_iso(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 500);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int h = random_in(rng, 2, 5);
        Tournament shape = random_labeled(rng, h);
        std::vector<int> perm(static_cast<size_t>(h));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        // shape2 = shape relabeled by perm.
        Tournament shape2 = Tournament::linear(h);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) {
                if (i == j) continue;
                if (shape.arc(i, j))
                    shape2.orient(perm[static_cast<size_t>(i)],
                                  perm[static_cast<size_t>(j)]);
            }
        int i = random_in(rng, 0, h - 1);
        int block_size = random_in(rng, 1, 4);
        Tournament block_t = random_labeled(rng, block_size);
        Tournament block_u;
        if (rng() & 1) {
            // isomorphic partner: a relabeling of block_t
            std::vector<int> bperm(static_cast<size_t>(block_size));
            std::iota(bperm.begin(), bperm.end(), 0);
            std::shuffle(bperm.begin(), bperm.end(), rng);
            block_u = Tournament::linear(block_size);
            for (int x = 0; x < block_size; ++x)
                for (int y = 0; y < block_size; ++y) {
                    if (x == y) continue;
                    if (block_t.arc(x, y))
                        block_u.orient(bperm[static_cast<size_t>(x)],
                                       bperm[static_cast<size_t>(y)]);
                }
        } else {
            block_u = random_labeled(rng, random_in(rng, 1, 4));
        }
        std::vector<Tournament> parts_t(static_cast<size_t>(h), Tournament{});
        std::vector<Tournament> parts_u(static_cast<size_t>(h), Tournament{});
        parts_t[static_cast<size_t>(i)] = block_t;
        parts_u[static_cast<size_t>(perm[static_cast<size_t>(i)])] = block_u;
        Tournament big_t = lex_sum(shape, parts_t);
        Tournament big_u = lex_sum(shape2, parts_u);
        bool whole = are_isomorphic(big_t, big_u, kMaxVertices);
        bool blocks = are_isomorphic(block_t, block_u, kMaxVertices);
        if (whole != blocks)
            report.add_violation(suite::pair_line(big_t, big_u),
                                 "dilations isomorphic <=> blocks isomorphic",
                                 std::string("whole=") + (whole ? "1" : "0") +
                                     " blocks=" + (blocks ? "1" : "0"));
    }
    report.instances_checked = trials;
    return report;
}

Report eight_vertex(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 2000);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    std::int64_t hypomorphic_pairs = 0;
    for (int trial = 0; trial < trials; ++trial) {
        StructuredPair pair = suite::random_structured_pair(
            rng, 8, /*strongly_connected_shape=*/true,
            /*hereditary_bias=*/(rng() & 1) != 0);
        const Tournament& t = pair.t;
        const Tournament& u = pair.u;
        if (!is_strongly_connected(t) || !is_decomposable(t)) continue;
        if (!hypomorphic(t, u, HypoSpec{{-2, -3}})) continue;
        ++hypomorphic_pairs;
        if (!are_isomorphic(t, u, kMaxVertices))
            report.add_violation(suite::pair_line(t, u),
                                 "delete-2-and-3 hypomorphs are isomorphic",
                                 "non-isomorphic pair found");
    }
    report.instances_checked = trials;
    report.params["hypomorphic_pairs"] = std::to_string(hypomorphic_pairs);
    return report;
}

Report theorem4_facts(const SuiteParams& params, CatalogCache&) {
    Report report;
    int trials = params.get_int("trials", 200);
    int n = params.get_int("n", 9);
    std::uint64_t seed = params.get_u64("seed", 1);
    report.params = {{"trials", std::to_string(trials)},
                     {"n", std::to_string(n)},
                     {"seed", std::to_string(seed)}};
    if (n < 9) throw std::invalid_argument("theorem4-facts needs n >= 9");
    std::mt19937_64 rng(seed);
    std::int64_t verified = 0;
    for (int trial = 0; trial < trials; ++trial) {
        StructuredPair pair = suite::random_structured_pair(
            rng, n, /*strongly_connected_shape=*/(rng() & 1) != 0,
            /*hereditary_bias=*/true);
        const Tournament& t = pair.t;
        const Tournament& u = pair.u;
        if (!is_decomposable(t)) continue;
        if (!hypomorphic(t, u, HypoSpec::minus(3))) continue;
        ++verified;
        Partition pt = tilde_partition(t);
        Partition pu = tilde_partition(u);
        if (!(pt == pu)) {
            report.add_violation(suite::pair_line(t, u), "equal merged partitions",
                                 pt.to_string() + " vs " + pu.to_string());
            continue;
        }
        if (is_almost_transitive(t)) {
            if (!are_isomorphic(t, u, kMaxVertices))
                report.add_violation(suite::pair_line(t, u),
                                     "almost transitive forces isomorphy",
                                     "not isomorphic");
            continue;
        }
        if (!(quotient(u, pt) == quotient(t, pt)))
            report.add_violation(suite::pair_line(t, u),
                                 "equal quotients by the merged partition",
                                 "quotients differ");
        // Domination toward strongly connected blocks transfers.
        for (VertexSet block : pt.blocks) {
            if (set_size(block) < 3) continue;
            if (!is_strongly_connected(restrict_to(t, block))) continue;
            int rep = std::countr_zero(block);
            for (int a = 0; a < n; ++a) {
                if (block & vbit(a)) continue;
                if (t.arc(a, rep) != u.arc(a, rep))
                    report.add_violation(
                        suite::pair_line(t, u),
                        "domination toward block {" + set_to_string(block) +
                            "} transfers",
                        "vertex " + std::to_string(a) + " flips");
            }
        }
    }
    report.instances_checked = trials;
    report.params["hypomorphic_pairs"] = std::to_string(verified);
    return report;
}

Report corollary5(const SuiteParams& params, CatalogCache& cache) {
    Report report;
    int m = params.get_int("m", 9);
    report.params = {{"m", std::to_string(m)}};
    const Catalog& cat_small = cache.get(m - 2);
    const Catalog& cat_big = cache.get(m - 1);
    OmegaReport omega_report;
    try {
        // omega() itself re-asserts that each member is decomposable with an
        // indecomposable interval leaving at most two vertices outside --
        // the very hypothesis the corollary's tournaments must escape.
        omega_report = omega(m, cat_small, cat_big);
    } catch (const TheoremViolation& e) {
        report.add_violation("omega m=" + std::to_string(m),
                             "members carry an indecomposable interval of "
                             "co-size <= 2",
                             e.what());
        report.instances_checked = 0;
        return report;
    }
    for (const OmegaMember& member : omega_report.members) {
        Tournament t = from_code(member.code.as_code());
        bool sc = is_strongly_connected(t);
        bool from_c3 = member.provenance.find("C3") != std::string::npos;
        bool from_oq = member.provenance.find("O2") != std::string::npos ||
                       member.provenance.find("O3") != std::string::npos;
        if ((from_c3 && !sc) || (from_oq && sc) || (from_c3 && from_oq))
            report.add_violation(to_tk_line(t),
                                 "strong connectivity matches the constructor",
                                 member.provenance + (sc ? " sc" : " non-sc"));
        if (is_transitive(t) || is_almost_transitive(t))
            report.add_violation(to_tk_line(t),
                                 "members are neither transitive nor almost "
                                 "transitive",
                                 "degenerate member");
    }
    report.instances_checked =
        static_cast<std::int64_t>(omega_report.members.size());
    report.params["i_small"] = std::to_string(omega_report.i_small.size());
    report.params["i_big"] = std::to_string(omega_report.i_big.size());
    return report;
}

}  // namespace tk::suites
