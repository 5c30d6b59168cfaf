#include "tk/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "tk/decomposition.hpp"
#include "tk/errors.hpp"
#include "tk/hypomorphy.hpp"
#include "tk/parallel.hpp"

namespace tk {

Tournament gen_named(NamedTournament name, int n) {
    switch (name) {
        case NamedTournament::o_n:
            return Tournament::linear(n);
        case NamedTournament::almost_transitive: {
            if (n < 3)
                throw std::invalid_argument("almost transitive needs n >= 3");
            Tournament t = Tournament::linear(n);
            t.orient(n - 1, 0);
            return t;
        }
        case NamedTournament::c3:
            if (n != 3) throw std::invalid_argument("the 3-cycle has 3 vertices");
            return make_tournament(3, "101");
        case NamedTournament::c4:
            if (n != 4) throw std::invalid_argument("the 4-cycle has 4 vertices");
            return make_tournament(4, "100111");
        case NamedTournament::delta_plus:
            if (n != 4) throw std::invalid_argument("a diamond has 4 vertices");
            return make_tournament(4, "101111");
        case NamedTournament::delta_minus:
            if (n != 4) throw std::invalid_argument("a diamond has 4 vertices");
            return make_tournament(4, "010000");
    }
    throw std::invalid_argument("unknown named tournament");
}

namespace {

Tournament extend(const Tournament& base, std::uint32_t mask) {
    int m = base.size() + 1;
    Tournament ext = Tournament::linear(m);
    for (int i = 0; i < m - 1; ++i) {
        for (int j = i + 1; j < m - 1; ++j)
            if (!base.arc(i, j)) ext.orient(j, i);
        if ((mask >> i) & 1) ext.orient(m - 1, i);
        else ext.orient(i, m - 1);
    }
    return ext;
}

CanonicalCode canonical_parent(const CanonicalCode& c, ParentRule rule) {
    Tournament t = from_code(c.as_code());
    VertexSet keep = rule == ParentRule::delete_highest
                         ? full_set(t.size() - 1)
                         : full_set(t.size()) & ~VertexSet{1};
    return canonical_form(restrict_to(t, keep), kMaxVertices);
}

}  // namespace

Catalog enumerate_canonical(int n, ParentRule rule, int max_n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument("enumeration bound exceeded: n=" +
                                    std::to_string(n) + " > " + std::to_string(max_n));
    Catalog cat;
    cat.n = 1;
    cat.codes = {canonical_form(Tournament{})};
    for (int m = 2; m <= n; ++m) {
        const std::vector<CanonicalCode>& parents = cat.codes;
        std::uint32_t ext_count = std::uint32_t{1} << (m - 1);
        std::vector<std::vector<CanonicalCode>> found(parents.size());
        parallel_chunks(parents.size(), 8, [&](std::size_t, std::size_t lo,
                                               std::size_t hi) {
            for (std::size_t pi = lo; pi < hi; ++pi) {
                const CanonicalCode& parent = parents[pi];
                Tournament base = from_code(parent.as_code());
                std::vector<CanonicalCode>& local = found[pi];
                for (std::uint32_t mask = 0; mask < ext_count; ++mask) {
                    CanonicalCode c = canonical_form(extend(base, mask), kMaxVertices);
                    if (canonical_parent(c, rule) == parent) local.push_back(c);
                }
                std::sort(local.begin(), local.end());
                local.erase(std::unique(local.begin(), local.end()), local.end());
            }
        });
        Catalog next;
        next.n = m;
        for (auto& local : found)
            next.codes.insert(next.codes.end(), local.begin(), local.end());
        std::sort(next.codes.begin(), next.codes.end());
        next.codes.erase(std::unique(next.codes.begin(), next.codes.end()),
                         next.codes.end());
        cat = std::move(next);
    }
    return cat;
}

std::vector<CanonicalCode> class_I(int n, const std::set<int>& P, const Catalog& catalog) {
    if (catalog.n != n)
        throw std::invalid_argument("catalog size mismatch: have n=" +
                                    std::to_string(catalog.n) + ", need " +
                                    std::to_string(n));
    if (P.empty() || P.count(0))
        throw std::invalid_argument("P must be a non-empty set of non-zero integers");
    std::vector<CanonicalCode> out;
    for (const CanonicalCode& code : catalog.codes) {
        Tournament t = from_code(code.as_code());
        if (is_decomposable(t)) continue;
        if (is_self_dual(t, kMaxVertices)) continue;
        bool keep = true;
        Tournament d = dual(t);
        for (int p : P)
            if (!hypomorphic(t, d, HypoSpec{{p}})) {
                keep = false;
                break;
            }
        if (keep) out.push_back(code);
    }
    return out;
}

std::vector<Tournament> dilate_into(DilationShape shape, const Tournament& part) {
    Tournament h = shape == DilationShape::c3 ? gen_named(NamedTournament::c3, 3)
                   : shape == DilationShape::o2 ? Tournament::linear(2)
                                                : Tournament::linear(3);
    std::vector<Tournament> out;
    std::vector<CanonicalCode> seen;
    for (int x = 0; x < h.size(); ++x) {
        std::vector<Tournament> parts(static_cast<size_t>(h.size()), Tournament{});
        parts[static_cast<size_t>(x)] = part;
        Tournament sum = lex_sum(h, parts);
        CanonicalCode c = canonical_form(sum, kMaxVertices);
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
            seen.push_back(c);
            out.push_back(sum);
        }
    }
    return out;
}

OmegaReport omega(int m, const Catalog& cat_small, const Catalog& cat_big) {
    if (m < 8) throw std::invalid_argument("omega needs m >= 8");
    if (cat_small.n != m - 2 || cat_big.n != m - 1)
        throw std::invalid_argument("omega needs catalogs at m-2 and m-1");
    OmegaReport report;
    report.m = m;
    report.i_small = class_I(m - 2, {-1, -2, -3}, cat_small);
    report.i_big = class_I(m - 1, {-2, -3}, cat_big);

    std::map<CanonicalCode, std::vector<std::string>> tagged;
    auto add = [&](const Tournament& part, DilationShape shape, const char* tag) {
        for (const Tournament& t : dilate_into(shape, part))
            tagged[canonical_form(t, kMaxVertices)].push_back(tag);
    };
    for (const CanonicalCode& code : report.i_small) {
        Tournament part = from_code(code.as_code());
        add(part, DilationShape::c3, "C3");
        add(part, DilationShape::o3, "O3");
    }
    for (const CanonicalCode& code : report.i_big)
        add(from_code(code.as_code()), DilationShape::o2, "O2");

    for (auto& [code, tags] : tagged) {
        std::sort(tags.begin(), tags.end());
        tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
        std::string prov;
        for (const auto& tag : tags) {
            if (!prov.empty()) prov += '+';
            prov += tag;
        }
        report.members.push_back({code, prov});

        // Each member must be decomposable with an indecomposable interval
        // leaving at most two vertices outside.
        Tournament t = from_code(code.as_code());
        if (!is_decomposable(t))
            throw TheoremViolation("family member is indecomposable: " + to_tk_line(t));
        bool witness = false;
        for (VertexSet i : all_intervals(t)) {
            if (t.size() - set_size(i) > 2) continue;
            if (set_size(i) == t.size()) continue;
            if (is_indecomposable(restrict_to(t, i))) {
                witness = true;
                break;
            }
        }
        if (!witness)
            throw TheoremViolation(
                "family member lacks an indecomposable interval of co-size <= 2: " +
                to_tk_line(t));
    }
    if (report.i_small.empty() && report.i_big.empty())
        report.note =
            "both generator classes are empty, so the exceptional family at m=" +
            std::to_string(m) +
            " is empty and every decomposable tournament on m vertices is "
            "reconstructible from its 3-vertex-deleted subtournaments";
    return report;
}

namespace {

struct BitDrawer {
    std::mt19937_64 rng;
    std::uint64_t buf = 0;
    int avail = 0;

    explicit BitDrawer(std::uint64_t seed) : rng(seed) {}
    int next() {
        if (avail == 0) {
            buf = rng();
            avail = 64;
        }
        int b = static_cast<int>(buf & 1);
        buf >>= 1;
        --avail;
        return b;
    }
    std::uint64_t below(std::uint64_t bound) { return rng() % bound; }
};

Tournament random_from(BitDrawer& draw, int n) {
    std::string bits(static_cast<size_t>(pair_count(n)), '0');
    for (auto& c : bits) c = draw.next() ? '1' : '0';
    return make_tournament(n, bits);
}

}  // namespace

Tournament random_tournament(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    BitDrawer draw(seed);
    return random_from(draw, n);
}

Tournament random_decomposable(int n, std::uint64_t seed) {
    if (n < 3 || n > kMaxVertices)
        throw std::invalid_argument("random_decomposable needs 3 <= n <= " +
                                    std::to_string(kMaxVertices));
    BitDrawer draw(seed);
    int h = 2 + static_cast<int>(draw.below(static_cast<std::uint64_t>(n - 2)));
    Tournament shape = random_from(draw, h);
    // h-1 cut points out of the n-1 gaps give the block sizes.
    std::vector<int> gaps(static_cast<size_t>(n - 1));
    std::iota(gaps.begin(), gaps.end(), 1);
    for (int i = 0; i < h - 1; ++i) {
        int j = i + static_cast<int>(draw.below(static_cast<std::uint64_t>(n - 1 - i)));
        std::swap(gaps[static_cast<size_t>(i)], gaps[static_cast<size_t>(j)]);
    }
    std::vector<int> cuts(gaps.begin(), gaps.begin() + (h - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);
    std::vector<Tournament> parts;
    int prev = 0;
    for (int cut : cuts) {
        parts.push_back(random_from(draw, cut - prev));
        prev = cut;
    }
    return lex_sum(shape, parts);
}

}  // namespace tk
