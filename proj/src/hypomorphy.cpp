#include "tk/hypomorphy.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tk/subsets.hpp"

namespace tk {

namespace {

constexpr int kTableMax = 7;

/// Subtournaments of a and b on the same vertex list, isomorphic?
bool subs_isomorphic(const Tournament& a, const Tournament& b, const int* verts,
                     int k) {
    if (k <= 2) return true;
    if (k <= kTableMax) {
        const std::uint32_t* table = detail::canon_table(k);
        return table[detail::pack_lsb_subset(a, verts, k)] ==
               table[detail::pack_lsb_subset(b, verts, k)];
    }
    VertexSet x = 0;
    for (int i = 0; i < k; ++i) x |= vbit(verts[i]);
    return detail::canonical_search(restrict_to(a, x)) ==
           detail::canonical_search(restrict_to(b, x));
}

}  // namespace

std::vector<int> HypoSpec::subset_sizes(int n) const {
    std::vector<int> sizes;
    for (int e : entries) {
        if (e == 0) throw std::invalid_argument("hypomorphy entry 0 is not allowed");
        int s = e > 0 ? e : n + e;
        if (s < 0 || s > n)
            throw std::invalid_argument("hypomorphy entry " + std::to_string(e) +
                                        " out of range for n=" + std::to_string(n));
        sizes.push_back(s);
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    return sizes;
}

bool hypomorphic(const Tournament& t, const Tournament& u, const HypoSpec& spec) {
    if (t.size() != u.size())
        throw std::invalid_argument("hypomorphic tournaments must share a vertex count");
    int n = t.size();
    for (int s : spec.subset_sizes(n)) {
        if (s <= 2) continue;  // subtournaments of size <= 2 are always isomorphic
        bool ok = detail::for_each_combination(n, s, [&](const int* verts) {
            return subs_isomorphic(t, u, verts, s);
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<VertexSet> embed_sets(const Tournament& t, const Tournament& h,
                                  VertexSet f) {
    int n = t.size();
    if (f & ~full_set(n)) throw std::invalid_argument("vertex out of range in F");
    int hsize = h.size();
    std::vector<VertexSet> out;
    int fsize = set_size(f);
    if (hsize > n || hsize < fsize) return out;
    std::vector<int> pool = set_vertices(full_set(n) & ~f);
    CanonicalCode hc;
    bool use_table = hsize <= kTableMax;
    std::uint32_t h_table_code = 0;
    if (use_table)
        h_table_code = detail::canon_table(hsize)[detail::pack_lsb(h)];
    else
        hc = detail::canonical_search(h);
    detail::for_each_combination_of(pool.data(), static_cast<int>(pool.size()),
                                    hsize - fsize, [&](const int* extra) {
        VertexSet x = f;
        for (int i = 0; i < hsize - fsize; ++i) x |= vbit(extra[i]);
        int verts[kMaxVertices];
        int k = 0;
        for (int v : set_vertices(x)) verts[k++] = v;
        bool iso;
        if (use_table) {
            iso = detail::canon_table(hsize)[detail::pack_lsb_subset(t, verts, k)] ==
                  h_table_code;
        } else {
            iso = detail::canonical_search(restrict_to(t, x)) == hc;
        }
        if (iso) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

int embed_count(const Tournament& t, const Tournament& h, VertexSet f) {
    return static_cast<int>(embed_sets(t, h, f).size());
}

bool minus_k_self_dual(const Tournament& t, int k) {
    int n = t.size();
    if (k < 0 || k > n)
        throw std::invalid_argument("co-cardinality out of range");
    int s = n - k;
    if (s <= 2) return true;
    if (s <= kTableMax) {
        const std::uint32_t* table = detail::canon_table(s);
        std::uint32_t mask = (std::uint32_t{1} << pair_count(s)) - 1;
        return detail::for_each_combination(n, s, [&](const int* verts) {
            std::uint32_t sub = detail::pack_lsb_subset(t, verts, s);
            return table[sub] == table[~sub & mask];
        });
    }
    return detail::for_each_combination(n, s, [&](const int* verts) {
        VertexSet x = 0;
        for (int i = 0; i < s; ++i) x |= vbit(verts[i]);
        Tournament sub = restrict_to(t, x);
        return detail::canonical_search(sub) == detail::canonical_search(dual(sub));
    });
}

SelfDualProfile self_dual_profile(const Tournament& t, int max_k) {
    int n = t.size();
    if (max_k < 0 || max_k > n)
        throw std::invalid_argument("max_k out of range");
    SelfDualProfile p;
    p.n = n;
    p.max_k = max_k;
    Tournament d = dual(t);
    for (int k = 1; k <= max_k; ++k) p.minus_k[k] = minus_k_self_dual(t, k);
    p.upto_max_k = hypomorphic(t, d, HypoSpec::upto(max_k));
    p.self_dual = are_isomorphic(t, d, kMaxVertices);
    p.strongly_self_dual = hypomorphic(t, d, HypoSpec::upto(n));
    return p;
}

std::vector<Tournament> three_hypomorphs(const Tournament& t, int max_n) {
    int n = t.size();
    if (n > max_n)
        throw std::invalid_argument("three_hypomorphs bound exceeded: n=" +
                                    std::to_string(n) + " > " + std::to_string(max_n));
    if (n > 8)
        throw std::invalid_argument("three_hypomorphs supports n <= 8");
    int m = pair_count(n);
    // Precompute triple pair-indices and t's cyclic-triple flags.
    struct Triple { int ab, ac, bc; };
    std::vector<Triple> triples;
    std::vector<bool> cyclic;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Triple tr{pair_index(a, b, n), pair_index(a, c, n), pair_index(b, c, n)};
                triples.push_back(tr);
            }
    std::uint32_t tcode = detail::pack_lsb(t);
    auto is_cyclic = [&](std::uint32_t code, const Triple& tr) {
        int ab = (code >> tr.ab) & 1, ac = (code >> tr.ac) & 1, bc = (code >> tr.bc) & 1;
        return ab == bc && ac != ab;
    };
    for (const auto& tr : triples) cyclic.push_back(is_cyclic(tcode, tr));

    std::vector<Tournament> out;
    std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t code = 0; code < limit; ++code) {
        bool match = true;
        for (size_t i = 0; i < triples.size(); ++i)
            if (is_cyclic(static_cast<std::uint32_t>(code), triples[i]) != cyclic[i]) {
                match = false;
                break;
            }
        if (match) {
            std::string bits(static_cast<size_t>(m), '0');
            for (int k = 0; k < m; ++k)
                if ((code >> k) & 1) bits[static_cast<size_t>(k)] = '1';
            out.push_back(make_tournament(n, bits));
        }
    }
    return out;
}

CombLemmaResult combinatorial_lemma_check(int ground_n,
                                          const std::vector<VertexSet>& u1,
                                          const std::vector<VertexSet>& u2,
                                          int p, int r) {
    if (p < 1 || r < 1)
        throw std::invalid_argument("p and r must be positive");
    if (ground_n < p + r || ground_n > kMaxVertices)
        throw std::invalid_argument("ground set size out of range");
    VertexSet ground = full_set(ground_n);
    auto validate = [&](const std::vector<VertexSet>& u, const char* name) {
        std::set<VertexSet> seen;
        for (VertexSet s : u) {
            if (set_size(s) != p)
                throw std::invalid_argument(std::string(name) + " member is not a p-set");
            if (s & ~ground)
                throw std::invalid_argument(std::string(name) + " member leaves the ground set");
            if (!seen.insert(s).second)
                throw std::invalid_argument(std::string(name) + " has duplicate members");
        }
    };
    validate(u1, "U");
    validate(u2, "U'");

    auto count_in = [](const std::vector<VertexSet>& u, VertexSet lo, VertexSet hi) {
        int c = 0;
        for (VertexSet s : u)
            if ((s & lo) == lo && (s & ~hi) == 0) ++c;
        return c;
    };

    CombLemmaResult result;
    result.hypothesis_holds = detail::for_each_combination(ground_n, p + r,
                                                           [&](const int* verts) {
        VertexSet q = 0;
        for (int i = 0; i < p + r; ++i) q |= vbit(verts[i]);
        return count_in(u1, 0, q) == count_in(u2, 0, q);
    });
    if (!result.hypothesis_holds) return result;

    // All (P', Q') with P' <= Q' and |Q' \ P'| >= p + r.
    for (VertexSet qp = 0;; ++qp) {
        for (VertexSet pp = qp;; pp = (pp - 1) & qp) {
            if (set_size(qp & ~pp) >= p + r)
                if (count_in(u1, pp, qp) != count_in(u2, pp, qp))
                    result.conclusion_holds = false;
            if (pp == 0) break;
        }
        if (qp == ground) break;
    }

    result.equality_applicable = ground_n >= 2 * p + r;
    if (result.equality_applicable) {
        std::set<VertexSet> a(u1.begin(), u1.end()), b(u2.begin(), u2.end());
        result.sets_equal = a == b;
    }
    return result;
}

}  // namespace tk
