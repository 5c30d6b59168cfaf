#include "tk/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace tk {

namespace {

// ---------------------------------------------------------------------------
// Ordered-cell refinement search for the minimal arc-bit code.
//
// Vertices are assigned to positions 0..n-1.  The unplaced vertices live in
// an ordered list of cells; the vertex for the next position must come from
// the first cell.  Placing v fixes the next row of the code: toward each
// cell the bits can be sorted in-neighbours first (0 before 1), so the row
// is determined by the per-cell out-counts of v, and every cell splits into
// (in-part, out-part).  Only candidates with the minimal row are explored;
// branches whose row exceeds the best code's corresponding bits are cut.
// ---------------------------------------------------------------------------

std::uint32_t get_bits(const std::array<std::uint64_t, 2>& w, int pos, int len) {
    if (len == 0) return 0;
    std::uint32_t out = 0;
    for (int k = 0; k < len; ++k)
        out = (out << 1) | static_cast<std::uint32_t>((w[(pos + k) >> 6] >>
                                                       (63 - ((pos + k) & 63))) & 1);
    return out;
}

void put_bits(std::array<std::uint64_t, 2>& w, int pos, int len, std::uint32_t bits) {
    for (int k = 0; k < len; ++k) {
        std::uint64_t mask = std::uint64_t{1} << (63 - ((pos + k) & 63));
        if ((bits >> (len - 1 - k)) & 1) w[(pos + k) >> 6] |= mask;
        else w[(pos + k) >> 6] &= ~mask;
    }
}

struct CanonSearch {
    int n = 0;
    std::array<std::uint16_t, kMaxVertices> out{};
    std::array<std::uint64_t, 2> best{};
    std::array<std::uint64_t, 2> cur{};

    void run(const Tournament& t) {
        n = t.size();
        for (int v = 0; v < n; ++v) out[v] = static_cast<std::uint16_t>(t.out_set(v));
        best = t.code().w;
        std::uint16_t cells[kMaxVertices];
        cells[0] = static_cast<std::uint16_t>(full_set(n));
        dfs(cells, 1, 0, 0, true);
    }

    void dfs(const std::uint16_t* cells, int ncells, int pos, int bitpos, bool tight) {
        if (pos == n) {
            if (cur < best) best = cur;
            return;
        }
        std::uint16_t first = cells[0];

        // Minimal row: per-cell out-counts, compared lexicographically.
        int min_key[kMaxVertices];
        int min_verts[kMaxVertices];
        int nmin = 0;
        min_key[0] = kMaxVertices + 1;  // sentinel: any real key wins
        for (std::uint16_t rest = first; rest;) {
            int v = std::countr_zero(rest);
            rest &= static_cast<std::uint16_t>(rest - 1);
            int key[kMaxVertices];
            key[0] = std::popcount(static_cast<std::uint16_t>(out[v] & first & ~vbit(v)));
            for (int c = 1; c < ncells; ++c)
                key[c] = std::popcount(static_cast<std::uint16_t>(out[v] & cells[c]));
            int cmp = 0;  // vs min_key
            if (nmin == 0) cmp = -1;
            else
                for (int c = 0; c < ncells; ++c) {
                    if (key[c] != min_key[c]) { cmp = key[c] < min_key[c] ? -1 : 1; break; }
                }
            if (cmp < 0) {
                for (int c = 0; c < ncells; ++c) min_key[c] = key[c];
                min_verts[0] = v;
                nmin = 1;
            } else if (cmp == 0) {
                min_verts[nmin++] = v;
            }
        }

        // The row bits shared by all minimal candidates.
        int rowlen = n - 1 - pos;
        std::uint32_t row = 0;
        {
            int seg = std::popcount(first) - 1;
            row = (row << seg) | ((std::uint32_t{1} << min_key[0]) - 1);
            for (int c = 1; c < ncells; ++c) {
                int sz = std::popcount(cells[c]);
                row = static_cast<std::uint32_t>((std::uint64_t{row} << sz)) |
                      ((std::uint32_t{1} << min_key[c]) - 1);
            }
        }
        if (tight) {
            std::uint32_t ref = get_bits(best, bitpos, rowlen);
            if (row > ref) return;
            if (row < ref) tight = false;
        }
        put_bits(cur, bitpos, rowlen, row);

        for (int i = 0; i < nmin; ++i) {
            int v = min_verts[i];
            std::uint16_t child[kMaxVertices];
            int nchild = 0;
            auto push_split = [&](std::uint16_t cell) {
                std::uint16_t ins = cell & static_cast<std::uint16_t>(~out[v]);
                std::uint16_t outs = cell & out[v];
                if (ins) child[nchild++] = ins;
                if (outs) child[nchild++] = outs;
            };
            push_split(static_cast<std::uint16_t>(first & ~vbit(v)));
            for (int c = 1; c < ncells; ++c) push_split(cells[c]);
            dfs(child, nchild, pos + 1, bitpos + rowlen, tight);
        }
    }
};

// ---------------------------------------------------------------------------
// Small-size canonical tables, built by walking isomorphism orbits with the
// adjacent-transposition generators and assigning each orbit its minimal
// member (minimal as an arc-bit string, i.e. by bit-reversed integer value).
// ---------------------------------------------------------------------------

constexpr int kTableMax = 7;

struct Generator {
    // Bit-position swaps plus the flipped position for one transposition.
    int nswap = 0;
    int swap_a[kMaxVertices]{};
    int swap_b[kMaxVertices]{};
    int flip = 0;
};

std::vector<Generator> build_generators(int m) {
    std::vector<Generator> gens;
    for (int i = 0; i + 1 < m; ++i) {
        Generator g;
        for (int x = 0; x < i; ++x) {
            g.swap_a[g.nswap] = pair_index(x, i, m);
            g.swap_b[g.nswap] = pair_index(x, i + 1, m);
            ++g.nswap;
        }
        for (int x = i + 2; x < m; ++x) {
            g.swap_a[g.nswap] = pair_index(i, x, m);
            g.swap_b[g.nswap] = pair_index(i + 1, x, m);
            ++g.nswap;
        }
        g.flip = pair_index(i, i + 1, m);
        gens.push_back(g);
    }
    return gens;
}

std::uint32_t apply_generator(std::uint32_t code, const Generator& g) {
    std::uint32_t out = code;
    for (int s = 0; s < g.nswap; ++s) {
        std::uint32_t x = ((out >> g.swap_a[s]) ^ (out >> g.swap_b[s])) & 1u;
        out ^= (x << g.swap_a[s]) | (x << g.swap_b[s]);
    }
    out ^= std::uint32_t{1} << g.flip;
    return out;
}

// Key under which "minimal" is decided: the arc-bit string read MSB-first.
std::uint32_t string_order_key(std::uint32_t lsb_code, int nbits) {
    std::uint32_t rev = 0;
    for (int k = 0; k < nbits; ++k) rev = (rev << 1) | ((lsb_code >> k) & 1u);
    return rev;
}

const std::uint32_t* build_table(int m) {
    int nbits = pair_count(m);
    std::size_t count = std::size_t{1} << nbits;
    auto* table = new std::uint32_t[count];
    std::vector<bool> visited(count, false);
    auto gens = build_generators(m);
    std::vector<std::uint32_t> orbit, queue;
    for (std::uint32_t seed = 0; seed < count; ++seed) {
        if (visited[seed]) continue;
        orbit.clear();
        queue.clear();
        queue.push_back(seed);
        visited[seed] = true;
        std::uint32_t min_code = seed;
        std::uint32_t min_key = string_order_key(seed, nbits);
        while (!queue.empty()) {
            std::uint32_t c = queue.back();
            queue.pop_back();
            orbit.push_back(c);
            for (const auto& g : gens) {
                std::uint32_t d = apply_generator(c, g);
                if (!visited[d]) {
                    visited[d] = true;
                    queue.push_back(d);
                    std::uint32_t key = string_order_key(d, nbits);
                    if (key < min_key) { min_key = key; min_code = d; }
                }
            }
        }
        for (std::uint32_t c : orbit) table[c] = min_code;
    }
    return table;
}

std::atomic<const std::uint32_t*> g_tables[kTableMax + 1] = {};
std::mutex g_table_mutex;

}  // namespace

namespace detail {

std::uint32_t pack_lsb(const Tournament& t) {
    std::uint32_t code = 0;
    int k = 0;
    int n = t.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (t.arc(i, j)) code |= std::uint32_t{1} << k;
    return code;
}

std::uint32_t pack_lsb_subset(const Tournament& t, const int* verts, int k) {
    std::uint32_t code = 0;
    int b = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++b)
            if (t.arc(verts[i], verts[j])) code |= std::uint32_t{1} << b;
    return code;
}

const std::uint32_t* canon_table(int m) {
    if (m < 1 || m > kTableMax)
        throw std::invalid_argument("canonical table size out of range");
    const std::uint32_t* t = g_tables[m].load(std::memory_order_acquire);
    if (t) return t;
    std::lock_guard<std::mutex> lock(g_table_mutex);
    t = g_tables[m].load(std::memory_order_relaxed);
    if (!t) {
        t = build_table(m);
        g_tables[m].store(t, std::memory_order_release);
    }
    return t;
}

CanonicalCode canonical_from_lsb(int m, std::uint32_t lsb) {
    std::uint32_t canon = canon_table(m)[lsb];
    CanonicalCode c;
    c.n = static_cast<std::uint8_t>(m);
    int nbits = pair_count(m);
    for (int k = 0; k < nbits; ++k)
        if ((canon >> k) & 1) c.w[0] |= std::uint64_t{1} << (63 - k);
    return c;
}

CanonicalCode canonical_search(const Tournament& t) {
    CanonSearch s;
    s.run(t);
    CanonicalCode c;
    c.n = static_cast<std::uint8_t>(t.size());
    c.w = s.best;
    return c;
}

}  // namespace detail

CanonicalCode canonical_form(const Tournament& t, int max_n) {
    if (t.size() > max_n)
        throw std::invalid_argument("canonicalization bound exceeded: n=" +
                                    std::to_string(t.size()) + " > " +
                                    std::to_string(max_n));
    if (t.size() <= kTableMax)
        return detail::canonical_from_lsb(t.size(), detail::pack_lsb(t));
    return detail::canonical_search(t);
}

bool are_isomorphic(const Tournament& a, const Tournament& b, int max_n) {
    if (a.size() != b.size()) return false;
    int n = a.size();
    if (n > max_n)
        throw std::invalid_argument("canonicalization bound exceeded: n=" +
                                    std::to_string(n) + " > " + std::to_string(max_n));
    if (n <= kTableMax) {
        const std::uint32_t* table = detail::canon_table(n);
        return table[detail::pack_lsb(a)] == table[detail::pack_lsb(b)];
    }
    // Cheap invariant screen before the permutation search.
    std::array<int, kMaxVertices> da{}, db{};
    for (int v = 0; v < n; ++v) { da[v] = a.out_degree(v); db[v] = b.out_degree(v); }
    std::sort(da.begin(), da.begin() + n);
    std::sort(db.begin(), db.begin() + n);
    for (int v = 0; v < n; ++v)
        if (da[v] != db[v]) return false;
    return detail::canonical_search(a) == detail::canonical_search(b);
}

bool is_self_dual(const Tournament& t, int max_n) {
    return are_isomorphic(t, dual(t), max_n);
}

}  // namespace tk
