#include "tk/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "tk/errors.hpp"
#include "tk/shape.hpp"

namespace tk {

Partition Partition::from_blocks(std::vector<VertexSet> blocks, int n) {
    VertexSet seen = 0;
    for (VertexSet b : blocks) {
        if (b == 0) throw std::invalid_argument("partition block is empty");
        if (b & seen) throw std::invalid_argument("partition blocks overlap");
        seen |= b;
    }
    if (seen != full_set(n))
        throw std::invalid_argument("partition does not cover the vertex set");
    std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    Partition p;
    p.blocks = std::move(blocks);
    return p;
}

std::string Partition::to_string() const {
    std::string out;
    for (VertexSet b : blocks) {
        if (!out.empty()) out += '|';
        out += set_to_string(b);
    }
    return out;
}

bool is_interval(const Tournament& t, VertexSet i) {
    int n = t.size();
    if (i & ~full_set(n)) throw std::invalid_argument("vertex out of range");
    for (VertexSet rest = full_set(n) & ~i; rest;) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        VertexSet r = t.out_set(x) & i;
        if (r != 0 && r != i) return false;
    }
    return true;
}

VertexSet interval_closure(const Tournament& t, int a, int b) {
    int n = t.size();
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("vertex out of range");
    VertexSet s = vbit(a) | vbit(b);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexSet rest = full_set(n) & ~s; rest;) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            VertexSet r = t.out_set(x) & s;
            if (r != 0 && r != s) {
                s |= vbit(x);
                changed = true;
            }
        }
    }
    return s;
}

std::vector<VertexSet> all_intervals(const Tournament& t) {
    int n = t.size();
    std::set<VertexSet> found;
    for (int v = 0; v < n; ++v) found.insert(vbit(v));
    found.insert(full_set(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) found.insert(interval_closure(t, a, b));
    std::vector<VertexSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](VertexSet x, VertexSet y) {
        int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    return out;
}

bool is_decomposable(const Tournament& t) {
    int n = t.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (set_size(interval_closure(t, a, b)) < n) return true;
    return false;
}

bool is_indecomposable(const Tournament& t) { return !is_decomposable(t); }

std::vector<VertexSet> strong_intervals(const Tournament& t) {
    std::vector<VertexSet> intervals = all_intervals(t);
    std::vector<VertexSet> strong;
    for (VertexSet i : intervals) {
        bool ok = true;
        for (VertexSet y : intervals) {
            if ((i & y) == 0) continue;
            if ((i & y) == i || (i & y) == y) continue;  // nested either way
            ok = false;
            break;
        }
        if (ok) strong.push_back(i);
    }
    return strong;
}

Partition gallai_partition(const Tournament& t) {
    int n = t.size();
    if (n < 2) throw std::invalid_argument("gallai partition needs n >= 2");
    std::vector<VertexSet> strong = strong_intervals(t);
    std::vector<VertexSet> blocks;
    for (VertexSet i : strong) {
        if (i == full_set(n)) continue;
        bool maximal = true;
        for (VertexSet j : strong) {
            if (j == full_set(n) || j == i) continue;
            if ((i & j) == i) { maximal = false; break; }  // i strictly inside j
        }
        if (maximal) blocks.push_back(i);
    }
    return Partition::from_blocks(std::move(blocks), n);
}

Tournament quotient(const Tournament& t, const Partition& p) {
    for (VertexSet b : p.blocks)
        if (!is_interval(t, b))
            throw std::invalid_argument("quotient: block {" + set_to_string(b) +
                                        "} is not an interval");
    int m = static_cast<int>(p.blocks.size());
    std::string bits(static_cast<size_t>(pair_count(m)), '0');
    int k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++k) {
            int a = std::countr_zero(p.blocks[static_cast<size_t>(i)]);
            int b = std::countr_zero(p.blocks[static_cast<size_t>(j)]);
            bits[static_cast<size_t>(k)] = t.arc(a, b) ? '1' : '0';
        }
    return make_tournament(m, bits);
}

std::vector<VertexSet> scc_order(const Tournament& t) {
    int n = t.size();
    std::array<VertexSet, kMaxVertices> reach{};
    for (int v = 0; v < n; ++v) reach[v] = vbit(v) | t.out_set(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            VertexSet r = reach[v];
            for (VertexSet m = r; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                r |= reach[u];
            }
            if (r != reach[v]) { reach[v] = r; changed = true; }
        }
    }
    std::vector<VertexSet> sccs;
    VertexSet assigned = 0;
    for (int v = 0; v < n; ++v) {
        if (assigned & vbit(v)) continue;
        VertexSet comp = 0;
        for (int u = 0; u < n; ++u)
            if ((reach[v] & vbit(u)) && (reach[u] & vbit(v))) comp |= vbit(u);
        sccs.push_back(comp);
        assigned |= comp;
    }
    std::sort(sccs.begin(), sccs.end(), [&](VertexSet a, VertexSet b) {
        return std::popcount(reach[std::countr_zero(a)]) >
               std::popcount(reach[std::countr_zero(b)]);
    });
    return sccs;
}

bool is_strongly_connected(const Tournament& t) { return scc_order(t).size() == 1; }

Partition tilde_partition(const Tournament& t) {
    int n = t.size();
    if (n < 2) throw std::invalid_argument("tilde partition needs n >= 2");
    Partition p = gallai_partition(t);
    if (is_strongly_connected(t)) return p;
    Tournament q = quotient(t, p);
    if (!is_transitive(q))
        throw TheoremViolation("quotient of a non-strongly-connected tournament "
                               "is not transitive: " + to_tk_line(t));
    // Order blocks by quotient domination, then merge singleton runs.
    int m = q.size();
    std::vector<int> order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<size_t>(q.out_degree(i))] = i;
    std::reverse(order.begin(), order.end());  // score m-1 dominates all
    std::vector<VertexSet> merged;
    VertexSet run = 0;
    for (int idx : order) {
        VertexSet b = p.blocks[static_cast<size_t>(idx)];
        if (set_size(b) == 1) {
            run |= b;
        } else {
            if (run) merged.push_back(run);
            run = 0;
            merged.push_back(b);
        }
    }
    if (run) merged.push_back(run);
    return Partition::from_blocks(std::move(merged), n);
}

std::pair<VertexSet, VertexSet> outside_split(const Tournament& t, VertexSet i) {
    if (i == 0) throw std::invalid_argument("outside_split: empty interval");
    if (!is_interval(t, i))
        throw std::invalid_argument("outside_split: {" + set_to_string(i) +
                                    "} is not an interval");
    int rep = std::countr_zero(i);
    VertexSet plus = 0, minus = 0;
    for (VertexSet rest = full_set(t.size()) & ~i; rest;) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        if (t.arc(rep, x)) plus |= vbit(x);
        else minus |= vbit(x);
    }
    return {plus, minus};
}

ExtReport ext_partition(const Tournament& t, VertexSet x) {
    int n = t.size();
    if (x & ~full_set(n)) throw std::invalid_argument("vertex out of range");
    if (set_size(x) < 3)
        throw std::invalid_argument("ext_partition needs |X| >= 3");
    if (is_decomposable(restrict_to(t, x)))
        throw std::invalid_argument("ext_partition: T[X] must be indecomposable");
    std::vector<int> xv = set_vertices(x);
    ExtReport report;
    for (VertexSet rest = full_set(n) & ~x; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        Tournament sub = restrict_to(t, x | vbit(v));
        int categories = 0;
        if (is_indecomposable(sub)) {
            report.ext |= vbit(v);
            ++categories;
        }
        VertexSet r = t.out_set(v) & x;
        if (r == 0 || r == x) {
            report.bracket |= vbit(v);
            ++categories;
        }
        for (int u : xv) {
            // {u,v} an interval of T[X u {v}]: every w in X\{u} uniform on it.
            bool ok = true;
            for (int w : xv) {
                if (w == u) continue;
                if (t.arc(w, u) != t.arc(w, v)) { ok = false; break; }
            }
            if (ok) {
                report.slots[u] |= vbit(v);
                ++categories;
            }
        }
        if (categories != 1)
            throw TheoremViolation("outside vertex " + std::to_string(v) +
                                   " fits " + std::to_string(categories) +
                                   " categories for X={" + set_to_string(x) +
                                   "} in " + to_tk_line(t));
    }
    return report;
}

namespace {

VertexSet moon_exhaustive(const Tournament& t, int x, int k) {
    int n = t.size();
    // Lexicographically first k-subset containing x that induces a strongly
    // connected subtournament.
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != x) others.push_back(v);
    std::vector<int> idx(static_cast<size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) idx[static_cast<size_t>(i)] = i;
    int m = static_cast<int>(others.size());
    while (true) {
        VertexSet s = vbit(x);
        for (int i : idx) s |= vbit(others[static_cast<size_t>(i)]);
        if (is_strongly_connected(restrict_to(t, s))) return s;
        int i = k - 2;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - (k - 1) + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k - 1; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    throw TheoremViolation("no strongly connected " + std::to_string(k) +
                           "-set through vertex " + std::to_string(x) + " in " +
                           to_tk_line(t));
}

}  // namespace

VertexSet moon_extend(const Tournament& t, int x, int k) {
    int n = t.size();
    if (x < 0 || x >= n) throw std::invalid_argument("vertex out of range");
    if (n < 3 || k < 3 || k > n)
        throw std::invalid_argument("moon_extend needs 3 <= k <= n, n >= 3");
    if (!is_strongly_connected(t))
        throw std::invalid_argument("moon_extend needs a strongly connected tournament");

    // Seed: smallest cyclic triple through x.
    VertexSet s = 0;
    for (int a = 0; a < n && !s; ++a) {
        if (a == x) continue;
        for (int b = a + 1; b < n; ++b) {
            if (b == x) continue;
            Tournament tri = restrict_to(t, vbit(x) | vbit(a) | vbit(b));
            if (!is_transitive(tri)) {
                s = vbit(x) | vbit(a) | vbit(b);
                break;
            }
        }
    }
    if (!s) return moon_exhaustive(t, x, k);

    while (set_size(s) < k) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (s & vbit(v)) continue;
            VertexSet r = t.out_set(v) & s;
            if (r != 0 && r != s) { pick = v; break; }
        }
        if (pick >= 0) {
            s |= vbit(pick);
            continue;
        }
        if (k - set_size(s) >= 2) {
            // Outside splits into dominated (D) and dominating (U); an arc
            // d -> u restores strong connectivity when both are added.
            bool stepped = false;
            for (int d = 0; d < n && !stepped; ++d) {
                if ((s & vbit(d)) || (t.out_set(d) & s) != 0) continue;
                for (int u = 0; u < n; ++u) {
                    if ((s & vbit(u)) || (t.out_set(u) & s) != s) continue;
                    if (t.arc(d, u)) {
                        s |= vbit(d) | vbit(u);
                        stepped = true;
                        break;
                    }
                }
            }
            if (stepped) continue;
        }
        return moon_exhaustive(t, x, k);
    }
    if (!is_strongly_connected(restrict_to(t, s))) return moon_exhaustive(t, x, k);
    return s;
}

std::pair<int, int> indec_extend_pair(const Tournament& t, VertexSet x) {
    int n = t.size();
    if (x & ~full_set(n)) throw std::invalid_argument("vertex out of range");
    if (is_decomposable(t))
        throw std::invalid_argument("indec_extend_pair needs an indecomposable tournament");
    if (set_size(x) < 3 || n - set_size(x) < 2)
        throw std::invalid_argument("indec_extend_pair needs |X| >= 3 and |V\\X| >= 2");
    if (is_decomposable(restrict_to(t, x)))
        throw std::invalid_argument("indec_extend_pair: T[X] must be indecomposable");
    std::vector<int> outside = set_vertices(full_set(n) & ~x);
    for (size_t i = 0; i < outside.size(); ++i)
        for (size_t j = i + 1; j < outside.size(); ++j) {
            VertexSet ext = x | vbit(outside[i]) | vbit(outside[j]);
            if (is_indecomposable(restrict_to(t, ext)))
                return {outside[i], outside[j]};
        }
    throw TheoremViolation("no indecomposable 2-extension of X={" +
                           set_to_string(x) + "} in " + to_tk_line(t));
}

}  // namespace tk
