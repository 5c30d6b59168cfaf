#include "tk/diamonds.hpp"

#include <bit>
#include <stdexcept>

#include "tk/errors.hpp"
#include "tk/subsets.hpp"

namespace tk {

namespace {

// Classifies the 4-set as a diamond via its internal score pattern:
// (0,2,2,2) is positive with the 0-scorer as center, (1,1,1,3) negative
// with the 3-scorer as center.
bool classify_four_set(const Tournament& t, const int* verts, DiamondRecord* rec) {
    VertexSet s = 0;
    for (int i = 0; i < 4; ++i) s |= vbit(verts[i]);
    int zero_scorer = -1, three_scorer = -1;
    int zeroes = 0, threes = 0;
    for (int i = 0; i < 4; ++i) {
        int deg = std::popcount(t.out_set(verts[i]) & s);
        if (deg == 0) { zero_scorer = verts[i]; ++zeroes; }
        if (deg == 3) { three_scorer = verts[i]; ++threes; }
    }
    if (zeroes == 1 && threes == 0) {
        rec->verts = s;
        rec->sign = +1;
        rec->center = zero_scorer;
        rec->cycle = s & ~vbit(zero_scorer);
        return true;
    }
    if (threes == 1 && zeroes == 0) {
        rec->verts = s;
        rec->sign = -1;
        rec->center = three_scorer;
        rec->cycle = s & ~vbit(three_scorer);
        return true;
    }
    return false;
}

}  // namespace

std::vector<DiamondRecord> diamond_records(const Tournament& t) {
    std::vector<DiamondRecord> out;
    int n = t.size();
    if (n < 4) return out;
    detail::for_each_combination(n, 4, [&](const int* verts) {
        DiamondRecord rec;
        if (classify_four_set(t, verts, &rec)) out.push_back(rec);
    });
    return out;  // combination order is sorted-verts order already
}

std::pair<int, int> center_counts(const Tournament& t, int x) {
    if (x < 0 || x >= t.size()) throw std::invalid_argument("vertex out of range");
    int plus = 0, minus = 0;
    for (const auto& rec : diamond_records(t)) {
        if (rec.center != x) continue;
        (rec.sign > 0 ? plus : minus)++;
    }
    return {plus, minus};
}

bool embeds_diamond(const Tournament& t) {
    int n = t.size();
    if (n < 4) return false;
    DiamondRecord rec;
    return !detail::for_each_combination(n, 4, [&](const int* verts) {
        return !classify_four_set(t, verts, &rec);
    });
}

PairDiamondStats pair_stats(const Tournament& t, int x, int y) {
    int n = t.size();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("vertex out of range");
    if (x == y) throw std::invalid_argument("pair_stats needs two distinct vertices");
    PairDiamondStats stats;
    for (int w = 0; w < n; ++w) {
        if (w == x || w == y) continue;
        Tournament tri = restrict_to(t, vbit(x) | vbit(y) | vbit(w));
        // cyclic iff all three internal scores are 1
        if (tri.out_degree(0) == 1 && tri.out_degree(1) == 1 && tri.out_degree(2) == 1) {
            stats.cycle_mates |= vbit(w);
            stats.per_mate[w] = {0, 0};
        }
    }
    VertexSet pair = vbit(x) | vbit(y);
    for (const auto& rec : diamond_records(t)) {
        bool has_pair = (rec.verts & pair) == pair;
        if (has_pair) {
            (rec.sign > 0 ? stats.through_pair_plus : stats.through_pair_minus)++;
            if ((rec.cycle & pair) == pair) {
                (rec.sign > 0 ? stats.d_plus_cycle : stats.d_minus_cycle)++;
                int w = std::countr_zero(rec.cycle & ~pair);
                auto& pm = stats.per_mate[w];
                (rec.sign > 0 ? pm.first : pm.second)++;
            }
        }
        if ((rec.verts & vbit(x)) && rec.center == y)
            (rec.sign > 0 ? stats.centered_at_y_plus : stats.centered_at_y_minus)++;
    }
    // The cycle-count identity: totals decompose over cycle mates.
    int sum_plus = 0, sum_minus = 0;
    for (const auto& [w, pm] : stats.per_mate) {
        sum_plus += pm.first;
        sum_minus += pm.second;
    }
    if (sum_plus != stats.d_plus_cycle || sum_minus != stats.d_minus_cycle)
        throw TheoremViolation("pair diamond counts do not decompose over cycle mates");
    return stats;
}

}  // namespace tk
