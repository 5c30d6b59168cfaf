// diamonds.hpp -- diamond detection and per-vertex / per-pair counting

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tk/tournament.hpp"

namespace tk {

/// A 4-set inducing a diamond: a 3-cycle uniformly dominating (+1) or
/// dominated by (-1) the fourth vertex, its center.
struct DiamondRecord {
    VertexSet verts = 0;
    int sign = 0;  // +1 or -1
    int center = -1;
    VertexSet cycle = 0;

    bool operator==(const DiamondRecord&) const = default;
};

/// All diamond 4-sets, ordered by sorted vertex set then sign.
std::vector<DiamondRecord> diamond_records(const Tournament& t);

/// (positive, negative) diamonds centered at x.
std::pair<int, int> center_counts(const Tournament& t, int x);

bool embeds_diamond(const Tournament& t);

/// The per-pair counting bundle around two distinct vertices x, y.
struct PairDiamondStats {
    VertexSet cycle_mates = 0;  // w with T[{x,y,w}] a 3-cycle
    int d_plus_cycle = 0;       // diamonds whose cycle contains {x,y}
    int d_minus_cycle = 0;
    std::map<int, std::pair<int, int>> per_mate;  // w -> diamonds with cycle {x,y,w}
    int through_pair_plus = 0;  // diamonds containing both x and y
    int through_pair_minus = 0;
    int centered_at_y_plus = 0;  // diamonds containing x with center y
    int centered_at_y_minus = 0;
};

PairDiamondStats pair_stats(const Tournament& t, int x, int y);

}  // namespace tk
