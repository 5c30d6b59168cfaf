// decomposition.hpp -- intervals, strong intervals, the Gallai partition and
// quotients, strong connectivity, and the constructive extension procedures

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tk/tournament.hpp"

namespace tk {

/// An interval partition candidate: disjoint non-empty blocks covering the
/// vertex set, kept sorted by minimal element.
struct Partition {
    std::vector<VertexSet> blocks;

    /// Validates disjointness, coverage of 0..n-1 and non-emptiness, and
    /// sorts the blocks by minimal element.
    static Partition from_blocks(std::vector<VertexSet> blocks, int n);

    std::string to_string() const;  // blocks joined by '|', e.g. "0|1,2|3"
    bool operator==(const Partition&) const = default;
};

/// Classification of the vertices outside an indecomposable subtournament
/// T[X]: for each x, exactly one of these holds in T[X u {x}] -- it stays
/// indecomposable (ext), X becomes an interval (bracket), or {u,x} becomes
/// an interval for some u in X (slot of u).
struct ExtReport {
    VertexSet ext = 0;
    VertexSet bracket = 0;
    std::map<int, VertexSet> slots;  // only non-empty slots appear
};

/// True iff every vertex outside i relates uniformly to all of i.
/// The empty set, singletons and the full vertex set always qualify.
bool is_interval(const Tournament& t, VertexSet i);

/// Smallest interval containing {a,b}, grown by fixed-point expansion.
VertexSet interval_closure(const Tournament& t, int a, int b);

/// All non-empty intervals: singletons, the full set, and every closure of
/// a pair (which together exhaust the intervals of a tournament).
/// Sorted by (size, mask).
std::vector<VertexSet> all_intervals(const Tournament& t);

bool is_decomposable(const Tournament& t);
bool is_indecomposable(const Tournament& t);

/// Intervals that no other interval overlaps (every interval meeting them
/// nests); includes the singletons and the full set.
std::vector<VertexSet> strong_intervals(const Tournament& t);

/// The maximal strong intervals distinct from the full vertex set.
/// Requires n >= 2.
Partition gallai_partition(const Tournament& t);

/// gallai_partition for strongly connected tournaments; otherwise its
/// blocks of size >= 2 plus maximal runs of consecutive singleton blocks
/// (in quotient order) merged into one block.  Requires n >= 2.
Partition tilde_partition(const Tournament& t);

/// One vertex per block, blocks ordered by minimal element, arcs inherited
/// from representatives.  Every block must be an interval of t.
Tournament quotient(const Tournament& t, const Partition& p);

/// Strongly connected components in domination order: earlier components
/// dominate later ones.
std::vector<VertexSet> scc_order(const Tournament& t);

bool is_strongly_connected(const Tournament& t);

/// For an interval i: the outside vertices dominated by i and those
/// dominating i, in that order.  i must be a non-empty interval.
std::pair<VertexSet, VertexSet> outside_split(const Tournament& t, VertexSet i);

/// Requires |x| >= 3 and T[x] indecomposable.  Classifies every outside
/// vertex; throws TheoremViolation if some vertex fits no category or more
/// than one.
ExtReport ext_partition(const Tournament& t, VertexSet x);

/// A k-vertex superset of {x} inducing a strongly connected subtournament,
/// grown greedily (smallest extension vertex first) with an exhaustive
/// fallback.  Requires t strongly connected, n >= 3, 3 <= k <= n.
VertexSet moon_extend(const Tournament& t, int x, int k);

/// Two vertices outside x whose addition keeps the subtournament
/// indecomposable.  Requires t indecomposable, |x| >= 3, at least two
/// vertices outside x, and T[x] indecomposable.
std::pair<int, int> indec_extend_pair(const Tournament& t, VertexSet x);

}  // namespace tk
