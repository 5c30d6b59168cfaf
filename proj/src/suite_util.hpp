// suite_util.hpp -- shared machinery for the verification suites (internal)

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tk/canonical.hpp"
#include "tk/decomposition.hpp"
#include "tk/families.hpp"
#include "tk/hypomorphy.hpp"
#include "tk/report.hpp"
#include "tk/suites.hpp"
#include "tk/tournament.hpp"

namespace tk::suite {

inline Tournament random_labeled(std::mt19937_64& rng, int n) {
    std::string bits(static_cast<size_t>(pair_count(n)), '0');
    for (auto& c : bits) c = (rng() & 1) ? '1' : '0';
    return make_tournament(n, bits);
}

inline int random_in(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random strongly connected tournament by rejection (the dominant case
/// for n >= 4); falls back to a 3-cycle spine construction.
Tournament random_strongly_connected(std::mt19937_64& rng, int n);

/// A random vertex subset of the given size.
VertexSet random_subset(std::mt19937_64& rng, int n, int size);

/// One block of a structured pair: the tournament placed on a shape vertex.
struct BlockPlan {
    Tournament block;
    bool dualize = false;  // replaced by its dual in the second tournament
};

/// A pair on the same vertex set assembled block-by-block over a common
/// shape.  The second tournament dualizes the flagged blocks; both share
/// every block as an interval and the same quotient, so they are
/// triple-hypomorphic by construction.  Deeper hypomorphy is verified, not
/// assumed, by the suites.
struct StructuredPair {
    Tournament t;
    Tournament u;
    std::vector<VertexSet> blocks;
};

StructuredPair assemble_pair(const Tournament& shape,
                             const std::vector<BlockPlan>& plans);

/// Random block repertoire for pair construction: transitive chains, the
/// 3-cycle, almost transitive tournaments, and occasional random blocks.
Tournament random_block(std::mt19937_64& rng, int size, bool hereditary_bias);

/// Partition of total into h parts >= 1 (uniform cut points).
std::vector<int> random_composition(std::mt19937_64& rng, int total, int h);

/// A structured pair with n vertices over a strongly connected or arbitrary
/// shape; hereditary_bias favours blocks whose dual replacement keeps the
/// pair fully hypomorphic.
StructuredPair random_structured_pair(std::mt19937_64& rng, int n,
                                      bool strongly_connected_shape,
                                      bool hereditary_bias);

/// Exhaustive {p}-hypomorphy / {-k}-hypomorphy between two tournaments.
inline bool pair_hypomorphic(const Tournament& a, const Tournament& b,
                             const HypoSpec& spec) {
    return hypomorphic(a, b, spec);
}

/// Rotational tournament on odd n: x -> x+s (mod n) for s in 1..(n-1)/2.
/// Diamond-free and vertex-transitive; the stock non-transitive example of
/// a tournament without diamonds.
Tournament rotational(int n);

std::string pair_line(const Tournament& t, const Tournament& u);

/// Brute-force isomorphism search restricted to a vertex subset: a mapping
/// from y onto y carrying T[y] onto U[y], if one exists.
std::optional<std::vector<int>> find_subset_isomorphism(const Tournament& t,
                                                        const Tournament& u,
                                                        VertexSet y);

}  // namespace tk::suite
