// hypomorphy.hpp -- subset-wise isomorphy tests, embedding counts, the
// self-duality ladder, and the exhaustive triple-hypomorph search

#pragma once

#include <map>
#include <set>
#include <vector>

#include "tk/canonical.hpp"
#include "tk/tournament.hpp"

namespace tk {

/// Which subset sizes to compare: a positive entry p means all p-subsets, a
/// negative entry -k all subsets of co-cardinality k (delete-k).
struct HypoSpec {
    std::set<int> entries;

    static HypoSpec exactly(int p) { return {{p}}; }
    static HypoSpec minus(int k) { return {{-k}}; }
    static HypoSpec upto(int k) {
        HypoSpec s;
        for (int i = 1; i <= k; ++i) s.entries.insert(i);
        return s;
    }

    /// Normalized, deduplicated subset sizes for vertex count n.  Throws on
    /// a zero entry or one out of range for n.
    std::vector<int> subset_sizes(int n) const;
};

/// True iff for every entry and every qualifying subset X, T[X] and U[X]
/// are isomorphic.  Exhaustive over subsets; both tournaments must share a
/// vertex count.
bool hypomorphic(const Tournament& t, const Tournament& u, const HypoSpec& spec);

/// All supersets X of f with restrict_to(t, X) isomorphic to h (so
/// |X| = |h|), and their number.
std::vector<VertexSet> embed_sets(const Tournament& t, const Tournament& h, VertexSet f);
int embed_count(const Tournament& t, const Tournament& h, VertexSet f);

/// {-k}-self-duality, the hot special case of hypomorphic(t, dual(t), ...).
bool minus_k_self_dual(const Tournament& t, int k);

struct SelfDualProfile {
    int n = 0;
    int max_k = 0;
    std::map<int, bool> minus_k;  // k -> {-k}-self dual, k = 1..max_k
    bool upto_max_k = false;      // every subset of size <= max_k self dual
    bool self_dual = false;
    bool strongly_self_dual = false;  // every induced subtournament self dual
};

SelfDualProfile self_dual_profile(const Tournament& t, int max_k);

/// Every labeled tournament on t's vertex set whose triples all induce
/// subtournaments isomorphic to t's.  Exhaustive scan over all labeled
/// candidates; n must stay within max_n (2^(n(n-1)/2) candidates).
std::vector<Tournament> three_hypomorphs(const Tournament& t, int max_n = 7);

struct CombLemmaResult {
    bool hypothesis_holds = false;
    /// Evaluated only when the hypothesis holds; vacuously true otherwise.
    bool conclusion_holds = true;
    bool equality_applicable = false;  // ground_n >= 2p + r
    bool sets_equal = true;

    bool ok() const {
        return !hypothesis_holds ||
               (conclusion_holds && (!equality_applicable || sets_equal));
    }
};

/// For two families u1, u2 of p-subsets of {0..ground_n-1}: decides whether
/// every (p+r)-subset contains equally many members of each family, and if
/// so verifies that every pair P' <= Q' with |Q' \ P'| >= p+r sandwiches
/// equally many members, and that the families coincide outright when
/// ground_n >= 2p + r.
CombLemmaResult combinatorial_lemma_check(int ground_n,
                                          const std::vector<VertexSet>& u1,
                                          const std::vector<VertexSet>& u2,
                                          int p, int r);

}  // namespace tk
