// families.hpp -- named generators, isomorph-free enumeration, the filtered
// I classes, dilation constructors and the exceptional family they generate

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tk/canonical.hpp"
#include "tk/tournament.hpp"

namespace tk {

/// Default cap on exhaustive class enumeration.
inline constexpr int kDefaultEnumBound = 10;

enum class NamedTournament { o_n, almost_transitive, c3, c4, delta_plus, delta_minus };

/// The fixed labeled representative of a named shape.  n must agree with
/// the name (c3 => 3, c4 and the diamonds => 4, almost_transitive => >= 3).
Tournament gen_named(NamedTournament name, int n);

/// One canonical code per isomorphism class at a fixed vertex count.
struct Catalog {
    int n = 1;
    std::vector<CanonicalCode> codes;  // strictly increasing

    bool operator==(const Catalog&) const = default;
};

/// Which vertex of the canonically labeled tournament is deleted to name a
/// class's parent during enumeration.  The two rules must produce identical
/// catalogs; the second exists as a cross-check.
enum class ParentRule { delete_highest, delete_lowest };

/// Exhaustive isomorph-free enumeration by canonical augmentation: an
/// extension of an (n-1)-class is accepted iff that class is the canonical
/// parent of the extension's class.  Deterministic output for any worker
/// count.
Catalog enumerate_canonical(int n, ParentRule rule = ParentRule::delete_highest,
                            int max_n = kDefaultEnumBound);

/// Catalog members that are indecomposable, not self dual, and {p}-self
/// dual for every p in P (negative p meaning co-cardinality |p|).
std::vector<CanonicalCode> class_I(int n, const std::set<int>& P, const Catalog& catalog);

enum class DilationShape { c3, o2, o3 };

/// Every class obtained by dilating one vertex of the shape by the given
/// part (all vertex choices, deduplicated by canonical code).
std::vector<Tournament> dilate_into(DilationShape shape, const Tournament& part);

struct OmegaMember {
    CanonicalCode code;
    std::string provenance;  // constructors that produced it, e.g. "C3+O3"

    bool operator==(const OmegaMember&) const = default;
};

struct OmegaReport {
    int m = 0;
    std::vector<CanonicalCode> i_small;  // the {-1,-2,-3} class at m-2
    std::vector<CanonicalCode> i_big;    // the {-2,-3} class at m-1
    std::vector<OmegaMember> members;    // sorted by code
    std::string note;

    bool operator==(const OmegaReport&) const = default;
};

/// The union of the three dilation families over the two I classes, with
/// per-member provenance.  Requires m >= 8 and catalogs at m-2 and m-1.
/// Re-asserts that every member is decomposable with an interval X such
/// that T[X] is indecomposable and at most two vertices lie outside X.
OmegaReport omega(int m, const Catalog& cat_small, const Catalog& cat_big);

/// Uniform random arc bits from a seeded mt19937_64 (one bit per pair,
/// drawn LSB-first from successive 64-bit outputs).
Tournament random_tournament(int n, std::uint64_t seed);

/// Random lexicographic sum with a non-trivial shape, hence always
/// decomposable.  Requires n >= 3.
Tournament random_decomposable(int n, std::uint64_t seed);

}  // namespace tk
