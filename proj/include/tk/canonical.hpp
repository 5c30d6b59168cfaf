// canonical.hpp -- canonical labeling, isomorphism and self-duality tests

#pragma once

#include <cstdint>
#include <string>

#include "tk/tournament.hpp"

namespace tk {

/// Default cap on canonicalization size.  The pruned permutation search
/// degrades sharply past this; callers may raise it explicitly.
inline constexpr int kDefaultCanonBound = 12;

/// The lexicographically minimal arc-bit sequence of a tournament over all
/// vertex relabelings.  Equal codes <=> isomorphic tournaments.
struct CanonicalCode {
    std::uint8_t n = 1;
    std::array<std::uint64_t, 2> w{0, 0};

    auto operator<=>(const CanonicalCode&) const = default;
    std::string hex() const { return ArcCode{n, w}.hex(); }
    ArcCode as_code() const { return ArcCode{n, w}; }
};

/// Minimal arc-bit code over all n! relabelings, found by an ordered-cell
/// refinement search (cells split on in/out neighbourhoods; branches pruned
/// against the best code so far).  Throws std::invalid_argument when
/// t.size() exceeds max_n.
CanonicalCode canonical_form(const Tournament& t, int max_n = kDefaultCanonBound);

/// True iff the two tournaments are isomorphic; false for unequal sizes.
bool are_isomorphic(const Tournament& a, const Tournament& b,
                    int max_n = kDefaultCanonBound);

/// True iff t is isomorphic to its dual.
bool is_self_dual(const Tournament& t, int max_n = kDefaultCanonBound);

namespace detail {

/// LSB-first packing of arc bits (bit k of the pair sequence at integer bit
/// k); the indexing scheme of the small-size canonical tables.
std::uint32_t pack_lsb(const Tournament& t);

/// Subtournament arc bits, LSB-first, for the k listed vertices
/// (increasing).  No bounds checks; hot-loop helper.
std::uint32_t pack_lsb_subset(const Tournament& t, const int* verts, int k);

/// Table mapping every LSB-packed m-vertex arc code to the LSB packing of
/// its class's canonical form (the lexicographically minimal member).
/// Built lazily per size; m <= 7.  Thread-safe.
const std::uint32_t* canon_table(int m);

/// Canonical code of an LSB-packed m-vertex code via the table,
/// returned in the MSB-first CanonicalCode form.
CanonicalCode canonical_from_lsb(int m, std::uint32_t lsb);

/// The refinement search itself, bypassing the small-size tables.  Exposed
/// so tests can cross-check the two paths against each other.
CanonicalCode canonical_search(const Tournament& t);

}  // namespace detail

}  // namespace tk
