// tournament.hpp -- the tournament value type and its elementary operations

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tk {

/// Hard upper bound on vertex counts handled by this library.  Everything is
/// sized for small exhaustive work; vertex sets fit in one machine word.
inline constexpr int kMaxVertices = 16;

/// A set of vertices as a bitmask (bit v = vertex v present).
using VertexSet = std::uint32_t;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) { return (VertexSet{1} << n) - 1; }
int set_size(VertexSet s);
std::vector<int> set_vertices(VertexSet s);
VertexSet make_set(const std::vector<int>& verts);
std::string set_to_string(VertexSet s);  // "0,2,5"

/// Packed arc bits of a tournament: one bit per unordered pair (i,j), i < j,
/// in lexicographic pair order (0,1),(0,2),...,(n-2,n-1); bit = 1 means
/// i -> j.  Bit k of the sequence is stored MSB-first (bit k lives in
/// w[k/64] at position 63 - k%64), so lexicographic comparison of the bit
/// sequence is plain word comparison.
struct ArcCode {
    std::uint8_t n = 1;
    std::array<std::uint64_t, 2> w{0, 0};

    auto operator<=>(const ArcCode&) const = default;
    bool bit(int k) const { return (w[k >> 6] >> (63 - (k & 63))) & 1; }
    void set_bit(int k) { w[k >> 6] |= std::uint64_t{1} << (63 - (k & 63)); }
    std::string hex() const;  // lowercase, tail zero-padded to nibbles
    static ArcCode from_hex(int n, std::string_view hex);
};

/// Number of arc bits of an n-vertex tournament.
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Row-major index of pair (i,j), i < j.
inline int pair_index(int i, int j, int n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// A tournament on vertices 0..n-1: a complete antisymmetric orientation of
/// all pairs.  Stored as per-vertex out-neighbour masks; completeness is a
/// structural invariant maintained by every mutator.  Cheap to copy, safe to
/// share; all operations on it are pure.
class Tournament {
  public:
    /// The one-vertex tournament.
    Tournament() = default;

    /// Tournament with n vertices, all arcs low -> high (the linear order).
    static Tournament linear(int n);

    int size() const { return n_; }

    /// True iff u -> v.  u != v required.
    bool arc(int u, int v) const { return (out_[u] >> v) & 1; }

    /// Vertices dominated by v.
    VertexSet out_set(int v) const { return out_[v]; }
    /// Vertices dominating v.
    VertexSet in_set(int v) const { return full_set(n_) & ~out_[v] & ~vbit(v); }

    int out_degree(int v) const;

    /// Orient the pair {u,v} as u -> v.
    void orient(int u, int v);

    bool operator==(const Tournament&) const = default;

    ArcCode code() const;
    std::string bit_string() const;  // "101..." in pair order

  private:
    int n_ = 1;
    std::array<std::uint16_t, kMaxVertices> out_{};

    friend Tournament make_tournament(int n, std::string_view arc_bits);
    friend Tournament from_code(const ArcCode& code);
};

/// Builds a tournament from its arc-bit string ("101" for the labeled
/// 3-cycle 0->1, 2->0, 1->2).  Throws std::invalid_argument on a length
/// mismatch, n < 1 or n > kMaxVertices, or a character other than 0/1.
Tournament make_tournament(int n, std::string_view arc_bits);

/// Inverse of Tournament::code().
Tournament from_code(const ArcCode& code);

/// Every arc reversed; an involution.
Tournament dual(const Tournament& t);

/// Subtournament induced by X, vertices relabeled 0..|X|-1 in increasing
/// original order.  X must be non-empty and within range.
Tournament restrict_to(const Tournament& t, VertexSet x);

/// Lexicographic sum: vertex x of the shape H is replaced by parts[x], the
/// blocks laid out consecutively in H's vertex order.  Between blocks the
/// orientation comes from H, so each block is an interval of the result.
Tournament lex_sum(const Tournament& shape, const std::vector<Tournament>& parts);

/// Single-line text form "n=<N> bits=<HEX>" and its parser (the .tk format).
std::string to_tk_line(const Tournament& t);
Tournament parse_tk_line(std::string_view line);

}  // namespace tk
