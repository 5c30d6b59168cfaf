#include "tk/shape.hpp"

#include <array>

#include "tk/canonical.hpp"

namespace tk {

const char* to_string(ShapeTag tag) {
    switch (tag) {
        case ShapeTag::transitive: return "transitive";
        case ShapeTag::almost_transitive: return "almost_transitive";
        case ShapeTag::three_cycle: return "three_cycle";
        case ShapeTag::four_cycle: return "four_cycle";
        case ShapeTag::diamond_pos: return "diamond_pos";
        case ShapeTag::diamond_neg: return "diamond_neg";
        case ShapeTag::other: return "other";
    }
    return "other";
}

namespace {

bool scores_are_permutation(const std::array<int, kMaxVertices>& score, int n) {
    std::array<int, kMaxVertices> seen{};
    for (int v = 0; v < n; ++v) {
        if (score[v] < 0 || score[v] >= n || seen[score[v]]) return false;
        seen[score[v]] = 1;
    }
    return true;
}

}  // namespace

bool is_transitive(const Tournament& t) {
    std::array<int, kMaxVertices> score{};
    int n = t.size();
    for (int v = 0; v < n; ++v) score[v] = t.out_degree(v);
    return scores_are_permutation(score, n);
}

bool is_almost_transitive(const Tournament& t) {
    int n = t.size();
    if (n < 3) return false;
    std::array<int, kMaxVertices> score{};
    for (int v = 0; v < n; ++v) score[v] = t.out_degree(v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            // Scores after reversing the arc between a and b.
            auto s = score;
            if (t.arc(a, b)) { --s[a]; ++s[b]; }
            else { --s[b]; ++s[a]; }
            if (!scores_are_permutation(s, n)) continue;
            int lo = std::min(s[a], s[b]), hi = std::max(s[a], s[b]);
            if (lo == 0 && hi == n - 1) return true;
        }
    return false;
}

ShapeTag classify_shape(const Tournament& t) {
    if (is_transitive(t)) return ShapeTag::transitive;
    int n = t.size();
    if (n >= 3 && is_almost_transitive(t)) return ShapeTag::almost_transitive;
    if (n == 3) return ShapeTag::three_cycle;  // the only non-transitive class
    if (n == 4) {
        const std::uint32_t* table = detail::canon_table(4);
        std::uint32_t cls = table[detail::pack_lsb(t)];
        static const std::uint32_t c4 =
            table[detail::pack_lsb(make_tournament(4, "100111"))];
        static const std::uint32_t dplus =
            table[detail::pack_lsb(make_tournament(4, "101111"))];
        static const std::uint32_t dminus =
            table[detail::pack_lsb(make_tournament(4, "010000"))];
        if (cls == c4) return ShapeTag::four_cycle;
        if (cls == dplus) return ShapeTag::diamond_pos;
        if (cls == dminus) return ShapeTag::diamond_neg;
    }
    return ShapeTag::other;
}

}  // namespace tk
