// shape.hpp -- recognizers for the small named tournament shapes

#pragma once

#include "tk/tournament.hpp"

namespace tk {

/// Mutually exclusive classification of a tournament, resolved in the
/// declaration order below (first matching tag wins).
enum class ShapeTag {
    transitive,
    almost_transitive,
    three_cycle,
    four_cycle,
    diamond_pos,
    diamond_neg,
    other,
};

const char* to_string(ShapeTag tag);

/// True iff no triple induces a 3-cycle; equivalently the scores are a
/// permutation of 0..n-1.
bool is_transitive(const Tournament& t);

/// True iff t is a linear order with the arc between its two extremal
/// vertices reversed (n >= 3).
bool is_almost_transitive(const Tournament& t);

ShapeTag classify_shape(const Tournament& t);

}  // namespace tk
