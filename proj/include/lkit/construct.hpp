#pragma once

#include <utility>

#include "lkit/front.hpp"

namespace lkit {

/// The minimal unknot front [L0 R0]: tb = -1, rotation 0.
FrontWord flying_saucer();

/// The saucer with `up` up-zigzags and `down` down-zigzags stacked on the
/// seed strand: tb = -1 - up - down, rotation = down - up under the
/// canonical orientation.
FrontWord standard_unknot(int up, int down);

/// Splices k1's final right cusp to k2's initial left cusp by dropping both
/// events and concatenating. Exact bookkeeping: crossings add,
/// right cusps add minus one, so tb(result) = tb(k1) + tb(k2) + 1.
/// Errors: MultiComponent.
FrontWord connected_sum(const FrontWord& k1, const FrontWord& k2);

/// Cuts at event boundary t where exactly two strands are alive, closing the
/// left part with a right cusp and opening the right part with a left cusp.
/// Inverse of connected_sum at the splice boundary.
/// Errors: BadCutWidth, DisconnectedPiece.
std::pair<FrontWord, FrontWord> split_at(const FrontWord& f, int t);

}  // namespace lkit
