#pragma once

#include <vector>

#include "lkit/front.hpp"

namespace lkit {

/// Connectivity analysis of a word's strand pieces: who is born and dies
/// where, which sibling a piece meets at each cusp tip, and which pieces
/// carry each crossing. Shared by orientation, component counting, and
/// diagram extraction.
struct SweepTrace {
    int pieces = 0;                      // 2 * left cusp count
    std::vector<int> birth_event;        // per piece
    std::vector<int> death_event;        // per piece
    std::vector<int> birth_partner;      // sibling joined at the birth tip
    std::vector<int> death_partner;      // sibling joined at the death tip
    std::vector<char> upper_at_birth;    // per piece
    std::vector<char> upper_at_death;    // per piece
    std::vector<int> cross_event;        // per crossing: index into events()
    std::vector<int> over_piece;         // per crossing: descending strand
    std::vector<int> under_piece;        // per crossing: ascending strand
    std::vector<std::vector<int>> piece_crossings;  // crossing ids, x order
    int components = 0;
};

SweepTrace sweep_trace(const FrontWord& f);

}  // namespace lkit
