#pragma once

#include <vector>

#include "lkit/front.hpp"

namespace lkit {

/// One crossing of the underlying topological diagram. Arcs are the pieces
/// of the knot between consecutive crossing passages; each arc id occurs at
/// exactly two endpoint slots. Every front crossing has the same local
/// picture: the over strand descends from the upper-left (nw) endpoint to
/// the lower-right (se), the under strand ascends from sw to ne. The
/// over/under fields are the same four arcs ordered by the traversal
/// direction instead of by position.
struct PDCrossing {
    int nw, ne, sw, se;
    int over_in, over_out;
    int under_in, under_out;
    int sign;
};

struct PDCode {
    std::vector<PDCrossing> crossings;
    int arcs = 0;
    int writhe = 0;
};

/// Smooths the cusps away and assigns arc ids by walking the knot once from
/// the canonical start (the upper strand of the first left cusp, heading
/// right), cutting the curve at every crossing passage.
/// Errors: MultiComponent.
PDCode to_diagram(const FrontWord& f);

}  // namespace lkit
