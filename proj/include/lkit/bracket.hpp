#pragma once

#include "lkit/diagram.hpp"
#include "lkit/front.hpp"
#include "lkit/laurent.hpp"

namespace lkit {

inline constexpr int kDefaultCrossingLimit = 16;

/// Kauffman bracket by the full state sum: every crossing is resolved with
/// the A smoothing (strands pass without swapping) or the B smoothing
/// (left endpoints capped together, right endpoints cupped), and a state
/// with a A-resolutions, b B-resolutions and k loops contributes
/// A^(a-b) * delta^(k-1). Loops are counted with a union-find over arcs.
/// Errors: TooManyCrossings when the diagram exceeds max_crossings.
LaurentPoly bracket(const PDCode& d, int max_crossings = kDefaultCrossingLimit);

/// Single-threaded reference state sum.
LaurentPoly bracket_serial(const PDCode& d, int max_crossings = kDefaultCrossingLimit);

/// OpenMP state sum over block-partitioned state masks; exact polynomial
/// addition makes the merge order irrelevant, so the result is identical to
/// the serial one for any thread count. threads = 0 picks the OpenMP default.
LaurentPoly bracket_parallel(const PDCode& d, int max_crossings = kDefaultCrossingLimit,
                             int threads = 0);

/// Writhe-normalized bracket f(A) = (-A)^(-3w) * bracket; invariant under
/// the diagram moves induced by front manipulations, in particular equal
/// for a word and its stabilizations.
LaurentPoly normalized_jones(const FrontWord& f, int max_crossings = kDefaultCrossingLimit);

/// Search bucket key: the Jones class plus the smallest crossing count seen.
/// Equality (and bucketing) is on the polynomial only.
struct Fingerprint {
    LaurentPoly jones_class;
    int crossing_floor = 0;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.jones_class == b.jones_class;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) {
        return !(a == b);
    }
};

Fingerprint fingerprint(const FrontWord& f, int max_crossings = kDefaultCrossingLimit);

}  // namespace lkit
