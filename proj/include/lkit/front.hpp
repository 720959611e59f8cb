#pragma once

#include <cstdint>
#include <vector>

#include "lkit/errors.hpp"

namespace lkit {

// Sweep-line events of a front, read left to right. Strand indices are
// 0-based with index 0 the topmost strand. Kind order (L < R < X) is the
// event order used for lexicographic word comparison.
enum class EventKind : uint8_t {
    LeftCusp = 0,   // births strands at indices pos, pos+1
    RightCusp = 1,  // joins and kills strands at indices pos, pos+1
    Crossing = 2,   // swaps strands at indices pos, pos+1
};

struct Event {
    EventKind kind;
    int pos;

    friend bool operator==(Event a, Event b) {
        return a.kind == b.kind && a.pos == b.pos;
    }
    friend bool operator!=(Event a, Event b) { return !(a == b); }
    friend bool operator<(Event a, Event b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.pos < b.pos;
    }
};

inline Event left_cusp(int pos) { return Event{EventKind::LeftCusp, pos}; }
inline Event right_cusp(int pos) { return Event{EventKind::RightCusp, pos}; }
inline Event crossing(int pos) { return Event{EventKind::Crossing, pos}; }

/// Lexicographic order on event sequences; a proper prefix sorts first.
bool word_less(const std::vector<Event>& a, const std::vector<Event>& b);

/// A validated front word. Every instance satisfies the sweep bookkeeping:
/// the strand count starts and ends at zero and never dips negative, so the
/// word begins with a left cusp and ends with RightCusp(0) at width 2.
/// Single-componentness is not enforced here; see component_count().
class FrontWord {
public:
    const std::vector<Event>& events() const { return events_; }
    int size() const { return static_cast<int>(events_.size()); }
    int max_width() const { return max_width_; }
    int left_cusps() const { return left_cusps_; }
    int right_cusps() const { return right_cusps_; }
    int crossings() const { return crossings_; }

    friend bool operator==(const FrontWord& a, const FrontWord& b) {
        return a.events_ == b.events_;
    }
    friend bool operator!=(const FrontWord& a, const FrontWord& b) {
        return !(a == b);
    }

private:
    friend FrontWord make_front(std::vector<Event> events);

    FrontWord() = default;

    std::vector<Event> events_;
    int max_width_ = 0;
    int left_cusps_ = 0;
    int right_cusps_ = 0;
    int crossings_ = 0;
};

/// Validates an event sequence into a FrontWord.
/// Errors: EmptyWord, IndexOutOfRange, NonzeroFinalStrands.
FrontWord make_front(std::vector<Event> events);

/// Strand count at every event boundary; widths(f)[t] is the count after the
/// first t events, so the vector has size() + 1 entries with 0 at both ends.
std::vector<int> widths(const FrontWord& f);

/// Number of closed curves traced through the word (crossings pass strands
/// through; cusps pair them).
int component_count(const FrontWord& f);

/// An oriented single-component front. Strand pieces are the maximal
/// x-monotone arcs between the cusps where they are born and die, numbered
/// in birth order (piece 2j / 2j+1 = upper / lower strand of the j-th left
/// cusp). Traversal direction is constant along a piece and flips exactly
/// at cusps.
struct OrientedFront {
    FrontWord word;
    std::vector<char> rightward;  // per piece: 1 if traversed toward +x
    int up_cusps = 0;
    int down_cusps = 0;
    std::vector<int> signs;       // per crossing, word order, each +1 or -1
    std::vector<int> over_piece;  // per crossing: the descending strand
    std::vector<int> under_piece; // per crossing: the ascending strand
};

/// Canonical orientation: the upper strand born at the first left cusp is
/// directed rightward; everything else follows by tracing the knot.
/// Errors: MultiComponent.
OrientedFront orient(const FrontWord& f);

/// Flips every direction; exchanges up and down cusps; crossing signs are
/// unchanged (both strands reverse).
OrientedFront reverse(const OrientedFront& o);

const std::vector<int>& crossing_signs(const OrientedFront& o);

int writhe(const OrientedFront& o);

/// tb = writhe - (number of right cusps); orientation-independent.
/// Errors: MultiComponent.
int tb(const FrontWord& f);

/// Rotation number (down cusps - up cusps) / 2; negated by reverse().
int rotation(const OrientedFront& o);

enum class StabilizeSense { Up, Down };

/// Inserts a crossing-free two-cusp zigzag on the top strand at the given
/// event boundary (site = t means between events t-1 and t). Drops tb by 1,
/// shifts the rotation number by one, and preserves the topological type.
/// Errors: InvalidSite (out of range or no strand alive there).
FrontWord stabilize(const FrontWord& f, StabilizeSense sense, int site);

}  // namespace lkit
