#include "lkit/front.hpp"

#include <algorithm>
#include <string>

#include "lkit/sweep.hpp"
#include "lkit/union_find.hpp"

namespace lkit {

namespace {

std::string event_desc(int index, const Event& e) {
    const char letters[] = {'L', 'R', 'X'};
    return std::string("event ") + std::to_string(index) + " (" +
           letters[static_cast<int>(e.kind)] + std::to_string(e.pos) + ")";
}

}  // namespace

bool word_less(const std::vector<Event>& a, const std::vector<Event>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

FrontWord make_front(std::vector<Event> events) {
    if (events.empty()) fail(ErrorCode::EmptyWord, "a front needs at least one event");

    FrontWord f;
    int strands = 0;
    for (int i = 0; i < static_cast<int>(events.size()); ++i) {
        const Event& e = events[i];
        switch (e.kind) {
            case EventKind::LeftCusp:
                if (e.pos < 0 || e.pos > strands)
                    fail(ErrorCode::IndexOutOfRange,
                         event_desc(i, e) + " with " + std::to_string(strands) + " strands");
                strands += 2;
                ++f.left_cusps_;
                break;
            case EventKind::RightCusp:
                if (e.pos < 0 || e.pos > strands - 2)
                    fail(ErrorCode::IndexOutOfRange,
                         event_desc(i, e) + " with " + std::to_string(strands) + " strands");
                strands -= 2;
                ++f.right_cusps_;
                break;
            case EventKind::Crossing:
                if (e.pos < 0 || e.pos > strands - 2)
                    fail(ErrorCode::IndexOutOfRange,
                         event_desc(i, e) + " with " + std::to_string(strands) + " strands");
                ++f.crossings_;
                break;
        }
        f.max_width_ = std::max(f.max_width_, strands);
    }
    if (strands != 0)
        fail(ErrorCode::NonzeroFinalStrands,
             std::to_string(strands) + " strands still alive at the end");

    f.events_ = std::move(events);
    return f;
}

std::vector<int> widths(const FrontWord& f) {
    std::vector<int> w;
    w.reserve(f.size() + 1);
    int strands = 0;
    w.push_back(0);
    for (const Event& e : f.events()) {
        if (e.kind == EventKind::LeftCusp) strands += 2;
        else if (e.kind == EventKind::RightCusp) strands -= 2;
        w.push_back(strands);
    }
    return w;
}

SweepTrace sweep_trace(const FrontWord& f) {
    SweepTrace t;
    const int pieces = 2 * f.left_cusps();
    t.pieces = pieces;
    t.birth_event.assign(pieces, -1);
    t.death_event.assign(pieces, -1);
    t.birth_partner.assign(pieces, -1);
    t.death_partner.assign(pieces, -1);
    t.upper_at_birth.assign(pieces, 0);
    t.upper_at_death.assign(pieces, 0);
    t.piece_crossings.assign(pieces, {});

    UnionFind closure(pieces);
    std::vector<int> active;
    active.reserve(f.max_width());
    int next_piece = 0;

    for (int i = 0; i < f.size(); ++i) {
        const Event& e = f.events()[i];
        switch (e.kind) {
            case EventKind::LeftCusp: {
                const int upper = next_piece++;
                const int lower = next_piece++;
                t.birth_event[upper] = t.birth_event[lower] = i;
                t.birth_partner[upper] = lower;
                t.birth_partner[lower] = upper;
                t.upper_at_birth[upper] = 1;
                closure.merge(upper, lower);
                active.insert(active.begin() + e.pos, {upper, lower});
                break;
            }
            case EventKind::RightCusp: {
                const int upper = active[e.pos];
                const int lower = active[e.pos + 1];
                t.death_event[upper] = t.death_event[lower] = i;
                t.death_partner[upper] = lower;
                t.death_partner[lower] = upper;
                t.upper_at_death[upper] = 1;
                closure.merge(upper, lower);
                active.erase(active.begin() + e.pos, active.begin() + e.pos + 2);
                break;
            }
            case EventKind::Crossing: {
                const int over = active[e.pos];       // descends, lesser slope
                const int under = active[e.pos + 1];  // ascends
                const int id = static_cast<int>(t.cross_event.size());
                t.cross_event.push_back(i);
                t.over_piece.push_back(over);
                t.under_piece.push_back(under);
                t.piece_crossings[over].push_back(id);
                t.piece_crossings[under].push_back(id);
                std::swap(active[e.pos], active[e.pos + 1]);
                break;
            }
        }
    }

    t.components = closure.count_roots();
    return t;
}

int component_count(const FrontWord& f) {
    return sweep_trace(f).components;
}

namespace {

OrientedFront orient_from_trace(const FrontWord& f, const SweepTrace& t) {
    OrientedFront o;
    o.word = f;
    o.rightward.assign(t.pieces, 0);
    o.over_piece = t.over_piece;
    o.under_piece = t.under_piece;

    // Walk the knot once: rightward motion ends at a death tip, leftward at
    // a birth tip, and the sibling piece continues in the flipped direction.
    int piece = 0;
    bool going_right = true;
    int visited = 0;
    do {
        o.rightward[piece] = going_right ? 1 : 0;
        ++visited;
        piece = going_right ? t.death_partner[piece] : t.birth_partner[piece];
        going_right = !going_right;
    } while (!(piece == 0 && going_right));
    (void)visited;

    // A cusp is "down" when the traversal enters along its upper branch.
    for (int p = 0; p < t.pieces; ++p) {
        if (t.upper_at_birth[p]) {
            const int lower = t.birth_partner[p];
            const bool enter_upper = !o.rightward[p];  // leftward piece arrives
            (void)lower;
            if (enter_upper) ++o.down_cusps;
            else ++o.up_cusps;
        }
        if (t.upper_at_death[p]) {
            const bool enter_upper = o.rightward[p] != 0;  // rightward arrives
            if (enter_upper) ++o.down_cusps;
            else ++o.up_cusps;
        }
    }

    // Crossing sign: +1 exactly when the over and under strands run in the
    // same horizontal direction (then rotating the over tangent CCW by 90
    // degrees aligns it with the under tangent).
    o.signs.reserve(t.over_piece.size());
    for (size_t c = 0; c < t.over_piece.size(); ++c) {
        const bool same = o.rightward[t.over_piece[c]] == o.rightward[t.under_piece[c]];
        o.signs.push_back(same ? 1 : -1);
    }
    return o;
}

}  // namespace

OrientedFront orient(const FrontWord& f) {
    SweepTrace t = sweep_trace(f);
    if (t.components != 1)
        fail(ErrorCode::MultiComponent,
             "front has " + std::to_string(t.components) + " components");
    return orient_from_trace(f, t);
}

OrientedFront reverse(const OrientedFront& o) {
    OrientedFront r = o;
    for (auto& d : r.rightward) d = d ? 0 : 1;
    std::swap(r.up_cusps, r.down_cusps);
    return r;
}

const std::vector<int>& crossing_signs(const OrientedFront& o) { return o.signs; }

int writhe(const OrientedFront& o) {
    int w = 0;
    for (int s : o.signs) w += s;
    return w;
}

int tb(const FrontWord& f) {
    return writhe(orient(f)) - f.right_cusps();
}

int rotation(const OrientedFront& o) {
    return (o.down_cusps - o.up_cusps) / 2;
}

FrontWord stabilize(const FrontWord& f, StabilizeSense sense, int site) {
    const std::vector<int> w = widths(f);
    if (site < 0 || site >= static_cast<int>(w.size()) || w[site] < 2)
        fail(ErrorCode::InvalidSite,
             "no strand alive at event boundary " + std::to_string(site));

    std::vector<Event> events = f.events();
    // Zigzag on the top strand: an up zigzag bumps above it, a down zigzag
    // dips below; neither adds a crossing.
    if (sense == StabilizeSense::Up) {
        events.insert(events.begin() + site, {left_cusp(0), right_cusp(1)});
    } else {
        events.insert(events.begin() + site, {left_cusp(1), right_cusp(0)});
    }
    return make_front(std::move(events));
}

}  // namespace lkit
