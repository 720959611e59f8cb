#include "lkit/diagram.hpp"

#include <algorithm>

#include "lkit/sweep.hpp"

namespace lkit {

namespace {

enum Slot { NW, NE, SW, SE };

struct Passage {
    int crossing;
    Slot in;
    Slot out;
};

}  // namespace

PDCode to_diagram(const FrontWord& f) {
    const SweepTrace t = sweep_trace(f);
    if (t.components != 1)
        fail(ErrorCode::MultiComponent,
             "diagram extraction needs a knot, got " + std::to_string(t.components) +
                 " components");

    const OrientedFront o = orient(f);

    // Walk the knot once, listing crossing passages in traversal order.
    std::vector<Passage> passages;
    passages.reserve(2 * t.cross_event.size());
    int piece = 0;
    bool going_right = true;
    do {
        const auto& along = t.piece_crossings[piece];
        auto visit = [&](int c) {
            const bool is_over = t.over_piece[c] == piece;
            Passage p;
            p.crossing = c;
            if (is_over) {  // descending branch runs nw -> se
                p.in = going_right ? NW : SE;
                p.out = going_right ? SE : NW;
            } else {  // ascending branch runs sw -> ne
                p.in = going_right ? SW : NE;
                p.out = going_right ? NE : SW;
            }
            passages.push_back(p);
        };
        if (going_right)
            for (auto it = along.begin(); it != along.end(); ++it) visit(*it);
        else
            for (auto it = along.rbegin(); it != along.rend(); ++it) visit(*it);
        piece = going_right ? t.death_partner[piece] : t.birth_partner[piece];
        going_right = !going_right;
    } while (!(piece == 0 && going_right));

    PDCode d;
    d.writhe = writhe(o);
    const int n = static_cast<int>(t.cross_event.size());
    d.crossings.assign(n, PDCrossing{-1, -1, -1, -1, -1, -1, -1, -1, 0});
    for (int c = 0; c < n; ++c) d.crossings[c].sign = o.signs[c];

    const int m = static_cast<int>(passages.size());
    if (m == 0) {
        d.arcs = 1;  // crossing-free knot: one closed arc
        return d;
    }

    // Arc i runs from passage i's exit to passage i+1's entry.
    auto slot_ref = [&](int c, Slot s) -> int& {
        PDCrossing& x = d.crossings[c];
        switch (s) {
            case NW: return x.nw;
            case NE: return x.ne;
            case SW: return x.sw;
            default: return x.se;
        }
    };
    for (int i = 0; i < m; ++i) {
        const Passage& out_p = passages[i];
        const Passage& in_p = passages[(i + 1) % m];
        slot_ref(out_p.crossing, out_p.out) = i;
        slot_ref(in_p.crossing, in_p.in) = i;
    }
    d.arcs = m;

    for (PDCrossing& x : d.crossings) {
        // The traversal meets each crossing once per branch, so all four
        // slots are filled; orient the branch fields by who entered where.
        const bool over_rightward = o.rightward[t.over_piece[&x - d.crossings.data()]];
        x.over_in = over_rightward ? x.nw : x.se;
        x.over_out = over_rightward ? x.se : x.nw;
        const bool under_rightward = o.rightward[t.under_piece[&x - d.crossings.data()]];
        x.under_in = under_rightward ? x.sw : x.ne;
        x.under_out = under_rightward ? x.ne : x.sw;
    }
    return d;
}

}  // namespace lkit
