#include "lkit/construct.hpp"

#include <string>

namespace lkit {

FrontWord flying_saucer() {
    return make_front({left_cusp(0), right_cusp(0)});
}

FrontWord standard_unknot(int up, int down) {
    FrontWord f = flying_saucer();
    for (int i = 0; i < up; ++i) f = stabilize(f, StabilizeSense::Up, 1);
    for (int i = 0; i < down; ++i) f = stabilize(f, StabilizeSense::Down, 1);
    return f;
}

FrontWord connected_sum(const FrontWord& k1, const FrontWord& k2) {
    if (component_count(k1) != 1)
        fail(ErrorCode::MultiComponent, "left summand is not a knot");
    if (component_count(k2) != 1)
        fail(ErrorCode::MultiComponent, "right summand is not a knot");

    // Every valid word ends with RightCusp(0) at width 2 and begins with
    // LeftCusp(0), so dropping that pair glues the two live strand ends of
    // k1 straight onto the two opening strands of k2.
    std::vector<Event> events(k1.events().begin(), k1.events().end() - 1);
    events.insert(events.end(), k2.events().begin() + 1, k2.events().end());
    return make_front(std::move(events));
}

std::pair<FrontWord, FrontWord> split_at(const FrontWord& f, int t) {
    const std::vector<int> w = widths(f);
    if (t < 0 || t >= static_cast<int>(w.size()) || w[t] != 2)
        fail(ErrorCode::BadCutWidth,
             "strand count at boundary " + std::to_string(t) + " is not 2");

    std::vector<Event> left(f.events().begin(), f.events().begin() + t);
    left.push_back(right_cusp(0));
    std::vector<Event> right{left_cusp(0)};
    right.insert(right.end(), f.events().begin() + t, f.events().end());

    FrontWord lw = make_front(std::move(left));
    FrontWord rw = make_front(std::move(right));
    if (component_count(lw) != 1 || component_count(rw) != 1)
        fail(ErrorCode::DisconnectedPiece,
             "cut at boundary " + std::to_string(t) + " leaves a multi-component piece");
    return {std::move(lw), std::move(rw)};
}

}  // namespace lkit
