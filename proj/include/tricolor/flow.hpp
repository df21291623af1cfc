#pragma once

#include <cstdint>
#include <vector>

#include "tricolor/coloring.hpp"
#include "tricolor/geometry.hpp"
#include "tricolor/tracer.hpp"

namespace tricolor {

// Antisymmetric unit of flow carried across the face between two colored
// cells: -1 along the color cycle red -> yellow -> blue -> red, +1 against
// it, 0 across a monochromatic face.
constexpr int eta(Color a, Color b) {
    if (a == b) return 0;
    const int fwd = (static_cast<int>(b) - static_cast<int>(a) + 3) % 3;
    return fwd == 1 ? -1 : 1;
}

// Net flow around the boundary edge shared by the three mutually adjacent
// cells v, w, x, in that cyclic order: the three eta terms always sum to a
// multiple of 3, and the curl is that sum divided by 3, one of {-1, 0, +1}.
// It is -1 exactly when (v, w, x) carry (red, yellow, blue) up to rotation,
// +1 for the mirror order, 0 whenever two of the cells share a color.
int edge_curl(const Cell& v, const Cell& w, const Cell& x, const Coloring& col);

// Closed corridor of cells: consecutive entries (cyclically) are adjacent,
// all entries distinct, at least three of them.
struct CellLoop {
    std::vector<Cell> cells;
};

CellLoop make_loop(std::vector<Cell> cells);

// Total interface flow threaded through the loop: one third of the sum of
// eta over its directed faces. Integer for every closed loop; throws if the
// eta sum is not a multiple of 3 (impossible for a valid loop, kept as a
// guard on the model).
std::int64_t loop_flux(const CellLoop& loop, const Coloring& col);

// Chirality of a directed state: +1 when the triple of displacements
// (yellow - red, blue - red, head - departed completion) is right-handed,
// -1 when left-handed. Never zero: the travel direction always crosses the
// plane of the three colored cells. Constant along any walk, so a closed
// walk threads every loop with a consistent sign.
int state_orientation(const EdgeState& s);

}  // namespace tricolor
