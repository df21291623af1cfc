#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tricolor/geometry.hpp"

namespace tricolor {

// Triangular levels and layers of the diagonal prism.
//
// level m = cells with all coordinates positive summing to m. It is
// nonempty iff m is odd and >= 3 or even and >= 6, and its convex hull is
// the triangle spanned by the three corner cells (permutations of
// (m-2,1,1) for odd m, (m-4,2,2) for even m). A layer stacks levels
// n-1, n, n+1 and translates by k*(1,1,1); distinct k give disjoint
// coordinate sums, so the layers partition the prism.

struct LayerIndex {
    std::int64_t n = 0;
    std::int64_t k = 0;

    friend bool operator==(const LayerIndex&, const LayerIndex&) = default;
};

// Barycentric weights of a cell with respect to its level corners, as the
// exact rational (num[i]/den). For the two single-cell levels (m = 3 and
// m = 6) the corners coincide and the weights are fixed at 1/3 each.
struct LevelBarycentric {
    std::array<std::int64_t, 3> num{};
    std::int64_t den = 1;

    double p(int i) const { return static_cast<double>(num[i]) / static_cast<double>(den); }
};

constexpr bool level_nonempty(std::int64_t m) {
    return (m % 2 != 0) ? m >= 3 : m >= 6;
}

// Minimum coordinate attained on a nonempty level: 1 for odd m, 2 for even.
constexpr std::int64_t level_min_coord(std::int64_t m) { return (m % 2 != 0) ? 1 : 2; }

std::array<Cell, 3> level_corners(std::int64_t m);
std::vector<Cell> level_cells(std::int64_t m);

bool prism_contains(std::int64_t n, const Cell& c);
std::optional<LayerIndex> prism_layer_of(std::int64_t n, const Cell& c);

// Weights of c within its level of the prism; throws if c is outside.
LevelBarycentric barycentric_exact(const Cell& c, std::int64_t n);

std::vector<Cell> layer_cells(std::int64_t n, std::int64_t k);

// Closed cell loop around layer (n, k), traversed clockwise as seen from
// the +(1,1,1) side. Each cell on it has a vanishing barycentric weight,
// and the three corner cells have a forced color, which pins the flow sum
// along the loop regardless of the sampled coloring. Requires n >= 6; the
// thinner prisms contain no encircling loop.
std::vector<Cell> layer_boundary_loop(std::int64_t n, std::int64_t k);

}  // namespace tricolor
