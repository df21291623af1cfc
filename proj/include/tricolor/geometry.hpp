#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

#include "tricolor/rng.hpp"

namespace tricolor {

// Cell of the body-centered cubic lattice: an integer triple whose
// coordinates are all even or all odd. Each cell's Voronoi region is a
// truncated octahedron whose six square faces sit toward the axis
// neighbors (offset +-2 on one axis) and whose eight hexagonal faces sit
// toward the diagonal neighbors (offset +-1 on every axis).
struct Cell {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell operator+(const Cell& a, const Cell& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Cell operator-(const Cell& a, const Cell& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

// Coordinate bound keeping all internal arithmetic inside int64.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 60;

constexpr std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

constexpr bool coords_in_range(const Cell& c) {
    return abs64(c.x) < kCoordLimit && abs64(c.y) < kCoordLimit && abs64(c.z) < kCoordLimit;
}

constexpr bool on_lattice(const Cell& c) {
    const std::int64_t px = c.x & 1, py = c.y & 1, pz = c.z & 1;
    return px == py && py == pz;
}

constexpr bool is_cell(const Cell& c) {
    return on_lattice(c) && coords_in_range(c);
}

std::string to_string(const Cell& c);

constexpr std::int64_t linf_norm(const Cell& c) {
    const std::int64_t ax = abs64(c.x), ay = abs64(c.y), az = abs64(c.z);
    return ax > ay ? (ax > az ? ax : az) : (ay > az ? ay : az);
}

inline void require_cell(const Cell& c) {
    if (!is_cell(c)) throw std::invalid_argument("not a lattice cell: " + to_string(c));
}

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        std::uint64_t h = absorb(0x9d3f2b6a17c54e81ULL, static_cast<std::uint64_t>(c.x));
        h = absorb(h, static_cast<std::uint64_t>(c.y));
        h = absorb(h, static_cast<std::uint64_t>(c.z));
        return static_cast<std::size_t>(h);
    }
};

enum class AdjacencyKind { none, square, hexagonal };

// The 14 neighbor offsets in fixed order: the six square-face offsets in
// axis order with the positive direction first, then the eight hexagonal
// offsets with signs enumerated x-major, plus before minus.
inline constexpr std::array<Cell, 14> kNeighborOffsets = {{
    {2, 0, 0},
    {-2, 0, 0},
    {0, 2, 0},
    {0, -2, 0},
    {0, 0, 2},
    {0, 0, -2},
    {1, 1, 1},
    {1, 1, -1},
    {1, -1, 1},
    {1, -1, -1},
    {-1, 1, 1},
    {-1, 1, -1},
    {-1, -1, 1},
    {-1, -1, -1},
}};

constexpr AdjacencyKind offset_kind(const Cell& d) {
    const std::int64_t ax = abs64(d.x), ay = abs64(d.y), az = abs64(d.z);
    if (ax == 1 && ay == 1 && az == 1) return AdjacencyKind::hexagonal;
    if (ax + ay + az == 2 && (ax == 2 || ay == 2 || az == 2))
        return AdjacencyKind::square;
    return AdjacencyKind::none;
}

inline AdjacencyKind adjacency_kind(const Cell& a, const Cell& b) {
    require_cell(a);
    require_cell(b);
    return offset_kind(b - a);
}

constexpr bool offsets_adjacent(const Cell& a, const Cell& b) {
    return offset_kind(b - a) != AdjacencyKind::none;
}

inline bool adjacent(const Cell& a, const Cell& b) {
    return adjacency_kind(a, b) != AdjacencyKind::none;
}

// All 14 neighbors of c, in the documented offset order.
inline std::array<Cell, 14> neighbors(const Cell& c) {
    require_cell(c);
    std::array<Cell, 14> out;
    for (std::size_t i = 0; i < kNeighborOffsets.size(); ++i) out[i] = c + kNeighborOffsets[i];
    return out;
}

namespace detail {

struct OffsetPair {
    std::uint8_t i, j;
};

constexpr std::size_t count_adjacent_offset_pairs(bool positive_anchor_only) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < 14; ++i)
        for (std::size_t j = i + 1; j < 14; ++j) {
            if (!offsets_adjacent(kNeighborOffsets[i], kNeighborOffsets[j])) continue;
            if (positive_anchor_only &&
                !(Cell{0, 0, 0} < kNeighborOffsets[i] && Cell{0, 0, 0} < kNeighborOffsets[j]))
                continue;
            ++n;
        }
    return n;
}

template <std::size_t N>
constexpr std::array<OffsetPair, N> make_offset_pairs(bool positive_anchor_only) {
    std::array<OffsetPair, N> out{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 14; ++i)
        for (std::size_t j = i + 1; j < 14; ++j) {
            if (!offsets_adjacent(kNeighborOffsets[i], kNeighborOffsets[j])) continue;
            if (positive_anchor_only &&
                !(Cell{0, 0, 0} < kNeighborOffsets[i] && Cell{0, 0, 0} < kNeighborOffsets[j]))
                continue;
            out[n++] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
        }
    return out;
}

}  // namespace detail

// Offset pairs (i, j) whose two offsets are mutually adjacent. Every
// 3-clique containing cell c is {c, c+off_i, c+off_j} for exactly one
// entry; there are 36 such cliques per cell.
inline constexpr auto kCliqueOffsetPairs =
    detail::make_offset_pairs<detail::count_adjacent_offset_pairs(false)>(false);

// The subset whose offsets are both lexicographically positive, so c is
// the smallest cell of the clique; used to enumerate cliques once each.
inline constexpr auto kAnchorOffsetPairs =
    detail::make_offset_pairs<detail::count_adjacent_offset_pairs(true)>(true);

static_assert(kCliqueOffsetPairs.size() == 36);
static_assert(kAnchorOffsetPairs.size() == 12);

// Tessellation edge: a 3-clique of pairwise adjacent cells, stored sorted.
using EdgeCells = std::array<Cell, 3>;
// Tessellation vertex: a 4-clique, stored sorted.
using VertexCells = std::array<Cell, 4>;

bool is_edge_clique(const Cell& a, const Cell& b, const Cell& c);
EdgeCells canonical_edge(Cell a, Cell b, Cell c);

// The two cells completing a 3-clique to its two 4-cliques, ascending.
// Found by intersecting the three neighbor sets.
std::array<Cell, 2> edge_completions(const EdgeCells& e);

// Given a 3-clique t and one of its completions d, the other completion:
// each coordinate of d moves by -2*sign(3d - sum(t)) when that component
// of 3d - sum(t) is nonzero mod 3, and stays otherwise.
constexpr Cell opposite_completion(const EdgeCells& t, const Cell& d) {
    const Cell s = t[0] + t[1] + t[2];
    Cell r = d;
    const auto adjust = [](std::int64_t di, std::int64_t si) -> std::int64_t {
        const std::int64_t e = 3 * di - si;
        if (e % 3 == 0) return di;
        return di - (e > 0 ? 2 : -2);
    };
    r.x = adjust(d.x, s.x);
    r.y = adjust(d.y, s.y);
    r.z = adjust(d.z, s.z);
    return r;
}

struct EdgeHash {
    std::size_t operator()(const EdgeCells& e) const {
        CellHash h;
        return h(e[0]) ^ (h(e[1]) * 0x9e3779b97f4a7c15ULL) ^ (h(e[2]) << 1);
    }
};

}  // namespace tricolor
