#pragma once

// Brute-force reference implementations used only by tests. Everything here
// recomputes results from first principles (Voronoi geometry, exhaustive
// search, exact integer predicates) so library shortcuts can be checked
// against an independent route.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tricolor/coloring.hpp"
#include "tricolor/flow.hpp"
#include "tricolor/geometry.hpp"
#include "tricolor/permutohedral.hpp"
#include "tricolor/region.hpp"
#include "tricolor/tracer.hpp"

namespace oracle {

using tricolor::Cell;
using tricolor::Coloring;
using tricolor::EdgeCells;
using tricolor::EdgeState;
using tricolor::Region;

// The 24 Voronoi-cell corners of a lattice cell, in quarter units relative
// to its center: all permutations of (0, +-2, +-4).
std::vector<std::array<int, 3>> voronoi_corner_quarters();

// Number of Voronoi corners the two cells share (exact, in quarter units).
// Face-sharing neighbors share a full polygon: 4 corners across a square
// face, 6 across a hexagon; edge-sharers share 2 and vertex-sharers 1.
int shared_corner_count(const Cell& a, const Cell& b);

bool face_adjacent(const Cell& a, const Cell& b);

// All face-sharing neighbors found by scanning every offset in [-2, 2]^3.
std::vector<Cell> face_neighbors(const Cell& c);

// Cells completing the 3-clique to a 4-clique, found by scanning a box
// around the clique; uses only face_adjacent.
std::vector<Cell> brute_completions(const EdgeCells& e);

// One walk move computed from scratch: move the head into its color slot
// and find the new head among the brute-force completions of the new
// triple. Returns nothing when the head lies outside the region (the walk
// cannot learn its color).
std::optional<EdgeState> brute_successor(const EdgeState& s, const Coloring& col,
                                         const Region& region);

// Barycentric weights of a prism cell solved as a dense 2x2 linear system
// over the level corner positions (after removing the layer shift).
std::array<double, 3> solve_barycentric(const Cell& c, std::int64_t n);

// Exact signed count of interface strands piercing a disc spanned over the
// loop: the disc is a fan of triangles from a jiggled integer apex to the
// loop's cell centers, every tricolor clique near the loop contributes its
// dual tessellation edge directed by the right-handed color rule, and each
// segment-triangle crossing is decided by exact integer orientation tests.
// Degenerate contacts retry with a new apex.
std::int64_t surface_flux(const tricolor::CellLoop& loop, const Coloring& col);

// Candidate sites around the order-d origin: the origin, its neighbors,
// and their neighbors, deduplicated.
std::vector<tricolor::perm::PCell> perm_sites_near_origin(std::size_t d);

// Index into sites of the closest site to z (squared euclidean distance,
// lexicographic tie break).
std::size_t brute_nearest_site(const std::vector<tricolor::perm::PCell>& sites,
                               const std::vector<double>& z);

}  // namespace oracle
