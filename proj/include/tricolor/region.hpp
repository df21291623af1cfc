#pragma once

#include <cstdint>
#include <vector>

#include "tricolor/geometry.hpp"
#include "tricolor/prism.hpp"

namespace tricolor {

enum class RegionKind { box, annulus, prism, all };

// A set of lattice cells used to confine traces and enumerations.
//   box(r, center):     cells within L-inf distance r of center
//   annulus(n, center): cells of the 3n box with the closed n box removed
//   prism(n):           the full diagonal prism, optionally a layer window
//   all():              every cell
class Region {
  public:
    static Region box(std::int64_t radius, Cell center = {});
    static Region annulus(std::int64_t n, Cell center = {});
    static Region prism(std::int64_t n);
    static Region prism(std::int64_t n, std::int64_t k_lo, std::int64_t k_hi);
    static Region all();

    bool contains(const Cell& c) const;
    bool bounded() const;
    // All member cells; throws for unbounded regions.
    std::vector<Cell> cells() const;

    RegionKind kind() const { return kind_; }
    std::int64_t size_param() const { return n_; }
    Cell center() const { return center_; }
    std::int64_t k_lo() const { return k_lo_; }
    std::int64_t k_hi() const { return k_hi_; }

  private:
    RegionKind kind_ = RegionKind::all;
    std::int64_t n_ = 0;
    Cell center_{};
    bool windowed_ = false;
    std::int64_t k_lo_ = 0;
    std::int64_t k_hi_ = 0;
};

// Every 3-clique whose three cells lie in the region, once each, keyed by
// the clique's lexicographically smallest cell. Throws for unbounded
// regions.
std::vector<EdgeCells> enumerate_edges_in(const Region& region);

}  // namespace tricolor
