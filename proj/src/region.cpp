#include "tricolor/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricolor {

namespace {

std::int64_t linf(const Cell& c) {
    return std::max({std::abs(c.x), std::abs(c.y), std::abs(c.z)});
}

}  // namespace

Region Region::box(std::int64_t radius, Cell center) {
    if (radius < 0) throw std::invalid_argument("box radius must be nonnegative");
    require_cell(center);
    Region r;
    r.kind_ = RegionKind::box;
    r.n_ = radius;
    r.center_ = center;
    return r;
}

Region Region::annulus(std::int64_t n, Cell center) {
    if (n < 1) throw std::invalid_argument("annulus requires n >= 1");
    require_cell(center);
    Region r;
    r.kind_ = RegionKind::annulus;
    r.n_ = n;
    r.center_ = center;
    return r;
}

Region Region::prism(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("prism requires n >= 3");
    Region r;
    r.kind_ = RegionKind::prism;
    r.n_ = n;
    return r;
}

Region Region::prism(std::int64_t n, std::int64_t k_lo, std::int64_t k_hi) {
    Region r = prism(n);
    if (k_hi < k_lo) throw std::invalid_argument("empty prism layer window");
    r.windowed_ = true;
    r.k_lo_ = k_lo;
    r.k_hi_ = k_hi;
    return r;
}

Region Region::all() { return Region{}; }

bool Region::contains(const Cell& c) const {
    if (!is_cell(c)) return false;
    switch (kind_) {
        case RegionKind::box:
            return linf(c - center_) <= n_;
        case RegionKind::annulus: {
            const std::int64_t d = linf(c - center_);
            return d > n_ && d <= 3 * n_;
        }
        case RegionKind::prism: {
            const auto layer = prism_layer_of(n_, c);
            if (!layer) return false;
            return !windowed_ || (layer->k >= k_lo_ && layer->k <= k_hi_);
        }
        case RegionKind::all:
            return true;
    }
    return false;
}

bool Region::bounded() const {
    switch (kind_) {
        case RegionKind::box:
        case RegionKind::annulus:
            return true;
        case RegionKind::prism:
            return windowed_;
        case RegionKind::all:
            return false;
    }
    return false;
}

std::vector<Cell> Region::cells() const {
    if (!bounded()) throw std::invalid_argument("region is unbounded");
    std::vector<Cell> out;
    if (kind_ == RegionKind::prism) {
        for (std::int64_t k = k_lo_; k <= k_hi_; ++k)
            for (const Cell& c : layer_cells(n_, k)) out.push_back(c);
        return out;
    }
    const std::int64_t r = kind_ == RegionKind::box ? n_ : 3 * n_;
    for (std::int64_t parity = 0; parity <= 1; ++parity) {
        const std::int64_t lo = -r + ((-r & 1) != parity ? 1 : 0);
        for (std::int64_t x = lo; x <= r; x += 2)
            for (std::int64_t y = lo; y <= r; y += 2)
                for (std::int64_t z = lo; z <= r; z += 2) {
                    const Cell c = Cell{x, y, z} + center_;
                    if (contains(c)) out.push_back(c);
                }
    }
    return out;
}

std::vector<EdgeCells> enumerate_edges_in(const Region& region) {
    if (!region.bounded()) throw std::invalid_argument("cannot enumerate an unbounded region");
    std::vector<EdgeCells> out;
    for (const Cell& a : region.cells()) {
        for (const auto& pr : kAnchorOffsetPairs) {
            const Cell b = a + kNeighborOffsets[pr.i];
            const Cell c = a + kNeighborOffsets[pr.j];
            if (!region.contains(b) || !region.contains(c)) continue;
            EdgeCells e{a, b, c};
            if (e[2] < e[1]) std::swap(e[1], e[2]);
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace tricolor
