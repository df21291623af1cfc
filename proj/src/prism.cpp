#include "tricolor/prism.hpp"

#include <stdexcept>
#include <string>

namespace tricolor {

namespace {

void require_level(std::int64_t m) {
    if (!level_nonempty(m))
        throw std::invalid_argument("empty prism level m=" + std::to_string(m));
}

void require_prism_n(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("prism requires n >= 3");
}

}  // namespace

std::array<Cell, 3> level_corners(std::int64_t m) {
    require_level(m);
    const std::int64_t u = level_min_coord(m);
    const std::int64_t top = m - 2 * u;
    return {Cell{top, u, u}, Cell{u, top, u}, Cell{u, u, top}};
}

std::vector<Cell> level_cells(std::int64_t m) {
    require_level(m);
    const std::int64_t u = level_min_coord(m);
    std::vector<Cell> out;
    for (std::int64_t x = u; x <= m - 2 * u; x += 2)
        for (std::int64_t y = u; y <= m - x - u; y += 2) out.push_back({x, y, m - x - y});
    return out;
}

std::optional<LayerIndex> prism_layer_of(std::int64_t n, const Cell& c) {
    require_prism_n(n);
    require_cell(c);
    const std::int64_t s = c.x + c.y + c.z;
    // Exactly one of n-1, n, n+1 matches s mod 3.
    std::int64_t r = (s - (n - 1)) % 3;
    if (r < 0) r += 3;
    const std::int64_t m = n - 1 + r;
    const std::int64_t k = (s - m) / 3;
    if (c.x - k <= 0 || c.y - k <= 0 || c.z - k <= 0) return std::nullopt;
    return LayerIndex{n, k};
}

bool prism_contains(std::int64_t n, const Cell& c) {
    return prism_layer_of(n, c).has_value();
}

LevelBarycentric barycentric_exact(const Cell& c, std::int64_t n) {
    const auto layer = prism_layer_of(n, c);
    if (!layer) throw std::invalid_argument("cell outside prism: " + to_string(c));
    const std::int64_t k = layer->k;
    const Cell v{c.x - k, c.y - k, c.z - k};
    const std::int64_t m = v.x + v.y + v.z;
    const std::int64_t u = level_min_coord(m);
    const std::int64_t den = m - 3 * u;
    if (den == 0) return LevelBarycentric{{1, 1, 1}, 3};
    return LevelBarycentric{{v.x - u, v.y - u, v.z - u}, den};
}

std::vector<Cell> layer_cells(std::int64_t n, std::int64_t k) {
    require_prism_n(n);
    std::vector<Cell> out;
    for (std::int64_t m = n - 1; m <= n + 1; ++m) {
        if (!level_nonempty(m)) continue;
        for (const Cell& c : level_cells(m)) out.push_back({c.x + k, c.y + k, c.z + k});
    }
    return out;
}

std::vector<Cell> layer_boundary_loop(std::int64_t n, std::int64_t k) {
    require_prism_n(n);
    if (n < 6)
        throw std::invalid_argument("no boundary loop exists for prisms thinner than n=6");

    std::vector<Cell> loop;
    if (n == 6) {
        // Alternates the corners of level 5 with the side midpoints of
        // level 7 along square steps.
        loop = {{3, 1, 1}, {3, 1, 3}, {1, 1, 3}, {1, 3, 3}, {1, 3, 1}, {3, 3, 1}};
    } else {
        // Alternates side cells of the even level E with cells of the odd
        // level E-1, turning at the even level's corners. Orientation is
        // x-corner -> z-corner -> y-corner, clockwise from +(1,1,1).
        const std::int64_t M = (n % 2 != 0) ? n : n - 1;
        const std::int64_t E = M + 1;
        for (std::int64_t a = E - 4; a >= 4; a -= 2) {
            loop.push_back({a, 2, E - 2 - a});
            loop.push_back({a - 1, 1, E - 1 - a});
        }
        for (std::int64_t b = 2; b <= E - 6; b += 2) {
            loop.push_back({2, b, E - 2 - b});
            loop.push_back({1, b + 1, E - 3 - b});
        }
        for (std::int64_t a = 2; a <= E - 6; a += 2) {
            loop.push_back({a, E - 2 - a, 2});
            loop.push_back({a + 1, E - 3 - a, 1});
        }
    }
    for (Cell& c : loop) c = c + Cell{k, k, k};
    return loop;
}

}  // namespace tricolor
