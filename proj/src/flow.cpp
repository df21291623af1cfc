#include "tricolor/flow.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace tricolor {

int edge_curl(const Cell& v, const Cell& w, const Cell& x, const Coloring& col) {
    if (!is_edge_clique(v, w, x))
        throw std::invalid_argument("edge_curl needs three mutually adjacent cells");
    const Color cv = col.at(v);
    const Color cw = col.at(w);
    const Color cx = col.at(x);
    const int sum = eta(cv, cw) + eta(cw, cx) + eta(cx, cv);
    return sum / 3;
}

CellLoop make_loop(std::vector<Cell> cells) {
    if (cells.size() < 3) throw std::invalid_argument("a loop needs at least three cells");
    std::unordered_set<Cell, CellHash> seen;
    for (const Cell& c : cells) {
        require_cell(c);
        if (!seen.insert(c).second)
            throw std::invalid_argument("loop cells must be distinct: " + to_string(c));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& a = cells[i];
        const Cell& b = cells[(i + 1) % cells.size()];
        if (!adjacent(a, b))
            throw std::invalid_argument("consecutive loop cells must be adjacent: " + to_string(a) +
                                        " -> " + to_string(b));
    }
    return CellLoop{std::move(cells)};
}

std::int64_t loop_flux(const CellLoop& loop, const Coloring& col) {
    std::int64_t sum = 0;
    const std::size_t n = loop.cells.size();
    for (std::size_t i = 0; i < n; ++i)
        sum += eta(col.at(loop.cells[i]), col.at(loop.cells[(i + 1) % n]));
    if (sum % 3 != 0) throw std::logic_error("loop flow sum must be a multiple of 3");
    return sum / 3;
}

int state_orientation(const EdgeState& s) {
    const Cell a = s.yellow - s.red;
    const Cell b = s.blue - s.red;
    const Cell d = s.head - opposite_completion(s.triple(), s.head);
    const std::int64_t det = a.x * (b.y * d.z - b.z * d.y) - a.y * (b.x * d.z - b.z * d.x) +
                             a.z * (b.x * d.y - b.y * d.x);
    if (det == 0) throw std::logic_error("degenerate state orientation");
    return det > 0 ? 1 : -1;
}

}  // namespace tricolor
