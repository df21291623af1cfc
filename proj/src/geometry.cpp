#include "tricolor/geometry.hpp"

#include <algorithm>

namespace tricolor {

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," +
           std::to_string(c.z) + ")";
}

bool is_edge_clique(const Cell& a, const Cell& b, const Cell& c) {
    return adjacent(a, b) && adjacent(a, c) && adjacent(b, c);
}

EdgeCells canonical_edge(Cell a, Cell b, Cell c) {
    if (!is_edge_clique(a, b, c))
        throw std::invalid_argument("cells do not form a 3-clique: " + to_string(a) +
                                    " " + to_string(b) + " " + to_string(c));
    EdgeCells e{a, b, c};
    std::sort(e.begin(), e.end());
    return e;
}

std::array<Cell, 2> edge_completions(const EdgeCells& e) {
    if (!is_edge_clique(e[0], e[1], e[2]))
        throw std::invalid_argument("edge_completions: not a 3-clique");
    std::array<Cell, 2> out{};
    std::size_t n = 0;
    for (const Cell& off : kNeighborOffsets) {
        const Cell d = e[0] + off;
        if (d == e[1] || d == e[2]) continue;
        if (offsets_adjacent(d, e[1]) && offsets_adjacent(d, e[2])) {
            if (n == 2) throw std::logic_error("3-clique with more than two completions");
            out[n++] = d;
        }
    }
    if (n != 2) throw std::logic_error("3-clique with fewer than two completions");
    if (out[1] < out[0]) std::swap(out[0], out[1]);
    return out;
}

}  // namespace tricolor
