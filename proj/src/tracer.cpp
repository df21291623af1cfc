#include "tricolor/tracer.hpp"

#include <algorithm>

namespace tricolor {

bool state_geometry_ok(const EdgeState& s) {
    if (!is_cell(s.red) || !is_cell(s.yellow) || !is_cell(s.blue) || !is_cell(s.head)) return false;
    if (!is_edge_clique(s.red, s.yellow, s.blue)) return false;
    return adjacent(s.head, s.red) && adjacent(s.head, s.yellow) && adjacent(s.head, s.blue);
}

bool state_ok(const EdgeState& s, const Coloring& col) {
    if (!state_geometry_ok(s)) return false;
    if (!col.supports(s.red) || !col.supports(s.yellow) || !col.supports(s.blue)) return false;
    return col.at(s.red) == Color::red && col.at(s.yellow) == Color::yellow &&
           col.at(s.blue) == Color::blue;
}

void require_state(const EdgeState& s, const Coloring& col) {
    if (!state_geometry_ok(s))
        throw std::invalid_argument("state cells are not a 4-clique with a colored 3-clique");
    if (!state_ok(s, col))
        throw std::invalid_argument("state cells do not carry their slot colors");
}

PathRecord trace(const EdgeState& s0, const Coloring& col, const Region& region,
                 std::uint64_t step_cap, const TraceOptions& opt) {
    return trace_visit(s0, col, region, step_cap, opt, [](const EdgeState&) { return true; });
}

std::vector<EdgeState> find_states_on(const Region& region, const Coloring& col) {
    std::vector<EdgeState> out;
    for (const EdgeCells& e : enumerate_edges_in(region)) {
        const Color c0 = col.at(e[0]);
        const Color c1 = col.at(e[1]);
        const Color c2 = col.at(e[2]);
        const int mask = (1 << static_cast<int>(c0)) | (1 << static_cast<int>(c1)) |
                         (1 << static_cast<int>(c2));
        if (mask != 0b1110) continue;  // need one cell of each color
        EdgeState s;
        s.slot(c0) = e[0];
        s.slot(c1) = e[1];
        s.slot(c2) = e[2];
        const auto heads = edge_completions(e);
        s.head = heads[0];
        out.push_back(s);
        s.head = heads[1];
        out.push_back(s);
    }
    return out;
}

}  // namespace tricolor
