#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tricolor/coloring.hpp"
#include "tricolor/geometry.hpp"
#include "tricolor/region.hpp"
#include "tricolor/rng.hpp"
#include "tricolor/termination.hpp"

namespace tricolor {

// A directed position on the interface web: three mutually adjacent cells,
// one of each color, plus the head cell that completes the 4-clique the
// walk is about to enter. Each undirected interface edge corresponds to
// exactly two states, one per completion.
struct EdgeState {
    Cell red;
    Cell yellow;
    Cell blue;
    Cell head;

    friend bool operator==(const EdgeState&, const EdgeState&) = default;

    Cell& slot(Color c) {
        switch (c) {
            case Color::red: return red;
            case Color::yellow: return yellow;
            case Color::blue: return blue;
        }
        throw std::invalid_argument("bad color");
    }
    const Cell& slot(Color c) const { return const_cast<EdgeState*>(this)->slot(c); }

    EdgeCells triple() const { return {red, yellow, blue}; }
};

struct EdgeStateHash {
    std::size_t operator()(const EdgeState& s) const {
        std::uint64_t h = 0x51f0c9e3a48b172d;
        for (const Cell* c : {&s.red, &s.yellow, &s.blue, &s.head}) {
            h = absorb(h, static_cast<std::uint64_t>(c->x));
            h = absorb(h, static_cast<std::uint64_t>(c->y));
            h = absorb(h, static_cast<std::uint64_t>(c->z));
        }
        return static_cast<std::size_t>(h);
    }
};

// The three cells form a 3-clique and the head completes it to a 4-clique.
bool state_geometry_ok(const EdgeState& s);

// Geometry plus colors: each of the three cells must carry the color of its
// slot. The head's color is unconstrained (it decides the next step).
bool state_ok(const EdgeState& s, const Coloring& col);

void require_state(const EdgeState& s, const Coloring& col);

// Same undirected edge, opposite direction of travel.
inline EdgeState reverse_state(const EdgeState& s) {
    EdgeState r = s;
    r.head = opposite_completion(s.triple(), s.head);
    return r;
}

// One deterministic move: the head cell joins the triple by taking over the
// slot of its own color; the displaced cell leaves; the new head is the
// other completion of the new triple. Stepping is a bijection on states,
// and reverse_state conjugates it to its inverse.
inline EdgeState step(const EdgeState& s, const Coloring& col) {
    assert(state_geometry_ok(s));
    const Color c = col.at(s.head);
    EdgeState t = s;
    const Cell displaced = t.slot(c);
    t.slot(c) = s.head;
    t.head = opposite_completion(t.triple(), displaced);
#ifndef NDEBUG
    {
        const auto cs = edge_completions(canonical_edge(t.red, t.yellow, t.blue));
        assert((cs[0] == displaced && cs[1] == t.head) || (cs[1] == displaced && cs[0] == t.head));
    }
#endif
    return t;
}

struct TraceOptions {
    bool record_arc = false;          // keep visited states (after the start)
    std::size_t arc_capacity = 1u << 20;  // ring size; oldest states drop first
};

struct PathRecord {
    Termination termination = Termination::step_cap;
    std::uint64_t steps = 0;
    EdgeState start{};
    EdgeState end{};
    std::vector<EdgeState> arc;   // chronological; excludes the start state
    bool arc_truncated = false;
};

// Follows the walk from s0 until it returns to s0, reaches a state whose
// head lies outside the region (stepping further would need a color the
// region does not expose), or exhausts the step budget. The colored triple
// of s0 must lie inside the region, and every reached state keeps that
// invariant; only a head may stick out, and such a state is the walk's end.
//
// The visitor sees every reached state, the start included, and may return
// false to stop early (reported as step_cap). Visit order is the walk
// order, so callers can count steps themselves.
template <class Visitor>
PathRecord trace_visit(const EdgeState& s0, const Coloring& col, const Region& region,
                       std::uint64_t step_cap, const TraceOptions& opt, Visitor&& visit) {
    require_state(s0, col);
    for (const Cell& c : s0.triple())
        if (!region.contains(c))
            throw std::invalid_argument("start state's colored cells must lie in the region");

    PathRecord rec;
    rec.start = s0;
    rec.end = s0;

    std::vector<EdgeState> ring;
    std::size_t ring_pos = 0;
    if (opt.record_arc && opt.arc_capacity > 0) ring.reserve(std::min<std::size_t>(opt.arc_capacity, 1024));

    EdgeState state = s0;
    if (!visit(state)) {
        rec.termination = Termination::step_cap;
        return rec;
    }
    for (;;) {
        if (!region.contains(state.head)) {
            rec.termination = Termination::region_exit;
            break;
        }
        if (rec.steps >= step_cap) {
            rec.termination = Termination::step_cap;
            break;
        }
        const EdgeState next = step(state, col);
        ++rec.steps;
        state = next;
        if (opt.record_arc && opt.arc_capacity > 0) {
            if (ring.size() < opt.arc_capacity) {
                ring.push_back(state);
            } else {
                ring[ring_pos] = state;
                ring_pos = (ring_pos + 1) % opt.arc_capacity;
                rec.arc_truncated = true;
            }
        }
        if (state == s0) {
            rec.termination = Termination::loop_closed;
            break;
        }
        if (!visit(state)) {
            rec.termination = Termination::step_cap;
            break;
        }
    }
    rec.end = state;
    if (!ring.empty()) {
        rec.arc.reserve(ring.size());
        rec.arc.insert(rec.arc.end(), ring.begin() + static_cast<std::ptrdiff_t>(ring_pos), ring.end());
        rec.arc.insert(rec.arc.end(), ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(ring_pos));
    }
    return rec;
}

PathRecord trace(const EdgeState& s0, const Coloring& col, const Region& region,
                 std::uint64_t step_cap, const TraceOptions& opt = {});

// All directed states whose colored triple lies inside the region, in a
// deterministic order: cliques by their anchor cell and offset-pair rank,
// then the two completions in ascending cell order.
std::vector<EdgeState> find_states_on(const Region& region, const Coloring& col);

}  // namespace tricolor
