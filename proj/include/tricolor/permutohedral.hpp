#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tricolor/rng.hpp"
#include "tricolor/termination.hpp"

// Order-d generalization of the three-color cell walk. Cells are integer
// d-vectors with zero sum and pairwise congruent coordinates mod d; two
// cells are adjacent exactly when every coordinate differs by less than d,
// which makes the neighborhood the 2^d - 2 subset generators. Colors run
// 1..d-1, and the walk moves through (d-1)-cliques directed by a head cell
// completing them to a d-clique, exactly as the d = 4 case does in three
// dimensions.
namespace tricolor::perm {

using PCell = std::vector<std::int64_t>;

inline constexpr std::size_t kMinDim = 3;
inline constexpr std::size_t kMaxDim = 16;  // neighbor sets are enumerated by subset mask

void require_dim(std::size_t d);

bool is_lattice_point(const PCell& v);
void require_point(const PCell& v);

// Generator for a proper nonempty subset F of {0..d-1} (bitmask): |F| - d
// on the coordinates in F, |F| elsewhere. Always a lattice point, and the
// difference of two adjacent cells is always exactly one generator.
PCell generator(std::size_t d, std::uint64_t mask);

bool cells_adjacent(const PCell& a, const PCell& b);

// All 2^d - 2 neighbors, in ascending subset-mask order.
std::vector<PCell> neighbor_cells(const PCell& c);

// Cells adjacent to every member of the given mutually adjacent set,
// in ascending subset-mask order around the first member. A full
// (d-1)-clique always has exactly two completions.
std::vector<PCell> common_completions(const std::vector<PCell>& clique);

struct PCellHash {
    std::size_t operator()(const PCell& v) const {
        std::uint64_t h = absorb(0x6d35c8a4e91b02f7, v.size());
        for (const std::int64_t x : v) h = absorb(h, static_cast<std::uint64_t>(x));
        return static_cast<std::size_t>(h);
    }
};

// Deterministic random coloring with d-1 colors (numbered 1..d-1), i.i.d.
// across cells; same purity guarantees as the three-color version (pure
// function of the cell, exact-zero probabilities never sampled).
class PermColoring {
  public:
    using Overrides = std::unordered_map<PCell, int, PCellHash>;

    static PermColoring uniform(std::size_t d, std::vector<double> probs, std::uint64_t seed);
    static PermColoring with_overrides(Overrides cells, PermColoring background);

    std::size_t dim() const { return d_; }
    int color_count() const { return static_cast<int>(d_) - 1; }
    std::uint64_t seed() const { return seed_; }

    int at(const PCell& c) const;

  private:
    std::size_t d_ = 0;
    std::uint64_t seed_ = 0;
    std::uint64_t base_ = 0;
    std::vector<double> cum_;  // right interval endpoints per color; zero-width never sampled
    std::shared_ptr<const Overrides> overrides_;
    std::shared_ptr<const PermColoring> background_;
};

// Directed walk state: cells[i] carries color i+1; head completes the
// (d-1)-clique to a d-clique.
struct PermState {
    std::vector<PCell> cells;
    PCell head;

    friend bool operator==(const PermState&, const PermState&) = default;
};

bool perm_state_ok(const PermState& s, const PermColoring& col);

// One walk move: the head takes over the slot of its own color, and the new
// head is the other completion of the updated clique.
PermState step_state(const PermState& s, const PermColoring& col);

struct PermPathRecord {
    Termination termination = Termination::step_cap;
    std::uint64_t steps = 0;
};

// Unconfined trace: runs until the walk returns to s0 or hits the cap.
PermPathRecord trace(const PermState& s0, const PermColoring& col, std::uint64_t step_cap);

// Canonical start near the origin: the nested-subset clique
// {0, g({0}), g({0,1}), ...} with cell i colored i+1, head the
// lexicographically smaller completion. The forced colors make the start
// valid under any background coloring.
struct PermOrigin {
    PermState state;
    PermColoring::Overrides forced;
};
PermOrigin canonical_origin(std::size_t d);

// Whether the point z (zero-sum coordinates) lies in the Voronoi region of
// the given lattice cell: with w = z - site sorted descending, every prefix
// sum of length s must stay within s(d-s)/2 + tol. The facet normals are
// the generators, whose squared length is s(d-s)d, which gives that bound.
bool cell_contains_point(const PCell& site, const std::vector<double>& z, double tol = 1e-9);

}  // namespace tricolor::perm
