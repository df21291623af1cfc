#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "tricolor/geometry.hpp"
#include "tricolor/prism.hpp"
#include "tricolor/rng.hpp"

namespace tricolor {

enum class Color : std::uint8_t { red = 1, yellow = 2, blue = 3 };

inline const char* color_name(Color c) {
    switch (c) {
        case Color::red: return "red";
        case Color::yellow: return "yellow";
        case Color::blue: return "blue";
    }
    return "?";
}

// Probability vector over the three colors. Inputs must be nonnegative and
// sum to 1 within 1e-9; they are renormalized on construction. Exact zero
// components stay exactly zero so the matching color can never be sampled.
class ProbVector {
  public:
    static ProbVector of(double p1, double p2, double p3);
    // Third component inferred as 1 - p1 - p2.
    static ProbVector infer(double p1, double p2);

    double p1() const { return p_[0]; }
    double p2() const { return p_[1]; }
    double p3() const { return p_[2]; }
    double operator[](int i) const { return p_[i]; }

  private:
    double p_[3] = {0, 0, 0};
};

// Deterministic random colorings. A coloring is a pure function of
// (law, seed): the same cell always answers the same color, in any order,
// from any thread. Randomness comes from one mixer evaluation per cell;
// each color's share of [0,1) matches its probability, and the shares are
// nested so that growing one probability at a fixed cell moves the color
// monotonically through red -> yellow -> blue.
class Coloring {
  public:
    using Overrides = std::unordered_map<Cell, Color, CellHash>;

    // Independent colors with law p at every cell.
    static Coloring uniform(const ProbVector& p, std::uint64_t seed);
    // Cells of the diagonal prism, each colored by the barycentric weights
    // of its level position; supported only on the prism.
    static Coloring prism(std::int64_t n, std::uint64_t seed);
    // Explicit colors on finitely many cells, delegating elsewhere.
    static Coloring fixture(Overrides cells, Coloring background);
    // Straight diagonal chain: for i in 1..len, (i,i,i) red,
    // (i,i,i+2) yellow, (i-1,i+1,i+1) blue, over the given background.
    static Coloring straight_path(std::int64_t len, Coloring background);

    bool supports(const Cell& c) const;
    Color at(const Cell& c) const;

    std::uint64_t seed() const { return seed_; }

  private:
    enum class Law { uniform, prism, fixture };

    Color sample(const Cell& c) const;

    Law law_ = Law::uniform;
    std::uint64_t seed_ = 0;
    std::uint64_t base_ = 0;     // seed folded with the cell stream tag
    double t1_ = 0, t2_ = 0;     // uniform color thresholds
    std::int64_t n_ = 0;         // prism size
    std::shared_ptr<const Overrides> overrides_;
    std::shared_ptr<const Coloring> background_;
};

inline double cell_unit(std::uint64_t base, const Cell& c) {
    std::uint64_t h = absorb(base, static_cast<std::uint64_t>(c.x));
    h = absorb(h, static_cast<std::uint64_t>(c.y));
    h = absorb(h, static_cast<std::uint64_t>(c.z));
    return to_unit(h);
}

inline Color Coloring::sample(const Cell& c) const {
    const double u = cell_unit(base_, c);
    if (law_ == Law::uniform) {
        if (u < t1_) return Color::red;
        if (u < t2_) return Color::yellow;
        return Color::blue;
    }
    // Prism law: thresholds are the cell's exact barycentric weights, so a
    // zero weight makes its color unreachable and a unit weight certain.
    const LevelBarycentric b = barycentric_exact(c, n_);
    const double den = static_cast<double>(b.den);
    const double s1 = static_cast<double>(b.num[0]) / den;
    const double s2 = static_cast<double>(b.num[0] + b.num[1]) / den;
    if (u < s1) return Color::red;
    if (u < s2) return Color::yellow;
    return Color::blue;
}

inline Color Coloring::at(const Cell& c) const {
    require_cell(c);
    if (law_ == Law::fixture) {
        if (const auto it = overrides_->find(c); it != overrides_->end()) return it->second;
        return background_->at(c);
    }
    if (law_ == Law::prism && !prism_contains(n_, c))
        throw std::invalid_argument("cell outside the prism coloring support: " + to_string(c));
    return sample(c);
}

}  // namespace tricolor
