#include "tricolor/coloring.hpp"

#include <cmath>
#include <utility>

namespace tricolor {

namespace {

constexpr double kSumTolerance = 1e-9;

void require_component(double p, const char* name) {
    if (!(p >= 0.0) || !std::isfinite(p))
        throw std::invalid_argument(std::string("probability ") + name + " must be finite and nonnegative");
}

}  // namespace

ProbVector ProbVector::of(double p1, double p2, double p3) {
    require_component(p1, "p1");
    require_component(p2, "p2");
    require_component(p3, "p3");
    const double s = p1 + p2 + p3;
    if (std::abs(s - 1.0) > kSumTolerance)
        throw std::invalid_argument("probabilities must sum to 1 within 1e-9");
    ProbVector p;
    // Renormalize; dividing preserves exact zeros.
    p.p_[0] = p1 / s;
    p.p_[1] = p2 / s;
    p.p_[2] = p3 / s;
    return p;
}

ProbVector ProbVector::infer(double p1, double p2) {
    double p3 = 1.0 - p1 - p2;
    if (p3 < 0.0 && p3 > -kSumTolerance) p3 = 0.0;
    if (p3 < 0.0) throw std::invalid_argument("p1 + p2 exceeds 1");
    return of(p1, p2, p3);
}

Coloring Coloring::uniform(const ProbVector& p, std::uint64_t seed) {
    Coloring c;
    c.law_ = Law::uniform;
    c.seed_ = seed;
    c.base_ = derive_seed(seed, seedtag::cell);
    // Threshold layout guarantees that exact-zero components are never
    // sampled: a zero p2 collapses the yellow interval to a point, a zero
    // p3 pushes the blue threshold past every mixer output.
    c.t1_ = p.p1();
    c.t2_ = p.p2() == 0.0 ? c.t1_ : (p.p3() == 0.0 ? 1.0 : p.p1() + p.p2());
    return c;
}

Coloring Coloring::prism(std::int64_t n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("prism coloring requires n >= 3");
    Coloring c;
    c.law_ = Law::prism;
    c.seed_ = seed;
    c.base_ = derive_seed(seed, seedtag::cell);
    c.n_ = n;
    return c;
}

Coloring Coloring::fixture(Overrides cells, Coloring background) {
    Coloring c;
    c.law_ = Law::fixture;
    c.seed_ = background.seed();
    c.overrides_ = std::make_shared<const Overrides>(std::move(cells));
    c.background_ = std::make_shared<const Coloring>(std::move(background));
    for (const auto& [cell, color] : *c.overrides_) {
        require_cell(cell);
        (void)color;
    }
    return c;
}

Coloring Coloring::straight_path(std::int64_t len, Coloring background) {
    if (len < 1) throw std::invalid_argument("straight path length must be >= 1");
    Overrides cells;
    cells.reserve(static_cast<std::size_t>(3 * len));
    for (std::int64_t i = 1; i <= len; ++i) {
        cells[{i, i, i}] = Color::red;
        cells[{i, i, i + 2}] = Color::yellow;
        cells[{i - 1, i + 1, i + 1}] = Color::blue;
    }
    return fixture(std::move(cells), std::move(background));
}

bool Coloring::supports(const Cell& c) const {
    if (!is_cell(c)) return false;
    switch (law_) {
        case Law::uniform: return true;
        case Law::prism: return prism_contains(n_, c);
        case Law::fixture: return overrides_->count(c) != 0 || background_->supports(c);
    }
    return false;
}

}  // namespace tricolor
