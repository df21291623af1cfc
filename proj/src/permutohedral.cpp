#include "tricolor/permutohedral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace tricolor::perm {

namespace {

std::int64_t mod_d(std::int64_t x, std::int64_t d) { return ((x % d) + d) % d; }

std::string point_string(const PCell& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

void require_dim(std::size_t d) {
    if (d < kMinDim || d > kMaxDim)
        throw std::invalid_argument("dimension must be between 3 and 16");
}

bool is_lattice_point(const PCell& v) {
    const std::size_t d = v.size();
    if (d < kMinDim || d > kMaxDim) return false;
    std::int64_t sum = 0;
    const std::int64_t r = mod_d(v[0], static_cast<std::int64_t>(d));
    for (const std::int64_t x : v) {
        sum += x;
        if (mod_d(x, static_cast<std::int64_t>(d)) != r) return false;
    }
    return sum == 0;
}

void require_point(const PCell& v) {
    if (!is_lattice_point(v))
        throw std::invalid_argument("not a lattice cell: " + point_string(v));
}

PCell generator(std::size_t d, std::uint64_t mask) {
    require_dim(d);
    const std::uint64_t all = (std::uint64_t{1} << d) - 1;
    if (mask == 0 || mask >= all || (mask & ~all) != 0)
        throw std::invalid_argument("subset mask must be a proper nonempty subset");
    const auto size = static_cast<std::int64_t>(std::popcount(mask));
    PCell v(d);
    for (std::size_t i = 0; i < d; ++i)
        v[i] = (mask >> i & 1) ? size - static_cast<std::int64_t>(d) : size;
    return v;
}

bool cells_adjacent(const PCell& a, const PCell& b) {
    if (a.size() != b.size()) return false;
    if (!is_lattice_point(a) || !is_lattice_point(b)) return false;
    const auto d = static_cast<std::int64_t>(a.size());
    bool distinct = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t delta = a[i] - b[i];
        if (delta >= d || delta <= -d) return false;
        if (delta != 0) distinct = true;
    }
    return distinct;
}

std::vector<PCell> neighbor_cells(const PCell& c) {
    require_point(c);
    const std::size_t d = c.size();
    std::vector<PCell> out;
    out.reserve((std::size_t{1} << d) - 2);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d) - 1; ++mask) {
        PCell v = generator(d, mask);
        for (std::size_t i = 0; i < d; ++i) v[i] += c[i];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<PCell> common_completions(const std::vector<PCell>& clique) {
    if (clique.empty()) throw std::invalid_argument("clique must be nonempty");
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!cells_adjacent(clique[i], clique[j]))
                throw std::invalid_argument("clique cells must be mutually adjacent");
    std::vector<PCell> out;
    for (PCell& cand : neighbor_cells(clique[0])) {
        bool ok = true;
        for (std::size_t j = 1; j < clique.size() && ok; ++j)
            ok = cells_adjacent(cand, clique[j]);
        if (ok) out.push_back(std::move(cand));
    }
    return out;
}

PermColoring PermColoring::uniform(std::size_t d, std::vector<double> probs, std::uint64_t seed) {
    require_dim(d);
    const std::size_t m = d - 1;
    if (probs.size() != m)
        throw std::invalid_argument("need one probability per color (d - 1 of them)");
    double sum = 0;
    for (const double p : probs) {
        if (!(p >= 0.0) || !std::isfinite(p))
            throw std::invalid_argument("probabilities must be finite and nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("probabilities must sum to 1 within 1e-9");
    std::size_t last_nonzero = m;
    for (std::size_t i = 0; i < m; ++i) {
        probs[i] /= sum;
        if (probs[i] > 0) last_nonzero = i;
    }
    // sum within tolerance of 1 implies at least one positive component
    PermColoring c;
    c.d_ = d;
    c.seed_ = seed;
    c.base_ = absorb(derive_seed(seed, seedtag::perm_cell), d);
    c.cum_.resize(m);
    double lo = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (probs[i] > 0) lo = (i == last_nonzero) ? 1.0 : lo + probs[i];
        c.cum_[i] = lo;  // zero-probability colors get an empty interval
    }
    return c;
}

PermColoring PermColoring::with_overrides(Overrides cells, PermColoring background) {
    for (const auto& [cell, color] : cells) {
        require_point(cell);
        if (cell.size() != background.d_)
            throw std::invalid_argument("override cell dimension mismatch");
        if (color < 1 || color > background.color_count())
            throw std::invalid_argument("override color out of range");
    }
    PermColoring c = background;
    c.overrides_ = std::make_shared<const Overrides>(std::move(cells));
    c.background_ = std::make_shared<const PermColoring>(std::move(background));
    return c;
}

int PermColoring::at(const PCell& c) const {
    if (overrides_) {
        if (const auto it = overrides_->find(c); it != overrides_->end()) return it->second;
        return background_->at(c);
    }
    require_point(c);
    if (c.size() != d_) throw std::invalid_argument("cell dimension mismatch");
    std::uint64_t h = base_;
    for (const std::int64_t x : c) h = absorb(h, static_cast<std::uint64_t>(x));
    const double u = to_unit(h);
    for (std::size_t i = 0; i < cum_.size(); ++i)
        if (u < cum_[i]) return static_cast<int>(i) + 1;
    return static_cast<int>(cum_.size());  // unreachable: the last interval ends at 1
}

bool perm_state_ok(const PermState& s, const PermColoring& col) {
    const std::size_t d = col.dim();
    if (s.cells.size() != d - 1 || s.head.size() != d) return false;
    if (!is_lattice_point(s.head)) return false;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        if (!is_lattice_point(s.cells[i]) || s.cells[i].size() != d) return false;
        if (!cells_adjacent(s.cells[i], s.head)) return false;
        for (std::size_t j = i + 1; j < s.cells.size(); ++j)
            if (!cells_adjacent(s.cells[i], s.cells[j])) return false;
        if (col.at(s.cells[i]) != static_cast<int>(i) + 1) return false;
    }
    return true;
}

PermState step_state(const PermState& s, const PermColoring& col) {
    const int c = col.at(s.head);
    PermState t = s;
    const PCell displaced = t.cells[static_cast<std::size_t>(c - 1)];
    t.cells[static_cast<std::size_t>(c - 1)] = s.head;
    const std::vector<PCell> comps = common_completions(t.cells);
    if (comps.size() != 2)
        throw std::logic_error("a full clique must have exactly two completions");
    t.head = (comps[0] == displaced) ? comps[1] : comps[0];
    if (t.head == displaced || (comps[0] != displaced && comps[1] != displaced))
        throw std::logic_error("displaced cell must be one of the two completions");
    return t;
}

PermPathRecord trace(const PermState& s0, const PermColoring& col, std::uint64_t step_cap) {
    if (!perm_state_ok(s0, col)) throw std::invalid_argument("invalid start state");
    PermPathRecord rec;
    PermState state = s0;
    while (rec.steps < step_cap) {
        state = step_state(state, col);
        ++rec.steps;
        if (state == s0) {
            rec.termination = Termination::loop_closed;
            return rec;
        }
    }
    rec.termination = Termination::step_cap;
    return rec;
}

PermOrigin canonical_origin(std::size_t d) {
    require_dim(d);
    PermOrigin o;
    o.state.cells.push_back(PCell(d, 0));
    for (std::size_t s = 1; s + 1 < d; ++s)
        o.state.cells.push_back(generator(d, (std::uint64_t{1} << s) - 1));
    for (std::size_t i = 0; i < o.state.cells.size(); ++i)
        o.forced[o.state.cells[i]] = static_cast<int>(i) + 1;
    std::vector<PCell> comps = common_completions(o.state.cells);
    if (comps.size() != 2) throw std::logic_error("origin clique must have two completions");
    o.state.head = std::min(comps[0], comps[1]);
    return o;
}

bool cell_contains_point(const PCell& site, const std::vector<double>& z, double tol) {
    require_point(site);
    if (z.size() != site.size()) throw std::invalid_argument("point dimension mismatch");
    const std::size_t d = site.size();
    std::vector<double> w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = z[i] - static_cast<double>(site[i]);
    std::sort(w.begin(), w.end(), std::greater<>());
    double prefix = 0;
    for (std::size_t s = 1; s < d; ++s) {
        prefix += w[s - 1];
        const double bound = static_cast<double>(s) * static_cast<double>(d - s) / 2.0;
        if (prefix > bound + tol) return false;
    }
    return true;
}

}  // namespace tricolor::perm
