#include "tricolor/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>
#include <utility>

#include "tricolor/flow.hpp"
#include "tricolor/parallel.hpp"
#include "tricolor/permutohedral.hpp"
#include "tricolor/prism.hpp"
#include "tricolor/region.hpp"
#include "tricolor/rng.hpp"

namespace tricolor {

namespace {

Estimate binomial_estimate(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed) {
    Estimate e;
    e.trials = trials;
    e.seed = seed;
    if (trials == 0) return e;
    const double phat = static_cast<double>(hits) / static_cast<double>(trials);
    e.value = phat;
    e.std_error = std::sqrt(phat * (1.0 - phat) / static_cast<double>(trials));
    return e;
}

void require_trials(std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("need at least one trial");
}

void require_cap(std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("step cap must be positive");
}

Histogram merge_counts(const std::vector<std::int64_t>& values) {
    Histogram h;
    for (const std::int64_t v : values) {
        if (v < 0)
            ++h.truncated;
        else
            h.add(v);
    }
    return h;
}

}  // namespace

OriginState canonical_origin_state() {
    OriginState o;
    o.state.red = {0, 0, 0};
    o.state.yellow = {1, 1, 1};
    o.state.blue = {-1, 1, 1};
    o.state.head = {0, 0, 2};
    o.forced = {{o.state.red, Color::red},
                {o.state.yellow, Color::yellow},
                {o.state.blue, Color::blue}};
    return o;
}

// --------------------------------------------------------------------------
// Annulus crossing.

namespace {

// Touch predicates look at the colored triple only; the two directions of
// an edge then agree, which lets a trace consume both orientations of every
// inner-collar state it passes.
bool triple_touches_inner(const EdgeState& s, std::int64_t n) {
    for (const Cell& c : s.triple()) {
        const std::int64_t m = linf_norm(c);
        if (m > n && m <= n + 2) return true;
    }
    return false;
}

bool triple_touches_outer(const EdgeState& s, std::int64_t n) {
    for (const Cell& c : s.triple())
        if (linf_norm(c) >= 3 * n - 2) return true;
    return false;
}

bool annulus_trial(const AnnulusParams& params, std::uint64_t trial_seed) {
    const std::int64_t n = params.n;
    const Coloring col = Coloring::uniform(params.p, trial_seed);
    const Region confine = params.confined ? Region::annulus(n) : Region::box(3 * n);

    std::unordered_set<EdgeState, EdgeStateHash> consumed;
    bool crossed = false;

    auto run_direction = [&](const EdgeState& s) {
        trace_visit(s, col, confine, params.step_cap, TraceOptions{}, [&](const EdgeState& v) {
            if (triple_touches_outer(v, n)) {
                crossed = true;
                return false;
            }
            if (triple_touches_inner(v, n)) {
                consumed.insert(v);
                consumed.insert(reverse_state(v));
            }
            return true;
        });
    };

    // Walk components are found by their visits to the inner collar: every
    // tricolor clique with a cell there seeds both walk directions once.
    const std::int64_t hi = n + 2;
    auto in_band = [&](const Cell& c) {
        const std::int64_t m = linf_norm(c);
        return m > n && m <= hi;
    };
    for (std::int64_t x = -hi; x <= hi && !crossed; ++x) {
        for (std::int64_t y = -hi; y <= hi && !crossed; ++y) {
            for (std::int64_t z = -hi; z <= hi && !crossed; ++z) {
                const Cell a{x, y, z};
                if (!on_lattice(a) || !in_band(a)) continue;
                for (const auto& pair : kCliqueOffsetPairs) {
                    const Cell b = a + kNeighborOffsets[pair.i];
                    const Cell c = a + kNeighborOffsets[pair.j];
                    if (!confine.contains(b) || !confine.contains(c)) continue;
                    if ((in_band(b) && b < a) || (in_band(c) && c < a)) continue;
                    const Color ca = col.at(a);
                    const Color cb = col.at(b);
                    const Color cc = col.at(c);
                    const int mask = (1 << static_cast<int>(ca)) | (1 << static_cast<int>(cb)) |
                                     (1 << static_cast<int>(cc));
                    if (mask != 0b1110) continue;
                    EdgeState s;
                    s.slot(ca) = a;
                    s.slot(cb) = b;
                    s.slot(cc) = c;
                    const auto heads = edge_completions(canonical_edge(a, b, c));
                    for (const Cell& head : heads) {
                        s.head = head;
                        if (consumed.count(s)) continue;
                        const PathRecord fwd = trace_visit(
                            s, col, confine, params.step_cap, TraceOptions{},
                            [&](const EdgeState& v) {
                                if (triple_touches_outer(v, n)) {
                                    crossed = true;
                                    return false;
                                }
                                if (triple_touches_inner(v, n)) {
                                    consumed.insert(v);
                                    consumed.insert(reverse_state(v));
                                }
                                return true;
                            });
                        if (crossed) break;
                        // A closed loop already covered both directions;
                        // otherwise the other orientation explores the part
                        // of the component behind the seed.
                        if (fwd.termination != Termination::loop_closed) run_direction(reverse_state(s));
                        if (crossed) break;
                    }
                    if (crossed) break;
                }
            }
        }
    }
    return crossed;
}

}  // namespace

Estimate annulus_crossing(const AnnulusParams& params, const ExecPolicy& exec) {
    if (params.n < 2) throw std::invalid_argument("annulus crossing requires n >= 2");
    require_trials(params.trials);
    require_cap(params.step_cap);
    std::vector<char> crossed(params.trials, 0);
    parallel_for(params.trials, exec.threads, [&](std::uint64_t i) {
        crossed[i] = annulus_trial(params, derive_seed(params.seed, seedtag::trial, i)) ? 1 : 0;
    });
    std::uint64_t hits = 0;
    for (const char c : crossed) hits += static_cast<std::uint64_t>(c);
    return binomial_estimate(hits, params.trials, params.seed);
}

// --------------------------------------------------------------------------
// Loop length histogram.

Histogram loop_length_histogram(const LoopHistogramParams& params, const ExecPolicy& exec) {
    require_trials(params.trials);
    require_cap(params.step_cap);
    const OriginState origin = canonical_origin_state();
    const Region everywhere = Region::all();
    std::vector<std::int64_t> lengths(params.trials, -1);
    parallel_for(params.trials, exec.threads, [&](std::uint64_t i) {
        const Coloring col = Coloring::fixture(
            origin.forced, Coloring::uniform(params.p, derive_seed(params.seed, seedtag::trial, i)));
        const PathRecord rec = trace(origin.state, col, everywhere, params.step_cap);
        if (rec.termination == Termination::loop_closed)
            lengths[i] = static_cast<std::int64_t>(rec.steps);
    });
    return merge_counts(lengths);
}

// --------------------------------------------------------------------------
// Displacement scaling exponent.

namespace {

double squared_displacement(const Cell& a, const Cell& b) {
    const Cell d = a - b;
    return static_cast<double>(d.x * d.x + d.y * d.y + d.z * d.z);
}

// Least squares slope of log(mean) against log(length); requires at least
// two usable points (positive mean over at least one survivor).
double fit_log_slope(const std::vector<std::uint64_t>& lengths, const std::vector<double>& means,
                     const std::vector<std::uint64_t>& survivors) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        if (survivors[j] == 0 || !(means[j] > 0)) continue;
        const double x = std::log(static_cast<double>(lengths[j]));
        const double y = std::log(means[j]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    if (used < 2) throw std::runtime_error("not enough surviving walks to fit a slope");
    const double denom = used * sxx - sx * sx;
    if (denom == 0) throw std::runtime_error("degenerate length grid for the slope fit");
    return (used * sxy - sx * sy) / denom;
}

}  // namespace

ScalingResult scaling_exponent(const ScalingParams& params, const ExecPolicy& exec) {
    require_trials(params.trials);
    if (params.lengths.size() < 2)
        throw std::invalid_argument("need at least two walk lengths for a slope");
    for (std::size_t j = 0; j < params.lengths.size(); ++j) {
        if (params.lengths[j] == 0) throw std::invalid_argument("walk lengths must be positive");
        if (j > 0 && params.lengths[j] <= params.lengths[j - 1])
            throw std::invalid_argument("walk lengths must be strictly increasing");
    }

    const std::size_t count = params.lengths.size();
    const std::uint64_t max_len = params.lengths.back();
    const OriginState origin = canonical_origin_state();
    const Region everywhere = Region::all();
    const double dead = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> r2(params.trials * count, dead);

    parallel_for(params.trials, exec.threads, [&](std::uint64_t i) {
        const Coloring col = Coloring::fixture(
            origin.forced, Coloring::uniform(params.p, derive_seed(params.seed, seedtag::trial, i)));
        const Cell start_head = origin.state.head;
        std::uint64_t step = 0;
        std::size_t j = 0;
        trace_visit(origin.state, col, everywhere, max_len, TraceOptions{},
                    [&](const EdgeState& v) {
                        if (step == params.lengths[j]) {
                            r2[i * count + j] = squared_displacement(v.head, start_head);
                            if (++j == count) return false;
                        }
                        ++step;
                        return true;
                    });
    });

    ScalingResult out;
    out.trials = params.trials;
    out.seed = params.seed;

    std::vector<double> means(count, 0);
    std::vector<std::uint64_t> survivors(count, 0);
    for (std::size_t j = 0; j < count; ++j) {
        double sum = 0;
        std::uint64_t k = 0;
        for (std::uint64_t i = 0; i < params.trials; ++i) {
            const double v = r2[i * count + j];
            if (!std::isnan(v)) {
                sum += v;
                ++k;
            }
        }
        survivors[j] = k;
        means[j] = k ? sum / static_cast<double>(k) : 0;
        out.points.push_back({params.lengths[j], means[j], k});
    }
    out.slope = fit_log_slope(params.lengths, means, survivors);

    // Bootstrap over whole walks, preserving cross-length correlation.
    std::vector<double> slopes;
    slopes.reserve(params.bootstrap);
    std::vector<double> bmeans(count);
    std::vector<std::uint64_t> bsurv(count);
    for (std::uint64_t b = 0; b < params.bootstrap; ++b) {
        const std::uint64_t base = derive_seed(params.seed, seedtag::bootstrap, b);
        std::fill(bmeans.begin(), bmeans.end(), 0.0);
        std::fill(bsurv.begin(), bsurv.end(), std::uint64_t{0});
        for (std::uint64_t k = 0; k < params.trials; ++k) {
            const std::uint64_t i = absorb(base, k) % params.trials;
            for (std::size_t j = 0; j < count; ++j) {
                const double v = r2[i * count + j];
                if (!std::isnan(v)) {
                    bmeans[j] += v;
                    ++bsurv[j];
                }
            }
        }
        for (std::size_t j = 0; j < count; ++j)
            if (bsurv[j]) bmeans[j] /= static_cast<double>(bsurv[j]);
        try {
            slopes.push_back(fit_log_slope(params.lengths, bmeans, bsurv));
        } catch (const std::runtime_error&) {
            // resample lost every survivor at too many lengths; skip it
        }
    }
    if (slopes.size() >= 2) {
        double m = 0;
        for (const double s : slopes) m += s;
        m /= static_cast<double>(slopes.size());
        double var = 0;
        for (const double s : slopes) var += (s - m) * (s - m);
        out.std_error = std::sqrt(var / static_cast<double>(slopes.size() - 1));
    }
    return out;
}

// --------------------------------------------------------------------------
// Site percolation threshold on the cell adjacency graph.

namespace {

// Reusable flood-fill scratch; the epoch stamp avoids clearing the grid
// between trials. Values are epoch + 1 for a known closed site and
// epoch + 2 for a visited open site.
struct PcScratch {
    std::vector<std::uint32_t> stamp;
    std::vector<std::int32_t> queue;
    std::uint32_t epoch = 0;
    std::int64_t side = 0;

    void prepare(std::int64_t s) {
        const auto need = static_cast<std::size_t>(s * s * s);
        if (side != s || stamp.size() != need) {
            side = s;
            stamp.assign(need, 0);
            epoch = 0;
        }
        if (epoch > std::numeric_limits<std::uint32_t>::max() - 8) {
            std::fill(stamp.begin(), stamp.end(), 0u);
            epoch = 0;
        }
        epoch += 4;
        queue.clear();
    }
};

bool pc_trial(std::int64_t big_l, double q, std::uint64_t trial_base, PcScratch& scratch) {
    const std::int64_t s = 2 * big_l;
    scratch.prepare(s);
    const std::uint32_t closed = scratch.epoch + 1;
    const std::uint32_t open = scratch.epoch + 2;

    auto index = [s](std::int64_t x, std::int64_t y, std::int64_t z) {
        return static_cast<std::size_t>((x * s + y) * s + z);
    };
    auto is_open = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
        std::uint64_t h = absorb(trial_base, static_cast<std::uint64_t>(x));
        h = absorb(h, static_cast<std::uint64_t>(y));
        h = absorb(h, static_cast<std::uint64_t>(z));
        return to_unit(h) < q;
    };

    // Seed the two lattice planes on the low-x wall.
    for (std::int64_t x = 0; x <= 1; ++x)
        for (std::int64_t y = x & 1; y < s; y += 2)
            for (std::int64_t z = x & 1; z < s; z += 2) {
                const std::size_t id = index(x, y, z);
                if (is_open(x, y, z)) {
                    scratch.stamp[id] = open;
                    scratch.queue.push_back(static_cast<std::int32_t>(id));
                } else {
                    scratch.stamp[id] = closed;
                }
            }

    for (std::size_t q_at = 0; q_at < scratch.queue.size(); ++q_at) {
        const std::int64_t id = scratch.queue[q_at];
        const std::int64_t z = id % s;
        const std::int64_t y = (id / s) % s;
        const std::int64_t x = id / (s * s);
        for (const Cell& off : kNeighborOffsets) {
            const std::int64_t nx = x + off.x;
            const std::int64_t ny = y + off.y;
            const std::int64_t nz = z + off.z;
            if (nx < 0 || nx >= s || ny < 0 || ny >= s || nz < 0 || nz >= s) continue;
            const std::size_t nid = index(nx, ny, nz);
            const std::uint32_t v = scratch.stamp[nid];
            if (v == open || v == closed) continue;
            if (!is_open(nx, ny, nz)) {
                scratch.stamp[nid] = closed;
                continue;
            }
            if (nx >= s - 2) return true;
            scratch.stamp[nid] = open;
            scratch.queue.push_back(static_cast<std::int32_t>(nid));
        }
    }
    return false;
}

}  // namespace

PcResult estimate_pc(const PcParams& params, const ExecPolicy& exec) {
    if (params.sizes.empty()) throw std::invalid_argument("need at least one box size");
    for (const std::int64_t l : params.sizes)
        if (l < 2 || l > 512) throw std::invalid_argument("box sizes must be in [2, 512]");
    require_trials(params.trials_per_step);
    if (!(params.q_lo >= 0 && params.q_hi <= 1 && params.q_lo < params.q_hi))
        throw std::invalid_argument("need 0 <= q_lo < q_hi <= 1");
    if (params.iterations < 1 || params.iterations > 60)
        throw std::invalid_argument("bisection iterations must be in [1, 60]");

    PcResult out;
    out.trials_per_step = params.trials_per_step;
    out.seed = params.seed;
    const std::uint64_t tag_base = derive_seed(params.seed, seedtag::trial);

    for (const std::int64_t big_l : params.sizes) {
        double lo = params.q_lo;
        double hi = params.q_hi;
        for (int iter = 0; iter < params.iterations; ++iter) {
            const double mid = 0.5 * (lo + hi);
            std::vector<char> hit(params.trials_per_step, 0);
            const std::uint64_t step_base =
                absorb(absorb(tag_base, static_cast<std::uint64_t>(big_l)),
                       static_cast<std::uint64_t>(iter));
            parallel_for(params.trials_per_step, exec.threads, [&](std::uint64_t i) {
                thread_local PcScratch scratch;
                hit[i] = pc_trial(big_l, mid, absorb(step_base, i), scratch) ? 1 : 0;
            });
            std::uint64_t hits = 0;
            for (const char c : hit) hits += static_cast<std::uint64_t>(c);
            const double phat =
                static_cast<double>(hits) / static_cast<double>(params.trials_per_step);
            if (phat >= 0.5)
                hi = mid;
            else
                lo = mid;
        }
        out.per_size.push_back({big_l, 0.5 * (lo + hi)});
        if (big_l == params.sizes.back()) out.std_error = hi - lo;
    }

    out.value = out.per_size.back().point;
    if (out.per_size.size() >= 2) {
        double mn = out.per_size.front().point;
        double mx = mn;
        for (const SizePoint& sp : out.per_size) {
            mn = std::min(mn, sp.point);
            mx = std::max(mx, sp.point);
        }
        out.std_error = 0.5 * (mx - mn);
    }
    return out;
}

// --------------------------------------------------------------------------
// Two-color face clusters.

const char* face_pair_name(FacePair f) {
    switch (f) {
        case FacePair::orange: return "orange";
        case FacePair::green: return "green";
        case FacePair::purple: return "purple";
    }
    return "?";
}

Color face_pair_first(FacePair f) {
    switch (f) {
        case FacePair::orange: return Color::red;
        case FacePair::green: return Color::yellow;
        case FacePair::purple: return Color::blue;
    }
    throw std::invalid_argument("bad face pair");
}

Color face_pair_second(FacePair f) {
    switch (f) {
        case FacePair::orange: return Color::yellow;
        case FacePair::green: return Color::blue;
        case FacePair::purple: return Color::red;
    }
    throw std::invalid_argument("bad face pair");
}

namespace {

struct Face {
    Cell a, b;  // lexicographically sorted
    friend bool operator==(const Face&, const Face&) = default;
};

Face make_face(const Cell& x, const Cell& y) { return x < y ? Face{x, y} : Face{y, x}; }

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::uint64_t h = 0x2c4b9e671a8d03f5;
        for (const std::int64_t v : {f.a.x, f.a.y, f.a.z, f.b.x, f.b.y, f.b.z})
            h = absorb(h, static_cast<std::uint64_t>(v));
        return static_cast<std::size_t>(h);
    }
};

// Counts the connected set of faces whose colors are exactly the pair,
// grown from the forced seed face; returns -1 when the cap was exceeded.
std::int64_t face_cluster_trial(const FaceClusterParams& params, std::uint64_t trial_seed) {
    const Color c1 = face_pair_first(params.pair);
    const Color c2 = face_pair_second(params.pair);
    const Coloring col = Coloring::fixture({{{0, 0, 0}, c1}, {{1, 1, 1}, c2}},
                                           Coloring::uniform(params.p, trial_seed));

    std::unordered_set<Face, FaceHash> seen;
    std::vector<Face> queue;
    const Face f0 = make_face({0, 0, 0}, {1, 1, 1});
    seen.insert(f0);
    queue.push_back(f0);

    for (std::size_t at = 0; at < queue.size(); ++at) {
        if (seen.size() > params.face_cap) return -1;
        const Face f = queue[at];
        const Color ca = col.at(f.a);
        const Color cb = col.at(f.b);
        // Faces sharing a boundary edge with f correspond to the cells
        // adjacent to both of its cells.
        for (const Cell& off : kNeighborOffsets) {
            const Cell d = f.a + off;
            if (d == f.b || !adjacent(d, f.b)) continue;
            const Color cd = col.at(d);
            Face next;
            if (cd == cb)
                next = make_face(f.a, d);
            else if (cd == ca)
                next = make_face(d, f.b);
            else
                continue;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return static_cast<std::int64_t>(seen.size());
}

}  // namespace

Histogram face_cluster_histogram(const FaceClusterParams& params, const ExecPolicy& exec) {
    require_trials(params.trials);
    if (params.face_cap == 0) throw std::invalid_argument("face cap must be positive");
    std::vector<std::int64_t> sizes(params.trials, -1);
    parallel_for(params.trials, exec.threads, [&](std::uint64_t i) {
        sizes[i] = face_cluster_trial(params, derive_seed(params.seed, seedtag::trial, i));
    });
    return merge_counts(sizes);
}

// --------------------------------------------------------------------------
// Prism audit.

PrismResult prism_run(const PrismParams& params) {
    if (params.n < 6)
        throw std::invalid_argument(
            "prism audit requires n >= 6: narrower prisms have no cell loop around the axis");
    if (params.height < 1) throw std::invalid_argument("height must be positive");
    require_cap(params.step_cap);

    const Coloring col = Coloring::prism(params.n, params.seed);
    const Region region = Region::prism(params.n, 0, params.height - 1);

    PrismResult out;
    out.seed = params.seed;

    for (std::int64_t k = 0; k < params.height; ++k) {
        const CellLoop loop = make_loop(layer_boundary_loop(params.n, k));
        const std::int64_t flux = loop_flux(loop, col);
        out.layer_fluxes.push_back(flux);
        if (flux != 1)
            throw ModelViolationError("layer " + std::to_string(k) + " loop carries flux " +
                                      std::to_string(flux) + ", expected 1");
    }

    // No clique on a rectangular side wall (all three cells sharing a zero
    // barycentric weight) may be three-colored: the wall color is missing.
    for (const EdgeCells& e : enumerate_edges_in(region)) {
        const LevelBarycentric b0 = barycentric_exact(e[0], params.n);
        const LevelBarycentric b1 = barycentric_exact(e[1], params.n);
        const LevelBarycentric b2 = barycentric_exact(e[2], params.n);
        for (int s = 0; s < 3; ++s) {
            if (b0.num[s] != 0 || b1.num[s] != 0 || b2.num[s] != 0) continue;
            ++out.side_cliques_checked;
            const int mask = (1 << static_cast<int>(col.at(e[0]))) |
                             (1 << static_cast<int>(col.at(e[1]))) |
                             (1 << static_cast<int>(col.at(e[2])));
            if (mask == 0b1110)
                throw ModelViolationError("three-colored clique on a side wall at " +
                                          to_string(e[0]));
        }
    }

    // A walk seeded at the bottom layer must climb to the top layer.
    const auto layer_of = [&](const Cell& c) { return prism_layer_of(params.n, c); };
    const auto in_top = [&](const EdgeState& v) {
        for (const Cell& c : v.triple()) {
            const auto l = layer_of(c);
            if (l && l->k == params.height - 1) return true;
        }
        return false;
    };

    for (const Cell& a : layer_cells(params.n, 0)) {
        if (out.chain_spans) break;
        for (const auto& pair : kCliqueOffsetPairs) {
            const Cell b = a + kNeighborOffsets[pair.i];
            const Cell c = a + kNeighborOffsets[pair.j];
            if (!region.contains(b) || !region.contains(c)) continue;
            const auto lb = layer_of(b);
            const auto lc = layer_of(c);
            if (lb && lb->k == 0 && b < a) continue;
            if (lc && lc->k == 0 && c < a) continue;
            const Color ca = col.at(a);
            const Color cb = col.at(b);
            const Color cc = col.at(c);
            const int mask = (1 << static_cast<int>(ca)) | (1 << static_cast<int>(cb)) |
                             (1 << static_cast<int>(cc));
            if (mask != 0b1110) continue;
            EdgeState s;
            s.slot(ca) = a;
            s.slot(cb) = b;
            s.slot(cc) = c;
            for (const Cell& head : edge_completions(canonical_edge(a, b, c))) {
                s.head = head;
                ++out.seeds_tried;
                const PathRecord rec =
                    trace_visit(s, col, region, params.step_cap, TraceOptions{},
                                [&](const EdgeState& v) { return !in_top(v); });
                // The visitor halts on the first top-layer state; a walk
                // exiting upward also ends on one.
                if (in_top(rec.end)) {
                    out.chain_spans = true;
                    out.chain_steps = rec.steps;
                    break;
                }
            }
            if (out.chain_spans) break;
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Phase scan over the probability simplex.

PhaseMap phase_scan(const PhaseScanParams& params, const ExecPolicy& exec) {
    if (params.resolution < 1) throw std::invalid_argument("resolution must be positive");
    require_trials(params.trials);

    PhaseMap map;
    map.n = params.n;
    map.resolution = params.resolution;
    map.trials = params.trials;
    map.seed = params.seed;

    const double res = static_cast<double>(params.resolution);
    std::uint64_t index = 0;
    for (int i = 0; i <= params.resolution; ++i) {
        for (int j = 0; i + j <= params.resolution; ++j) {
            const int k = params.resolution - i - j;
            AnnulusParams ap;
            ap.n = params.n;
            ap.p = ProbVector::of(i / res, j / res, k / res);
            ap.trials = params.trials;
            ap.step_cap = params.step_cap;
            ap.seed = derive_seed(params.seed, seedtag::scan_point, index++);
            const Estimate e = annulus_crossing(ap, exec);
            map.points.push_back({i, j, k, e.value, e.std_error});
        }
    }
    return map;
}

// --------------------------------------------------------------------------
// Order-d loop lengths.

Histogram perm_loop_length_histogram(const PermLoopParams& params, const ExecPolicy& exec) {
    perm::require_dim(params.d);
    require_trials(params.trials);
    require_cap(params.step_cap);
    std::vector<double> probs = params.probs;
    if (probs.empty())
        probs.assign(params.d - 1, 1.0 / static_cast<double>(params.d - 1));

    const perm::PermOrigin origin = perm::canonical_origin(params.d);
    std::vector<std::int64_t> lengths(params.trials, -1);
    parallel_for(params.trials, exec.threads, [&](std::uint64_t i) {
        const perm::PermColoring col = perm::PermColoring::with_overrides(
            origin.forced,
            perm::PermColoring::uniform(params.d, probs,
                                        derive_seed(params.seed, seedtag::trial, i)));
        const perm::PermPathRecord rec = perm::trace(origin.state, col, params.step_cap);
        if (rec.termination == Termination::loop_closed)
            lengths[i] = static_cast<std::int64_t>(rec.steps);
    });
    return merge_counts(lengths);
}

}  // namespace tricolor
