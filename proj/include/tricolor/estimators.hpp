#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricolor/coloring.hpp"
#include "tricolor/histogram.hpp"
#include "tricolor/tracer.hpp"

namespace tricolor {

// Raised when a structural guarantee of the colored-prism construction
// fails (it never should): a layer loop whose flux is not one, or a
// three-colored clique sitting on a rectangular side wall.
struct ModelViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExecPolicy {
    unsigned threads = 1;
};

struct Estimate {
    double value = 0;
    double std_error = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Canonical start state at the origin: red (0,0,0), yellow (1,1,1),
// blue (-1,1,1), head (0,0,2). The forced overrides pin the three colored
// cells so the state is valid over any background.
struct OriginState {
    EdgeState state;
    Coloring::Overrides forced;
};
OriginState canonical_origin_state();

// ---------------------------------------------------------------------------
// Annulus crossing probability.
//
// A trial samples an i.i.d. coloring and asks whether some interface walk
// confined to the annulus {n < linf <= 3n} connects its inner boundary
// collar (a cell with linf in (n, n+2]) to its outer collar (a cell with
// linf >= 3n - 2). Walk components are enumerated once each by seeding
// every tricolor clique touching the inner collar and tracing both
// directions, consuming seed states already covered by earlier traces.
// With confined = false the walk may roam the whole box {linf <= 3n},
// including the hole, and crossing is judged by the same collars.
struct AnnulusParams {
    std::int64_t n = 8;
    ProbVector p = ProbVector::of(1.0 / 3, 1.0 / 3, 1.0 / 3);
    std::uint64_t trials = 100;
    std::uint64_t step_cap = 10'000'000;
    std::uint64_t seed = 0;
    bool confined = true;
};
Estimate annulus_crossing(const AnnulusParams& params, const ExecPolicy& exec = {});

// ---------------------------------------------------------------------------
// Loop length histogram from the canonical origin state.
struct LoopHistogramParams {
    ProbVector p = ProbVector::of(1.0 / 3, 1.0 / 3, 1.0 / 3);
    std::uint64_t trials = 1000;
    std::uint64_t step_cap = 1'000'000;
    std::uint64_t seed = 0;
};
Histogram loop_length_histogram(const LoopHistogramParams& params, const ExecPolicy& exec = {});

// ---------------------------------------------------------------------------
// Growth exponent of mean squared head displacement versus walk length.
struct ScalingParams {
    ProbVector p = ProbVector::of(1.0 / 3, 1.0 / 3, 1.0 / 3);
    std::vector<std::uint64_t> lengths;  // ascending distinct step counts
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t bootstrap = 200;  // resamples behind the slope error bar
};
struct LengthStat {
    std::uint64_t length = 0;
    double mean_r2 = 0;        // over walks still alive at this length
    std::uint64_t survivors = 0;
};
struct ScalingResult {
    double slope = 0;       // d log E[R^2] / d log L, least squares
    double std_error = 0;   // bootstrap spread over trials
    std::vector<LengthStat> points;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};
ScalingResult scaling_exponent(const ScalingParams& params, const ExecPolicy& exec = {});

// ---------------------------------------------------------------------------
// Critical openness threshold for site percolation on the cell adjacency
// graph. For each box size L the cells live in the coordinate window
// [0, 2L)^3; a trial opens each cell independently with probability q and
// asks for an open path from the x in {0, 1} wall to the x >= 2L - 2 wall.
// Bisection on q pins the 50% crossing point per size; the reported value
// is the largest size's point and the error bar is half the spread across
// sizes (or the final bisection bracket width for a single size).
struct PcParams {
    std::vector<std::int64_t> sizes = {16, 32};
    std::uint64_t trials_per_step = 2000;
    std::uint64_t seed = 0;
    double q_lo = 0.05;
    double q_hi = 0.50;
    int iterations = 12;
};
struct SizePoint {
    std::int64_t size = 0;
    double point = 0;
};
struct PcResult {
    double value = 0;
    double std_error = 0;
    std::vector<SizePoint> per_size;
    std::uint64_t trials_per_step = 0;
    std::uint64_t seed = 0;
};
PcResult estimate_pc(const PcParams& params, const ExecPolicy& exec = {});

// ---------------------------------------------------------------------------
// Cluster size of two-color faces around a forced seed face. Faces are
// unordered adjacent cell pairs whose colors are exactly the chosen pair;
// two faces are adjacent when they share a boundary edge, i.e. their union
// is a 3-clique. The seed face (0,0,0)-(1,1,1) is forced to the pair's
// colors; the histogram bins hold face counts of the resulting cluster.
enum class FacePair { orange, green, purple };  // red|yellow, yellow|blue, blue|red
const char* face_pair_name(FacePair f);
Color face_pair_first(FacePair f);
Color face_pair_second(FacePair f);

struct FaceClusterParams {
    ProbVector p = ProbVector::of(1.0 / 3, 1.0 / 3, 1.0 / 3);
    FacePair pair = FacePair::orange;
    std::uint64_t trials = 1000;
    std::uint64_t face_cap = 1'000'000;
    std::uint64_t seed = 0;
};
Histogram face_cluster_histogram(const FaceClusterParams& params, const ExecPolicy& exec = {});

// ---------------------------------------------------------------------------
// Structural audit of the colored prism: every layer boundary loop in the
// height window must carry flux exactly one, no rectangular-side clique may
// be three-colored, and a walk seeded in the bottom layer must reach the
// top layer. Violations of the first two raise ModelViolationError.
// Requires n >= 6: smaller diagonal widths have no encircling loop.
struct PrismParams {
    std::int64_t n = 8;
    std::int64_t height = 8;   // layers k = 0 .. height-1
    std::uint64_t step_cap = 100'000'000;
    std::uint64_t seed = 0;
};
struct PrismResult {
    std::vector<std::int64_t> layer_fluxes;
    std::uint64_t side_cliques_checked = 0;
    bool chain_spans = false;
    std::uint64_t chain_steps = 0;  // steps of the first spanning walk
    std::uint64_t seeds_tried = 0;
    std::uint64_t seed = 0;
};
PrismResult prism_run(const PrismParams& params);

// ---------------------------------------------------------------------------
// Crossing probability over the barycentric probability simplex.
struct PhaseScanParams {
    std::int64_t n = 8;
    int resolution = 10;  // p = (i, j, k) / resolution with i + j + k = resolution
    std::uint64_t trials = 50;
    std::uint64_t step_cap = 10'000'000;
    std::uint64_t seed = 0;
};
struct PhasePoint {
    int i = 0, j = 0, k = 0;
    double estimate = 0;
    double std_error = 0;
};
struct PhaseMap {
    std::int64_t n = 0;
    int resolution = 0;
    std::vector<PhasePoint> points;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};
PhaseMap phase_scan(const PhaseScanParams& params, const ExecPolicy& exec = {});

// ---------------------------------------------------------------------------
// Loop length histogram for the order-d walk from its canonical origin.
struct PermLoopParams {
    std::size_t d = 4;
    std::vector<double> probs;  // size d-1; empty means uniform
    std::uint64_t trials = 1000;
    std::uint64_t step_cap = 1'000'000;
    std::uint64_t seed = 0;
};
Histogram perm_loop_length_histogram(const PermLoopParams& params, const ExecPolicy& exec = {});

}  // namespace tricolor
