// Python bindings for the walk-and-percolation toolkit. Estimator results
// come back as plain dicts so scripts can serialize them directly; heavy
// computations release the GIL.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricolor/estimators.hpp"
#include "tricolor/flow.hpp"
#include "tricolor/geometry.hpp"
#include "tricolor/histogram.hpp"
#include "tricolor/mesh.hpp"
#include "tricolor/version.hpp"

namespace py = pybind11;
using namespace tricolor;

namespace {

using Triple = std::array<std::int64_t, 3>;
using MaybeProbs = std::optional<std::vector<double>>;

ProbVector parse_p(const MaybeProbs& p) {
    if (!p || p->empty()) return ProbVector::of(1.0 / 3, 1.0 / 3, 1.0 / 3);
    if (p->size() == 2) return ProbVector::infer((*p)[0], (*p)[1]);
    if (p->size() == 3) return ProbVector::of((*p)[0], (*p)[1], (*p)[2]);
    throw std::invalid_argument("p takes two entries (third inferred) or three");
}

Cell parse_cell(const Triple& t) { return Cell{t[0], t[1], t[2]}; }

FacePair parse_pair(const std::string& name) {
    if (name == "orange") return FacePair::orange;
    if (name == "green") return FacePair::green;
    if (name == "purple") return FacePair::purple;
    throw std::invalid_argument("pair must be orange, green, or purple");
}

Color parse_color(const std::string& name) {
    if (name == "red") return Color::red;
    if (name == "yellow") return Color::yellow;
    if (name == "blue") return Color::blue;
    throw std::invalid_argument("color must be red, yellow, or blue");
}

py::dict histogram_dict(const Histogram& h) {
    py::dict bins;
    for (const auto& [bucket, count] : h.bins) bins[py::int_(bucket)] = py::int_(count);
    py::dict out;
    out["bins"] = bins;
    out["truncated"] = h.truncated;
    out["total"] = h.total();
    return out;
}

py::dict estimate_dict(const Estimate& e) {
    py::dict out;
    out["value"] = e.value;
    out["std_error"] = e.std_error;
    out["trials"] = e.trials;
    out["seed"] = e.seed;
    return out;
}

ExecPolicy exec_of(unsigned threads) {
    ExecPolicy exec;
    exec.threads = threads;
    return exec;
}

}  // namespace

PYBIND11_MODULE(_tricolor, m) {
    m.doc() = "Interface walks and percolation estimators on the truncated-octahedron "
              "tessellation, with an order-d permutohedral generalization.";
    m.attr("__version__") = kVersion;

    // --- lattice primitives -------------------------------------------------
    m.def(
        "neighbors",
        [](const Triple& cell) {
            std::vector<Triple> out;
            for (const Cell& n : neighbors(parse_cell(cell))) out.push_back({n.x, n.y, n.z});
            return out;
        },
        py::arg("cell"),
        "The 14 face-sharing neighbors of a cell, as coordinate triples.");

    m.def(
        "is_adjacent",
        [](const Triple& a, const Triple& b) { return adjacent(parse_cell(a), parse_cell(b)); },
        py::arg("a"), py::arg("b"), "Whether two cells share a face.");

    m.def(
        "loop_flux",
        [](const std::vector<Triple>& cells, const MaybeProbs& p, std::uint64_t seed) {
            std::vector<Cell> cs;
            cs.reserve(cells.size());
            for (const Triple& t : cells) cs.push_back(parse_cell(t));
            const CellLoop loop = make_loop(std::move(cs));
            const Coloring col = Coloring::uniform(parse_p(p), seed);
            py::gil_scoped_release release;
            return loop_flux(loop, col);
        },
        py::arg("cells"), py::arg("p") = py::none(), py::arg("seed") = 0,
        "Circulation of the sampled color field around a closed cell loop.");

    // --- estimators ----------------------------------------------------------
    m.def(
        "annulus_crossing",
        [](std::int64_t n, const MaybeProbs& p, std::uint64_t trials, std::uint64_t step_cap,
           std::uint64_t seed, bool confined, unsigned threads) {
            AnnulusParams params;
            params.n = n;
            params.p = parse_p(p);
            params.trials = trials;
            params.step_cap = step_cap;
            params.seed = seed;
            params.confined = confined;
            Estimate est;
            {
                py::gil_scoped_release release;
                est = annulus_crossing(params, exec_of(threads));
            }
            return estimate_dict(est);
        },
        py::arg("n") = 8, py::arg("p") = py::none(), py::arg("trials") = 100,
        py::arg("step_cap") = 10'000'000, py::arg("seed") = 0, py::arg("confined") = true,
        py::arg("threads") = 1,
        "Probability that an interface walk connects the inner and outer collars "
        "of the annulus {n < linf <= 3n}.");

    m.def(
        "loop_lengths",
        [](const MaybeProbs& p, std::uint64_t trials, std::uint64_t step_cap, std::uint64_t seed,
           unsigned threads) {
            LoopHistogramParams params;
            params.p = parse_p(p);
            params.trials = trials;
            params.step_cap = step_cap;
            params.seed = seed;
            Histogram hist;
            {
                py::gil_scoped_release release;
                hist = loop_length_histogram(params, exec_of(threads));
            }
            return histogram_dict(hist);
        },
        py::arg("p") = py::none(), py::arg("trials") = 1000, py::arg("step_cap") = 1'000'000,
        py::arg("seed") = 0, py::arg("threads") = 1,
        "Histogram of closed-walk lengths from the canonical origin state; walks "
        "hitting the step cap land in the truncated bucket.");

    m.def(
        "scaling_exponent",
        [](const std::vector<std::uint64_t>& lengths, const MaybeProbs& p, std::uint64_t trials,
           std::uint64_t seed, std::uint64_t bootstrap, unsigned threads) {
            ScalingParams params;
            params.lengths = lengths;
            params.p = parse_p(p);
            params.trials = trials;
            params.seed = seed;
            params.bootstrap = bootstrap;
            ScalingResult res;
            {
                py::gil_scoped_release release;
                res = scaling_exponent(params, exec_of(threads));
            }
            py::dict out;
            out["slope"] = res.slope;
            out["std_error"] = res.std_error;
            py::list points;
            for (const LengthStat& s : res.points) {
                py::dict row;
                row["length"] = s.length;
                row["mean_r2"] = s.mean_r2;
                row["survivors"] = s.survivors;
                points.append(row);
            }
            out["points"] = points;
            out["trials"] = res.trials;
            out["seed"] = res.seed;
            return out;
        },
        py::arg("lengths"), py::arg("p") = py::none(), py::arg("trials") = 1000,
        py::arg("seed") = 0, py::arg("bootstrap") = 200, py::arg("threads") = 1,
        "Growth exponent of mean squared head displacement versus walk length.");

    m.def(
        "estimate_pc",
        [](const std::vector<std::int64_t>& sizes, std::uint64_t trials_per_step,
           std::uint64_t seed, double q_lo, double q_hi, int iterations, unsigned threads) {
            PcParams params;
            params.sizes = sizes;
            params.trials_per_step = trials_per_step;
            params.seed = seed;
            params.q_lo = q_lo;
            params.q_hi = q_hi;
            params.iterations = iterations;
            PcResult res;
            {
                py::gil_scoped_release release;
                res = estimate_pc(params, exec_of(threads));
            }
            py::dict out;
            out["value"] = res.value;
            out["std_error"] = res.std_error;
            py::list per_size;
            for (const SizePoint& s : res.per_size) {
                py::dict row;
                row["size"] = s.size;
                row["point"] = s.point;
                per_size.append(row);
            }
            out["per_size"] = per_size;
            out["trials_per_step"] = res.trials_per_step;
            out["seed"] = res.seed;
            return out;
        },
        py::arg("sizes") = std::vector<std::int64_t>{16, 32}, py::arg("trials_per_step") = 2000,
        py::arg("seed") = 0, py::arg("q_lo") = 0.05, py::arg("q_hi") = 0.50,
        py::arg("iterations") = 12, py::arg("threads") = 1,
        "Bisection estimate of the site-percolation threshold on the 14-neighbor "
        "cell adjacency graph.");

    m.def(
        "face_clusters",
        [](const std::string& pair, const MaybeProbs& p, std::uint64_t trials,
           std::uint64_t face_cap, std::uint64_t seed, unsigned threads) {
            FaceClusterParams params;
            params.pair = parse_pair(pair);
            params.p = parse_p(p);
            params.trials = trials;
            params.face_cap = face_cap;
            params.seed = seed;
            Histogram hist;
            {
                py::gil_scoped_release release;
                hist = face_cluster_histogram(params, exec_of(threads));
            }
            return histogram_dict(hist);
        },
        py::arg("pair") = "orange", py::arg("p") = py::none(), py::arg("trials") = 1000,
        py::arg("face_cap") = 1'000'000, py::arg("seed") = 0, py::arg("threads") = 1,
        "Histogram of two-color face cluster sizes grown from a forced seed face.");

    m.def(
        "prism_run",
        [](std::int64_t n, std::int64_t height, std::uint64_t step_cap, std::uint64_t seed) {
            PrismParams params;
            params.n = n;
            params.height = height;
            params.step_cap = step_cap;
            params.seed = seed;
            PrismResult res;
            {
                py::gil_scoped_release release;
                res = prism_run(params);
            }
            py::dict out;
            out["layer_fluxes"] = res.layer_fluxes;
            out["side_cliques_checked"] = res.side_cliques_checked;
            out["chain_spans"] = res.chain_spans;
            out["chain_steps"] = res.chain_steps;
            out["seeds_tried"] = res.seeds_tried;
            out["seed"] = res.seed;
            return out;
        },
        py::arg("n") = 8, py::arg("height") = 8, py::arg("step_cap") = 100'000'000,
        py::arg("seed") = 0,
        "Audit a layered prism coloring: layer fluxes, side-wall cliques, and "
        "whether a walk spans bottom to top. Raises RuntimeError on a structural "
        "violation.");

    m.def(
        "phase_scan",
        [](std::int64_t n, int resolution, std::uint64_t trials, std::uint64_t step_cap,
           std::uint64_t seed, unsigned threads) {
            PhaseScanParams params;
            params.n = n;
            params.resolution = resolution;
            params.trials = trials;
            params.step_cap = step_cap;
            params.seed = seed;
            PhaseMap map;
            {
                py::gil_scoped_release release;
                map = phase_scan(params, exec_of(threads));
            }
            py::dict out;
            out["n"] = map.n;
            out["resolution"] = map.resolution;
            py::list points;
            for (const PhasePoint& pt : map.points) {
                py::dict row;
                row["i"] = pt.i;
                row["j"] = pt.j;
                row["k"] = pt.k;
                row["estimate"] = pt.estimate;
                row["std_error"] = pt.std_error;
                points.append(row);
            }
            out["points"] = points;
            out["trials"] = map.trials;
            out["seed"] = map.seed;
            return out;
        },
        py::arg("n") = 8, py::arg("resolution") = 10, py::arg("trials") = 50,
        py::arg("step_cap") = 10'000'000, py::arg("seed") = 0, py::arg("threads") = 1,
        "Annulus crossing probability over the lattice of laws (i, j, k) / resolution.");

    m.def(
        "perm_loop_lengths",
        [](std::size_t d, const MaybeProbs& probs, std::uint64_t trials, std::uint64_t step_cap,
           std::uint64_t seed, unsigned threads) {
            PermLoopParams params;
            params.d = d;
            if (probs) params.probs = *probs;
            params.trials = trials;
            params.step_cap = step_cap;
            params.seed = seed;
            Histogram hist;
            {
                py::gil_scoped_release release;
                hist = perm_loop_length_histogram(params, exec_of(threads));
            }
            return histogram_dict(hist);
        },
        py::arg("d") = 4, py::arg("probs") = py::none(), py::arg("trials") = 1000,
        py::arg("step_cap") = 1'000'000, py::arg("seed") = 0, py::arg("threads") = 1,
        "Closed-walk length histogram for the order-d generalization; probs lists "
        "d-1 label probabilities (empty for uniform).");

    m.def(
        "export_obj",
        [](const std::string& path, const std::vector<Triple>& cells,
           const std::optional<std::vector<std::string>>& colors) {
            std::vector<Cell> cs;
            cs.reserve(cells.size());
            for (const Triple& t : cells) cs.push_back(parse_cell(t));
            std::vector<Color> cols;
            if (colors) {
                cols.reserve(colors->size());
                for (const std::string& name : *colors) cols.push_back(parse_color(name));
            }
            MeshStats stats;
            {
                py::gil_scoped_release release;
                stats = export_cells_obj(cs, cols, path);
            }
            py::dict out;
            out["cells"] = stats.cells;
            out["vertices"] = stats.vertices;
            out["faces"] = stats.faces;
            return out;
        },
        py::arg("path"), py::arg("cells"), py::arg("colors") = py::none(),
        "Write cells as truncated octahedra to a Wavefront OBJ file (with a "
        "sibling .mtl); colors, when given, name one material per cell.");
}
