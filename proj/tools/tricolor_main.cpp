// tricolor: command-line laboratory for interface walks on the
// truncated-octahedron tessellation and its higher-order relatives.
//
// Every subcommand prints one JSON result record. Reruns with identical
// flags produce byte-identical records except for the "metrics" object,
// which holds wall-clock timings. Histograms can additionally be written
// as CSV (`bucket,count`), meshes as OBJ + MTL. Exit status is zero iff
// no error record was emitted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricolor/estimators.hpp"
#include "tricolor/histogram.hpp"
#include "tricolor/mesh.hpp"
#include "tricolor/permutohedral.hpp"
#include "tricolor/region.hpp"
#include "tricolor/tracer.hpp"
#include "tricolor/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tricolor;

// ---------------------------------------------------------------------------
// Record plumbing.

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

ordered_json make_record(const std::string& command) {
    ordered_json rec;
    rec["tool"] = "tricolor";
    rec["version"] = kVersion;
    rec["schema_version"] = kResultSchemaVersion;
    rec["command"] = command;
    rec["params"] = ordered_json::object();
    rec["results"] = ordered_json::object();
    rec["metrics"] = ordered_json::object();
    return rec;
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << body;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

// Prints the finished record to stdout and, when requested, to a file.
void emit_record(const ordered_json& rec, const std::string& out_path) {
    const std::string body = rec.dump(2) + "\n";
    if (!out_path.empty() && out_path != "-") write_text_file(out_path, body);
    std::cout << body;
}

int emit_error(const std::string& command, const std::string& type, const std::string& message,
               const std::string& out_path) {
    ordered_json rec;
    rec["tool"] = "tricolor";
    rec["version"] = kVersion;
    rec["schema_version"] = kResultSchemaVersion;
    rec["command"] = command;
    rec["error"] = {{"type", type}, {"message", message}};
    const std::string body = rec.dump(2) + "\n";
    if (!out_path.empty() && out_path != "-") {
        // Best effort: a broken output path must not mask the diagnostic.
        try {
            write_text_file(out_path, body);
        } catch (const std::exception&) {
        }
    }
    std::cerr << body;
    return 1;
}

std::string histogram_csv(const Histogram& h) {
    std::ostringstream csv;
    csv << "bucket,count\n";
    for (const auto& [bucket, count] : h.bins) csv << bucket << "," << count << "\n";
    return csv.str();
}

ordered_json histogram_json(const Histogram& h) {
    ordered_json bins = ordered_json::array();
    for (const auto& [bucket, count] : h.bins)
        bins.push_back({{"bucket", bucket}, {"count", count}});
    ordered_json out;
    out["bins"] = std::move(bins);
    out["truncated"] = h.truncated;
    out["total"] = h.total();
    return out;
}

ordered_json estimate_json(const Estimate& e) {
    ordered_json out;
    out["value"] = e.value;
    out["std_error"] = e.std_error;
    out["trials"] = e.trials;
    return out;
}

// ---------------------------------------------------------------------------
// Shared flag bundles.

struct CommonFlags {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out_path;  // empty or "-" = stdout only
};

void add_common(CLI::App* cmd, CommonFlags& c) {
    cmd->configurable();  // a [section] in --config files reaches this subcommand
    cmd->add_option("--seed", c.seed, "Master seed; all randomness derives from it")
        ->capture_default_str();
    cmd->add_option("--threads", c.threads, "Worker threads over independent trials")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    cmd->add_option("--out", c.out_path, "Also write the JSON record to this file");
}

struct PFlag {
    std::vector<double> values;  // two values infer the third; three must sum to 1
};

void add_p(CLI::App* cmd, PFlag& p) {
    cmd->add_option("--p", p.values,
                    "Color law: two probabilities (third inferred) or all three (must sum to 1)")
        ->delimiter(',')
        ->expected(2, 3);
}

ProbVector resolve_p(const PFlag& p) {
    if (p.values.empty()) return ProbVector::of(1.0 / 3, 1.0 / 3, 1.0 / 3);
    if (p.values.size() == 2) return ProbVector::infer(p.values[0], p.values[1]);
    return ProbVector::of(p.values[0], p.values[1], p.values[2]);
}

ordered_json p_json(const ProbVector& p) { return ordered_json::array({p.p1(), p.p2(), p.p3()}); }

// A subcommand named both in a --config section and on the command line
// triggers its callback twice; the body must still run exactly once.
std::function<void()> once(std::function<void()> body) {
    auto fired = std::make_shared<bool>(false);
    return [fired, body = std::move(body)] {
        if (!std::exchange(*fired, true)) body();
    };
}

// Runs one subcommand body, funneling failures into an error record.
int guarded(const std::string& command, const std::string& out_path,
            const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const ModelViolationError& e) {
        return emit_error(command, "model_violation", e.what(), out_path);
    } catch (const std::invalid_argument& e) {
        return emit_error(command, "invalid_argument", e.what(), out_path);
    } catch (const std::exception& e) {
        return emit_error(command, "runtime_error", e.what(), out_path);
    }
}

// ---------------------------------------------------------------------------
// Subcommands. Each setup registers flags plus a callback; parameter structs
// live in shared_ptrs captured by the callback so they outlive parsing.

struct ExitCode {
    int value = 0;
};

void setup_annulus(CLI::App& app, ExitCode& exit_code) {
    auto cmd = app.add_subcommand("annulus",
                                  "Crossing probability of the cubic annulus n < |x| <= 3n");
    auto common = std::make_shared<CommonFlags>();
    auto p = std::make_shared<PFlag>();
    auto params = std::make_shared<AnnulusParams>();
    auto unconfined = std::make_shared<bool>(false);
    add_common(cmd, *common);
    add_p(cmd, *p);
    cmd->add_option("--n", params->n, "Annulus scale (inner box reaches |x| = n)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--trials", params->trials, "Independent colorings to sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", params->step_cap, "Step budget per traced walk")
        ->capture_default_str();
    cmd->add_flag("--unconfined", *unconfined, "Let walks roam the full box, hole included");
    cmd->callback(once([&exit_code, common, p, params, unconfined] {
        exit_code.value = guarded("annulus", common->out_path, [&] {
            params->p = resolve_p(*p);
            params->seed = common->seed;
            params->confined = !*unconfined;
            Stopwatch watch;
            const Estimate est = annulus_crossing(*params, {common->threads});
            ordered_json rec = make_record("annulus");
            rec["params"] = {{"n", params->n},           {"p", p_json(params->p)},
                             {"trials", params->trials}, {"cap", params->step_cap},
                             {"seed", params->seed},     {"confined", params->confined}};
            rec["results"] = estimate_json(est);
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

void setup_loops(CLI::App& app, ExitCode& exit_code) {
    auto cmd =
        app.add_subcommand("loops", "Loop-length histogram of the walk through the origin");
    auto common = std::make_shared<CommonFlags>();
    auto p = std::make_shared<PFlag>();
    auto params = std::make_shared<LoopHistogramParams>();
    auto csv_path = std::make_shared<std::string>();
    add_common(cmd, *common);
    add_p(cmd, *p);
    cmd->add_option("--trials", params->trials, "Independent colorings to sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", params->step_cap, "Step budget per traced walk")
        ->capture_default_str();
    cmd->add_option("--csv", *csv_path, "Write the histogram as CSV (bucket,count) to this file");
    cmd->callback(once([&exit_code, common, p, params, csv_path] {
        exit_code.value = guarded("loops", common->out_path, [&] {
            params->p = resolve_p(*p);
            params->seed = common->seed;
            Stopwatch watch;
            const Histogram hist = loop_length_histogram(*params, {common->threads});
            if (!csv_path->empty()) write_text_file(*csv_path, histogram_csv(hist));
            ordered_json rec = make_record("loops");
            rec["params"] = {{"p", p_json(params->p)},
                             {"trials", params->trials},
                             {"cap", params->step_cap},
                             {"seed", params->seed}};
            rec["results"] = {{"histogram", histogram_json(hist)}};
            if (!csv_path->empty()) rec["results"]["csv"] = *csv_path;
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

void setup_scale(CLI::App& app, ExitCode& exit_code) {
    auto cmd = app.add_subcommand(
        "scale", "Growth exponent of mean squared displacement vs walk length");
    auto common = std::make_shared<CommonFlags>();
    auto p = std::make_shared<PFlag>();
    auto params = std::make_shared<ScalingParams>();
    add_common(cmd, *common);
    add_p(cmd, *p);
    cmd->add_option("--lengths", params->lengths,
                    "Ascending walk lengths to probe (comma separated)")
        ->delimiter(',')
        ->required();
    cmd->add_option("--trials", params->trials, "Walks per length sweep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--bootstrap", params->bootstrap, "Bootstrap resamples behind the error bar")
        ->capture_default_str();
    cmd->callback(once([&exit_code, common, p, params] {
        exit_code.value = guarded("scale", common->out_path, [&] {
            params->p = resolve_p(*p);
            params->seed = common->seed;
            Stopwatch watch;
            const ScalingResult res = scaling_exponent(*params, {common->threads});
            ordered_json points = ordered_json::array();
            for (const LengthStat& s : res.points)
                points.push_back(
                    {{"length", s.length}, {"mean_r2", s.mean_r2}, {"survivors", s.survivors}});
            ordered_json rec = make_record("scale");
            rec["params"] = {{"p", p_json(params->p)},
                             {"lengths", params->lengths},
                             {"trials", params->trials},
                             {"bootstrap", params->bootstrap},
                             {"seed", params->seed}};
            rec["results"] = {{"slope", res.slope},
                              {"std_error", res.std_error},
                              {"points", std::move(points)},
                              {"trials", res.trials}};
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

void setup_pc(CLI::App& app, ExitCode& exit_code) {
    auto cmd =
        app.add_subcommand("pc", "Critical openness for site percolation on the cell graph");
    auto common = std::make_shared<CommonFlags>();
    auto params = std::make_shared<PcParams>();
    add_common(cmd, *common);
    cmd->add_option("--sizes", params->sizes, "Box sizes L (window [0,2L)^3, comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--trials", params->trials_per_step, "Trials per bisection step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--qlo", params->q_lo, "Lower end of the bisection bracket")
        ->capture_default_str();
    cmd->add_option("--qhi", params->q_hi, "Upper end of the bisection bracket")
        ->capture_default_str();
    cmd->add_option("--iters", params->iterations, "Bisection iterations per size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback(once([&exit_code, common, params] {
        exit_code.value = guarded("pc", common->out_path, [&] {
            params->seed = common->seed;
            Stopwatch watch;
            const PcResult res = estimate_pc(*params, {common->threads});
            ordered_json per_size = ordered_json::array();
            for (const SizePoint& s : res.per_size)
                per_size.push_back({{"size", s.size}, {"point", s.point}});
            ordered_json rec = make_record("pc");
            rec["params"] = {{"sizes", params->sizes},
                             {"trials", params->trials_per_step},
                             {"qlo", params->q_lo},
                             {"qhi", params->q_hi},
                             {"iters", params->iterations},
                             {"seed", params->seed}};
            rec["results"] = {{"value", res.value},
                              {"std_error", res.std_error},
                              {"per_size", std::move(per_size)},
                              {"trials_per_step", res.trials_per_step}};
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

void setup_faces(CLI::App& app, ExitCode& exit_code) {
    auto cmd = app.add_subcommand("faces",
                                  "Cluster-size histogram of two-color faces around a seed face");
    auto common = std::make_shared<CommonFlags>();
    auto p = std::make_shared<PFlag>();
    auto params = std::make_shared<FaceClusterParams>();
    auto csv_path = std::make_shared<std::string>();
    add_common(cmd, *common);
    add_p(cmd, *p);
    const std::map<std::string, FacePair> pair_names{{"orange", FacePair::orange},
                                                     {"green", FacePair::green},
                                                     {"purple", FacePair::purple}};
    cmd->add_option("--pair", params->pair,
                    "Face kind: orange (red|yellow), green (yellow|blue), purple (blue|red)")
        ->transform(CLI::CheckedTransformer(pair_names, CLI::ignore_case))
        ->capture_default_str();
    cmd->add_option("--trials", params->trials, "Independent colorings to sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", params->face_cap, "Face budget per cluster search")
        ->capture_default_str();
    cmd->add_option("--csv", *csv_path, "Write the histogram as CSV (bucket,count) to this file");
    cmd->callback(once([&exit_code, common, p, params, csv_path] {
        exit_code.value = guarded("faces", common->out_path, [&] {
            params->p = resolve_p(*p);
            params->seed = common->seed;
            Stopwatch watch;
            const Histogram hist = face_cluster_histogram(*params, {common->threads});
            if (!csv_path->empty()) write_text_file(*csv_path, histogram_csv(hist));
            ordered_json rec = make_record("faces");
            rec["params"] = {{"p", p_json(params->p)},
                             {"pair", face_pair_name(params->pair)},
                             {"trials", params->trials},
                             {"cap", params->face_cap},
                             {"seed", params->seed}};
            rec["results"] = {{"histogram", histogram_json(hist)}};
            if (!csv_path->empty()) rec["results"]["csv"] = *csv_path;
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

void setup_prism(CLI::App& app, ExitCode& exit_code) {
    auto cmd = app.add_subcommand(
        "prism", "Structural audit of the layered prism coloring: per-layer flux must be one");
    auto common = std::make_shared<CommonFlags>();
    auto params = std::make_shared<PrismParams>();
    add_common(cmd, *common);
    cmd->add_option("--n", params->n, "Diagonal width of the prism (at least 6)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--height", params->height, "Number of layers audited, k = 0..height-1")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", params->step_cap, "Step budget for the spanning walk")
        ->capture_default_str();
    cmd->callback(once([&exit_code, common, params] {
        exit_code.value = guarded("prism", common->out_path, [&] {
            params->seed = common->seed;
            Stopwatch watch;
            const PrismResult res = prism_run(*params);
            ordered_json rec = make_record("prism");
            rec["params"] = {{"n", params->n},
                             {"height", params->height},
                             {"cap", params->step_cap},
                             {"seed", params->seed}};
            rec["results"] = {{"layer_fluxes", res.layer_fluxes},
                              {"side_cliques_checked", res.side_cliques_checked},
                              {"chain_spans", res.chain_spans},
                              {"chain_steps", res.chain_steps},
                              {"seeds_tried", res.seeds_tried}};
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

void setup_scan(CLI::App& app, ExitCode& exit_code) {
    auto cmd = app.add_subcommand(
        "scan", "Annulus-crossing probability over a grid of color laws on the simplex");
    auto common = std::make_shared<CommonFlags>();
    auto params = std::make_shared<PhaseScanParams>();
    add_common(cmd, *common);
    cmd->add_option("--n", params->n, "Annulus scale per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--resolution", params->resolution,
                    "Simplex subdivisions: laws are (i,j,k)/resolution")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--trials", params->trials, "Trials per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", params->step_cap, "Step budget per traced walk")
        ->capture_default_str();
    cmd->callback(once([&exit_code, common, params] {
        exit_code.value = guarded("scan", common->out_path, [&] {
            params->seed = common->seed;
            Stopwatch watch;
            const PhaseMap map = phase_scan(*params, {common->threads});
            ordered_json points = ordered_json::array();
            for (const PhasePoint& pt : map.points)
                points.push_back({{"i", pt.i},
                                  {"j", pt.j},
                                  {"k", pt.k},
                                  {"estimate", pt.estimate},
                                  {"std_error", pt.std_error}});
            ordered_json rec = make_record("scan");
            rec["params"] = {{"n", params->n},
                             {"resolution", params->resolution},
                             {"trials", params->trials},
                             {"cap", params->step_cap},
                             {"seed", params->seed}};
            rec["results"] = {{"points", std::move(points)}};
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

void setup_perm(CLI::App& app, ExitCode& exit_code) {
    auto cmd = app.add_subcommand(
        "perm", "Loop-length histogram for the order-d lattice walk from its origin");
    auto common = std::make_shared<CommonFlags>();
    auto params = std::make_shared<PermLoopParams>();
    auto csv_path = std::make_shared<std::string>();
    add_common(cmd, *common);
    cmd->add_option("--d", params->d, "Lattice order (3 to 16); colors number d-1")
        ->check(CLI::Range(perm::kMinDim, perm::kMaxDim))
        ->capture_default_str();
    cmd->add_option("--probs", params->probs,
                    "d-1 color probabilities (comma separated; default uniform)")
        ->delimiter(',');
    cmd->add_option("--trials", params->trials, "Independent colorings to sample")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", params->step_cap, "Step budget per traced walk")
        ->capture_default_str();
    cmd->add_option("--csv", *csv_path, "Write the histogram as CSV (bucket,count) to this file");
    cmd->callback(once([&exit_code, common, params, csv_path] {
        exit_code.value = guarded("perm", common->out_path, [&] {
            params->seed = common->seed;
            Stopwatch watch;
            const Histogram hist = perm_loop_length_histogram(*params, {common->threads});
            if (!csv_path->empty()) write_text_file(*csv_path, histogram_csv(hist));
            ordered_json rec = make_record("perm");
            rec["params"] = {{"d", params->d},
                             {"probs", params->probs},
                             {"trials", params->trials},
                             {"cap", params->step_cap},
                             {"seed", params->seed}};
            rec["results"] = {{"histogram", histogram_json(hist)}};
            if (!csv_path->empty()) rec["results"]["csv"] = *csv_path;
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

// ---------------------------------------------------------------------------
// Mesh export: either an explicit cell list from a file, or the cells
// touched by one traced walk.

struct CellListing {
    std::vector<Cell> cells;
    std::vector<Color> colors;  // empty = all gray
};

// File format: one cell per line, "x y z" or "x y z color" with color in
// {red, yellow, blue}. '#' starts a comment. Either every listed cell
// carries a color or none does.
CellListing read_cell_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cell list: " + path);
    CellListing listing;
    std::size_t colored = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        Cell c{};
        if (!(fields >> c.x >> c.y >> c.z)) {
            std::string leftover;
            if (fields.clear(), fields >> leftover)
                throw std::invalid_argument("bad cell line " + std::to_string(line_no) + " in " +
                                            path);
            continue;  // blank or comment-only line
        }
        listing.cells.push_back(c);
        std::string word;
        if (fields >> word) {
            Color col;
            if (word == "red")
                col = Color::red;
            else if (word == "yellow")
                col = Color::yellow;
            else if (word == "blue")
                col = Color::blue;
            else
                throw std::invalid_argument("unknown color '" + word + "' on line " +
                                            std::to_string(line_no) + " in " + path);
            listing.colors.push_back(col);
            ++colored;
        }
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("trailing text on line " + std::to_string(line_no) +
                                        " in " + path);
    }
    if (colored != 0 && colored != listing.cells.size())
        throw std::invalid_argument("cell list mixes colored and uncolored lines: " + path);
    if (colored == 0) listing.colors.clear();
    return listing;
}

// Collects the colored cells touched by the walk through the canonical
// origin state, in first-visit order.
CellListing walk_cells(const ProbVector& p, std::uint64_t seed, std::uint64_t step_cap,
                       std::int64_t radius) {
    const OriginState origin = canonical_origin_state();
    const Coloring col = Coloring::fixture(origin.forced, Coloring::uniform(p, seed));
    const Region region = Region::box(radius);

    CellListing listing;
    std::unordered_map<Cell, bool, CellHash> seen;
    const auto visit = [&](const EdgeState& s) {
        for (const Cell& c : s.triple()) {
            if (auto [it, inserted] = seen.emplace(c, true); inserted) {
                listing.cells.push_back(c);
                listing.colors.push_back(col.at(c));
            }
        }
        return true;
    };
    trace_visit(origin.state, col, region, step_cap, TraceOptions{}, visit);
    return listing;
}

void setup_export(CLI::App& app, ExitCode& exit_code) {
    auto cmd = app.add_subcommand(
        "export", "Write an OBJ + MTL mesh of truncated-octahedron cells");
    auto common = std::make_shared<CommonFlags>();
    auto p = std::make_shared<PFlag>();
    auto obj_path = std::make_shared<std::string>();
    auto cells_path = std::make_shared<std::string>();
    auto walk = std::make_shared<bool>(false);
    auto cap = std::make_shared<std::uint64_t>(100'000);
    auto radius = std::make_shared<std::int64_t>(64);
    add_common(cmd, *common);
    add_p(cmd, *p);
    cmd->add_option("--obj", *obj_path, "Output OBJ path (a sibling .mtl is written)")
        ->required();
    auto cells_opt =
        cmd->add_option("--cells", *cells_path, "Cell list file: 'x y z [color]' per line");
    cmd->add_flag("--walk", *walk, "Export the cells touched by one traced walk instead")
        ->excludes(cells_opt);
    cmd->add_option("--cap", *cap, "Step budget for --walk")->capture_default_str();
    cmd->add_option("--radius", *radius, "Bounding box radius for --walk")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback(once([&exit_code, common, p, obj_path, cells_path, walk, cap, radius] {
        exit_code.value = guarded("export", common->out_path, [&] {
            if (!*walk && cells_path->empty())
                throw std::invalid_argument("export needs --cells FILE or --walk");
            Stopwatch watch;
            const CellListing listing =
                *walk ? walk_cells(resolve_p(*p), common->seed, *cap, *radius)
                      : read_cell_file(*cells_path);
            const MeshStats stats = export_cells_obj(listing.cells, listing.colors, *obj_path);
            ordered_json rec = make_record("export");
            rec["params"] = {{"obj", *obj_path},
                             {"source", *walk ? "walk" : "cells"},
                             {"seed", common->seed}};
            if (*walk) {
                rec["params"]["p"] = p_json(resolve_p(*p));
                rec["params"]["cap"] = *cap;
                rec["params"]["radius"] = *radius;
            } else {
                rec["params"]["cells"] = *cells_path;
            }
            rec["results"] = {{"cells", stats.cells},
                              {"vertices", stats.vertices},
                              {"faces", stats.faces}};
            rec["metrics"] = {{"wall_seconds", watch.seconds()}};
            emit_record(rec, common->out_path);
        });
    }));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interface-walk laboratory on the truncated-octahedron tessellation"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "", "Read options from an INI/TOML file (sections per subcommand)");
    app.require_subcommand(1);

    ExitCode exit_code;
    setup_annulus(app, exit_code);
    setup_loops(app, exit_code);
    setup_scale(app, exit_code);
    setup_pc(app, exit_code);
    setup_faces(app, exit_code);
    setup_prism(app, exit_code);
    setup_scan(app, exit_code);
    setup_perm(app, exit_code);
    setup_export(app, exit_code);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        const std::string command = argc > 1 ? argv[1] : "";
        emit_error(command, "usage_error", e.what(), "");
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    }
    return exit_code.value;
}
