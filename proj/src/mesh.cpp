#include "tricolor/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace tricolor {

namespace {

// Vertex coordinates in quarter units: every permutation of (0, +-2, +-4).
struct QVertex {
    int x, y, z;
    int operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

std::array<QVertex, 24> make_vertices() {
    std::array<QVertex, 24> out{};
    std::size_t at = 0;
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms)
        for (const int s1 : {2, -2})
            for (const int s2 : {4, -4}) {
                int v[3] = {0, 0, 0};
                v[p[1]] = s1;
                v[p[2]] = s2;
                const QVertex q{v[0], v[1], v[2]};
                bool dup = false;
                for (std::size_t i = 0; i < at; ++i)
                    if (out[i].x == q.x && out[i].y == q.y && out[i].z == q.z) dup = true;
                if (!dup) out[at++] = q;
            }
    if (at != 24) throw std::logic_error("expected 24 cell vertices");
    return out;
}

struct FaceTable {
    std::array<QVertex, 24> verts;
    std::vector<std::vector<int>> faces;  // vertex indices, outward counterclockwise
};

const FaceTable& face_table() {
    static const FaceTable table = [] {
        FaceTable t;
        t.verts = make_vertices();

        // Square faces: the four vertices with coordinate +-4 on one axis,
        // ordered counterclockwise as seen from outside.
        for (int axis = 0; axis < 3; ++axis) {
            for (const int sign : {1, -1}) {
                std::vector<int> ids;
                for (int i = 0; i < 24; ++i)
                    if (t.verts[i][axis] == 4 * sign) ids.push_back(i);
                const int u = (axis + 1) % 3;
                const int w = (axis + 2) % 3;
                std::sort(ids.begin(), ids.end(), [&](int a, int b) {
                    return std::atan2(sign * t.verts[a][w], t.verts[a][u]) <
                           std::atan2(sign * t.verts[b][w], t.verts[b][u]);
                });
                t.faces.push_back(ids);
            }
        }

        // Hexagonal faces: the six vertices facing each diagonal direction,
        // ordered by angle around that direction.
        for (const int sx : {1, -1})
            for (const int sy : {1, -1})
                for (const int sz : {1, -1}) {
                    std::vector<int> ids;
                    for (int i = 0; i < 24; ++i)
                        if (sx * t.verts[i].x + sy * t.verts[i].y + sz * t.verts[i].z == 6)
                            ids.push_back(i);
                    if (ids.size() != 6) throw std::logic_error("expected hexagonal face");
                    const double nx = sx, ny = sy, nz = sz;
                    const double cx = 2.0 * sx, cy = 2.0 * sy, cz = 2.0 * sz;
                    const double ux = t.verts[ids[0]].x - cx;
                    const double uy = t.verts[ids[0]].y - cy;
                    const double uz = t.verts[ids[0]].z - cz;
                    auto angle = [&](int i) {
                        const double wx = t.verts[i].x - cx;
                        const double wy = t.verts[i].y - cy;
                        const double wz = t.verts[i].z - cz;
                        const double crx = uy * wz - uz * wy;
                        const double cry = uz * wx - ux * wz;
                        const double crz = ux * wy - uy * wx;
                        return std::atan2(crx * nx + cry * ny + crz * nz,
                                          ux * wx + uy * wy + uz * wz);
                    };
                    std::sort(ids.begin(), ids.end(),
                              [&](int a, int b) { return angle(a) < angle(b); });
                    t.faces.push_back(ids);
                }
        return t;
    }();
    return table;
}

const char* material_name(Color c) {
    switch (c) {
        case Color::red: return "red";
        case Color::yellow: return "yellow";
        case Color::blue: return "blue";
    }
    return "gray";
}

std::string coord_string(std::int64_t center, int quarter) {
    char buf[48];
    const double v = static_cast<double>(center) + static_cast<double>(quarter) / 4.0;
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

MeshStats export_cells_obj(const std::vector<Cell>& cells, const std::vector<Color>& colors,
                           const std::string& obj_path) {
    if (!colors.empty() && colors.size() != cells.size())
        throw std::invalid_argument("need one color per cell (or none at all)");
    for (const Cell& c : cells) require_cell(c);

    const std::filesystem::path obj(obj_path);
    std::filesystem::path mtl = obj;
    mtl.replace_extension(".mtl");

    {
        std::ofstream out(mtl);
        if (!out) throw std::runtime_error("cannot write " + mtl.string());
        out << "newmtl red\nKd 0.85 0.20 0.20\n\n";
        out << "newmtl yellow\nKd 0.95 0.85 0.20\n\n";
        out << "newmtl blue\nKd 0.20 0.35 0.90\n\n";
        out << "newmtl gray\nKd 0.60 0.60 0.60\n";
    }

    std::ofstream out(obj);
    if (!out) throw std::runtime_error("cannot write " + obj.string());
    out << "mtllib " << mtl.filename().string() << "\n";

    const FaceTable& table = face_table();
    MeshStats stats;
    stats.cells = cells.size();
    std::size_t base = 1;  // OBJ indices are 1-based
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        out << "o cell_" << i << "\n";
        for (const QVertex& v : table.verts)
            out << "v " << coord_string(c.x, v.x) << " " << coord_string(c.y, v.y) << " "
                << coord_string(c.z, v.z) << "\n";
        out << "usemtl " << (colors.empty() ? "gray" : material_name(colors[i])) << "\n";
        for (const auto& face : table.faces) {
            out << "f";
            for (const int id : face) out << " " << (base + static_cast<std::size_t>(id));
            out << "\n";
        }
        base += table.verts.size();
        stats.vertices += table.verts.size();
        stats.faces += table.faces.size();
    }
    if (!out) throw std::runtime_error("failed while writing " + obj.string());
    return stats;
}

}  // namespace tricolor
