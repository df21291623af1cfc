#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tricolor/coloring.hpp"
#include "tricolor/geometry.hpp"

namespace tricolor {

struct MeshStats {
    std::size_t cells = 0;
    std::size_t vertices = 0;
    std::size_t faces = 0;
};

// Writes a Wavefront OBJ file (plus a sibling .mtl with red, yellow, blue
// and gray materials) containing one truncated octahedron per cell: the
// 24 vertices are the permutations of (0, +-1/2, +-1) around the cell
// center, giving 6 square and 8 hexagonal faces with outward winding.
// colors may be empty (all cells gray) or hold one color per cell.
MeshStats export_cells_obj(const std::vector<Cell>& cells, const std::vector<Color>& colors,
                           const std::string& obj_path);

}  // namespace tricolor
