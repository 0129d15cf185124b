#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pt/pose.hpp"
#include "pt/vec3.hpp"

namespace pt {

// Indexed triangle mesh with unit per-vertex normals. After construction
// cleanup the mesh contains no zero-area triangles.
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<uint32_t, 3>> triangles;
    std::vector<Vec3> vertex_normals;

    size_t triangle_count() const { return triangles.size(); }
    bool empty() const { return triangles.empty(); }

    Vec3 face_normal(uint32_t tri) const;
    double face_area(uint32_t tri) const;
    double surface_area() const;

    // Axis-aligned bounds over all vertices.
    void bounds(Vec3& lo, Vec3& hi) const;
};

// Area-weighted average of incident face normals, normalized.
void compute_vertex_normals(TriangleMesh& mesh);

// Drops degenerate (zero-area) triangles and recomputes vertex normals.
void finalize_mesh(TriangleMesh& mesh);

// Minimal Wavefront OBJ reader: `v` and `f` records only, `#` comments
// skipped, faces with more than three indices fan-triangulated. Indices are
// 1-based; `v/vt/vn` forms keep only the vertex index. Throws
// std::runtime_error on malformed records, out-of-range indices, faces with
// fewer than three vertices, or an empty mesh.
TriangleMesh parse_obj(std::istream& in);
TriangleMesh parse_obj(const std::string& text);
TriangleMesh load_obj(const std::string& path);

// Every edge shared by exactly two triangles, with opposite winding.
bool is_watertight(const TriangleMesh& mesh);

Vec3 transform(const Vec3& p, const Pose& pose);
TriangleMesh transform(const TriangleMesh& mesh, const Pose& pose);

}  // namespace pt
