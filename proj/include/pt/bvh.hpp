#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pt/mesh.hpp"

namespace pt {

// Nearest ray hit. `normal` is the barycentric interpolation of the vertex
// normals at the hit point (unit length); the geometric face normal is
// available through the mesh and `tri`.
struct Hit {
    double t = 0.0;  // distance along the (unit) ray direction, meters
    Vec3 point;
    Vec3 normal;
    uint32_t tri = 0;
};

struct ClosestPoint {
    double distance = 0.0;  // meters
    Vec3 point;
    uint32_t tri = 0;
};

// Moller-Trumbore with 1e-9 slack on the barycentric bounds, so rays that
// graze an edge register on every adjacent triangle; callers break the tie
// by triangle index. Accepts t in (1e-9, t_max]. Returns (t, u, v).
std::optional<std::array<double, 3>> intersect_triangle(const Vec3& origin, const Vec3& dir,
                                                        const Vec3& v0, const Vec3& v1,
                                                        const Vec3& v2, double t_max);

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Axis-aligned BVH over mesh triangles: median split on the longest axis of
// the node bounds, leaves hold at most `kLeafSize` triangles. The Bvh
// borrows the mesh, which must outlive it; both are immutable after
// construction and safe for concurrent queries.
class Bvh {
public:
    static constexpr uint32_t kLeafSize = 8;

    struct Node {
        Vec3 lo, hi;
        uint32_t left = 0, right = 0;   // internal: child node indices
        uint32_t first = 0, count = 0;  // leaf: range into triangle order
        bool is_leaf() const { return count > 0; }
    };

    explicit Bvh(const TriangleMesh& mesh);

    const TriangleMesh& mesh() const { return *mesh_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<uint32_t>& triangle_order() const { return order_; }
    int depth() const;

    // Nearest hit with deterministic tie-breaking (equal t resolves to the
    // lowest triangle index). `dir` must be unit length.
    std::optional<Hit> raycast(const Vec3& origin, const Vec3& dir, double t_max) const;

    // Exact unsigned minimum distance from `p` to the surface.
    ClosestPoint min_distance(const Vec3& p) const;

private:
    const TriangleMesh* mesh_;
    std::vector<Node> nodes_;
    std::vector<uint32_t> order_;

    uint32_t build(std::vector<uint32_t>& tris, uint32_t begin, uint32_t end);
};

// Exhaustive reference paths used to cross-check the tree (same intersection
// rule, no acceleration).
std::optional<Hit> raycast_brute(const TriangleMesh& mesh, const Vec3& origin, const Vec3& dir,
                                 double t_max);
ClosestPoint min_distance_brute(const TriangleMesh& mesh, const Vec3& p);

Hit make_hit(const TriangleMesh& mesh, uint32_t tri, const Vec3& origin, const Vec3& dir,
             double t, double u, double v);

}  // namespace pt
