#include "pt/bvh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pt {

namespace {

constexpr double kBaryEps = 1e-9;
constexpr double kTMin = 1e-9;

struct Box {
    Vec3 lo{1e300, 1e300, 1e300};
    Vec3 hi{-1e300, -1e300, -1e300};

    void grow(const Vec3& p) {
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }

    int longest_axis() const {
        Vec3 d = hi - lo;
        if (d.x >= d.y && d.x >= d.z) return 0;
        return d.y >= d.z ? 1 : 2;
    }
};

// slab test; returns entry distance or nullopt
std::optional<double> ray_box(const Vec3& lo, const Vec3& hi, const Vec3& o, const Vec3& inv_dir,
                              double t_max) {
    double t0 = 0.0, t1 = t_max;
    for (int k = 0; k < 3; ++k) {
        double ta = (lo[k] - o[k]) * inv_dir[k];
        double tb = (hi[k] - o[k]) * inv_dir[k];
        if (inv_dir[k] < 0.0) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1) return std::nullopt;
    }
    return t0;
}

double point_box_dist2(const Vec3& lo, const Vec3& hi, const Vec3& p) {
    double d2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        double d = std::max({lo[k] - p[k], 0.0, p[k] - hi[k]});
        d2 += d * d;
    }
    return d2;
}

bool better_hit(double t, uint32_t tri, double best_t, uint32_t best_tri) {
    return t < best_t || (t == best_t && tri < best_tri);
}

}  // namespace

std::optional<std::array<double, 3>> intersect_triangle(const Vec3& origin, const Vec3& dir,
                                                        const Vec3& v0, const Vec3& v1,
                                                        const Vec3& v2, double t_max) {
    Vec3 e1 = v1 - v0;
    Vec3 e2 = v2 - v0;
    Vec3 pvec = cross(dir, e2);
    double det = dot(e1, pvec);
    if (std::abs(det) < 1e-14) return std::nullopt;
    double inv = 1.0 / det;
    Vec3 tvec = origin - v0;
    double u = dot(tvec, pvec) * inv;
    if (u < -kBaryEps || u > 1.0 + kBaryEps) return std::nullopt;
    Vec3 qvec = cross(tvec, e1);
    double v = dot(dir, qvec) * inv;
    if (v < -kBaryEps || u + v > 1.0 + kBaryEps) return std::nullopt;
    double t = dot(e2, qvec) * inv;
    if (t <= kTMin || t > t_max) return std::nullopt;
    return std::array<double, 3>{t, u, v};
}

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    // Ericson, Real-Time Collision Detection, 5.1.5
    Vec3 ab = b - a, ac = c - a, ap = p - a;
    double d1 = dot(ab, ap), d2 = dot(ac, ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;

    Vec3 bp = p - b;
    double d3 = dot(ab, bp), d4 = dot(ac, bp);
    if (d3 >= 0.0 && d4 <= d3) return b;

    double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + ab * (d1 / (d1 - d3));

    Vec3 cp = p - c;
    double d5 = dot(ab, cp), d6 = dot(ac, cp);
    if (d6 >= 0.0 && d5 <= d6) return c;

    double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + ac * (d2 / (d2 - d6));

    double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
        return b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)));

    double denom = 1.0 / (va + vb + vc);
    return a + ab * (vb * denom) + ac * (vc * denom);
}

Hit make_hit(const TriangleMesh& mesh, uint32_t tri, const Vec3& origin, const Vec3& dir,
             double t, double u, double v) {
    const auto& tv = mesh.triangles[tri];
    Vec3 n = mesh.vertex_normals[tv[0]] * (1.0 - u - v) + mesh.vertex_normals[tv[1]] * u +
             mesh.vertex_normals[tv[2]] * v;
    return Hit{t, origin + dir * t, normalized(n), tri};
}

Bvh::Bvh(const TriangleMesh& mesh) : mesh_(&mesh) {
    if (mesh.empty()) throw std::invalid_argument("Bvh: empty mesh");
    order_.resize(mesh.triangle_count());
    for (uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
    nodes_.reserve(2 * order_.size() / kLeafSize + 4);
    build(order_, 0, static_cast<uint32_t>(order_.size()));
}

uint32_t Bvh::build(std::vector<uint32_t>& tris, uint32_t begin, uint32_t end) {
    Box box;
    for (uint32_t i = begin; i < end; ++i)
        for (int k = 0; k < 3; ++k) box.grow(mesh_->vertices[mesh_->triangles[tris[i]][k]]);

    uint32_t index = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back({});
    nodes_[index].lo = box.lo;
    nodes_[index].hi = box.hi;

    uint32_t count = end - begin;
    if (count <= kLeafSize) {
        // keep leaf contents in index order for deterministic scans
        std::sort(tris.begin() + begin, tris.begin() + end);
        nodes_[index].first = begin;
        nodes_[index].count = count;
        return index;
    }

    int axis = box.longest_axis();
    uint32_t mid = begin + count / 2;
    std::nth_element(tris.begin() + begin, tris.begin() + mid, tris.begin() + end,
                     [&](uint32_t a, uint32_t b) {
                         const auto& ta = mesh_->triangles[a];
                         const auto& tb = mesh_->triangles[b];
                         double ca = mesh_->vertices[ta[0]][axis] + mesh_->vertices[ta[1]][axis] +
                                     mesh_->vertices[ta[2]][axis];
                         double cb = mesh_->vertices[tb[0]][axis] + mesh_->vertices[tb[1]][axis] +
                                     mesh_->vertices[tb[2]][axis];
                         return ca < cb || (ca == cb && a < b);
                     });

    uint32_t left = build(tris, begin, mid);
    uint32_t right = build(tris, mid, end);
    nodes_[index].left = left;
    nodes_[index].right = right;
    return index;
}

int Bvh::depth() const {
    // iterative: depth of node 0
    struct Item { uint32_t node; int depth; };
    std::vector<Item> stack{{0, 1}};
    int max_depth = 0;
    while (!stack.empty()) {
        auto [n, d] = stack.back();
        stack.pop_back();
        max_depth = std::max(max_depth, d);
        if (!nodes_[n].is_leaf()) {
            stack.push_back({nodes_[n].left, d + 1});
            stack.push_back({nodes_[n].right, d + 1});
        }
    }
    return max_depth;
}

std::optional<Hit> Bvh::raycast(const Vec3& origin, const Vec3& dir, double t_max) const {
    Vec3 inv_dir{1.0 / dir.x, 1.0 / dir.y, 1.0 / dir.z};
    double best_t = t_max;
    uint32_t best_tri = UINT32_MAX;
    double best_u = 0, best_v = 0;
    bool found = false;

    std::array<uint32_t, 64> stack;
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        auto entry = ray_box(node.lo, node.hi, origin, inv_dir, best_t);
        if (!entry) continue;
        if (node.is_leaf()) {
            for (uint32_t i = node.first; i < node.first + node.count; ++i) {
                uint32_t tri = order_[i];
                const auto& tv = mesh_->triangles[tri];
                auto isect = intersect_triangle(origin, dir, mesh_->vertices[tv[0]],
                                                mesh_->vertices[tv[1]], mesh_->vertices[tv[2]],
                                                best_t);
                if (isect) {
                    auto [t, u, v] = *isect;
                    if (!found || better_hit(t, tri, best_t, best_tri)) {
                        found = true;
                        best_t = t;
                        best_tri = tri;
                        best_u = u;
                        best_v = v;
                    }
                }
            }
        } else {
            // near child last so it pops first
            auto e_l = ray_box(nodes_[node.left].lo, nodes_[node.left].hi, origin, inv_dir, best_t);
            auto e_r = ray_box(nodes_[node.right].lo, nodes_[node.right].hi, origin, inv_dir, best_t);
            if (e_l && e_r) {
                if (*e_l <= *e_r) {
                    stack[top++] = node.right;
                    stack[top++] = node.left;
                } else {
                    stack[top++] = node.left;
                    stack[top++] = node.right;
                }
            } else if (e_l) {
                stack[top++] = node.left;
            } else if (e_r) {
                stack[top++] = node.right;
            }
        }
    }
    if (!found) return std::nullopt;
    return make_hit(*mesh_, best_tri, origin, dir, best_t, best_u, best_v);
}

ClosestPoint Bvh::min_distance(const Vec3& p) const {
    double best_d2 = 1e300;
    uint32_t best_tri = UINT32_MAX;
    Vec3 best_point;

    // recursive traversal ordered by box distance
    auto visit = [&](auto&& self, uint32_t ni) -> void {
        const Node& node = nodes_[ni];
        if (point_box_dist2(node.lo, node.hi, p) > best_d2) return;
        if (node.is_leaf()) {
            for (uint32_t i = node.first; i < node.first + node.count; ++i) {
                uint32_t tri = order_[i];
                const auto& tv = mesh_->triangles[tri];
                Vec3 cp = closest_point_on_triangle(p, mesh_->vertices[tv[0]],
                                                    mesh_->vertices[tv[1]], mesh_->vertices[tv[2]]);
                double d2 = norm2(p - cp);
                if (d2 < best_d2 || (d2 == best_d2 && tri < best_tri)) {
                    best_d2 = d2;
                    best_tri = tri;
                    best_point = cp;
                }
            }
            return;
        }
        double dl = point_box_dist2(nodes_[node.left].lo, nodes_[node.left].hi, p);
        double dr = point_box_dist2(nodes_[node.right].lo, nodes_[node.right].hi, p);
        if (dl <= dr) {
            self(self, node.left);
            if (dr <= best_d2) self(self, node.right);
        } else {
            self(self, node.right);
            if (dl <= best_d2) self(self, node.left);
        }
    };
    visit(visit, 0);
    return {std::sqrt(best_d2), best_point, best_tri};
}

std::optional<Hit> raycast_brute(const TriangleMesh& mesh, const Vec3& origin, const Vec3& dir,
                                 double t_max) {
    bool found = false;
    double best_t = t_max;
    uint32_t best_tri = UINT32_MAX;
    double best_u = 0, best_v = 0;
    for (uint32_t tri = 0; tri < mesh.triangle_count(); ++tri) {
        const auto& tv = mesh.triangles[tri];
        auto isect = intersect_triangle(origin, dir, mesh.vertices[tv[0]], mesh.vertices[tv[1]],
                                        mesh.vertices[tv[2]], best_t);
        if (isect) {
            auto [t, u, v] = *isect;
            if (!found || better_hit(t, tri, best_t, best_tri)) {
                found = true;
                best_t = t;
                best_tri = tri;
                best_u = u;
                best_v = v;
            }
        }
    }
    if (!found) return std::nullopt;
    return make_hit(mesh, best_tri, origin, dir, best_t, best_u, best_v);
}

ClosestPoint min_distance_brute(const TriangleMesh& mesh, const Vec3& p) {
    double best_d2 = 1e300;
    uint32_t best_tri = UINT32_MAX;
    Vec3 best_point;
    for (uint32_t tri = 0; tri < mesh.triangle_count(); ++tri) {
        const auto& tv = mesh.triangles[tri];
        Vec3 cp = closest_point_on_triangle(p, mesh.vertices[tv[0]], mesh.vertices[tv[1]],
                                            mesh.vertices[tv[2]]);
        double d2 = norm2(p - cp);
        if (d2 < best_d2 || (d2 == best_d2 && tri < best_tri)) {
            best_d2 = d2;
            best_tri = tri;
            best_point = cp;
        }
    }
    return {std::sqrt(best_d2), best_point, best_tri};
}

}  // namespace pt
