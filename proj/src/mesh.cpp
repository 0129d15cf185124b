#include "pt/mesh.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pt {

Vec3 TriangleMesh::face_normal(uint32_t tri) const {
    const auto& t = triangles[tri];
    Vec3 n = cross(vertices[t[1]] - vertices[t[0]], vertices[t[2]] - vertices[t[0]]);
    return normalized(n);
}

double TriangleMesh::face_area(uint32_t tri) const {
    const auto& t = triangles[tri];
    return 0.5 * norm(cross(vertices[t[1]] - vertices[t[0]], vertices[t[2]] - vertices[t[0]]));
}

double TriangleMesh::surface_area() const {
    double a = 0.0;
    for (uint32_t i = 0; i < triangles.size(); ++i) a += face_area(i);
    return a;
}

void TriangleMesh::bounds(Vec3& lo, Vec3& hi) const {
    lo = {1e300, 1e300, 1e300};
    hi = {-1e300, -1e300, -1e300};
    for (const auto& v : vertices) {
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    }
}

void compute_vertex_normals(TriangleMesh& mesh) {
    mesh.vertex_normals.assign(mesh.vertices.size(), Vec3{});
    for (const auto& t : mesh.triangles) {
        Vec3 n = cross(mesh.vertices[t[1]] - mesh.vertices[t[0]],
                       mesh.vertices[t[2]] - mesh.vertices[t[0]]);
        // |n| = 2*area, so accumulating the raw cross product is the
        // area-weighted sum.
        for (int k = 0; k < 3; ++k) mesh.vertex_normals[t[k]] += n * 0.5;
    }
    for (auto& n : mesh.vertex_normals) n = normalized(n);
}

void finalize_mesh(TriangleMesh& mesh) {
    std::vector<std::array<uint32_t, 3>> kept;
    kept.reserve(mesh.triangles.size());
    for (const auto& t : mesh.triangles) {
        Vec3 n = cross(mesh.vertices[t[1]] - mesh.vertices[t[0]],
                       mesh.vertices[t[2]] - mesh.vertices[t[0]]);
        if (norm(n) > 1e-16) kept.push_back(t);
    }
    mesh.triangles = std::move(kept);
    compute_vertex_normals(mesh);
}

namespace {

uint32_t parse_face_index(const std::string& token, size_t vertex_count, size_t line_no) {
    // token forms: "v", "v/vt", "v//vn", "v/vt/vn"; only v is used
    size_t slash = token.find('/');
    std::string head = slash == std::string::npos ? token : token.substr(0, slash);
    long idx = 0;
    try {
        size_t pos = 0;
        idx = std::stol(head, &pos);
        if (pos != head.size()) throw std::invalid_argument(head);
    } catch (const std::exception&) {
        throw std::runtime_error("obj: malformed face index '" + token + "' at line " +
                                 std::to_string(line_no));
    }
    if (idx < 1 || static_cast<size_t>(idx) > vertex_count)
        throw std::runtime_error("obj: face index " + std::to_string(idx) +
                                 " out of range at line " + std::to_string(line_no) +
                                 " (mesh has " + std::to_string(vertex_count) + " vertices)");
    return static_cast<uint32_t>(idx - 1);
}

}  // namespace

TriangleMesh parse_obj(std::istream& in) {
    TriangleMesh mesh;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z))
                throw std::runtime_error("obj: malformed vertex at line " + std::to_string(line_no));
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<uint32_t> idx;
            std::string token;
            while (ls >> token) idx.push_back(parse_face_index(token, mesh.vertices.size(), line_no));
            if (idx.size() < 3)
                throw std::runtime_error("obj: face with fewer than 3 vertices at line " +
                                         std::to_string(line_no));
            for (size_t i = 2; i < idx.size(); ++i)
                mesh.triangles.push_back({idx[0], idx[i - 1], idx[i]});
        }
        // all other record types ignored
    }
    if (mesh.triangles.empty()) throw std::runtime_error("obj: no faces found");
    finalize_mesh(mesh);
    if (mesh.triangles.empty()) throw std::runtime_error("obj: all faces degenerate");
    return mesh;
}

TriangleMesh parse_obj(const std::string& text) {
    std::istringstream in(text);
    return parse_obj(in);
}

TriangleMesh load_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("obj: cannot open " + path);
    return parse_obj(in);
}

bool is_watertight(const TriangleMesh& mesh) {
    // Count directed edges; watertight <=> every directed edge has exactly
    // one opposite partner and no duplicates.
    std::map<std::pair<uint32_t, uint32_t>, int> edges;
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            uint32_t a = t[k], b = t[(k + 1) % 3];
            if (a == b) return false;
            if (++edges[{a, b}] > 1) return false;
        }
    }
    for (const auto& [e, n] : edges) {
        auto it = edges.find({e.second, e.first});
        if (it == edges.end() || it->second != 1) return false;
    }
    return true;
}

Vec3 transform(const Vec3& p, const Pose& pose) { return pose.apply_point(p); }

TriangleMesh transform(const TriangleMesh& mesh, const Pose& pose) {
    TriangleMesh out = mesh;
    for (auto& v : out.vertices) v = pose.apply_point(v);
    for (auto& n : out.vertex_normals) n = pose.apply_dir(n);
    return out;
}

}  // namespace pt
