#include "pt/primitives.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "pt/rng.hpp"

namespace pt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMmToM = 1e-3;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(std::string("make_primitive: ") + msg);
}

// Builder assembling an indexed mesh in millimeters; scaled to meters at
// the end.
struct Builder {
    TriangleMesh mesh;

    uint32_t add(const Vec3& p) {
        mesh.vertices.push_back(p);
        return static_cast<uint32_t>(mesh.vertices.size() - 1);
    }

    void tri(uint32_t a, uint32_t b, uint32_t c) { mesh.triangles.push_back({a, b, c}); }

    // quad (a,b,c,d) in CCW order seen from outside
    void quad(uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
        tri(a, b, c);
        tri(a, c, d);
    }

    TriangleMesh finish() {
        for (auto& v : mesh.vertices) v = v * kMmToM;
        finalize_mesh(mesh);
        return std::move(mesh);
    }
};

// Extruded profile: ring of boundary points (CCW in xy), swept from z=0 to
// z=height with `hseg` rows. Caller supplies cap triangulation over ring
// indices via callbacks.
struct Extrusion {
    Builder b;
    std::vector<std::vector<uint32_t>> rows;  // rows[s][j], s=0 bottom

    Extrusion(const std::vector<Vec3>& profile, double height, int hseg) {
        rows.resize(hseg + 1);
        for (int s = 0; s <= hseg; ++s) {
            double z = height * (static_cast<double>(s) / hseg);
            if (s == hseg) z = height;  // exact top
            for (const auto& p : profile) rows[s].push_back(b.add({p.x, p.y, z}));
        }
        size_t n = profile.size();
        for (int s = 0; s < hseg; ++s)
            for (size_t j = 0; j < n; ++j) {
                size_t jn = (j + 1) % n;
                b.quad(rows[s][j], rows[s][jn], rows[s + 1][jn], rows[s + 1][j]);
            }
    }

    // cap fans around an added center vertex
    void cap_with_center(double z, bool top) {
        const auto& ring = top ? rows.back() : rows.front();
        uint32_t c = b.add({0, 0, z});
        size_t n = ring.size();
        for (size_t j = 0; j < n; ++j) {
            size_t jn = (j + 1) % n;
            if (top)
                b.tri(c, ring[j], ring[jn]);
            else
                b.tri(c, ring[jn], ring[j]);
        }
    }
};

TriangleMesh make_box(const ShapeSpec& s) {
    require(s.size_x > 0 && s.size_y > 0 && s.size_z > 0, "box dimensions must be positive");
    int seg = std::max(1, s.height_segments);
    double lo[3] = {-s.size_x / 2, -s.size_y / 2, 0};
    double hi[3] = {s.size_x / 2, s.size_y / 2, s.size_z};

    Builder b;
    std::map<std::tuple<int, int, int>, uint32_t> lattice;
    auto vertex = [&](int i, int j, int k) {
        auto key = std::make_tuple(i, j, k);
        auto it = lattice.find(key);
        if (it != lattice.end()) return it->second;
        auto coord = [&](int idx, int axis) {
            if (idx == 0) return lo[axis];
            if (idx == seg) return hi[axis];
            return lo[axis] + (hi[axis] - lo[axis]) * (static_cast<double>(idx) / seg);
        };
        uint32_t id = b.add({coord(i, 0), coord(j, 1), coord(k, 2)});
        lattice.emplace(key, id);
        return id;
    };

    // face: fixed axis/value, grid over (ua, va); winding chosen so
    // cross(u_dir, v_dir) points outward
    auto face = [&](int fixed_axis, bool positive, int ua, int va, bool flip) {
        for (int i = 0; i < seg; ++i)
            for (int j = 0; j < seg; ++j) {
                int c[3];
                c[fixed_axis] = positive ? seg : 0;
                auto at = [&](int di, int dj) {
                    c[ua] = i + di;
                    c[va] = j + dj;
                    return vertex(c[0], c[1], c[2]);
                };
                uint32_t p00 = at(0, 0), p10 = at(1, 0), p11 = at(1, 1), p01 = at(0, 1);
                if (flip)
                    b.quad(p00, p01, p11, p10);
                else
                    b.quad(p00, p10, p11, p01);
            }
    };
    face(0, true, 1, 2, false);   // +x: u=y, v=z
    face(0, false, 1, 2, true);   // -x
    face(1, true, 0, 2, true);    // +y: u=x, v=z (x cross z = -y, flip)
    face(1, false, 0, 2, false);  // -y
    face(2, true, 0, 1, false);   // +z: x cross y = +z
    face(2, false, 0, 1, true);   // -z
    return b.finish();
}

std::vector<Vec3> circle_profile(double radius, int segments) {
    std::vector<Vec3> pts;
    for (int j = 0; j < segments; ++j) {
        double a = 2.0 * kPi * j / segments;
        pts.push_back({radius * std::cos(a), radius * std::sin(a), 0});
    }
    return pts;
}

TriangleMesh make_cylinder(const ShapeSpec& s) {
    require(s.radius > 0 && s.height > 0, "cylinder radius/height must be positive");
    require(s.segments >= 3, "cylinder needs >= 3 segments");
    Extrusion e(circle_profile(s.radius, s.segments), s.height, std::max(1, s.height_segments));
    e.cap_with_center(0, false);
    e.cap_with_center(s.height, true);
    return e.b.finish();
}

TriangleMesh make_regular_prism(const ShapeSpec& s) {
    require(s.k >= 3, "regular prism needs k >= 3");
    require(s.radius > 0 && s.height > 0, "prism radius/height must be positive");
    Extrusion e(circle_profile(s.radius, s.k), s.height, std::max(1, s.height_segments));
    e.cap_with_center(0, false);
    e.cap_with_center(s.height, true);
    return e.b.finish();
}

TriangleMesh make_capped_cone(const ShapeSpec& s) {
    require(s.radius_bottom > 0 && s.radius_top > 0 && s.height > 0,
            "capped cone radii/height must be positive");
    require(s.segments >= 3, "capped cone needs >= 3 segments");
    int hseg = std::max(1, s.height_segments);

    Builder b;
    std::vector<std::vector<uint32_t>> rows(hseg + 1);
    for (int r = 0; r <= hseg; ++r) {
        double t = static_cast<double>(r) / hseg;
        double z = r == hseg ? s.height : s.height * t;
        double radius = s.radius_bottom + (s.radius_top - s.radius_bottom) * t;
        for (int j = 0; j < s.segments; ++j) {
            double a = 2.0 * kPi * j / s.segments;
            rows[r].push_back(b.add({radius * std::cos(a), radius * std::sin(a), z}));
        }
    }
    for (int r = 0; r < hseg; ++r)
        for (int j = 0; j < s.segments; ++j) {
            int jn = (j + 1) % s.segments;
            b.quad(rows[r][j], rows[r][jn], rows[r + 1][jn], rows[r + 1][j]);
        }
    uint32_t cb = b.add({0, 0, 0});
    uint32_t ct = b.add({0, 0, s.height});
    for (int j = 0; j < s.segments; ++j) {
        int jn = (j + 1) % s.segments;
        b.tri(cb, rows.front()[jn], rows.front()[j]);
        b.tri(ct, rows.back()[j], rows.back()[jn]);
    }
    return b.finish();
}

TriangleMesh make_star_prism(const ShapeSpec& s) {
    require(s.k >= 3, "star prism needs k >= 3 points");
    require(s.inner_radius > 0 && s.outer_radius > s.inner_radius,
            "star prism needs 0 < inner_radius < outer_radius");
    require(s.height > 0, "star prism height must be positive");

    // 2k boundary vertices, alternating outer/inner; caps are triangulated
    // from boundary vertices only (spike triangles + inner fan), so every
    // cap vertex keeps its profile radius.
    int n = 2 * s.k;
    std::vector<Vec3> profile;
    for (int j = 0; j < n; ++j) {
        double a = kPi * j / s.k;
        double r = (j % 2 == 0) ? s.outer_radius : s.inner_radius;
        profile.push_back({r * std::cos(a), r * std::sin(a), 0});
    }
    Extrusion e(profile, s.height, std::max(1, s.height_segments));

    auto cap = [&](const std::vector<uint32_t>& ring, bool top) {
        auto emit = [&](uint32_t a, uint32_t b_, uint32_t c) {
            if (top)
                e.b.tri(a, b_, c);
            else
                e.b.tri(a, c, b_);
        };
        for (int i = 0; i < s.k; ++i) {
            uint32_t prev_inner = ring[(2 * i + n - 1) % n];
            emit(prev_inner, ring[2 * i], ring[2 * i + 1]);
        }
        for (int i = 1; i + 1 < s.k; ++i)
            emit(ring[1], ring[2 * i + 1], ring[(2 * i + 3) % n]);
    };
    cap(e.rows.back(), true);
    cap(e.rows.front(), false);
    return e.b.finish();
}

TriangleMesh make_flower_prism(const ShapeSpec& s) {
    require(s.k >= 3, "flower prism needs k >= 3 lobes");
    require(s.mean_radius > 0 && s.amplitude > 0 && s.amplitude < s.mean_radius,
            "flower prism needs 0 < amplitude < mean_radius");
    require(s.height > 0, "flower prism height must be positive");
    require(s.segments >= 3 * s.k, "flower prism needs >= 3 segments per lobe");

    std::vector<Vec3> profile;
    for (int j = 0; j < s.segments; ++j) {
        double a = 2.0 * kPi * j / s.segments;
        double r = s.mean_radius + s.amplitude * std::cos(s.k * a);
        profile.push_back({r * std::cos(a), r * std::sin(a), 0});
    }
    // r > 0 everywhere, so the profile is star-shaped about the origin and
    // center fans are valid caps.
    Extrusion e(profile, s.height, std::max(1, s.height_segments));
    e.cap_with_center(0, false);
    e.cap_with_center(s.height, true);
    return e.b.finish();
}

TriangleMesh make_lat_long(double rx, double ry, double rz, int segments, int rings) {
    // poles at z=0 and z=2*rz; center at (0,0,rz)
    Builder b;
    uint32_t bottom = b.add({0, 0, 0});
    std::vector<std::vector<uint32_t>> rows;
    for (int i = 1; i < rings; ++i) {
        double phi = kPi * i / rings;  // from bottom pole
        double ring_scale = std::sin(phi);
        double z = rz - rz * std::cos(phi);
        rows.emplace_back();
        for (int j = 0; j < segments; ++j) {
            double a = 2.0 * kPi * j / segments;
            rows.back().push_back(
                b.add({rx * ring_scale * std::cos(a), ry * ring_scale * std::sin(a), z}));
        }
    }
    uint32_t top = b.add({0, 0, 2 * rz});
    for (int j = 0; j < segments; ++j) {
        int jn = (j + 1) % segments;
        b.tri(bottom, rows.front()[jn], rows.front()[j]);
        b.tri(top, rows.back()[j], rows.back()[jn]);
    }
    for (size_t r = 0; r + 1 < rows.size(); ++r)
        for (int j = 0; j < segments; ++j) {
            int jn = (j + 1) % segments;
            b.quad(rows[r][j], rows[r][jn], rows[r + 1][jn], rows[r + 1][j]);
        }
    return b.finish();
}

TriangleMesh make_sphere(const ShapeSpec& s) {
    require(s.radius > 0, "sphere radius must be positive");
    require(s.segments >= 3 && s.rings >= 2, "sphere needs >= 3 segments and >= 2 rings");
    return make_lat_long(s.radius, s.radius, s.radius, s.segments, s.rings);
}

TriangleMesh make_ellipsoid(const ShapeSpec& s) {
    require(s.radius_x > 0 && s.radius_y > 0 && s.radius_z > 0,
            "ellipsoid radii must be positive");
    require(s.segments >= 3 && s.rings >= 2, "ellipsoid needs >= 3 segments and >= 2 rings");
    return make_lat_long(s.radius_x, s.radius_y, s.radius_z, s.segments, s.rings);
}

}  // namespace

const char* shape_kind_name(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Box: return "box";
        case ShapeKind::Cylinder: return "cylinder";
        case ShapeKind::RegularPrism: return "regular-prism";
        case ShapeKind::StarPrism: return "star-prism";
        case ShapeKind::FlowerPrism: return "flower-prism";
        case ShapeKind::Sphere: return "sphere";
        case ShapeKind::CappedCone: return "capped-cone";
        case ShapeKind::Ellipsoid: return "ellipsoid";
    }
    return "?";
}

ShapeKind shape_kind_from_name(const std::string& name) {
    for (ShapeKind k : {ShapeKind::Box, ShapeKind::Cylinder, ShapeKind::RegularPrism,
                        ShapeKind::StarPrism, ShapeKind::FlowerPrism, ShapeKind::Sphere,
                        ShapeKind::CappedCone, ShapeKind::Ellipsoid})
        if (name == shape_kind_name(k)) return k;
    throw std::invalid_argument("unknown shape kind: " + name);
}

std::string shape_spec_to_json(const ShapeSpec& s) {
    nlohmann::json j;
    j["kind"] = shape_kind_name(s.kind);
    if (!s.name.empty()) j["name"] = s.name;
    switch (s.kind) {
        case ShapeKind::Box:
            j["size_x_mm"] = s.size_x;
            j["size_y_mm"] = s.size_y;
            j["size_z_mm"] = s.size_z;
            j["height_segments"] = s.height_segments;
            break;
        case ShapeKind::Cylinder:
        case ShapeKind::RegularPrism:
            if (s.kind == ShapeKind::RegularPrism) j["k"] = s.k;
            j["radius_mm"] = s.radius;
            j["height_mm"] = s.height;
            j["segments"] = s.segments;
            j["height_segments"] = s.height_segments;
            break;
        case ShapeKind::StarPrism:
            j["k"] = s.k;
            j["inner_radius_mm"] = s.inner_radius;
            j["outer_radius_mm"] = s.outer_radius;
            j["height_mm"] = s.height;
            j["height_segments"] = s.height_segments;
            break;
        case ShapeKind::FlowerPrism:
            j["k"] = s.k;
            j["mean_radius_mm"] = s.mean_radius;
            j["amplitude_mm"] = s.amplitude;
            j["height_mm"] = s.height;
            j["segments"] = s.segments;
            j["height_segments"] = s.height_segments;
            break;
        case ShapeKind::Sphere:
            j["radius_mm"] = s.radius;
            j["segments"] = s.segments;
            j["rings"] = s.rings;
            break;
        case ShapeKind::CappedCone:
            j["radius_bottom_mm"] = s.radius_bottom;
            j["radius_top_mm"] = s.radius_top;
            j["height_mm"] = s.height;
            j["segments"] = s.segments;
            j["height_segments"] = s.height_segments;
            break;
        case ShapeKind::Ellipsoid:
            j["radius_x_mm"] = s.radius_x;
            j["radius_y_mm"] = s.radius_y;
            j["radius_z_mm"] = s.radius_z;
            j["segments"] = s.segments;
            j["rings"] = s.rings;
            break;
    }
    return j.dump();
}

ShapeSpec shape_spec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ShapeSpec s;
    s.kind = shape_kind_from_name(j.at("kind").get<std::string>());
    s.name = j.value("name", "");
    s.size_x = j.value("size_x_mm", 0.0);
    s.size_y = j.value("size_y_mm", 0.0);
    s.size_z = j.value("size_z_mm", 0.0);
    s.radius = j.value("radius_mm", 0.0);
    s.height = j.value("height_mm", 0.0);
    s.radius_bottom = j.value("radius_bottom_mm", 0.0);
    s.radius_top = j.value("radius_top_mm", 0.0);
    s.inner_radius = j.value("inner_radius_mm", 0.0);
    s.outer_radius = j.value("outer_radius_mm", 0.0);
    s.mean_radius = j.value("mean_radius_mm", 0.0);
    s.amplitude = j.value("amplitude_mm", 0.0);
    s.radius_x = j.value("radius_x_mm", 0.0);
    s.radius_y = j.value("radius_y_mm", 0.0);
    s.radius_z = j.value("radius_z_mm", 0.0);
    s.k = j.value("k", 0);
    s.segments = j.value("segments", 32);
    s.rings = j.value("rings", 16);
    s.height_segments = j.value("height_segments", 1);
    return s;
}

TriangleMesh make_primitive(const ShapeSpec& spec) {
    switch (spec.kind) {
        case ShapeKind::Box: return make_box(spec);
        case ShapeKind::Cylinder: return make_cylinder(spec);
        case ShapeKind::RegularPrism: return make_regular_prism(spec);
        case ShapeKind::StarPrism: return make_star_prism(spec);
        case ShapeKind::FlowerPrism: return make_flower_prism(spec);
        case ShapeKind::Sphere: return make_sphere(spec);
        case ShapeKind::CappedCone: return make_capped_cone(spec);
        case ShapeKind::Ellipsoid: return make_ellipsoid(spec);
    }
    throw std::invalid_argument("make_primitive: unknown kind");
}

namespace {

ShapeSpec named(ShapeSpec s, const std::string& name) {
    s.name = name;
    return s;
}

}  // namespace

std::vector<ShapeSpec> default_training_shapes() {
    std::vector<ShapeSpec> out;
    {
        ShapeSpec s;
        s.kind = ShapeKind::Box;
        s.size_x = 34; s.size_y = 34; s.size_z = 50;
        s.height_segments = 4;
        out.push_back(named(s, "box"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::Cylinder;
        s.radius = 17; s.height = 50; s.segments = 32; s.height_segments = 3;
        out.push_back(named(s, "cylinder"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::RegularPrism;
        s.k = 6; s.radius = 19; s.height = 50; s.height_segments = 3;
        out.push_back(named(s, "hexagon"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::StarPrism;
        s.k = 6; s.inner_radius = 10; s.outer_radius = 20; s.height = 50; s.height_segments = 3;
        out.push_back(named(s, "star"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::FlowerPrism;
        s.k = 5; s.mean_radius = 15; s.amplitude = 5; s.height = 50;
        s.segments = 60; s.height_segments = 3;
        out.push_back(named(s, "flower"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::Sphere;
        s.radius = 25; s.segments = 32; s.rings = 16;
        out.push_back(named(s, "sphere"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::CappedCone;
        s.radius_bottom = 22; s.radius_top = 12; s.height = 50;
        s.segments = 32; s.height_segments = 3;
        out.push_back(named(s, "cone"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::Ellipsoid;
        s.radius_x = 22; s.radius_y = 15; s.radius_z = 28; s.segments = 32; s.rings = 16;
        out.push_back(named(s, "ellipsoid"));
    }
    return out;
}

std::vector<ShapeSpec> dissimilar_recognition_shapes() {
    std::vector<ShapeSpec> out;
    {
        ShapeSpec s;
        s.kind = ShapeKind::Box;
        s.size_x = 34; s.size_y = 34; s.size_z = 50; s.height_segments = 4;
        out.push_back(named(s, "box"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::Cylinder;
        s.radius = 17; s.height = 50; s.segments = 32; s.height_segments = 3;
        out.push_back(named(s, "cylinder"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::RegularPrism;
        s.k = 3; s.radius = 20; s.height = 50; s.height_segments = 3;
        out.push_back(named(s, "triangle"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::StarPrism;
        s.k = 6; s.inner_radius = 10; s.outer_radius = 20; s.height = 50; s.height_segments = 3;
        out.push_back(named(s, "star"));
    }
    {
        ShapeSpec s;
        s.kind = ShapeKind::FlowerPrism;
        s.k = 5; s.mean_radius = 15; s.amplitude = 5; s.height = 50;
        s.segments = 60; s.height_segments = 3;
        out.push_back(named(s, "flower"));
    }
    return out;
}

std::vector<ShapeSpec> make_shape_roster(int count, uint64_t seed) {
    std::vector<ShapeSpec> out;
    Rng rng(mix_seed(seed, 0x5054524F53ULL));
    for (int i = 0; i < count; ++i) {
        Rng r = rng.child(i);
        ShapeSpec s;
        switch (i % 8) {
            case 0:
                s.kind = ShapeKind::Box;
                s.size_x = r.uniform(22, 44);
                s.size_y = r.uniform(22, 44);
                s.size_z = r.uniform(30, 55);
                s.height_segments = 3;
                break;
            case 1:
                s.kind = ShapeKind::Cylinder;
                s.radius = r.uniform(12, 22);
                s.height = r.uniform(30, 55);
                s.height_segments = 3;
                break;
            case 2:
                s.kind = ShapeKind::RegularPrism;
                s.k = 3 + static_cast<int>(r.uniform_int(5));
                s.radius = r.uniform(14, 22);
                s.height = r.uniform(30, 55);
                s.height_segments = 3;
                break;
            case 3:
                s.kind = ShapeKind::StarPrism;
                s.k = 5 + static_cast<int>(r.uniform_int(4));
                s.inner_radius = r.uniform(8, 12);
                s.outer_radius = s.inner_radius + r.uniform(6, 10);
                s.height = r.uniform(30, 55);
                s.height_segments = 3;
                break;
            case 4:
                s.kind = ShapeKind::FlowerPrism;
                s.k = 4 + static_cast<int>(r.uniform_int(4));
                s.mean_radius = r.uniform(13, 18);
                s.amplitude = r.uniform(3, 6);
                s.height = r.uniform(30, 55);
                s.segments = 64;
                s.height_segments = 3;
                break;
            case 5:
                s.kind = ShapeKind::Sphere;
                s.radius = r.uniform(15, 25);
                break;
            case 6:
                s.kind = ShapeKind::CappedCone;
                s.radius_bottom = r.uniform(16, 23);
                s.radius_top = s.radius_bottom - r.uniform(4, 9);
                s.height = r.uniform(30, 55);
                s.height_segments = 3;
                break;
            default:
                s.kind = ShapeKind::Ellipsoid;
                s.radius_x = r.uniform(14, 23);
                s.radius_y = r.uniform(12, 20);
                s.radius_z = r.uniform(18, 28);
                break;
        }
        s.name = "obj" + std::to_string(i) + "_" + shape_kind_name(s.kind);
        out.push_back(s);
    }
    return out;
}

}  // namespace pt
