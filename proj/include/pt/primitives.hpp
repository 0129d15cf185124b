#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pt/mesh.hpp"

namespace pt {

enum class ShapeKind {
    Box,
    Cylinder,
    RegularPrism,
    StarPrism,
    FlowerPrism,
    Sphere,
    CappedCone,
    Ellipsoid,
};

const char* shape_kind_name(ShapeKind kind);
ShapeKind shape_kind_from_name(const std::string& name);

// Shape descriptor. All dimensions in millimeters; only the fields relevant
// for `kind` are honored. The JSON form uses the same field names with a
// `_mm` suffix on lengths, e.g.
//   {"kind":"cylinder","radius_mm":20,"height_mm":50,"segments":32}
struct ShapeSpec {
    ShapeKind kind = ShapeKind::Box;
    std::string name;

    double size_x = 0, size_y = 0, size_z = 0;  // box
    double radius = 0;                          // cylinder, regular prism, sphere
    double height = 0;                          // all prismatic shapes
    double radius_bottom = 0, radius_top = 0;   // capped cone
    double inner_radius = 0, outer_radius = 0;  // star prism
    double mean_radius = 0, amplitude = 0;      // flower prism lobe curve
    double radius_x = 0, radius_y = 0, radius_z = 0;  // ellipsoid

    int k = 0;              // sides / star points / flower lobes
    int segments = 32;      // angular resolution of round shapes
    int rings = 16;         // latitude rows for sphere/ellipsoid
    int height_segments = 1;
};

std::string shape_spec_to_json(const ShapeSpec& spec);
ShapeSpec shape_spec_from_json(const std::string& json_text);

// Builds a watertight triangle mesh in meters, centered on the z-axis with
// its base on the z=0 plane. Throws std::invalid_argument on non-positive
// dimensions, k < 3, or inconsistent radii.
TriangleMesh make_primitive(const ShapeSpec& spec);

// The eight-shape training roster (one of each primitive kind).
std::vector<ShapeSpec> default_training_shapes();

// Five shapes with similar footprints but distinct local surface features,
// used in the recognition experiments.
std::vector<ShapeSpec> dissimilar_recognition_shapes();

// Deterministic procedurally-varied roster for grasp data generation.
std::vector<ShapeSpec> make_shape_roster(int count, uint64_t seed);

}  // namespace pt
