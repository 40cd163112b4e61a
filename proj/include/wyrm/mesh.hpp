#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wyrm/error.hpp"

namespace wyrm::mesh {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(Vec3 v);

using Triangle = std::array<std::uint32_t, 3>;

// Indexed triangle soup in model space (meters).
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<Triangle> triangles;
    std::string name;

    // Checks index ranges, finite coordinates and the no-degenerate-triangle
    // invariant; throws on violation.
    void validate() const;
};

enum class Axis { x, y, z, principal };
Axis parse_axis(std::string_view text);

struct MeshSummary {
    double volume = 0.0;                    // m^3, absolute value of signed volume
    std::array<double, 3> aabb_extents{};   // m
    double principal_axis_length = 0.0;     // m, longest AABB extent
    bool watertight = false;                // true only when every edge is paired
};

// --- parsing ---

// ASCII OBJ subset: v and f statements; vt/vn/usemtl/o/g/s/mtllib and
// comments are ignored. Polygon faces are fan-triangulated from the first
// vertex; negative indices resolve against the vertices defined so far.
TriangleMesh parse_obj(std::string_view text);

// STL, ASCII or binary (little-endian, 32-bit floats). Vertices are
// deduplicated by exact bit equality.
TriangleMesh parse_stl(std::string_view bytes);

std::string serialize_obj(const TriangleMesh& mesh);
std::string serialize_stl_ascii(const TriangleMesh& mesh);
std::string serialize_stl_binary(const TriangleMesh& mesh);

// --- geometry ---

// Divergence-theorem volume: |sum of v0 . (v1 x v2)| / 6 over all triangles.
// Exact for closed meshes regardless of position relative to the origin.
double signed_volume(const TriangleMesh& mesh);

std::array<Vec3, 2> bounding_box(const TriangleMesh& mesh);

// AABB extent along an axis (principal = longest extent).
double characteristic_length(const TriangleMesh& mesh, Axis axis);
// Distance between two reference points (e.g. snout tip to snout base).
double characteristic_length(const TriangleMesh& mesh, Vec3 p1, Vec3 p2);

TriangleMesh scale_uniform(const TriangleMesh& mesh, double factor);

MeshSummary summarize(const TriangleMesh& mesh);
std::string to_json_string(const MeshSummary& summary);

}  // namespace wyrm::mesh
