#include "wyrm/fixtures.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>

namespace wyrm::mesh::fixtures {

TriangleMesh unit_cube() {
    TriangleMesh m;
    m.name = "unit_cube";
    m.vertices = {
        {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
        {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
    };
    m.triangles = {
        {0, 2, 1}, {0, 3, 2},  // bottom
        {4, 5, 6}, {4, 6, 7},  // top
        {0, 1, 5}, {0, 5, 4},  // front
        {1, 2, 6}, {1, 6, 5},  // right
        {2, 3, 7}, {2, 7, 6},  // back
        {3, 0, 4}, {3, 4, 7},  // left
    };
    return m;
}

namespace {

Vec3 normalized_to(Vec3 v, double radius) {
    const double n = norm(v);
    return {radius * v.x / n, radius * v.y / n, radius * v.z / n};
}

}  // namespace

TriangleMesh icosphere(double radius, unsigned subdivisions) {
    if (!(radius > 0.0)) throw NonPositiveFactor("icosphere radius must be positive");

    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    TriangleMesh m;
    m.name = "icosphere";
    m.vertices = {
        {-1, t, 0}, {1, t, 0},   {-1, -t, 0}, {1, -t, 0},
        {0, -1, t}, {0, 1, t},   {0, -1, -t}, {0, 1, -t},
        {t, 0, -1}, {t, 0, 1},   {-t, 0, -1}, {-t, 0, 1},
    };
    for (Vec3& v : m.vertices) v = normalized_to(v, radius);
    m.triangles = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
    };

    for (unsigned level = 0; level < subdivisions; ++level) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
        const auto midpoint_of = [&](std::uint32_t a, std::uint32_t b) {
            const std::pair<std::uint32_t, std::uint32_t> key = std::minmax(a, b);
            const auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const Vec3 mid = 0.5 * (m.vertices[a] + m.vertices[b]);
            m.vertices.push_back(normalized_to(mid, radius));
            const auto idx = static_cast<std::uint32_t>(m.vertices.size() - 1);
            midpoint.emplace(key, idx);
            return idx;
        };

        std::vector<Triangle> next;
        next.reserve(m.triangles.size() * 4);
        for (const Triangle& tri : m.triangles) {
            const std::uint32_t ab = midpoint_of(tri[0], tri[1]);
            const std::uint32_t bc = midpoint_of(tri[1], tri[2]);
            const std::uint32_t ca = midpoint_of(tri[2], tri[0]);
            next.push_back({tri[0], ab, ca});
            next.push_back({tri[1], bc, ab});
            next.push_back({tri[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        m.triangles = std::move(next);
    }
    return m;
}

TriangleMesh ellipsoid(Vec3 center, Vec3 half_axes, unsigned subdivisions) {
    TriangleMesh m = icosphere(1.0, subdivisions);
    for (Vec3& v : m.vertices)
        v = Vec3{half_axes.x * v.x, half_axes.y * v.y, half_axes.z * v.z} + center;
    m.name = "ellipsoid";
    return m;
}

namespace {

void append(TriangleMesh& dst, const TriangleMesh& src) {
    const auto offset = static_cast<std::uint32_t>(dst.vertices.size());
    dst.vertices.insert(dst.vertices.end(), src.vertices.begin(), src.vertices.end());
    for (const Triangle& t : src.triangles)
        dst.triangles.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
}

}  // namespace

TriangleMesh dragonoid() {
    TriangleMesh m;
    m.name = "dragonoid";
    append(m, ellipsoid({0.0, 0.0, 0.0}, {1.5, 0.35, 0.45}, 2));    // torso
    append(m, ellipsoid({1.8, 0.0, 0.25}, {0.5, 0.15, 0.18}, 2));   // head
    append(m, ellipsoid({-2.2, 0.0, 0.10}, {1.1, 0.12, 0.14}, 2));  // tail
    return m;
}

Vec3 dragonoid_snout_tip() { return {2.3, 0.0, 0.25}; }
Vec3 dragonoid_snout_base() { return {1.3, 0.0, 0.25}; }

double dragonoid_body_length() {
    return characteristic_length(dragonoid(), Axis::principal);
}

}  // namespace wyrm::mesh::fixtures
