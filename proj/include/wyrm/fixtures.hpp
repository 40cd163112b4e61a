#pragma once

#include "wyrm/mesh.hpp"

namespace wyrm::mesh::fixtures {

// Axis-aligned unit cube [0,1]^3, 8 vertices, 12 outward-wound triangles.
TriangleMesh unit_cube();

// Geodesic sphere built by subdividing an icosahedron and projecting onto
// the sphere. subdivisions = 0 gives the raw icosahedron (20 triangles);
// each level quadruples the triangle count.
TriangleMesh icosphere(double radius, unsigned subdivisions);

// Ellipsoid: icosphere stretched per axis, then translated.
TriangleMesh ellipsoid(Vec3 center, Vec3 half_axes, unsigned subdivisions);

// Stylized elongated quadruped stand-in built from ellipsoid primitives
// (torso, head, tail as disjoint closed shells). Used wherever a scalable
// body model is needed without bundling third-party assets.
TriangleMesh dragonoid();

// Reference snout points of the dragonoid, tip and base; their distance is
// the model's head length (1.0 model unit).
Vec3 dragonoid_snout_tip();
Vec3 dragonoid_snout_base();

// Nominal body length of the unscaled dragonoid along its principal axis.
double dragonoid_body_length();

}  // namespace wyrm::mesh::fixtures
