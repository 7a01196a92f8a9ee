#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kempe/plane.hpp"

namespace kempe {

/// Embedding of a straight-line drawing: neighbours sorted by angle.
PlaneGraph plane_from_drawing(const Graph& g, const std::vector<std::array<double, 2>>& points);

/// One of "tetrahedron", "cube", "octahedron", "dodecahedron",
/// "icosahedron", embedded from its convex coordinates.
PlaneGraph platonic(std::string_view name);
const std::vector<std::string>& platonic_names();

/// Hub 0, rim 1..rim in cyclic order; rim >= 3.
PlaneGraph wheel(int rim);

// Local edits on a rotation system. Each result is re-traced, so an edit
// that breaks genus 0 throws.

/// Adds a vertex inside the face containing the dart a -> b, joined to
/// every vertex of that face. The face must be a triangle.
PlaneGraph insert_in_face(const PlaneGraph& pg, Vertex a, Vertex b);
/// Replaces edge uv, whose two faces are triangles uvx and vuy, by xy.
/// Throws PreconditionError when x == y or xy is already an edge.
PlaneGraph flip_edge(const PlaneGraph& pg, Vertex u, Vertex v);
PlaneGraph delete_edge(const PlaneGraph& pg, Vertex u, Vertex v);
/// New vertex (id n) on edge uv.
PlaneGraph subdivide_edge(const PlaneGraph& pg, Vertex u, Vertex v);

/// Random stacked triangulation on n >= 3 vertices, grown from a triangle.
PlaneGraph stacked_triangulation(int n, std::mt19937_64& rng);

/// Random connected plane graph with minimum degree >= 2 and at most
/// max_vertices vertices: a stacked triangulation with random flips, then
/// random edge deletions and subdivisions.
PlaneGraph random_plane_graph(int max_vertices, std::uint64_t seed);

}  // namespace kempe
