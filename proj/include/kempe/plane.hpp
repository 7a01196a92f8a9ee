#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// A graph with a rotation system: rotation[v] lists v's neighbours in
/// cyclic (counter-clockwise) order.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  /// Throws PreconditionError unless each rotation[v] is a permutation of
  /// g.neighbors(v).
  PlaneGraph(Graph g, std::vector<std::vector<Vertex>> rotation);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(v); }
  const std::vector<std::vector<Vertex>>& rotations() const noexcept { return rotation_; }
  int order() const noexcept { return graph_.order(); }

  /// Neighbour following w in the rotation at v.
  Vertex successor(Vertex v, Vertex w) const;
  Vertex predecessor(Vertex v, Vertex w) const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
};

/// A face as its boundary walk. darts[i] = (walk[i], walk[i+1 mod len]).
struct Face {
  std::vector<Vertex> walk;
  int length() const noexcept { return static_cast<int>(walk.size()); }
  /// Times v occurs on the walk.
  int multiplicity(Vertex v) const;
};

/// Traces faces with the rule: after dart (u, v) comes (v, succ_v(u)).
/// Darts are visited in increasing (tail, rotation position) order, so the
/// output is fully determined by the rotation system. Each component with
/// edges must satisfy V - E + F = 2, otherwise PreconditionError ("not a
/// genus-0 embedding").
std::vector<Face> trace_faces(const PlaneGraph& pg);

/// Parses "v: n1 n2 ... nk" lines (cyclic order); vertex count is the
/// number of lines. Edges are read off the rotations and must be symmetric.
PlaneGraph read_rotation(std::string_view text);
std::string write_rotation(const PlaneGraph& pg);

enum class SpecialKind { G3, G2 };

/// Edge-induced subgraph on the host's vertex ids:
///  - G3: edges with an endpoint of degree 3;
///  - G2: edges with an endpoint of degree 2 that lies on a 3-face.
/// Vertices without such edges stay in the id space as isolated vertices;
/// use non_isolated() for the support.
Graph extract_special_subgraph(const PlaneGraph& pg, SpecialKind kind);
Graph extract_special_subgraph(const PlaneGraph& pg, SpecialKind kind,
                               const std::vector<Face>& faces);

std::string to_string(SpecialKind kind);

}  // namespace kempe
