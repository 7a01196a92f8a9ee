#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kempe {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Instances are immutable once built. Every constructor path runs
/// validate(), so a Graph value is always simple and symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges (in either orientation) are
  /// rejected, as are loops and out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  int min_degree() const;
  int max_degree() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool connected() const;
  /// Component id per vertex, numbered in order of smallest member.
  std::vector<int> components() const;
  bool bipartite() const;

  /// Subgraph induced by `keep` (any order); vertices are renumbered in
  /// increasing order of their original id and labelled with that id.
  Graph induced(std::span<const Vertex> keep) const;
  /// Same vertex set, edges restricted to those with both ends outside
  /// `removed`. Ids are preserved; removed vertices become isolated.
  Graph without_vertices(std::span<const Vertex> removed) const;
  Graph without_edge(Vertex u, Vertex v) const;

  /// Throws PreconditionError if the representation is not simple/symmetric.
  void validate() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Line graph: one vertex per edge of `g` in edges() order, labelled "u-v".
Graph line_graph(const Graph& g);

/// Cartesian product; vertex (a, b) becomes a * g2.order() + b.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Vertices with at least one incident edge, increasing.
std::vector<Vertex> non_isolated(const Graph& g);

}  // namespace kempe
