#pragma once

#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// Swap sequences are written on the host's vertex ids throughout. A
// sequence "on G - S" is replayed with the vertices of S ignored: their
// colors are carried along but never read.

/// Lifts a swap sequence on g - v to g when |L(v)| > d(v).
///
/// Each input swap is replayed unchanged when v is outside the swapped
/// component, or when v is a leaf of it with both colors in L(v).
/// Otherwise v is first recolored to the least color of L(v) unused on its
/// closed neighbourhood (a swap whose component is {v}). When `target` is
/// given, v is finally recolored to target(v) if needed.
///
/// Throws PreconditionError when |L(v)| <= d(v), when `start` is not an
/// L-coloring, when an input move is not L-valid on g - v (naming the step),
/// or when `target` disagrees with the input's final coloring off v.
std::vector<SwapMove> lift_through_vertex(const Graph& g, const ListAssignment& lists, Vertex v,
                                          const Coloring& start,
                                          const std::vector<SwapMove>& moves,
                                          const std::optional<Coloring>& target = std::nullopt);

/// An L-coloring of g extending `partial` (given on g - H; entries on H are
/// ignored) in which the alpha,beta-swap at w is L-valid, and in which each
/// alpha,beta-component contains the vertices of at most one
/// alpha,beta-component of the partial coloring. The least such extension
/// in lexicographic order of the colors on H (increasing vertex order).
///
/// Throws PreconditionError if H is disconnected, is a Gallai tree, has a
/// vertex x with |L(x)| < d_g(x), or if `partial` is not an L-coloring of
/// g - H that is alpha,beta-versatile at w.
Coloring find_versatile_extension(const Graph& g, const std::vector<Vertex>& h,
                                  const ListAssignment& lists, const Coloring& partial, Vertex w,
                                  Color alpha, Color beta);

struct SubgraphLiftOptions {
  /// Re-check the hypotheses before lifting: f'(x) >= d_H(x), H is
  /// f'-choosable and f'-swappable over colors 1..cap (cap = max f' + 1),
  /// and g - H is L-swappable for the given lists.
  bool verify_hypotheses = true;
  std::size_t budget = kDefaultColoringBudget;
};

/// Lifts a swap sequence on g - H to g, where f'(x) = |L(x)| - (d_g(x) -
/// d_H(x)) >= d_H(x) on H.
///
/// When some x in H has |L(x)| > d_g(x), H is peeled one vertex at a time
/// (farthest from x first, x last) through lift_through_vertex. Otherwise,
/// for each step a versatile extension is computed, the current coloring is
/// moved to it by swaps inside H (shortest path under the lists reduced by
/// the outside colors), and the step's swap is replayed. With `target`
/// given, a last bridge inside H reaches it.
///
/// Errors from a step are rethrown as PreconditionError naming the step.
std::vector<SwapMove> lift_through_subgraph(const Graph& g, const std::vector<Vertex>& h,
                                            const ListAssignment& lists, const Coloring& start,
                                            const std::vector<SwapMove>& moves,
                                            const std::optional<Coloring>& target = std::nullopt,
                                            const SubgraphLiftOptions& options = {});

}  // namespace kempe
