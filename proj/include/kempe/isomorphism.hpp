#pragma once

#include <optional>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Default vertex-count guard for is_isomorphic.
inline constexpr int kIsomorphismMaxVertices = 16;

/// Searches for an adjacency-preserving bijection g1 -> g2.
///
/// Cheap invariants (order, size, degree sequence) are compared first, so
/// mismatched graphs of any size return nullopt. Otherwise graphs larger
/// than `max_vertices` raise BudgetError. The search refines vertex classes
/// by iterated neighbourhood colouring and then backtracks in a fixed order,
/// so the returned witness is deterministic.
std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g1, const Graph& g2,
                                                 int max_vertices = kIsomorphismMaxVertices);

/// True iff `map` is a bijection carrying E(g1) onto E(g2).
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& map);

}  // namespace kempe
