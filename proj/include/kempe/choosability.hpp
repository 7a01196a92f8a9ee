#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

struct ChoosabilityOptions {
  /// Color universe; 0 means max(4, Delta).
  int cap = 0;
  /// Canonical assignments tried before falling back to sampling.
  std::size_t max_assignments = 2'000'000;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

struct ChoosabilityVerdict {
  bool choosable = true;
  /// True when the exhaustive pass hit max_assignments and the verdict
  /// rests on samples.
  bool sampled = false;
  int cap = 0;
  std::size_t checked = 0;
  /// A degree assignment with no coloring, when one was found.
  std::optional<ListAssignment> witness;
};

/// Brute force over canonical degree assignments of a connected graph.
/// Throws PreconditionError on disconnected or empty input.
ChoosabilityVerdict is_degree_choosable(const Graph& g, const ChoosabilityOptions& options = {});

}  // namespace kempe
