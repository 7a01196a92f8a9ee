#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Largest supported color universe for canonical enumeration.
inline constexpr int kMaxCap = 8;

// List assignments over colors 1..cap, taken up to a global permutation of
// the colors. Assignments are ordered vertex by vertex; two lists of equal
// size compare by their sorted color sequences. The canonical member of an
// orbit is its least element; it always introduces new colors in increasing
// order without gaps, which is what the generator below relies on.

/// Calls `visit` with each canonical assignment with |L(v)| = sizes[v], in
/// increasing order, until it returns false. Throws ParameterError when a
/// size is below 1 or above cap, or cap is outside [1, kMaxCap].
void for_each_canonical(const std::vector<int>& sizes, int cap,
                        const std::function<bool(const ListAssignment&)>& visit);

std::size_t count_canonical(const std::vector<int>& sizes, int cap);

/// Least member of the orbit of `lists` (colors must lie in 1..cap).
ListAssignment canonicalize(const ListAssignment& lists, int cap);
bool is_canonical(const ListAssignment& lists, int cap);

/// Number of color permutations of 1..cap fixing `lists`.
std::size_t stabilizer_size(const ListAssignment& lists, int cap);

/// Draws canonical assignments uniformly over orbits. A restricted-growth
/// assignment is drawn uniformly, then accepted with probability
/// |stabilizer| / W, where W counts the permutations that keep it
/// restricted-growth; this cancels the orbit's weight exactly.
class AssignmentSampler {
 public:
  AssignmentSampler(std::vector<int> sizes, int cap, std::uint64_t seed);
  ListAssignment next();
  /// Raw draws consumed so far (accepted or not).
  std::size_t draws() const noexcept { return draws_; }

 private:
  std::vector<int> sizes_;
  int cap_;
  std::mt19937_64 rng_;
  /// completions_[i][m]: restricted-growth completions from vertex i with
  /// m colors in use.
  std::vector<std::vector<std::uint64_t>> completions_;
  std::size_t draws_ = 0;
};

/// Degrees of g as list sizes (degree assignments).
std::vector<int> degree_sizes(const Graph& g);

}  // namespace kempe
