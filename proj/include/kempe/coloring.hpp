#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

using Color = int;
/// Colors are dense small integers in [0, kMaxColor].
inline constexpr Color kMaxColor = 63;
/// Marks an uncolored vertex in a partial coloring.
inline constexpr Color kNoColor = -1;

/// A set of colors as a 64-bit mask: O(1) membership, increasing iteration.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors);
  static constexpr ColorSet from_mask(std::uint64_t mask) {
    ColorSet s;
    s.mask_ = mask;
    return s;
  }

  bool contains(Color c) const noexcept {
    return c >= 0 && c <= kMaxColor && ((mask_ >> c) & 1u);
  }
  void insert(Color c);
  void erase(Color c) noexcept {
    if (c >= 0 && c <= kMaxColor) mask_ &= ~(std::uint64_t{1} << c);
  }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  std::uint64_t mask() const noexcept { return mask_; }
  /// Smallest member; undefined on an empty set.
  Color min() const noexcept { return std::countr_zero(mask_); }
  std::vector<Color> to_vector() const;

  friend ColorSet operator&(ColorSet a, ColorSet b) { return from_mask(a.mask_ & b.mask_); }
  friend ColorSet operator|(ColorSet a, ColorSet b) { return from_mask(a.mask_ | b.mask_); }
  friend ColorSet operator-(ColorSet a, ColorSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend bool operator==(ColorSet a, ColorSet b) = default;

  class iterator {
   public:
    using value_type = Color;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Color operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t mask_ = 0;
};

/// Per-vertex allowable colors. Every list is nonempty.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<ColorSet> lists);
  /// Same list at each of n vertices.
  static ListAssignment uniform(int n, ColorSet list);

  int order() const noexcept { return static_cast<int>(lists_.size()); }
  const ColorSet& operator[](Vertex v) const { return lists_.at(v); }
  const std::vector<ColorSet>& lists() const noexcept { return lists_; }
  ColorSet universe() const;

  /// Lists restricted to the given vertices, in increasing vertex order.
  ListAssignment restricted(const std::vector<Vertex>& keep) const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColorSet> lists_;
};

using Coloring = std::vector<Color>;

/// An alpha,beta Kempe swap at `anchor`.
struct SwapMove {
  Vertex anchor = 0;
  Color alpha = 0;
  Color beta = 0;

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
  friend auto operator<=>(const SwapMove&, const SwapMove&) = default;
};

std::string to_string(const SwapMove& m);
std::string to_string(const Coloring& c);

struct ColoringCheck {
  bool ok = true;
  /// Set when an edge is monochromatic.
  std::optional<Edge> bad_edge;
  /// Set when a vertex's color is outside its list.
  std::optional<Vertex> bad_vertex;
};

/// Proper and list-respecting. List membership is checked first in vertex
/// order, then edges in lexicographic order. Partial colorings throw
/// PreconditionError.
ColoringCheck check_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi);

/// Proper only (ignores lists).
bool is_proper(const Graph& g, const Coloring& phi);

/// Default cap on enumerated colorings.
inline constexpr std::size_t kDefaultColoringBudget = 5'000'000;

/// All L-colorings in lexicographic order (vertex 0 most significant).
/// Throws BudgetError once more than `budget` colorings exist.
std::vector<Coloring> enumerate_colorings(const Graph& g, const ListAssignment& lists,
                                          std::size_t budget = kDefaultColoringBudget);

/// Number of L-colorings, stopping at `limit`.
std::size_t count_colorings(const Graph& g, const ListAssignment& lists,
                            std::size_t limit = SIZE_MAX);

/// Some L-coloring, found by backtracking in the given vertex order (or
/// increasing order when empty); the first in that order's lexicographic sense.
std::optional<Coloring> find_coloring(const Graph& g, const ListAssignment& lists,
                                      const std::vector<Vertex>& order = {});

/// Vertices of the alpha,beta-component containing v, increasing. Empty when
/// phi(v) is not alpha or beta. `skip` excludes vertices (used to work in
/// an induced subgraph G - S while keeping G's ids).
std::vector<Vertex> kempe_component(const Graph& g, const Coloring& phi, Vertex v, Color alpha,
                                    Color beta, const std::vector<char>* skip = nullptr);

/// Swaps alpha and beta on the given vertex set.
Coloring apply_swap(const Coloring& phi, const std::vector<Vertex>& component, Color alpha,
                    Color beta);

enum class SwapVerdict { Valid, ListViolation, AnchorNotInPair };

struct SwapResult {
  SwapVerdict verdict = SwapVerdict::Valid;
  bool valid() const noexcept { return verdict == SwapVerdict::Valid; }
  /// The swapped coloring. Always proper; an L-coloring iff valid().
  Coloring result;
  std::vector<Vertex> component;
  /// First component vertex whose list excludes its new color.
  std::optional<Vertex> violator;
  std::string reason;
};

/// Classifies a Kempe swap. Malformed moves (alpha == beta, anchor out of
/// range, negative colors) throw ParameterError.
SwapResult classify_swap(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                         const SwapMove& move, const std::vector<char>* skip = nullptr);

/// Normalised form: alpha < beta and the anchor is the minimum vertex of
/// its component.
SwapMove normalize(const Graph& g, const Coloring& phi, const SwapMove& move,
                   const std::vector<char>* skip = nullptr);

/// Replays moves from `start`, throwing PreconditionError naming the first
/// step that is not L-valid. Returns every intermediate coloring including
/// the start.
std::vector<Coloring> replay(const Graph& g, const ListAssignment& lists, const Coloring& start,
                             const std::vector<SwapMove>& moves,
                             const std::vector<char>* skip = nullptr);

}  // namespace kempe
