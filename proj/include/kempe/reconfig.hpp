#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// One edge of the reconfiguration graph as seen from its source.
struct Transition {
  SwapMove move;  // normalised
  std::size_t target = 0;
};

/// All L-colorings of (g, L) in lexicographic order, with on-the-fly
/// neighbourhoods in the Kempe reconfiguration graph.
///
/// Colorings are stored packed (one byte per vertex) and looked up by binary
/// search, so node ids are positions in lexicographic order.
class ColoringSpace {
 public:
  ColoringSpace(const Graph& g, const ListAssignment& lists,
                std::size_t budget = kDefaultColoringBudget);

  const Graph& graph() const noexcept { return graph_; }
  const ListAssignment& lists() const noexcept { return lists_; }
  std::size_t size() const noexcept { return count_; }

  Coloring coloring(std::size_t i) const;
  std::optional<std::size_t> find(const Coloring& phi) const;

  /// Valid swaps out of node i, ordered by (anchor, alpha, beta). Each
  /// Kempe component and color pair appears once, anchored at its minimum.
  std::vector<Transition> transitions(std::size_t i) const;
  /// Same, reusing `out` to avoid allocation in tight loops.
  void transitions(std::size_t i, std::vector<Transition>& out) const;

 private:
  const std::uint8_t* row(std::size_t i) const { return data_.data() + i * width_; }
  std::optional<std::size_t> find_raw(const std::uint8_t* key) const;

  Graph graph_;
  ListAssignment lists_;
  std::size_t width_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
};

struct MixingReport {
  std::size_t total = 0;
  std::size_t classes = 0;
  /// Class id per coloring; classes are numbered by their least member.
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> class_sizes;
  /// Lexicographically least coloring of each class.
  std::vector<Coloring> representatives;
  /// Node ids of colorings without any valid swap.
  std::vector<std::size_t> frozen;

  bool swappable() const noexcept { return classes <= 1; }
};

MixingReport mixing_classes(const ColoringSpace& space);
MixingReport mixing_classes(const Graph& g, const ListAssignment& lists,
                            std::size_t budget = kDefaultColoringBudget);

/// At most one class; one search from the first coloring, no class table.
bool is_swappable(const ColoringSpace& space);

/// Shortest move sequence from phi1 to phi2 by breadth-first search with
/// moves tried in transitions() order. The sequence is replayed before it
/// is returned. Throws PreconditionError if either input is not an
/// L-coloring.
std::optional<std::vector<SwapMove>> equivalence_path(const ColoringSpace& space,
                                                      const Coloring& phi1,
                                                      const Coloring& phi2);
std::optional<std::vector<SwapMove>> equivalence_path(const Graph& g, const ListAssignment& lists,
                                                      const Coloring& phi1, const Coloring& phi2,
                                                      std::size_t budget = kDefaultColoringBudget);

/// phi(vertex) == color.
struct Atom {
  Vertex vertex = 0;
  Color color = 0;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A set of colorings described as a union of conjunctions of atoms.
class ClassConstraint {
 public:
  /// Every coloring.
  static ClassConstraint all();
  /// No coloring.
  static ClassConstraint none();
  /// L_{v,c}: colorings with phi(v) = c.
  static ClassConstraint fixed(Vertex v, Color c);

  bool matches(const Coloring& phi) const;
  const std::vector<std::vector<Atom>>& terms() const noexcept { return terms_; }
  std::string to_string() const;

  friend ClassConstraint operator|(const ClassConstraint& a, const ClassConstraint& b);
  friend ClassConstraint operator&(const ClassConstraint& a, const ClassConstraint& b);

 private:
  std::vector<std::vector<Atom>> terms_;
};

struct SubsetResult {
  bool mixes = true;
  bool empty = false;
  std::size_t members = 0;
};

/// Whether all colorings in the class lie in one class of the full
/// reconfiguration graph.
SubsetResult subset_mixes(const ColoringSpace& space, const MixingReport& report,
                          const ClassConstraint& c);

struct CoverVerdict {
  bool certified = false;
  /// 'a' some class does not mix, 'b' union misses a coloring, 'c' some
  /// class meets no earlier class; 0 when certified.
  char failed = 0;
  /// Index of the failing class, or of the uncovered coloring for 'b'.
  std::size_t index = 0;
  std::string detail;
};

/// Checks the cover pattern: each class mixes, the union is everything,
/// and every class after the first meets an earlier one.
CoverVerdict cover_certificate(const ColoringSpace& space, const MixingReport& report,
                               const std::vector<ClassConstraint>& classes);

/// Graphviz rendering of the reconfiguration graph; throws BudgetError
/// above max_nodes colorings.
std::string reconfig_dot(const ColoringSpace& space, std::size_t max_nodes = 200);

}  // namespace kempe
