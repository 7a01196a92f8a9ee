#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

enum class Family {
  Cycle,
  Path,
  Clique,
  CompleteBipartite,
  Barbell,
  Theta,
  Prism,
  Star,
};

/// A named graph family with its integer parameters, e.g. "barbell(4,4,0)".
struct FamilySpec {
  Family family;
  std::vector<int> params;

  /// Parses the compact grammar `name(p1,p2,...)`. Whitespace is ignored.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  /// Throws ParameterError naming the violated constraint.
  void validate() const;
};

/// Builds the graph for a family spec.
///
/// Numbering:
///  - cycle(n): 0..n-1 along the cycle.
///  - path(n): n vertices, 0..n-1 along the path.
///  - clique(n): K_n.
///  - complete_bipartite(s,t): part A = 0..s-1, part B = s..s+t-1.
///  - star(n): center 0, leaves 1..n.
///  - barbell(c1,c2,p): first cycle 0..c1-1; the connecting path leaves
///    vertex 0 with internal vertices c1..c1+p-2; the second cycle starts at
///    the far end of the path and continues with fresh ids. For p = 0 the
///    second cycle starts at vertex 0.
///  - theta(l1,l2,l3): hubs 0 and 1; internal vertices of path 1, then path
///    2, then path 3, each listed from hub 0 toward hub 1.
///  - prism(p1,p2,p3): triangle 0,1,2 and triangle 3,4,5 with path i
///    joining i to i+3; internal path vertices follow in path order.
Graph generate(const FamilySpec& spec);
Graph generate(std::string_view spec_text);

/// A family spec, or "line(X)" for the line graph of X, or "product(X,Y)"
/// for the Cartesian product; nests freely.
Graph generate_instance(std::string_view text);

}  // namespace kempe
