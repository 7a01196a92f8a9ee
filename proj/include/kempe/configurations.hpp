#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/plane.hpp"

namespace kempe {

enum class ConfigKind { C1Edge, C2Barbell, C3Theta, C3K24 };

std::string to_string(ConfigKind kind);

struct ConfigWitness {
  ConfigKind kind = ConfigKind::C1Edge;
  /// Union of the witness, sorted.
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  /// C1: the edge and its host degree sum.
  int degree_sum = 0;

  /// C2: the two cycles (each listed from its smallest vertex) and the
  /// connecting path from cycles[0] to cycles[1]; a single shared vertex
  /// when the barbell is short.
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;

  /// C3: hubs and hub-to-hub paths (three for a theta, four for K_{2,4}).
  Vertex hub_a = -1;
  Vertex hub_b = -1;
  std::vector<std::vector<Vertex>> paths;
  /// C3-K24: whether every middle vertex has degree 2 in the host.
  bool middle_host_two = false;
};

/// Caps on the exponential searches; exceeding one throws BudgetError.
struct DetectBudget {
  std::size_t max_cycles = 200'000;
  std::size_t max_paths = 200'000;
};

/// All cycles of g, each listed from its smallest vertex with the second
/// vertex smaller than the last; lexicographic order.
std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g,
                                                  std::size_t budget = 200'000);

/// Lexicographically least edge uv of `host` with d(u) + d(v) <= threshold.
std::optional<ConfigWitness> detect_c1(const Graph& host, int threshold);

/// Two even cycles sharing at most one vertex plus a shortest path joining
/// them, as a subgraph of `sub`. The first qualifying cycle pair in
/// lexicographic order wins.
std::optional<ConfigWitness> detect_barbell(const Graph& sub, const DetectBudget& budget = {});

/// Hubs a < b with three internally disjoint a-b paths of equal parity,
/// not all of length 2 (so the union is not K_{2,3}). Least hub pair first,
/// then paths in depth-first lexicographic order.
std::optional<ConfigWitness> detect_theta(const Graph& sub, const DetectBudget& budget = {});

/// Hubs a < b with four common neighbours in `sub`. With `host` given and
/// `require_host_two` set, only middle vertices of host degree 2 count.
std::optional<ConfigWitness> detect_k24(const Graph& sub, const Graph* host = nullptr,
                                        bool require_host_two = false);

/// Structural re-check of a witness against the graph it was found in
/// (host for C1, the special subgraph otherwise). Returns an empty string
/// when valid, else the first failure.
std::string revalidate(const ConfigWitness& w, const Graph& g, int threshold = 0);

enum class AuditVariant { Lemma1, Lemma2 };
std::string to_string(AuditVariant v);

struct AuditReport {
  AuditVariant variant = AuditVariant::Lemma1;
  int threshold = 0;
  /// Edges of G3 (lemma1) or G2 (lemma2).
  std::vector<Edge> special_edges;
  /// Two special vertices adjacent (then C1 holds at a small sum).
  bool special_adjacent = false;
  bool special_bipartite = true;

  std::optional<ConfigWitness> c1;
  std::optional<ConfigWitness> c2;
  std::optional<ConfigWitness> c3_theta;
  /// Lemma2 only: any K_{2,4}, and one whose middle side is host 2-vertices.
  std::optional<ConfigWitness> c3_k24;
  std::optional<ConfigWitness> c3_k24_strict;

  bool any() const { return c1 || c2 || c3_theta || c3_k24; }
  /// Same, reading K_{2,4} as requiring host 2-vertices on the middle side.
  bool any_strict() const { return c1 || c2 || c3_theta || c3_k24_strict; }
};

/// Evaluates every configuration of the chosen variant. Throws
/// PreconditionError when the minimum degree is below 2.
AuditReport structural_audit(const PlaneGraph& pg, AuditVariant variant,
                             const DetectBudget& budget = {});

/// max{11, Delta + 2} for lemma1, 16 for lemma2.
int c1_threshold(const Graph& host, AuditVariant variant);

}  // namespace kempe
