#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/reconfig.hpp"

namespace kempe {

enum class Verdict { Verified, Counterexample, BudgetExceeded, Rejected };
std::string to_string(Verdict v);

/// One instance checked in one mode.
struct CaseReport {
  std::string instance;
  /// "exhaustive", "sampled" or "fixed" (hand-picked assignments).
  std::string mode;
  int cap = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Assignments that met the hypothesis and were checked.
  std::size_t checked = 0;
  Verdict verdict = Verdict::Verified;
  std::string detail;
  Graph graph;
  std::optional<ListAssignment> counterexample;
};

struct LemmaReport {
  std::string lemma;
  std::vector<CaseReport> cases;
  double seconds = 0;

  /// Rejected < Verified < BudgetExceeded < Counterexample; the worst case
  /// wins, except that an all-rejected report stays Rejected.
  Verdict verdict() const;
};

struct VerifyOptions {
  /// Universe for the exhaustive pass; 0 skips it.
  int cap = 4;
  /// Universe for the sampled pass.
  int sample_cap = 6;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Colorings per reconfiguration graph.
  std::size_t budget = kDefaultColoringBudget;
  /// Canonical assignments per exhaustive pass.
  std::size_t max_assignments = 5'000'000;
  /// Confirm degree-choosability hypotheses by brute force as well as by
  /// the Gallai-tree test.
  bool confirm_choosability = false;
};

/// Returns a failure description, or nullopt when the assignment passes.
/// Returning "" marks the assignment as outside the hypothesis (skipped).
using AssignmentCheck = std::function<std::optional<std::string>(const ListAssignment&)>;

inline const std::string kSkip;

/// Runs `check` over the canonical assignments with the given sizes
/// (exhaustive at options.cap, then options.samples draws at
/// options.sample_cap), in parallel over options.jobs threads. The first
/// failure in stream order is reported, whatever the thread count.
std::vector<CaseReport> check_assignments(const Graph& g, const std::string& instance,
                                          const std::vector<int>& sizes,
                                          const AssignmentCheck& check,
                                          const VerifyOptions& options);

/// Counterexample when some canonical degree assignment leaves g with two
/// or more classes. Throws PreconditionError if g is disconnected.
LemmaReport degree_swappable_verdict(const Graph& g, const VerifyOptions& options,
                                     const std::string& instance = "graph");

/// Lemma ids: reduc-lem, barbell, k4k2, short-theta, prism,
/// big-intersection, cor-order, cor-fix-one, cor-fix-two. `instances` are
/// family specs (e.g. "barbell(4,4,0)"); empty selects the default
/// schedule. Throws ParameterError on an unknown id.
LemmaReport verify_lemma(const std::string& id, const std::vector<std::string>& instances,
                         const VerifyOptions& options);
const std::vector<std::string>& lemma_ids();
std::vector<std::string> default_instances(const std::string& id);

/// L-colorings with no L-valid swap, in lexicographic order.
std::vector<Coloring> frozen_colorings(const Graph& g, const ListAssignment& lists,
                                       std::size_t budget = kDefaultColoringBudget);

/// The classes of the cover argument for K4 x K2 (vertex (i, b) is 2i + b):
/// the chain D12, D23, D14, D32, D13 when all lists agree, and otherwise
/// the classes built around a pair v_i, w_j with different lists. Empty
/// classes are dropped and the rest ordered so each meets an earlier one
/// where possible.
std::vector<ClassConstraint> k4k2_partition(const ColoringSpace& space);

/// Whether some vertex order has every vertex preceded by fewer than
/// sizes[v] of its neighbours; fills `order` when it exists.
bool degenerate_order(const Graph& g, const std::vector<int>& sizes,
                      std::vector<Vertex>* order = nullptr);

}  // namespace kempe
