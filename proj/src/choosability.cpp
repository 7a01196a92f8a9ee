#include "kempe/choosability.hpp"

#include <algorithm>

#include "kempe/assignments.hpp"
#include "kempe/errors.hpp"

namespace kempe {

ChoosabilityVerdict is_degree_choosable(const Graph& g, const ChoosabilityOptions& options) {
  if (g.order() == 0) throw PreconditionError("empty graph");
  if (!g.connected()) throw PreconditionError("graph is not connected");
  ChoosabilityVerdict out;
  out.cap = options.cap > 0 ? options.cap : std::max(4, g.max_degree());
  auto sizes = degree_sizes(g);
  // An isolated vertex (K1) has degree 0: its empty list has no coloring.
  if (g.order() == 1) {
    out.choosable = false;
    return out;
  }
  auto test = [&](const ListAssignment& l) {
    ++out.checked;
    if (find_coloring(g, l)) return true;
    out.choosable = false;
    out.witness = l;
    return false;
  };
  try {
    for_each_canonical(sizes, out.cap, [&](const ListAssignment& l) {
      if (out.checked == options.max_assignments)
        throw BudgetError("too many canonical assignments", options.max_assignments);
      return test(l);
    });
    return out;
  } catch (const BudgetError&) {
  }
  out.sampled = true;
  out.checked = 0;
  AssignmentSampler sampler(sizes, out.cap, options.seed);
  for (std::size_t i = 0; i < options.samples; ++i)
    if (!test(sampler.next())) break;
  return out;
}

}  // namespace kempe
