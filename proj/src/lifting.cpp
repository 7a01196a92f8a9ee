#include "kempe/lifting.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "kempe/assignments.hpp"
#include "kempe/blocks.hpp"
#include "kempe/errors.hpp"
#include "kempe/reconfig.hpp"

namespace kempe {
namespace {

std::string step_name(std::size_t i) { return "step " + std::to_string(i); }

SwapMove recolor(Vertex v, Color from, Color to) {
  return SwapMove{v, std::min(from, to), std::max(from, to)};
}

// L-coloring check restricted to the vertices not marked in `skip`.
void require_partial_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                              const std::vector<char>& skip, const std::string& what) {
  if (static_cast<int>(phi.size()) != g.order() || lists.order() != g.order())
    throw PreconditionError(what + " does not match the graph");
  for (Vertex x = 0; x < g.order(); ++x) {
    if (skip[x]) continue;
    if (!lists[x].contains(phi[x]))
      throw PreconditionError(what + ": vertex " + std::to_string(x) + " has color " +
                              std::to_string(phi[x]) + " outside its list");
    for (Vertex y : g.neighbors(x))
      if (!skip[y] && phi[x] == phi[y])
        throw PreconditionError(what + ": edge " + std::to_string(x) + "-" + std::to_string(y) +
                                " is monochromatic");
  }
}

bool agree_off(const Coloring& a, const Coloring& b, const std::vector<char>& skip) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!skip[x] && a[x] != b[x]) return false;
  return true;
}

// Replays the input on g - skip, naming the first bad step.
std::vector<Coloring> replay_input(const Graph& g, const ListAssignment& lists,
                                   const Coloring& start, const std::vector<SwapMove>& moves,
                                   const std::vector<char>& skip) {
  std::vector<Coloring> trail{start};
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const auto& m = moves[i];
    if (m.anchor >= 0 && m.anchor < g.order() && skip[m.anchor])
      throw PreconditionError(step_name(i) + " anchors at removed vertex " +
                              std::to_string(m.anchor));
    auto r = classify_swap(g, lists, trail.back(), m, &skip);
    if (!r.valid())
      throw PreconditionError(step_name(i) + " (" + to_string(m) +
                              ") is not L-valid on the reduced graph: " + r.reason);
    trail.push_back(std::move(r.result));
  }
  return trail;
}

// Applies `m` to `phi` on g - absent, asserting validity.
void apply_checked(const Graph& g, const ListAssignment& lists, Coloring& phi, const SwapMove& m,
                   const std::vector<char>& absent) {
  auto r = classify_swap(g, lists, phi, m, &absent);
  if (!r.valid()) throw std::logic_error("lifted move " + to_string(m) + " is invalid: " + r.reason);
  phi = std::move(r.result);
}

// Vertex lifting inside g - absent. Input moves live on g - absent - v.
std::vector<SwapMove> lift_vertex_impl(const Graph& g, const ListAssignment& lists, Vertex v,
                                       std::vector<char> absent, const Coloring& start,
                                       const std::vector<SwapMove>& moves,
                                       const std::optional<Coloring>& target) {
  if (v < 0 || v >= g.order()) throw ParameterError("lift vertex out of range");
  int degree = 0;
  for (Vertex y : g.neighbors(v)) degree += !absent[y];
  if (lists[v].size() <= degree)
    throw PreconditionError("vertex " + std::to_string(v) + " has " +
                            std::to_string(lists[v].size()) + " colors but degree " +
                            std::to_string(degree) + "; lifting needs |L(v)| > d(v)");
  require_partial_coloring(g, lists, start, absent, "start coloring");
  auto reduced = absent;
  reduced[v] = 1;
  auto trail = replay_input(g, lists, start, moves, reduced);
  if (target) {
    require_partial_coloring(g, lists, *target, absent, "target coloring");
    if (!agree_off(*target, trail.back(), reduced))
      throw PreconditionError("target coloring disagrees with the input's final coloring");
  }

  std::vector<SwapMove> out;
  Coloring psi = start;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const auto& m = moves[i];
    auto comp = kempe_component(g, psi, m.anchor, m.alpha, m.beta, &absent);
    bool touches_v = std::binary_search(comp.begin(), comp.end(), v);
    bool direct = !touches_v;
    if (touches_v && lists[v].contains(m.alpha) && lists[v].contains(m.beta)) {
      int inside = 0;
      for (Vertex y : g.neighbors(v))
        inside += std::binary_search(comp.begin(), comp.end(), y);
      direct = inside == 1;
    }
    if (!direct) {
      ColorSet avail = lists[v];
      avail.erase(psi[v]);
      for (Vertex y : g.neighbors(v))
        if (!absent[y]) avail.erase(psi[y]);
      if (avail.empty()) throw std::logic_error("no free color at the lifted vertex");
      auto rc = recolor(v, psi[v], avail.min());
      apply_checked(g, lists, psi, rc, absent);
      out.push_back(rc);
    }
    apply_checked(g, lists, psi, m, absent);
    out.push_back(m);
    if (!agree_off(psi, trail[i + 1], reduced))
      throw std::logic_error("lifted trajectory left the input at " + step_name(i));
  }
  if (target && psi[v] != (*target)[v]) {
    auto rc = recolor(v, psi[v], (*target)[v]);
    apply_checked(g, lists, psi, rc, absent);
    out.push_back(rc);
  }
  return out;
}

std::vector<char> mask_of(int n, const std::vector<Vertex>& vs) {
  std::vector<char> m(n, 0);
  for (Vertex x : vs) {
    if (x < 0 || x >= n) throw ParameterError("subgraph vertex out of range");
    if (m[x]) throw ParameterError("subgraph vertex listed twice");
    m[x] = 1;
  }
  return m;
}

// L_H: lists on H minus the colors of outside neighbours under phi, as a
// list assignment of the induced graph (H renumbered in increasing order).
std::optional<ListAssignment> reduced_lists(const Graph& g, const std::vector<Vertex>& hs,
                                            const std::vector<char>& in_h,
                                            const ListAssignment& lists, const Coloring& phi) {
  std::vector<ColorSet> out;
  for (Vertex x : hs) {
    ColorSet s = lists[x];
    for (Vertex y : g.neighbors(x))
      if (!in_h[y]) s.erase(phi[y]);
    if (s.empty()) return std::nullopt;
    out.push_back(s);
  }
  return ListAssignment(std::move(out));
}

Coloring restrict_to(const Coloring& phi, const std::vector<Vertex>& hs) {
  Coloring out;
  for (Vertex x : hs) out.push_back(phi[x]);
  return out;
}

// Moves `psi` to agree with `goal` on H using swaps inside H.
void bridge(const Graph& g, const Graph& hg, const std::vector<Vertex>& hs,
            const std::vector<char>& in_h, const ListAssignment& lists, Coloring& psi,
            const Coloring& goal, std::size_t budget, std::vector<SwapMove>& out,
            const std::string& where) {
  auto lh = reduced_lists(g, hs, in_h, lists, psi);
  if (!lh) throw PreconditionError(where + ": a vertex of H has no color left");
  auto path = equivalence_path(hg, *lh, restrict_to(psi, hs), restrict_to(goal, hs), budget);
  if (!path)
    throw PreconditionError(where + ": the two colorings of H are not equivalent under the "
                            "reduced lists");
  std::vector<char> none(g.order(), 0);
  for (const auto& m : *path) {
    SwapMove lifted{hs[m.anchor], m.alpha, m.beta};
    Coloring before = psi;
    apply_checked(g, lists, psi, lifted, none);
    if (!agree_off(before, psi, in_h)) throw std::logic_error("bridge swap left H");
    out.push_back(lifted);
  }
}

void verify_hypotheses(const Graph& g, const std::vector<Vertex>& hs,
                       const std::vector<char>& in_h, const ListAssignment& lists,
                       const std::vector<int>& fprime, std::size_t budget) {
  Graph hg = g.induced(hs);
  int cap = *std::max_element(fprime.begin(), fprime.end()) + 1;
  if (cap > kMaxCap) throw BudgetError("hypothesis check needs too many colors", kMaxCap);
  for_each_canonical(fprime, cap, [&](const ListAssignment& l) {
    ColoringSpace space(hg, l, budget);
    if (space.size() == 0)
      throw PreconditionError("H is not f'-choosable (fails for a canonical assignment over " +
                              std::to_string(cap) + " colors)");
    if (!is_swappable(space))
      throw PreconditionError("H is not f'-swappable (fails for a canonical assignment over " +
                              std::to_string(cap) + " colors)");
    return true;
  });
  std::vector<Vertex> rest;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!in_h[x]) rest.push_back(x);
  if (!rest.empty() &&
      !is_swappable(ColoringSpace(g.induced(rest), lists.restricted(rest), budget)))
    throw PreconditionError("G - H is not L-swappable for the given lists");
}

}  // namespace

std::vector<SwapMove> lift_through_vertex(const Graph& g, const ListAssignment& lists, Vertex v,
                                          const Coloring& start,
                                          const std::vector<SwapMove>& moves,
                                          const std::optional<Coloring>& target) {
  return lift_vertex_impl(g, lists, v, std::vector<char>(g.order(), 0), start, moves, target);
}

Coloring find_versatile_extension(const Graph& g, const std::vector<Vertex>& h,
                                  const ListAssignment& lists, const Coloring& partial, Vertex w,
                                  Color alpha, Color beta) {
  auto in_h = mask_of(g.order(), h);
  if (h.empty()) throw PreconditionError("H must be nonempty");
  auto hs = h;
  std::sort(hs.begin(), hs.end());
  Graph hg = g.induced(hs);
  if (!hg.connected()) throw PreconditionError("H is not connected");
  if (is_gallai_tree(hg).gallai_tree) throw PreconditionError("H is a Gallai tree");
  for (Vertex x : hs)
    if (lists[x].size() < g.degree(x))
      throw PreconditionError("vertex " + std::to_string(x) + " of H has fewer colors than its "
                              "degree in G");
  if (w < 0 || w >= g.order() || in_h[w]) throw PreconditionError("w must be a vertex of G - H");
  require_partial_coloring(g, lists, partial, in_h, "partial coloring");
  auto swap = classify_swap(g, lists, partial, SwapMove{w, alpha, beta}, &in_h);
  if (!swap.valid())
    throw PreconditionError("partial coloring is not " + std::to_string(alpha) + "," +
                            std::to_string(beta) + "-versatile at " + std::to_string(w) + ": " +
                            swap.reason);

  // alpha,beta-components of the partial coloring on G - H.
  std::vector<int> part(g.order(), -1);
  int parts = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (in_h[x] || part[x] >= 0 || (partial[x] != alpha && partial[x] != beta)) continue;
    for (Vertex y : kempe_component(g, partial, x, alpha, beta, &in_h)) part[y] = parts;
    ++parts;
  }

  Coloring phi = partial;
  std::optional<Coloring> found;
  auto contract_holds = [&] {
    if (!classify_swap(g, lists, phi, SwapMove{w, alpha, beta}).valid()) return false;
    std::vector<char> seen(g.order(), 0);
    for (Vertex x = 0; x < g.order(); ++x) {
      if (seen[x] || (phi[x] != alpha && phi[x] != beta)) continue;
      int owner = -1;
      for (Vertex y : kempe_component(g, phi, x, alpha, beta)) {
        seen[y] = 1;
        if (part[y] < 0) continue;
        if (owner >= 0 && owner != part[y]) return false;
        owner = part[y];
      }
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == hs.size()) {
      if (contract_holds()) found = phi;
      return;
    }
    Vertex x = hs[i];
    ColorSet avail = lists[x];
    for (Vertex y : g.neighbors(x))
      if (!in_h[y] || std::find(hs.begin(), hs.begin() + i, y) != hs.begin() + i)
        avail.erase(phi[y]);
    for (Color c : avail) {
      phi[x] = c;
      rec(i + 1);
      if (found) return;
    }
  };
  rec(0);
  if (!found) throw PreconditionError("no versatile extension exists for this partial coloring");
  return *found;
}

std::vector<SwapMove> lift_through_subgraph(const Graph& g, const std::vector<Vertex>& h,
                                            const ListAssignment& lists, const Coloring& start,
                                            const std::vector<SwapMove>& moves,
                                            const std::optional<Coloring>& target,
                                            const SubgraphLiftOptions& options) {
  if (h.empty()) throw PreconditionError("H must be nonempty");
  if (lists.order() != g.order()) throw PreconditionError("lists do not match the graph");
  auto in_h = mask_of(g.order(), h);
  auto hs = h;
  std::sort(hs.begin(), hs.end());
  Graph hg = g.induced(hs);
  if (!hg.connected()) throw PreconditionError("H is not connected");

  std::vector<int> fprime;
  Vertex slack = -1;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    Vertex x = hs[i];
    int f = lists[x].size() - (g.degree(x) - hg.degree(static_cast<Vertex>(i)));
    if (f < hg.degree(static_cast<Vertex>(i)))
      throw PreconditionError("f'(" + std::to_string(x) + ") = " + std::to_string(f) +
                              " is below d_H");
    if (slack < 0 && lists[x].size() > g.degree(x)) slack = x;
    fprime.push_back(f);
  }
  auto check = check_coloring(g, lists, start);
  if (!check.ok) throw PreconditionError("start is not an L-coloring of G");
  auto trail = replay_input(g, lists, start, moves, in_h);
  if (target) {
    if (!check_coloring(g, lists, *target).ok)
      throw PreconditionError("target is not an L-coloring of G");
    if (!agree_off(*target, trail.back(), in_h))
      throw PreconditionError("target coloring disagrees with the input's final coloring");
  }
  if (options.verify_hypotheses) verify_hypotheses(g, hs, in_h, lists, fprime, options.budget);

  std::vector<SwapMove> out;
  if (slack >= 0) {
    // Peel H: add vertices farthest from the slack vertex first.
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[slack] = 0;
    q.push(slack);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x))
        if (in_h[y] && dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
    }
    auto order = hs;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
    auto absent = in_h;
    out = moves;
    for (Vertex x : order) {
      absent[x] = 0;
      out = lift_vertex_impl(g, lists, x, absent, start, out, target);
    }
  } else {
    Coloring psi = start;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const auto& m = moves[i];
      try {
        auto ext = find_versatile_extension(g, hs, lists, psi, m.anchor, m.alpha, m.beta);
        bridge(g, hg, hs, in_h, lists, psi, ext, options.budget, out, step_name(i));
        std::vector<char> none(g.order(), 0);
        apply_checked(g, lists, psi, m, none);
      } catch (const PreconditionError& e) {
        throw PreconditionError(step_name(i) + ": " + e.what());
      }
      out.push_back(m);
      if (!agree_off(psi, trail[i + 1], in_h))
        throw std::logic_error("lifted trajectory left the input at " + step_name(i));
    }
    if (target) bridge(g, hg, hs, in_h, lists, psi, *target, options.budget, out, "final bridge");
  }

  auto lifted = replay(g, lists, start, out);
  if (!agree_off(lifted.back(), trail.back(), in_h) || (target && lifted.back() != *target))
    throw std::logic_error("lifted sequence does not reach the expected coloring");
  return out;
}

}  // namespace kempe
