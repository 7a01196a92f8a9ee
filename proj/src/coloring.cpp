#include "kempe/coloring.hpp"

#include <algorithm>
#include <functional>

#include "kempe/errors.hpp"

namespace kempe {

ColorSet::ColorSet(std::initializer_list<Color> colors) {
  for (Color c : colors) insert(c);
}

void ColorSet::insert(Color c) {
  if (c < 0 || c > kMaxColor)
    throw ParameterError("color " + std::to_string(c) + " outside [0, " +
                         std::to_string(kMaxColor) + "]");
  mask_ |= std::uint64_t{1} << c;
}

std::vector<Color> ColorSet::to_vector() const { return {begin(), end()}; }

ListAssignment::ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {
  for (std::size_t v = 0; v < lists_.size(); ++v)
    if (lists_[v].empty())
      throw ParameterError("empty list at vertex " + std::to_string(v));
}

ListAssignment ListAssignment::uniform(int n, ColorSet list) {
  return ListAssignment(std::vector<ColorSet>(n, list));
}

ColorSet ListAssignment::universe() const {
  ColorSet u;
  for (auto s : lists_) u = u | s;
  return u;
}

ListAssignment ListAssignment::restricted(const std::vector<Vertex>& keep) const {
  auto sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ColorSet> out;
  for (Vertex v : sorted) out.push_back(lists_.at(v));
  return ListAssignment(std::move(out));
}

std::string to_string(const SwapMove& m) {
  return "{" + std::to_string(m.alpha) + "," + std::to_string(m.beta) + "}@" +
         std::to_string(m.anchor);
}

std::string to_string(const Coloring& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

namespace {

void require_total(const Graph& g, const Coloring& phi) {
  if (static_cast<int>(phi.size()) != g.order())
    throw PreconditionError("coloring has " + std::to_string(phi.size()) +
                            " entries for a graph on " + std::to_string(g.order()) +
                            " vertices");
  for (std::size_t v = 0; v < phi.size(); ++v)
    if (phi[v] < 0) throw PreconditionError("vertex " + std::to_string(v) + " is uncolored");
}

void require_lists(const Graph& g, const ListAssignment& lists) {
  if (lists.order() != g.order())
    throw PreconditionError("list assignment covers " + std::to_string(lists.order()) +
                            " vertices, graph has " + std::to_string(g.order()));
}

// Depth-first L-coloring search in a fixed vertex order. `visit` returns
// false to stop.
void backtrack(const Graph& g, const ListAssignment& lists, const std::vector<Vertex>& order,
               const std::function<bool(const Coloring&)>& visit) {
  const int n = g.order();
  Coloring phi(n, kNoColor);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  // Earlier-ordered neighbors only; later ones are still uncolored.
  std::vector<std::vector<Vertex>> back(n);
  for (int i = 0; i < n; ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (pos[w] < i) back[i].push_back(w);

  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!visit(phi)) stop = true;
      return;
    }
    Vertex v = order[i];
    ColorSet avail = lists[v];
    for (Vertex w : back[i]) avail.erase(phi[w]);
    for (Color c : avail) {
      phi[v] = c;
      rec(i + 1);
      if (stop) break;
    }
    phi[v] = kNoColor;
  };
  rec(0);
}

std::vector<Vertex> identity_order(int n) {
  std::vector<Vertex> o(n);
  for (int i = 0; i < n; ++i) o[i] = i;
  return o;
}

}  // namespace

ColoringCheck check_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi) {
  require_total(g, phi);
  require_lists(g, lists);
  ColoringCheck out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!lists[v].contains(phi[v])) {
      out.ok = false;
      out.bad_vertex = v;
      return out;
    }
  for (auto [u, v] : g.edges())
    if (phi[u] == phi[v]) {
      out.ok = false;
      out.bad_edge = Edge{u, v};
      return out;
    }
  return out;
}

bool is_proper(const Graph& g, const Coloring& phi) {
  require_total(g, phi);
  for (auto [u, v] : g.edges())
    if (phi[u] == phi[v]) return false;
  return true;
}

std::vector<Coloring> enumerate_colorings(const Graph& g, const ListAssignment& lists,
                                          std::size_t budget) {
  require_lists(g, lists);
  std::vector<Coloring> out;
  backtrack(g, lists, identity_order(g.order()), [&](const Coloring& phi) {
    if (out.size() == budget)
      throw BudgetError("more than " + std::to_string(budget) + " L-colorings", budget);
    out.push_back(phi);
    return true;
  });
  return out;
}

std::size_t count_colorings(const Graph& g, const ListAssignment& lists, std::size_t limit) {
  require_lists(g, lists);
  std::size_t count = 0;
  if (limit == 0) return 0;
  backtrack(g, lists, identity_order(g.order()), [&](const Coloring&) {
    return ++count < limit;
  });
  return count;
}

std::optional<Coloring> find_coloring(const Graph& g, const ListAssignment& lists,
                                      const std::vector<Vertex>& order) {
  require_lists(g, lists);
  auto ord = order.empty() ? identity_order(g.order()) : order;
  if (static_cast<int>(ord.size()) != g.order())
    throw ParameterError("vertex order must list every vertex once");
  std::optional<Coloring> found;
  backtrack(g, lists, ord, [&](const Coloring& phi) {
    found = phi;
    return false;
  });
  return found;
}

std::vector<Vertex> kempe_component(const Graph& g, const Coloring& phi, Vertex v, Color alpha,
                                    Color beta, const std::vector<char>* skip) {
  std::vector<Vertex> out;
  if (phi[v] != alpha && phi[v] != beta) return out;
  if (skip && (*skip)[v]) return out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Vertex y : g.neighbors(x)) {
      if (seen[y] || (skip && (*skip)[y])) continue;
      if (phi[y] != alpha && phi[y] != beta) continue;
      seen[y] = 1;
      stack.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Coloring apply_swap(const Coloring& phi, const std::vector<Vertex>& component, Color alpha,
                    Color beta) {
  Coloring out = phi;
  for (Vertex x : component) out[x] = phi[x] == alpha ? beta : alpha;
  return out;
}

SwapResult classify_swap(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                         const SwapMove& move, const std::vector<char>* skip) {
  if (move.anchor < 0 || move.anchor >= g.order())
    throw ParameterError("swap anchor " + std::to_string(move.anchor) + " out of range");
  if (move.alpha == move.beta)
    throw ParameterError("swap needs two distinct colors, got " + to_string(move));
  if (move.alpha < 0 || move.beta < 0 || move.alpha > kMaxColor || move.beta > kMaxColor)
    throw ParameterError("swap color out of range in " + to_string(move));
  SwapResult r;
  r.component = kempe_component(g, phi, move.anchor, move.alpha, move.beta, skip);
  if (r.component.empty()) {
    r.verdict = SwapVerdict::AnchorNotInPair;
    r.result = phi;
    r.reason = "anchor not in color pair";
    return r;
  }
  r.result = apply_swap(phi, r.component, move.alpha, move.beta);
  for (Vertex x : r.component)
    if (!lists[x].contains(r.result[x])) {
      r.verdict = SwapVerdict::ListViolation;
      r.violator = x;
      r.reason = "vertex " + std::to_string(x) + " would get " + std::to_string(r.result[x]) +
                 " which is not in its list";
      break;
    }
  return r;
}

SwapMove normalize(const Graph& g, const Coloring& phi, const SwapMove& move,
                   const std::vector<char>* skip) {
  SwapMove m = move;
  if (m.alpha > m.beta) std::swap(m.alpha, m.beta);
  auto comp = kempe_component(g, phi, m.anchor, m.alpha, m.beta, skip);
  if (!comp.empty()) m.anchor = comp.front();
  return m;
}

std::vector<Coloring> replay(const Graph& g, const ListAssignment& lists, const Coloring& start,
                             const std::vector<SwapMove>& moves,
                             const std::vector<char>* skip) {
  std::vector<Coloring> trail{start};
  for (std::size_t i = 0; i < moves.size(); ++i) {
    auto r = classify_swap(g, lists, trail.back(), moves[i], skip);
    if (!r.valid())
      throw PreconditionError("step " + std::to_string(i) + " (" + to_string(moves[i]) +
                              ") is not L-valid: " + r.reason);
    trail.push_back(std::move(r.result));
  }
  return trail;
}

}  // namespace kempe
