#include "kempe/configurations.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "kempe/errors.hpp"
#include "kempe/families.hpp"
#include "kempe/isomorphism.hpp"

namespace kempe {
namespace {

using Mask = boost::dynamic_bitset<>;

Mask mask_of(int n, const std::vector<Vertex>& vs) {
  Mask m(n);
  for (Vertex v : vs) m.set(v);
  return m;
}

Edge ordered(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Fills vertices/edges from the structural fields.
void finish(ConfigWitness& w) {
  std::set<Vertex> vs;
  std::set<Edge> es;
  auto walk = [&](const std::vector<Vertex>& p, bool closed) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      vs.insert(p[i]);
      if (i + 1 < p.size()) es.insert(ordered(p[i], p[i + 1]));
    }
    if (closed && p.size() > 2) es.insert(ordered(p.back(), p.front()));
  };
  for (const auto& c : w.cycles) walk(c, true);
  walk(w.path, false);
  for (const auto& p : w.paths) walk(p, false);
  w.vertices.assign(vs.begin(), vs.end());
  w.edges.assign(es.begin(), es.end());
}

// Simple a-b paths in depth-first lexicographic order.
std::vector<std::vector<Vertex>> hub_paths(const Graph& g, Vertex a, Vertex b,
                                           std::size_t budget) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{a};
  std::vector<char> on(g.order(), 0);
  on[a] = 1;
  std::function<void(Vertex)> rec = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (on[y]) continue;
      path.push_back(y);
      if (y == b) {
        if (out.size() == budget)
          throw BudgetError("more than " + std::to_string(budget) + " hub paths", budget);
        out.push_back(path);
      } else {
        on[y] = 1;
        rec(y);
        on[y] = 0;
      }
      path.pop_back();
    }
  };
  rec(a);
  return out;
}

Mask interior(int n, const std::vector<Vertex>& p) {
  Mask m(n);
  for (std::size_t i = 1; i + 1 < p.size(); ++i) m.set(p[i]);
  return m;
}

bool is_path_in(const Graph& g, const std::vector<Vertex>& p) {
  std::set<Vertex> seen(p.begin(), p.end());
  if (seen.size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order() || p[i + 1] < 0 || p[i + 1] >= g.order()) return false;
    if (!g.adjacent(p[i], p[i + 1])) return false;
  }
  return !p.empty();
}

bool is_cycle_in(const Graph& g, const std::vector<Vertex>& c) {
  return c.size() >= 3 && is_path_in(g, c) && g.adjacent(c.back(), c.front());
}

}  // namespace

std::string to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::C1Edge:
      return "C1-edge";
    case ConfigKind::C2Barbell:
      return "C2-barbell";
    case ConfigKind::C3Theta:
      return "C3-theta";
    case ConfigKind::C3K24:
      return "C3-K24";
  }
  return "?";
}

std::string to_string(AuditVariant v) { return v == AuditVariant::Lemma1 ? "lemma1" : "lemma2"; }

std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, std::size_t budget) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;
  Vertex s = 0;
  std::function<void(Vertex)> rec = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (y == s && path.size() >= 3 && path[1] < path.back()) {
        if (out.size() == budget)
          throw BudgetError("more than " + std::to_string(budget) + " cycles", budget);
        out.push_back(path);
      }
      if (y <= s || on[y]) continue;
      on[y] = 1;
      path.push_back(y);
      rec(y);
      path.pop_back();
      on[y] = 0;
    }
  };
  for (s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    rec(s);
    on[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ConfigWitness> detect_c1(const Graph& host, int threshold) {
  for (auto [u, v] : host.edges())
    if (host.degree(u) + host.degree(v) <= threshold) {
      ConfigWitness w;
      w.kind = ConfigKind::C1Edge;
      w.degree_sum = host.degree(u) + host.degree(v);
      w.path = {u, v};
      finish(w);
      return w;
    }
  return std::nullopt;
}

std::optional<ConfigWitness> detect_barbell(const Graph& sub, const DetectBudget& budget) {
  const int n = sub.order();
  std::vector<std::vector<Vertex>> even;
  for (auto& c : enumerate_cycles(sub, budget.max_cycles))
    if (c.size() % 2 == 0) even.push_back(std::move(c));
  std::vector<Mask> masks;
  for (const auto& c : even) masks.push_back(mask_of(n, c));
  auto comp = sub.components();

  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = i + 1; j < even.size(); ++j) {
      if (comp[even[i][0]] != comp[even[j][0]]) continue;
      Mask both = masks[i] & masks[j];
      auto shared = both.count();
      if (shared > 1) continue;
      ConfigWitness w;
      w.kind = ConfigKind::C2Barbell;
      w.cycles = {even[i], even[j]};
      if (shared == 1) {
        w.path = {static_cast<Vertex>(both.find_first())};
      } else {
        // Multi-source BFS from cycle i; the first vertex of cycle j reached
        // closes a shortest connecting path.
        std::vector<Vertex> parent(n, -2);
        std::queue<Vertex> q;
        for (Vertex v : std::set<Vertex>(even[i].begin(), even[i].end())) {
          parent[v] = -1;
          q.push(v);
        }
        Vertex hit = -1;
        while (!q.empty() && hit < 0) {
          Vertex x = q.front();
          q.pop();
          for (Vertex y : sub.neighbors(x)) {
            if (parent[y] != -2) continue;
            parent[y] = x;
            if (masks[j].test(y)) {
              hit = y;
              break;
            }
            q.push(y);
          }
        }
        for (Vertex x = hit; x >= 0; x = parent[x]) w.path.push_back(x);
        std::reverse(w.path.begin(), w.path.end());
      }
      finish(w);
      return w;
    }
  return std::nullopt;
}

std::optional<ConfigWitness> detect_theta(const Graph& sub, const DetectBudget& budget) {
  const int n = sub.order();
  for (Vertex a = 0; a < n; ++a) {
    if (sub.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (sub.degree(b) < 3) continue;
      auto paths = hub_paths(sub, a, b, budget.max_paths);
      std::vector<Mask> inner;
      for (const auto& p : paths) inner.push_back(interior(n, p));
      const std::size_t m = paths.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          if (paths[i].size() % 2 != paths[j].size() % 2) continue;
          if (inner[i].intersects(inner[j])) continue;
          for (std::size_t k = j + 1; k < m; ++k) {
            if (paths[k].size() % 2 != paths[i].size() % 2) continue;
            if (inner[k].intersects(inner[i]) || inner[k].intersects(inner[j])) continue;
            if (paths[i].size() == 3 && paths[j].size() == 3 && paths[k].size() == 3) continue;
            ConfigWitness w;
            w.kind = ConfigKind::C3Theta;
            w.hub_a = a;
            w.hub_b = b;
            w.paths = {paths[i], paths[j], paths[k]};
            finish(w);
            return w;
          }
        }
    }
  }
  return std::nullopt;
}

std::optional<ConfigWitness> detect_k24(const Graph& sub, const Graph* host,
                                        bool require_host_two) {
  if (require_host_two && !host)
    throw ParameterError("host graph needed to require host 2-vertices");
  const int n = sub.order();
  for (Vertex a = 0; a < n; ++a) {
    if (sub.degree(a) < 4) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (sub.degree(b) < 4) continue;
      std::vector<Vertex> middle;
      for (Vertex x : sub.neighbors(a)) {
        if (!sub.adjacent(x, b)) continue;
        if (require_host_two && host->degree(x) != 2) continue;
        middle.push_back(x);
        if (middle.size() == 4) break;
      }
      if (middle.size() < 4) continue;
      ConfigWitness w;
      w.kind = ConfigKind::C3K24;
      w.hub_a = a;
      w.hub_b = b;
      for (Vertex x : middle) w.paths.push_back({a, x, b});
      w.middle_host_two =
          host && std::all_of(middle.begin(), middle.end(),
                              [&](Vertex x) { return host->degree(x) == 2; });
      finish(w);
      return w;
    }
  }
  return std::nullopt;
}

std::string revalidate(const ConfigWitness& w, const Graph& g, int threshold) {
  switch (w.kind) {
    case ConfigKind::C1Edge: {
      if (w.path.size() != 2 || !is_path_in(g, w.path)) return "C1 witness is not an edge";
      int sum = g.degree(w.path[0]) + g.degree(w.path[1]);
      if (sum != w.degree_sum) return "C1 degree sum mismatch";
      if (sum > threshold) return "C1 degree sum above threshold";
      return "";
    }
    case ConfigKind::C2Barbell: {
      if (w.cycles.size() != 2) return "barbell needs two cycles";
      for (const auto& c : w.cycles) {
        if (!is_cycle_in(g, c)) return "barbell cycle is not a cycle of the subgraph";
        if (c.size() % 2) return "barbell cycle has odd length";
      }
      Mask m0 = mask_of(g.order(), w.cycles[0]), m1 = mask_of(g.order(), w.cycles[1]);
      auto shared = (m0 & m1).count();
      if (shared > 1) return "barbell cycles share more than one vertex";
      if (!is_path_in(g, w.path)) return "barbell path is not a path of the subgraph";
      if (shared == 1) {
        if (w.path.size() != 1 || !m0.test(w.path[0]) || !m1.test(w.path[0]))
          return "short barbell path must be the shared vertex";
        return "";
      }
      if (w.path.size() < 2) return "barbell path too short for disjoint cycles";
      if (!m0.test(w.path.front()) || !m1.test(w.path.back()))
        return "barbell path does not join the cycles";
      for (std::size_t i = 1; i + 1 < w.path.size(); ++i)
        if (m0.test(w.path[i]) || m1.test(w.path[i])) return "barbell path re-enters a cycle";
      return "";
    }
    case ConfigKind::C3Theta:
    case ConfigKind::C3K24: {
      bool k24 = w.kind == ConfigKind::C3K24;
      if (w.paths.size() != (k24 ? 4u : 3u)) return "wrong number of hub paths";
      if (w.hub_a == w.hub_b) return "hubs coincide";
      Mask seen(g.order());
      for (const auto& p : w.paths) {
        if (!is_path_in(g, p) || p.size() < 2) return "hub path is not a path of the subgraph";
        if (p.front() != w.hub_a || p.back() != w.hub_b) return "hub path has wrong ends";
        if (p.size() % 2 != w.paths[0].size() % 2) return "hub paths differ in parity";
        if (k24 && p.size() != 3) return "K24 paths must have length 2";
        Mask in = interior(g.order(), p);
        if (in.intersects(seen)) return "hub paths are not internally disjoint";
        seen |= in;
      }
      std::vector<Vertex> vs;
      for (std::size_t v = 0; v < seen.size(); ++v)
        if (seen.test(v)) vs.push_back(static_cast<Vertex>(v));
      vs.push_back(w.hub_a);
      vs.push_back(w.hub_b);
      std::vector<Edge> es;
      std::vector<Vertex> local(g.order(), -1);
      std::sort(vs.begin(), vs.end());
      for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<Vertex>(i);
      std::set<Edge> seen_edges;
      for (const auto& p : w.paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
          seen_edges.insert(ordered(local[p[i]], local[p[i + 1]]));
      es.assign(seen_edges.begin(), seen_edges.end());
      Graph h = Graph::from_edges(static_cast<int>(vs.size()), es);
      if (!h.bipartite()) return "witness is not bipartite";
      auto k23 = generate("complete_bipartite(2,3)");
      if (!k24 && is_isomorphic(h, k23, 64)) return "theta witness is isomorphic to K_{2,3}";
      if (k24 && !is_isomorphic(h, generate("complete_bipartite(2,4)"), 64))
        return "K24 witness is not K_{2,4}";
      return "";
    }
  }
  return "unknown kind";
}

int c1_threshold(const Graph& host, AuditVariant variant) {
  return variant == AuditVariant::Lemma1 ? std::max(11, host.max_degree() + 2) : 16;
}

AuditReport structural_audit(const PlaneGraph& pg, AuditVariant variant,
                             const DetectBudget& budget) {
  const Graph& g = pg.graph();
  if (g.order() == 0 || g.min_degree() < 2)
    throw PreconditionError("structural audit needs minimum degree at least 2");
  AuditReport r;
  r.variant = variant;
  r.threshold = c1_threshold(g, variant);
  auto kind = variant == AuditVariant::Lemma1 ? SpecialKind::G3 : SpecialKind::G2;
  auto faces = trace_faces(pg);
  Graph sub = extract_special_subgraph(pg, kind, faces);
  r.special_edges = sub.edges();

  std::vector<char> special(g.order(), 0);
  if (kind == SpecialKind::G3) {
    for (Vertex v = 0; v < g.order(); ++v) special[v] = g.degree(v) == 3;
  } else {
    for (const auto& f : faces)
      if (f.length() == 3)
        for (Vertex v : f.walk) special[v] = special[v] || g.degree(v) == 2;
  }
  for (auto [u, v] : r.special_edges)
    if (special[u] && special[v]) r.special_adjacent = true;
  r.special_bipartite = sub.bipartite();
  if (!r.special_adjacent && !r.special_bipartite)
    throw std::logic_error(to_string(kind) + " is not bipartite although no two special "
                           "vertices are adjacent");

  r.c1 = detect_c1(g, r.threshold);
  r.c2 = detect_barbell(sub, budget);
  r.c3_theta = detect_theta(sub, budget);
  if (variant == AuditVariant::Lemma2) {
    r.c3_k24 = detect_k24(sub, &g, false);
    r.c3_k24_strict = detect_k24(sub, &g, true);
  }
  return r;
}

}  // namespace kempe
