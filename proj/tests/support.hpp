#pragma once

// Generators and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's search code.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/reconfig.hpp"

namespace testing_support {

using namespace kempe;

inline Graph make_graph(int n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline ListAssignment make_lists(std::vector<std::vector<Color>> lists) {
  std::vector<ColorSet> out;
  for (auto& l : lists) {
    ColorSet s;
    for (Color c : l) s.insert(c);
    out.push_back(s);
  }
  return ListAssignment(std::move(out));
}

inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = pick(rng, 0, v - 1);
    edges.insert({u, v});
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.insert({u, v});
  // Shuffle labels so vertex 0 is not always the tree root.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> out;
  for (auto [u, v] : edges) out.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  return Graph::from_edges(n, out);
}

/// Random subset of 1..universe with min(size, universe) elements.
inline ColorSet random_set(int size, int universe, std::mt19937_64& rng) {
  std::vector<Color> all(universe);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  ColorSet s;
  for (int i = 0; i < std::min(size, universe); ++i) s.insert(all[i]);
  return s;
}

inline ListAssignment random_lists(const std::vector<int>& sizes, int universe,
                                   std::mt19937_64& rng) {
  std::vector<ColorSet> out;
  for (int s : sizes) out.push_back(random_set(s, universe, rng));
  return ListAssignment(std::move(out));
}

/// Odometer over the product of the lists, keeping proper colorings.
inline std::vector<Coloring> oracle_colorings(const Graph& g, const ListAssignment& l) {
  const int n = g.order();
  std::vector<std::vector<Color>> opts;
  for (int v = 0; v < n; ++v) opts.push_back(l[v].to_vector());
  std::vector<Coloring> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Coloring phi(n);
    for (int v = 0; v < n; ++v) phi[v] = opts[v][idx[v]];
    bool ok = true;
    for (auto [u, v] : g.edges()) ok &= phi[u] != phi[v];
    if (ok) out.push_back(phi);
    int k = n - 1;
    while (k >= 0 && ++idx[k] == opts[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Kempe component by repeated relaxation over the edge list.
inline std::set<Vertex> oracle_component(const Graph& g, const Coloring& phi, Vertex v, Color a,
                                         Color b) {
  std::set<Vertex> comp;
  if (phi[v] != a && phi[v] != b) return comp;
  comp.insert(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [x, y] : g.edges()) {
      bool bx = phi[x] == a || phi[x] == b, by = phi[y] == a || phi[y] == b;
      if (!bx || !by) continue;
      if (comp.count(x) && !comp.count(y)) grew = comp.insert(y).second;
      if (comp.count(y) && !comp.count(x)) grew = comp.insert(x).second;
    }
  }
  return comp;
}

struct OracleMixing {
  std::vector<Coloring> colorings;
  std::vector<int> label;  // class label per coloring, numbered by least member
  int classes = 0;
  std::vector<int> frozen;
  /// Directed swap edges (i, j), for the symmetry check.
  std::set<std::pair<int, int>> edges;
};

/// Every vertex, every color pair of the universe, every coloring.
inline OracleMixing oracle_mixing(const Graph& g, const ListAssignment& l) {
  OracleMixing out;
  out.colorings = oracle_colorings(g, l);
  std::map<Coloring, int> index;
  for (std::size_t i = 0; i < out.colorings.size(); ++i) index[out.colorings[i]] = static_cast<int>(i);
  std::vector<int> parent(out.colorings.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto universe = l.universe().to_vector();
  for (std::size_t i = 0; i < out.colorings.size(); ++i) {
    const auto& phi = out.colorings[i];
    bool moved = false;
    for (Vertex v = 0; v < g.order(); ++v)
      for (Color a : universe)
        for (Color b : universe) {
          if (a >= b) continue;
          auto comp = oracle_component(g, phi, v, a, b);
          if (comp.empty()) continue;
          Coloring psi = phi;
          for (Vertex x : comp) psi[x] = phi[x] == a ? b : a;
          bool ok = true;
          for (Vertex x : comp) ok &= l[x].contains(psi[x]);
          if (!ok) continue;
          auto it = index.find(psi);
          if (it == index.end()) continue;  // cannot happen for a proper swap
          moved = true;
          out.edges.insert({static_cast<int>(i), it->second});
          parent[find(static_cast<int>(i))] = find(it->second);
        }
    if (!moved) out.frozen.push_back(static_cast<int>(i));
  }
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < out.colorings.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (!renumber.count(r)) renumber[r] = out.classes++;
    out.label.push_back(renumber[r]);
  }
  return out;
}

/// Random walk of valid swaps on g starting at `start`; at most `steps` moves.
/// Vertices with skip[v] set are treated as deleted.
inline std::vector<SwapMove> random_walk(const Graph& g, const ListAssignment& l,
                                         const Coloring& start, int steps,
                                         std::mt19937_64& rng,
                                         const std::vector<char>* skip = nullptr) {
  std::vector<SwapMove> out;
  Coloring phi = start;
  auto universe = l.universe().to_vector();
  for (int s = 0; s < steps; ++s) {
    std::vector<SwapMove> options;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (skip && (*skip)[v]) continue;
      for (Color a : universe)
        for (Color b : universe)
          if (a < b && classify_swap(g, l, phi, SwapMove{v, a, b}, skip).valid())
            options.push_back(SwapMove{v, a, b});
    }
    if (options.empty()) break;
    auto m = options[pick(rng, 0, static_cast<int>(options.size()) - 1)];
    phi = classify_swap(g, l, phi, m, skip).result;
    out.push_back(m);
  }
  return out;
}

struct LiftInstance {
  Graph g;
  ListAssignment lists;
  std::vector<Vertex> removed;  // v, or the vertices of H
  Coloring start;
  std::vector<SwapMove> moves;  // on g minus `removed`
};

inline std::vector<char> mask(int n, const std::vector<Vertex>& vs) {
  std::vector<char> m(n, 0);
  for (Vertex v : vs) m[v] = 1;
  return m;
}

/// Graph on at most 8 vertices; v gets d(v) + 1 colors, the rest random
/// lists; 1-5 random valid steps on g - v. Retries until the walk moves.
inline LiftInstance vertex_lift_instance(std::mt19937_64& rng) {
  while (true) {
    LiftInstance in;
    in.g = random_connected(pick(rng, 3, 8), 0.3, rng);
    const Vertex v = pick(rng, 0, in.g.order() - 1);
    const int universe = in.g.max_degree() + 2;
    std::vector<ColorSet> lists;
    for (Vertex x = 0; x < in.g.order(); ++x) {
      int size = x == v ? in.g.degree(x) + 1 : pick(rng, 2, std::min(universe, in.g.degree(x) + 1));
      lists.push_back(random_set(size, universe, rng));
    }
    in.lists = ListAssignment(lists);
    auto all = oracle_colorings(in.g, in.lists);
    if (all.empty()) continue;
    in.start = all[pick(rng, 0, static_cast<int>(all.size()) - 1)];
    in.removed = {v};
    auto skip = mask(in.g.order(), in.removed);
    in.moves = random_walk(in.g, in.lists, in.start, pick(rng, 1, 5), rng, &skip);
    if (!in.moves.empty()) return in;
  }
}

/// H is a 6-cycle 0..5 with chord 0-3; 1-2 further vertices attached to H.
/// H lists are tight (|L(x)| = d(x)); outside vertices get d(x) + 1 colors.
inline LiftInstance subgraph_lift_instance(std::mt19937_64& rng, int steps = 3) {
  while (true) {
    LiftInstance in;
    const int extra = pick(rng, 1, 2);
    const int n = 6 + extra;
    std::set<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}};
    for (Vertex x = 6; x < n; ++x) {
      int k = pick(rng, 1, 2);
      for (int i = 0; i < k; ++i) edges.insert({pick(rng, 0, 5), x});
    }
    if (extra == 2 && pick(rng, 0, 1)) edges.insert({6, 7});
    in.g = Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (!in.g.connected()) continue;
    const int universe = 5;
    std::vector<ColorSet> lists;
    for (Vertex x = 0; x < n; ++x)
      lists.push_back(random_set(std::min(universe, in.g.degree(x) + (x >= 6)), universe, rng));
    in.lists = ListAssignment(lists);
    auto all = oracle_colorings(in.g, in.lists);
    if (all.empty()) continue;
    in.start = all[pick(rng, 0, static_cast<int>(all.size()) - 1)];
    in.removed = {0, 1, 2, 3, 4, 5};
    auto skip = mask(n, in.removed);
    in.moves = random_walk(in.g, in.lists, in.start, steps, rng, &skip);
    if (!in.moves.empty()) return in;
  }
}

/// Empty string when `lifted` replays L-validly on g from in.start and its
/// endpoint agrees with the input walk off the removed vertices.
inline std::string check_lift(const LiftInstance& in, const std::vector<SwapMove>& lifted) {
  Coloring phi = in.start;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    auto r = classify_swap(in.g, in.lists, phi, lifted[i]);
    if (!r.valid()) return "lifted step " + std::to_string(i) + " invalid: " + r.reason;
    phi = r.result;
  }
  auto skip = mask(in.g.order(), in.removed);
  Coloring want = in.start;
  for (const auto& m : in.moves) want = classify_swap(in.g, in.lists, want, m, &skip).result;
  for (Vertex x = 0; x < in.g.order(); ++x)
    if (!skip[x] && phi[x] != want[x]) return "endpoint differs at vertex " + std::to_string(x);
  return "";
}

}  // namespace testing_support
