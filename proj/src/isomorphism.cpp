#include "kempe/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "kempe/errors.hpp"

namespace kempe {
namespace {

// Colour refinement run on both graphs with a shared palette so that class
// ids are comparable across the two.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& a, const Graph& b) {
  std::vector<int> ca(a.order()), cb(b.order());
  for (Vertex v = 0; v < a.order(); ++v) ca[v] = a.degree(v);
  for (Vertex v = 0; v < b.order(); ++v) cb[v] = b.degree(v);
  for (int round = 0; round < a.order() + 1; ++round) {
    std::map<std::vector<int>, int> palette;
    auto signature = [](const Graph& g, const std::vector<int>& c, Vertex v) {
      std::vector<int> sig{c[v]};
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      return sig;
    };
    std::vector<std::vector<int>> sa(a.order()), sb(b.order());
    for (Vertex v = 0; v < a.order(); ++v) palette.emplace(sa[v] = signature(a, ca, v), 0);
    for (Vertex v = 0; v < b.order(); ++v) palette.emplace(sb[v] = signature(b, cb, v), 0);
    int id = 0;
    for (auto& [sig, c] : palette) c = id++;
    std::vector<int> na(a.order()), nb(b.order());
    for (Vertex v = 0; v < a.order(); ++v) na[v] = palette[sa[v]];
    for (Vertex v = 0; v < b.order(); ++v) nb[v] = palette[sb[v]];
    auto classes = [](const std::vector<int>& c) {
      auto s = c;
      std::sort(s.begin(), s.end());
      return std::unique(s.begin(), s.end()) - s.begin();
    };
    bool stable = classes(na) == classes(ca) && classes(nb) == classes(cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2, std::vector<int> c1, std::vector<int> c2)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)),
        map_(g1.order(), -1), used_(g2.order(), 0) {
    // BFS order from the rarest class keeps partial maps connected.
    std::vector<char> seen(g1.order(), 0);
    std::vector<Vertex> starts(g1.order());
    for (Vertex v = 0; v < g1.order(); ++v) starts[v] = v;
    std::map<int, int> freq;
    for (int c : c1_) ++freq[c];
    std::stable_sort(starts.begin(), starts.end(),
                     [&](Vertex x, Vertex y) { return freq[c1_[x]] < freq[c1_[y]]; });
    for (Vertex s : starts) {
      if (seen[s]) continue;
      std::queue<Vertex> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        order_.push_back(x);
        for (Vertex y : g1.neighbors(x))
          if (!seen[y]) {
            seen[y] = 1;
            q.push(y);
          }
      }
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    Vertex x = order_[depth];
    for (Vertex y = 0; y < g2_.order(); ++y) {
      if (used_[y] || c2_[y] != c1_[x]) continue;
      if (!consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = 1;
      if (run(depth + 1)) return true;
      map_[x] = -1;
      used_[y] = 0;
    }
    return false;
  }

  const std::vector<Vertex>& map() const { return map_; }

 private:
  bool consistent(Vertex x, Vertex y) const {
    for (Vertex v = 0; v < g1_.order(); ++v) {
      if (map_[v] < 0) continue;
      if (g1_.adjacent(x, v) != g2_.adjacent(y, map_[v])) return false;
    }
    return true;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<int> c1_, c2_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g1, const Graph& g2,
                                                 int max_vertices) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  if (degree_sequence(g1) != degree_sequence(g2)) return std::nullopt;
  if (g1.order() > max_vertices)
    throw BudgetError("isomorphism search limited to " + std::to_string(max_vertices) +
                          " vertices",
                      static_cast<std::size_t>(max_vertices));
  auto [c1, c2] = refine(g1, g2);
  auto h1 = c1, h2 = c2;
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  if (h1 != h2) return std::nullopt;
  Matcher m(g1, g2, std::move(c1), std::move(c2));
  if (!m.run()) return std::nullopt;
  return m.map();
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& map) {
  if (g1.order() != g2.order() || static_cast<int>(map.size()) != g1.order()) return false;
  if (g1.size() != g2.size()) return false;
  std::vector<char> hit(g2.order(), 0);
  for (Vertex y : map) {
    if (y < 0 || y >= g2.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(map[u], map[v])) return false;
  return true;
}

}  // namespace kempe
