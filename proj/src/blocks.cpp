#include "kempe/blocks.hpp"

#include <algorithm>

#include "kempe/errors.hpp"

namespace kempe {
namespace {

BlockKind classify(const Graph& g, const std::vector<Vertex>& vs) {
  const int k = static_cast<int>(vs.size());
  std::size_t edges = 0;
  std::vector<int> deg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vs[i], vs[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  if (edges == static_cast<std::size_t>(k) * (k - 1) / 2) return BlockKind::Clique;
  // A 2-connected block where every vertex has degree 2 is a cycle.
  bool cycle = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
  if (cycle && k % 2 == 1) return BlockKind::OddCycle;
  return BlockKind::Other;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> estack;
  int timer = 0;

  // Iterative Hopcroft-Tarjan to stay safe on long paths.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.blocks.push_back({{root}, BlockKind::Clique});
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          estack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          estack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.v] = 1;
        continue;
      }
      Vertex p = stack.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] >= disc[p]) {
        if (stack.size() > 1) is_cut[p] = 1;
        std::vector<Vertex> vs;
        while (true) {
          Edge e = estack.back();
          estack.pop_back();
          vs.push_back(e.first);
          vs.push_back(e.second);
          if (e == Edge{p, done.v}) break;
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        out.blocks.push_back({std::move(vs), BlockKind::Other});
      }
    }
  }
  for (auto& b : out.blocks)
    if (b.vertices.size() > 1) b.kind = classify(g, b.vertices);
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

GallaiVerdict is_gallai_tree(const Graph& g) {
  if (g.order() == 0 || !g.connected())
    throw PreconditionError("Gallai-tree test needs a connected graph");
  GallaiVerdict v;
  v.decomposition = block_decomposition(g);
  v.gallai_tree = std::all_of(v.decomposition.blocks.begin(), v.decomposition.blocks.end(),
                              [](const Block& b) { return b.kind != BlockKind::Other; });
  return v;
}

}  // namespace kempe
