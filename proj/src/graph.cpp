#include "kempe/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "kempe/errors.hpp"

namespace kempe {

Graph Graph::from_edges(int n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw ParameterError("vertex count must be nonnegative");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ParameterError("label count does not match vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParameterError("edge endpoint out of range: " + std::to_string(u) +
                           " " + std::to_string(v));
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw ParameterError("parallel edge in input");
  }
  g.edge_count_ = edges.size();
  g.labels_ = std::move(labels);
  g.validate();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    int d = static_cast<int>(adj_[v].size());
    if (v == 0 || d < best) best = d;
  }
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string empty;
  return labels_.empty() ? empty : labels_.at(v);
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(order(), -1);
  int next = 0;
  for (Vertex s = 0; s < order(); ++s) {
    if (comp[s] >= 0) continue;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : adj_[x])
        if (comp[y] < 0) {
          comp[y] = next;
          q.push(y);
        }
    }
    ++next;
  }
  return comp;
}

bool Graph::connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool Graph::bipartite() const {
  std::vector<int> side(order(), -1);
  for (Vertex s = 0; s < order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : adj_[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> index(order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index.at(sorted[i]) = static_cast<int>(i);
  std::vector<Edge> es;
  std::vector<std::string> labels;
  for (Vertex u : sorted) {
    labels.push_back(std::to_string(u));
    for (Vertex v : adj_[u])
      if (u < v && index[v] >= 0) es.emplace_back(index[u], index[v]);
  }
  return from_edges(static_cast<int>(sorted.size()), es, std::move(labels));
}

Graph Graph::without_vertices(std::span<const Vertex> removed) const {
  std::vector<char> gone(order(), 0);
  for (Vertex v : removed) gone.at(v) = 1;
  std::vector<Edge> es;
  for (auto [u, v] : edges())
    if (!gone[u] && !gone[v]) es.emplace_back(u, v);
  return from_edges(order(), es, labels_);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (!adjacent(u, v)) throw ParameterError("edge not present");
  std::vector<Edge> es;
  for (auto e : edges())
    if (e != Edge{std::min(u, v), std::max(u, v)}) es.push_back(e);
  return from_edges(order(), es, labels_);
}

void Graph::validate() const {
  std::size_t half = 0;
  for (Vertex u = 0; u < order(); ++u) {
    const auto& nb = adj_[u];
    if (!std::is_sorted(nb.begin(), nb.end()))
      throw PreconditionError("adjacency not sorted");
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex v = nb[i];
      if (v == u) throw PreconditionError("loop");
      if (v < 0 || v >= order()) throw PreconditionError("neighbor out of range");
      if (i > 0 && nb[i - 1] == v) throw PreconditionError("parallel edge");
      if (!adjacent(v, u)) throw PreconditionError("asymmetric adjacency");
    }
    half += nb.size();
  }
  if (half != 2 * edge_count_) throw PreconditionError("edge count mismatch");
}

Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  const int m = static_cast<int>(es.size());
  // incident[v] lists the edge indices at v.
  std::vector<std::vector<int>> incident(g.order());
  for (int i = 0; i < m; ++i) {
    incident[es[i].first].push_back(i);
    incident[es[i].second].push_back(i);
  }
  std::set<Edge> pairs;
  for (const auto& inc : incident)
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b)
        pairs.emplace(std::min(inc[a], inc[b]), std::max(inc[a], inc[b]));
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto [u, v] : es) labels.push_back(std::to_string(u) + "-" + std::to_string(v));
  std::vector<Edge> le(pairs.begin(), pairs.end());
  return Graph::from_edges(m, le, std::move(labels));
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<Edge> es;
  for (Vertex a = 0; a < n1; ++a) {
    for (auto [x, y] : g2.edges()) es.emplace_back(a * n2 + x, a * n2 + y);
  }
  for (auto [a, b] : g1.edges())
    for (Vertex x = 0; x < n2; ++x) es.emplace_back(a * n2 + x, b * n2 + x);
  return Graph::from_edges(n1 * n2, es);
}

std::vector<Vertex> non_isolated(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) out.push_back(v);
  return out;
}

}  // namespace kempe
