#include "kempe/plane.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kempe/errors.hpp"

namespace kempe {

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  if (static_cast<int>(rotation_.size()) != graph_.order())
    throw PreconditionError("rotation system must cover every vertex");
  for (Vertex v = 0; v < graph_.order(); ++v) {
    auto sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != graph_.neighbors(v))
      throw PreconditionError("rotation at vertex " + std::to_string(v) +
                              " is not a permutation of its neighbours");
  }
}

Vertex PlaneGraph::successor(Vertex v, Vertex w) const {
  const auto& r = rotation_.at(v);
  auto it = std::find(r.begin(), r.end(), w);
  if (it == r.end()) throw PreconditionError("not a neighbour in rotation");
  ++it;
  return it == r.end() ? r.front() : *it;
}

Vertex PlaneGraph::predecessor(Vertex v, Vertex w) const {
  const auto& r = rotation_.at(v);
  auto it = std::find(r.begin(), r.end(), w);
  if (it == r.end()) throw PreconditionError("not a neighbour in rotation");
  return it == r.begin() ? r.back() : *std::prev(it);
}

int Face::multiplicity(Vertex v) const {
  return static_cast<int>(std::count(walk.begin(), walk.end(), v));
}

std::vector<Face> trace_faces(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  const int n = g.order();
  // Dart (v, rotation[v][i]) has index offset[v] + i.
  std::vector<int> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  auto position = [&](Vertex v, Vertex w) {
    const auto& r = pg.rotation(v);
    return static_cast<int>(std::find(r.begin(), r.end(), w) - r.begin());
  };
  std::vector<char> used(offset[n], 0);
  std::vector<Face> faces;
  for (Vertex s = 0; s < n; ++s)
    for (int i = 0; i < g.degree(s); ++i) {
      if (used[offset[s] + i]) continue;
      Face f;
      Vertex u = s;
      int pos = i;
      while (!used[offset[u] + pos]) {
        used[offset[u] + pos] = 1;
        f.walk.push_back(u);
        Vertex v = pg.rotation(u)[pos];
        Vertex next = pg.successor(v, u);
        pos = position(v, next);
        u = v;
      }
      faces.push_back(std::move(f));
    }

  auto comp = g.components();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<long long> verts(ncomp, 0), edges(ncomp, 0), fcount(ncomp, 0);
  for (Vertex v = 0; v < n; ++v) {
    ++verts[comp[v]];
    edges[comp[v]] += g.degree(v);
  }
  for (const auto& f : faces) ++fcount[comp[f.walk.front()]];
  for (int c = 0; c < ncomp; ++c) {
    if (edges[c] == 0) continue;
    if (verts[c] - edges[c] / 2 + fcount[c] != 2)
      throw PreconditionError("not a genus-0 embedding: component " + std::to_string(c) +
                              " has V - E + F = " +
                              std::to_string(verts[c] - edges[c] / 2 + fcount[c]));
  }
  return faces;
}

PlaneGraph read_rotation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::map<long long, std::vector<Vertex>> rows;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    auto where = "rotation line " + std::to_string(number);
    if (colon == std::string::npos) throw ParseError(where + ": expected 'v: n1 n2 ...'");
    std::istringstream head(line.substr(0, colon)), body(line.substr(colon + 1));
    long long v = -1;
    std::string extra;
    if (!(head >> v) || (head >> extra) || v < 0)
      throw ParseError(where + ": bad vertex id");
    if (rows.count(v)) throw ParseError(where + ": vertex listed twice");
    std::vector<Vertex> nb;
    std::string tok;
    while (body >> tok) {
      std::size_t used = 0;
      long long w = -1;
      try {
        w = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || w < 0) throw ParseError(where + ": bad neighbour '" + tok + "'");
      nb.push_back(static_cast<Vertex>(w));
    }
    rows[v] = std::move(nb);
  }
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<Vertex>> rotation(n);
  std::vector<Edge> edges;
  for (auto& [v, nb] : rows) {
    if (v >= n) throw ParseError("rotation: vertex ids must be 0..n-1");
    for (Vertex w : nb) {
      if (w >= n) throw ParseError("rotation: neighbour " + std::to_string(w) + " out of range");
      if (v < w) edges.emplace_back(static_cast<Vertex>(v), w);
    }
    rotation[v] = nb;
  }
  Graph g;
  try {
    g = Graph::from_edges(n, edges);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("rotation: ") + e.what());
  }
  try {
    return PlaneGraph(std::move(g), std::move(rotation));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("rotation: ") + e.what() + " (asymmetric adjacency?)");
  }
}

std::string write_rotation(const PlaneGraph& pg) {
  std::string out;
  for (Vertex v = 0; v < pg.order(); ++v) {
    out += std::to_string(v) + ":";
    for (Vertex w : pg.rotation(v)) out += " " + std::to_string(w);
    out += "\n";
  }
  return out;
}

Graph extract_special_subgraph(const PlaneGraph& pg, SpecialKind kind) {
  if (kind == SpecialKind::G3) return extract_special_subgraph(pg, kind, {});
  return extract_special_subgraph(pg, kind, trace_faces(pg));
}

Graph extract_special_subgraph(const PlaneGraph& pg, SpecialKind kind,
                               const std::vector<Face>& faces) {
  const Graph& g = pg.graph();
  std::vector<char> special(g.order(), 0);
  if (kind == SpecialKind::G3) {
    for (Vertex v = 0; v < g.order(); ++v) special[v] = g.degree(v) == 3;
  } else {
    for (const auto& f : faces)
      if (f.length() == 3)
        for (Vertex v : f.walk)
          if (g.degree(v) == 2) special[v] = 1;
  }
  std::vector<Edge> keep;
  for (auto [u, v] : g.edges())
    if (special[u] || special[v]) keep.emplace_back(u, v);
  return Graph::from_edges(g.order(), keep);
}

std::string to_string(SpecialKind kind) { return kind == SpecialKind::G3 ? "G3" : "G2"; }

}  // namespace kempe
