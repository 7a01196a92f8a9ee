#include "kempe/plane_corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kempe/errors.hpp"

namespace kempe {
namespace {

using Rotation = std::vector<std::vector<Vertex>>;

PlaneGraph finish(Rotation rot) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(rot.size()); ++v)
    for (Vertex w : rot[v])
      if (v < w) edges.emplace_back(v, w);
  auto g = Graph::from_edges(static_cast<int>(rot.size()), edges);
  PlaneGraph pg(std::move(g), std::move(rot));
  trace_faces(pg);
  return pg;
}

void insert_after(std::vector<Vertex>& ring, Vertex after, Vertex x) {
  auto it = std::find(ring.begin(), ring.end(), after);
  if (it == ring.end()) throw PreconditionError("rotation does not contain the expected neighbour");
  ring.insert(it + 1, x);
}

void erase_from(std::vector<Vertex>& ring, Vertex x) {
  ring.erase(std::remove(ring.begin(), ring.end(), x), ring.end());
}

using Point3 = std::array<double, 3>;

PlaneGraph from_polyhedron(const std::vector<Point3>& pts) {
  const int n = static_cast<int>(pts.size());
  auto dist = [&](int i, int j) {
    double s = 0;
    for (int k = 0; k < 3; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
    return std::sqrt(s);
  };
  double shortest = 1e300;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) shortest = std::min(shortest, dist(i, j));
  Rotation rot(n);
  for (int i = 0; i < n; ++i) {
    // Tangent frame at pts[i], normal pointing outward.
    Point3 nrm = pts[i];
    Point3 ref{1, 0, 0};
    if (std::abs(nrm[0]) > std::abs(nrm[1])) ref = {0, 1, 0};
    auto cross = [](const Point3& a, const Point3& b) {
      return Point3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]};
    };
    auto dot = [](const Point3& a, const Point3& b) {
      return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    Point3 e1 = cross(nrm, ref);
    Point3 e2 = cross(nrm, e1);
    std::vector<std::pair<double, int>> around;
    for (int j = 0; j < n; ++j) {
      if (j == i || dist(i, j) > shortest * 1.0001) continue;
      Point3 d{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], pts[j][2] - pts[i][2]};
      // e2 = n x e1 turns the (e1, e2) frame counter-clockwise seen from outside.
      around.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), j);
    }
    std::sort(around.begin(), around.end());
    for (auto [angle, j] : around) rot[i].push_back(j);
  }
  return finish(std::move(rot));
}

}  // namespace

PlaneGraph plane_from_drawing(const Graph& g, const std::vector<std::array<double, 2>>& points) {
  if (static_cast<int>(points.size()) != g.order())
    throw ParameterError("drawing needs one point per vertex");
  Rotation rot(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::pair<double, Vertex>> around;
    for (Vertex w : g.neighbors(v))
      around.emplace_back(
          std::atan2(points[w][1] - points[v][1], points[w][0] - points[v][0]), w);
    std::sort(around.begin(), around.end());
    for (auto [angle, w] : around) rot[v].push_back(w);
  }
  PlaneGraph pg(g, std::move(rot));
  trace_faces(pg);
  return pg;
}

const std::vector<std::string>& platonic_names() {
  static const std::vector<std::string> names{"tetrahedron", "cube", "octahedron",
                                              "dodecahedron", "icosahedron"};
  return names;
}

PlaneGraph platonic(std::string_view name) {
  const double phi = std::numbers::phi;
  std::vector<Point3> pts;
  if (name == "tetrahedron") {
    pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  } else if (name == "cube") {
    for (int x : {-1, 1})
      for (int y : {-1, 1})
        for (int z : {-1, 1}) pts.push_back({double(x), double(y), double(z)});
  } else if (name == "octahedron") {
    pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  } else if (name == "icosahedron") {
    for (int a : {-1, 1})
      for (int b : {-1, 1}) {
        pts.push_back({0, double(a), b * phi});
        pts.push_back({double(a), b * phi, 0});
        pts.push_back({a * phi, 0, double(b)});
      }
  } else if (name == "dodecahedron") {
    for (int x : {-1, 1})
      for (int y : {-1, 1})
        for (int z : {-1, 1}) pts.push_back({double(x), double(y), double(z)});
    for (int a : {-1, 1})
      for (int b : {-1, 1}) {
        pts.push_back({0, a / phi, b * phi});
        pts.push_back({a / phi, b * phi, 0});
        pts.push_back({a * phi, 0, b / phi});
      }
  } else {
    throw ParameterError("unknown platonic solid '" + std::string(name) + "'");
  }
  return from_polyhedron(pts);
}

PlaneGraph wheel(int rim) {
  if (rim < 3) throw ParameterError("wheel needs rim >= 3");
  std::vector<Edge> edges;
  std::vector<std::array<double, 2>> pts{{0, 0}};
  for (int i = 1; i <= rim; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(std::min(i, i % rim + 1), std::max(i, i % rim + 1));
    double t = 2 * std::numbers::pi * (i - 1) / rim;
    pts.push_back({std::cos(t), std::sin(t)});
  }
  return plane_from_drawing(Graph::from_edges(rim + 1, edges), pts);
}

PlaneGraph insert_in_face(const PlaneGraph& pg, Vertex a, Vertex b) {
  Vertex c = pg.successor(b, a);
  if (pg.successor(c, b) != a)
    throw PreconditionError("face at dart " + std::to_string(a) + "->" + std::to_string(b) +
                            " is not a triangle");
  Rotation rot = pg.rotations();
  const Vertex x = pg.order();
  insert_after(rot[a], c, x);
  insert_after(rot[b], a, x);
  insert_after(rot[c], b, x);
  rot.push_back({a, c, b});
  return finish(std::move(rot));
}

PlaneGraph flip_edge(const PlaneGraph& pg, Vertex u, Vertex v) {
  if (!pg.graph().adjacent(u, v)) throw PreconditionError("flip needs an edge");
  Vertex x = pg.successor(v, u);
  Vertex y = pg.successor(u, v);
  if (pg.successor(x, v) != u || pg.successor(y, u) != v)
    throw PreconditionError("flip needs two triangular faces");
  if (x == y || pg.graph().adjacent(x, y)) throw PreconditionError("flip would create a multi-edge");
  Rotation rot = pg.rotations();
  insert_after(rot[x], v, y);
  insert_after(rot[y], u, x);
  erase_from(rot[u], v);
  erase_from(rot[v], u);
  return finish(std::move(rot));
}

PlaneGraph delete_edge(const PlaneGraph& pg, Vertex u, Vertex v) {
  if (!pg.graph().adjacent(u, v)) throw PreconditionError("no such edge");
  Rotation rot = pg.rotations();
  erase_from(rot[u], v);
  erase_from(rot[v], u);
  return finish(std::move(rot));
}

PlaneGraph subdivide_edge(const PlaneGraph& pg, Vertex u, Vertex v) {
  if (!pg.graph().adjacent(u, v)) throw PreconditionError("no such edge");
  Rotation rot = pg.rotations();
  const Vertex w = pg.order();
  std::replace(rot[u].begin(), rot[u].end(), v, w);
  std::replace(rot[v].begin(), rot[v].end(), u, w);
  rot.push_back({u, v});
  return finish(std::move(rot));
}

PlaneGraph stacked_triangulation(int n, std::mt19937_64& rng) {
  if (n < 3) throw ParameterError("triangulation needs n >= 3");
  PlaneGraph pg = finish({{1, 2}, {2, 0}, {0, 1}});
  while (pg.order() < n) {
    auto edges = pg.graph().edges();
    auto [a, b] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    if (rng() & 1) std::swap(a, b);
    pg = insert_in_face(pg, a, b);
  }
  return pg;
}

PlaneGraph random_plane_graph(int max_vertices, std::uint64_t seed) {
  if (max_vertices < 3) throw ParameterError("need at least 3 vertices");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng); };
  int subdivisions = static_cast<int>(pick(std::max(1, max_vertices / 4) + 1));
  int base = std::max(3, max_vertices - subdivisions);
  subdivisions = std::min(subdivisions, max_vertices - base);
  PlaneGraph pg = stacked_triangulation(base, rng);

  for (int t = 0, flips = static_cast<int>(pick(2 * base + 1)); t < flips; ++t) {
    auto edges = pg.graph().edges();
    auto [u, v] = edges[pick(edges.size())];
    if (pg.graph().degree(u) <= 3 || pg.graph().degree(v) <= 3) continue;
    try {
      pg = flip_edge(pg, u, v);
    } catch (const PreconditionError&) {
    }
  }
  for (int t = 0, cuts = static_cast<int>(pick(pg.graph().size() / 2 + 1)); t < cuts; ++t) {
    auto edges = pg.graph().edges();
    auto [u, v] = edges[pick(edges.size())];
    if (pg.graph().degree(u) <= 2 || pg.graph().degree(v) <= 2) continue;
    if (!pg.graph().without_edge(u, v).connected()) continue;
    pg = delete_edge(pg, u, v);
  }
  for (int t = 0; t < subdivisions; ++t) {
    auto edges = pg.graph().edges();
    auto [u, v] = edges[pick(edges.size())];
    pg = subdivide_edge(pg, u, v);
  }
  return pg;
}

}  // namespace kempe
