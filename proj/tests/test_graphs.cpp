#include <algorithm>
#include <random>
#include <numeric>
#include <set>
#include <tuple>

#include "doctest.h"
#include "kempe/assignments.hpp"
#include "kempe/blocks.hpp"
#include "kempe/choosability.hpp"
#include "kempe/errors.hpp"
#include "kempe/families.hpp"
#include "kempe/isomorphism.hpp"
#include "support.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

std::set<Edge> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

// Raw (non-canonical) degree assignments over 1..cap, checked by the
// product-enumeration oracle.
bool oracle_degree_choosable(const Graph& g, int cap) {
  const int n = g.order();
  std::vector<std::vector<ColorSet>> choices(n);
  for (int v = 0; v < n; ++v)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cap); ++m) {
      auto s = ColorSet::from_mask(m << 1);
      if (s.size() == g.degree(v)) choices[v].push_back(s);
    }
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<ColorSet> lists;
    for (int v = 0; v < n; ++v) lists.push_back(choices[v][idx[v]]);
    if (oracle_colorings(g, ListAssignment(lists)).empty()) return false;
    int k = n - 1;
    while (k >= 0 && ++idx[k] == choices[k].size()) idx[k--] = 0;
    if (k < 0) return true;
  }
}

}  // namespace

TEST_SUITE("graphs") {
  TEST_CASE("constructor rejects loops and parallel edges") {
    std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, loop), ParameterError);
    std::vector<Edge> twice{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, twice), ParameterError);
    std::vector<Edge> out{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(2, out), ParameterError);
  }

  TEST_CASE("family sizes") {
    auto b = generate("barbell(4,4,0)");
    CHECK(b.order() == 7);
    CHECK(b.size() == 8);
    int deg4 = 0;
    for (Vertex v = 0; v < b.order(); ++v) deg4 += b.degree(v) == 4;
    CHECK(deg4 == 1);
    CHECK(generate("barbell(4,4,2)").order() == 9);
    CHECK(generate("cycle(5)").size() == 5);
    CHECK(generate("path(4)").size() == 3);
    CHECK(generate("clique(5)").size() == 10);
    CHECK(generate("star(4)").max_degree() == 4);
    CHECK(generate("complete_bipartite(2,4)").size() == 8);
  }

  TEST_CASE("cycles and paths follow their numbering") {
    auto c = generate("cycle(6)");
    for (Vertex v = 0; v < 6; ++v) CHECK(c.adjacent(v, (v + 1) % 6));
    auto p = generate("path(5)");
    for (Vertex v = 0; v + 1 < 5; ++v) CHECK(p.adjacent(v, v + 1));
  }

  TEST_CASE("invalid family parameters") {
    CHECK_THROWS_AS(generate("cycle(2)"), ParameterError);
    CHECK_THROWS_AS(generate("barbell(2,4,0)"), ParameterError);
    CHECK_THROWS_AS(generate("theta(1,1,3)"), ParameterError);
    CHECK_THROWS_AS(generate("prism(0,1,1)"), ParameterError);
    CHECK_THROWS_AS(generate("theta(1,2)"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("wheel(5)"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("cycle(5"), ParseError);
  }

  TEST_CASE("theta(2,2,2) is K23 and prism(1,1,1) is K3xK2") {
    CHECK(is_isomorphic(generate("theta(2,2,2)"), generate("complete_bipartite(2,3)")));
    CHECK(is_isomorphic(generate("prism(1,1,1)"),
                        cartesian_product(generate("clique(3)"), generate("clique(2)"))));
  }

  TEST_CASE("line graphs") {
    auto l = line_graph(generate("path(3)"));
    CHECK(l.order() == 2);
    CHECK(l.size() == 1);
    for (int n : {3, 5, 8}) {
      auto c = generate("cycle(" + std::to_string(n) + ")");
      CHECK(is_isomorphic(line_graph(c), c));
    }
    CHECK(line_graph(Graph::from_edges(3, std::vector<Edge>{})).order() == 0);
    auto lk = line_graph(generate("complete_bipartite(2,4)"));
    CHECK(lk.has_labels());
  }

  TEST_CASE("line graph degree law on random graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
      auto g = random_connected(pick(rng, 2, 9), 0.3, rng);
      auto l = line_graph(g);
      auto edges = g.edges();
      REQUIRE(l.order() == static_cast<int>(edges.size()));
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [v, w] = edges[i];
        CHECK(l.degree(static_cast<Vertex>(i)) == g.degree(v) + g.degree(w) - 2);
        for (std::size_t j = 0; j < edges.size(); ++j) {
          if (i == j) continue;
          auto [x, y] = edges[j];
          bool share = v == x || v == y || w == x || w == y;
          CHECK(l.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == share);
        }
      }
    }
  }

  TEST_CASE("cartesian products") {
    auto k4 = generate("clique(4)"), k2 = generate("clique(2)"), k3 = generate("clique(3)");
    auto p = cartesian_product(k4, k2);
    CHECK(p.order() == 8);
    CHECK(p.size() == 16);
    auto q = cartesian_product(k3, k2);
    CHECK(q.order() == 6);
    CHECK(q.size() == 9);
    CHECK(q.min_degree() == 3);
    CHECK(q.max_degree() == 3);
    auto k1 = Graph::from_edges(1, std::vector<Edge>{});
    auto g = generate("theta(1,3,3)");
    CHECK(is_isomorphic(cartesian_product(k1, g), g));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      auto a = random_connected(pick(rng, 1, 5), 0.4, rng);
      auto b = random_connected(pick(rng, 1, 4), 0.4, rng);
      auto ab = cartesian_product(a, b);
      CHECK(ab.size() == a.size() * b.order() + b.size() * a.order());
      // (x, y) -> x * |b| + y
      for (auto [u, v] : ab.edges()) {
        int ux = u / b.order(), uy = u % b.order(), vx = v / b.order(), vy = v % b.order();
        bool ok = (ux == vx && b.adjacent(uy, vy)) || (uy == vy && a.adjacent(ux, vx));
        CHECK(ok);
      }
    }
  }

  TEST_CASE("line graph of K24 is K4xK2") {
    auto l = line_graph(generate("complete_bipartite(2,4)"));
    auto p = cartesian_product(generate("clique(4)"), generate("clique(2)"));
    auto map = is_isomorphic(l, p);
    REQUIRE(map);
    CHECK(is_isomorphism(l, p, *map));
  }

  TEST_CASE("isomorphism is symmetric and maps edges onto edges") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
      auto g = random_connected(pick(rng, 2, 8), 0.35, rng);
      std::vector<int> perm(g.order());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Edge> e;
      for (auto [u, v] : g.edges()) e.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
      auto h = Graph::from_edges(g.order(), e);
      auto m = is_isomorphic(g, h);
      REQUIRE(m);
      std::set<Edge> mapped;
      for (auto [u, v] : g.edges())
        mapped.insert({std::min((*m)[u], (*m)[v]), std::max((*m)[u], (*m)[v])});
      CHECK(mapped == edge_set(h));
      CHECK(is_isomorphic(h, g));
    }
    CHECK_FALSE(is_isomorphic(generate("complete_bipartite(2,3)"), generate("theta(1,3,3)")));
    CHECK_FALSE(is_isomorphic(generate("cycle(6)"), generate("prism(1,1,1)")));
  }

  TEST_CASE("prism(p) is the line graph of theta(p+1)") {
    for (auto [a, b, c] : std::vector<std::tuple<int, int, int>>{
             {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {3, 1, 2}}) {
      auto args = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
      auto args1 = std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1);
      CAPTURE(args);
      CHECK(is_isomorphic(generate("prism(" + args + ")"), line_graph(generate("theta(" + args1 + ")"))));
    }
  }

  TEST_CASE("nested instance specs") {
    auto g = generate_instance(" line( barbell(4,4,0) ) ");
    CHECK(g.order() == 8);
    auto p = generate_instance("product(clique(4),clique(2))");
    CHECK(p.size() == 16);
    CHECK_THROWS(generate_instance("line(cycle(3)"));
  }

  TEST_CASE("Gallai trees") {
    CHECK(is_gallai_tree(generate("clique(4)")).gallai_tree);
    CHECK_FALSE(is_gallai_tree(generate("cycle(6)")).gallai_tree);
    CHECK(is_gallai_tree(generate("cycle(7)")).gallai_tree);
    CHECK_FALSE(is_gallai_tree(generate("theta(1,3,3)")).gallai_tree);
    CHECK(is_gallai_tree(generate("path(5)")).gallai_tree);
    auto two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(is_gallai_tree(two), PreconditionError);
    // A triangle and a K4 glued at a cut vertex, plus a pendant edge.
    auto glued = Graph::from_edges(
        7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 6}});
    auto v = is_gallai_tree(glued);
    CHECK(v.gallai_tree);
    CHECK(v.decomposition.blocks.size() == 3);
    std::set<Vertex> cuts(v.decomposition.cut_vertices.begin(), v.decomposition.cut_vertices.end());
    CHECK(cuts == std::set<Vertex>{2, 5});
  }

  TEST_CASE("degree-choosability examples") {
    CHECK(is_degree_choosable(generate("cycle(6)")).choosable);
    auto k4 = is_degree_choosable(generate("clique(4)"));
    CHECK_FALSE(k4.choosable);
    REQUIRE(k4.witness);
    for (Vertex v = 0; v < 4; ++v) CHECK(k4.witness->lists()[v] == ColorSet{1, 2, 3});
    CHECK(oracle_colorings(generate("clique(4)"), *k4.witness).empty());
    auto t = is_degree_choosable(generate("theta(1,3,3)"));
    CHECK(t.choosable);
    CHECK_FALSE(t.sampled);
    CHECK_THROWS_AS(is_degree_choosable(Graph::from_edges(3, std::vector<Edge>{{0, 1}})),
                    PreconditionError);
  }

  TEST_CASE("degree-choosability matches raw enumeration and Gallai test") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
      auto g = random_connected(pick(rng, 2, 5), 0.4, rng);
      if (g.max_degree() > 3) continue;
      bool fast = is_degree_choosable(g, {.cap = 4}).choosable;
      CHECK(fast == oracle_degree_choosable(g, 4));
      CHECK(fast == !is_gallai_tree(g).gallai_tree);
    }
  }
}
