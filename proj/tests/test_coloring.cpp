#include <random>
#include <set>

#include "doctest.h"
#include "kempe/errors.hpp"
#include "kempe/families.hpp"
#include "support.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

const Graph kEdge = Graph::from_edges(2, std::vector<Edge>{{0, 1}});

ListAssignment edge_lists() { return make_lists({{1, 2}, {1, 3}}); }

ListAssignment frozen_lists() { return make_lists({{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

}  // namespace

TEST_SUITE("coloring") {
  TEST_CASE("check_coloring on the single edge") {
    auto l = edge_lists();
    CHECK(check_coloring(kEdge, l, {1, 3}).ok);
    auto same = check_coloring(kEdge, l, {1, 1});
    CHECK_FALSE(same.ok);
    REQUIRE(same.bad_edge);
    CHECK(*same.bad_edge == Edge{0, 1});
    auto off = check_coloring(kEdge, l, {3, 1});
    CHECK_FALSE(off.ok);
    REQUIRE(off.bad_vertex);
    CHECK(*off.bad_vertex == 0);
    CHECK_THROWS_AS(check_coloring(kEdge, l, {1}), PreconditionError);
  }

  TEST_CASE("coloring counts") {
    CHECK(enumerate_colorings(generate("cycle(4)"), frozen_lists()).size() == 2);
    CHECK(enumerate_colorings(generate("clique(3)"), ListAssignment::uniform(3, {1, 2})).empty());
    CHECK(enumerate_colorings(kEdge, edge_lists()).size() == 3);
    CHECK_THROWS_AS(enumerate_colorings(generate("cycle(8)"), ListAssignment::uniform(8, {1, 2, 3}), 10),
                    BudgetError);
  }

  TEST_CASE("enumeration matches the product oracle") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; ++t) {
      auto g = random_connected(pick(rng, 1, 7), 0.3, rng);
      std::vector<int> sizes;
      for (Vertex v = 0; v < g.order(); ++v) sizes.push_back(pick(rng, 1, 3));
      auto l = random_lists(sizes, 4, rng);
      auto got = enumerate_colorings(g, l);
      auto want = oracle_colorings(g, l);
      CHECK(got == want);
      CHECK(count_colorings(g, l) == want.size());
      CHECK(find_coloring(g, l).has_value() == !want.empty());
      std::vector<Vertex> rev(g.order());
      for (Vertex v = 0; v < g.order(); ++v) rev[v] = g.order() - 1 - v;
      auto f = find_coloring(g, l, rev);
      if (f) CHECK(check_coloring(g, l, *f).ok);
    }
  }

  TEST_CASE("Kempe components") {
    auto c = kempe_component(kEdge, {1, 3}, 1, 1, 3);
    CHECK(std::set<Vertex>(c.begin(), c.end()) == std::set<Vertex>{0, 1});
    CHECK(kempe_component(kEdge, {1, 3}, 0, 2, 4).empty());
    auto c4 = generate("cycle(4)");
    for (Vertex v = 0; v < 4; ++v) CHECK(kempe_component(c4, {1, 2, 1, 2}, v, 1, 2).size() == 4);
  }

  TEST_CASE("Kempe components match the relaxation oracle") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
      auto g = random_connected(pick(rng, 2, 9), 0.35, rng);
      auto l = ListAssignment::uniform(g.order(), {1, 2, 3, 4, 5});
      auto phi = find_coloring(g, l);
      REQUIRE(phi);
      for (Vertex v = 0; v < g.order(); ++v)
        for (Color a = 1; a <= 5; ++a)
          for (Color b = a + 1; b <= 5; ++b) {
            auto got = kempe_component(g, *phi, v, a, b);
            CHECK(std::set<Vertex>(got.begin(), got.end()) == oracle_component(g, *phi, v, a, b));
          }
    }
  }

  TEST_CASE("the single-edge 1,3-swap at w is not L-valid") {
    auto r = classify_swap(kEdge, edge_lists(), {1, 3}, SwapMove{1, 1, 3});
    CHECK_FALSE(r.valid());
    CHECK(r.verdict == SwapVerdict::ListViolation);
    REQUIRE(r.violator);
    CHECK(*r.violator == 0);
    CHECK(is_proper(kEdge, r.result));
  }

  TEST_CASE("no move is valid on the frozen 4-cycle") {
    auto g = generate("cycle(4)");
    auto l = frozen_lists();
    for (const auto& phi : enumerate_colorings(g, l))
      for (Vertex v = 0; v < 4; ++v)
        for (Color a = 1; a <= 4; ++a)
          for (Color b = a + 1; b <= 4; ++b) CHECK_FALSE(classify_swap(g, l, phi, {v, a, b}).valid());
  }

  TEST_CASE("malformed moves") {
    CHECK_THROWS_AS(classify_swap(kEdge, edge_lists(), {1, 3}, {0, 1, 1}), ParameterError);
    CHECK_THROWS_AS(classify_swap(kEdge, edge_lists(), {1, 3}, {5, 1, 3}), ParameterError);
    auto r = classify_swap(kEdge, edge_lists(), {1, 3}, {0, 2, 4});
    CHECK(r.verdict == SwapVerdict::AnchorNotInPair);
  }

  TEST_CASE("swap properties on random instances") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
      auto g = random_connected(pick(rng, 2, 8), 0.3, rng);
      std::vector<int> sizes(g.order());
      for (auto& s : sizes) s = pick(rng, 2, 4);
      auto l = random_lists(sizes, 5, rng);
      auto phi = find_coloring(g, l);
      if (!phi) continue;
      for (Vertex v = 0; v < g.order(); ++v)
        for (Color a = 1; a <= 5; ++a)
          for (Color b = a + 1; b <= 5; ++b) {
            SwapMove m{v, a, b};
            auto r = classify_swap(g, l, *phi, m);
            if (r.verdict == SwapVerdict::AnchorNotInPair) continue;
            CHECK(is_proper(g, r.result));
            if (!r.valid()) {
              REQUIRE(r.violator);
              CHECK_FALSE(l[*r.violator].contains(r.result[*r.violator]));
              continue;
            }
            CHECK(check_coloring(g, l, r.result).ok);
            auto n = normalize(g, *phi, m);
            CHECK(n.alpha < n.beta);
            CHECK(n.anchor == *std::min_element(r.component.begin(), r.component.end()));
            auto back = classify_swap(g, l, r.result, n);
            CHECK(back.valid());
            CHECK(back.result == *phi);
          }
    }
  }

  TEST_CASE("replay reports the failing step") {
    auto g = generate("cycle(4)");
    auto l = ListAssignment::uniform(4, {1, 2, 3});
    auto trail = replay(g, l, {1, 2, 1, 2}, {{0, 1, 3}, {1, 2, 3}});
    CHECK(trail.size() == 3);
    CHECK(trail[1] == Coloring{3, 2, 1, 2});
    CHECK(trail.back() == Coloring{2, 3, 1, 3});
    CHECK_THROWS(replay(kEdge, edge_lists(), {1, 3}, {{1, 1, 3}}));
  }
}
