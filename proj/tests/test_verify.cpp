#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "kempe/assignments.hpp"
#include "kempe/errors.hpp"
#include "kempe/families.hpp"
#include "kempe/verify.hpp"
#include "support.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

using Masks = std::vector<std::uint64_t>;

Masks masks_of(const ListAssignment& l) {
  Masks m;
  for (const auto& s : l.lists()) m.push_back(s.mask());
  return m;
}

// Orbit representative: least mask vector over all permutations of 1..cap.
Masks orbit_min(const Masks& raw, int cap) {
  std::vector<int> perm(cap);
  std::iota(perm.begin(), perm.end(), 1);
  Masks best;
  do {
    Masks img;
    for (auto m : raw) {
      std::uint64_t out = 0;
      for (int c = 1; c <= cap; ++c)
        if ((m >> c) & 1) out |= std::uint64_t{1} << perm[c - 1];
      img.push_back(out);
    }
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All raw assignments with the given sizes over 1..cap.
std::vector<Masks> raw_assignments(const std::vector<int>& sizes, int cap) {
  std::vector<std::vector<std::uint64_t>> choices(sizes.size());
  for (std::size_t v = 0; v < sizes.size(); ++v)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cap); ++m)
      if (std::popcount(m) == sizes[v]) choices[v].push_back(m << 1);
  std::vector<Masks> out;
  std::vector<std::size_t> idx(sizes.size(), 0);
  while (true) {
    Masks a;
    for (std::size_t v = 0; v < sizes.size(); ++v) a.push_back(choices[v][idx[v]]);
    out.push_back(a);
    int k = static_cast<int>(sizes.size()) - 1;
    while (k >= 0 && ++idx[k] == choices[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::set<Masks> stream(const std::vector<int>& sizes, int cap) {
  std::set<Masks> out;
  for_each_canonical(sizes, cap, [&](const ListAssignment& l) {
    CHECK(out.insert(masks_of(l)).second);
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("single edge has two canonical assignments") {
    auto s = stream({1, 1}, 3);
    CHECK(s.size() == 2);
    CHECK(s.count(masks_of(make_lists({{1}, {1}}))));
    CHECK(s.count(masks_of(make_lists({{1}, {2}}))));
  }

  TEST_CASE("K3 stream contains the all-equal assignment") {
    CHECK(stream({2, 2, 2}, 3).count(masks_of(ListAssignment::uniform(3, {1, 2}))));
  }

  TEST_CASE("cap below a list size is rejected") {
    CHECK_THROWS_AS(count_canonical({3, 1}, 2), ParameterError);
    CHECK_THROWS_AS(AssignmentSampler({3}, 2, 1), ParameterError);
  }

  TEST_CASE("canonical stream counts orbits") {
    std::mt19937_64 rng(83);
    std::vector<std::pair<std::vector<int>, int>> cases{{{2, 2, 2, 2}, 4}, {{1, 2, 3}, 4}, {{2, 2, 2, 2, 2}, 3}};
    for (int t = 0; t < 6; ++t) {
      std::vector<int> sizes(pick(rng, 1, 5));
      for (auto& s : sizes) s = pick(rng, 1, 3);
      cases.push_back({sizes, pick(rng, 3, 4)});
    }
    for (const auto& [sizes, cap] : cases) {
      std::set<Masks> orbits;
      for (const auto& raw : raw_assignments(sizes, cap)) orbits.insert(orbit_min(raw, cap));
      auto s = stream(sizes, cap);
      CHECK(s.size() == orbits.size());
      CHECK(count_canonical(sizes, cap) == orbits.size());
      // Each stream element lies in a distinct orbit.
      std::set<Masks> hit;
      for (const auto& m : s) hit.insert(orbit_min(m, cap));
      CHECK(hit.size() == s.size());
    }
  }

  TEST_CASE("canonicalize lands in the stream and is permutation invariant") {
    std::mt19937_64 rng(89);
    for (int t = 0; t < 30; ++t) {
      std::vector<int> sizes(pick(rng, 1, 5));
      for (auto& s : sizes) s = pick(rng, 1, 3);
      int cap = pick(rng, 3, 5);
      auto raw = random_lists(sizes, cap, rng);
      auto canon = canonicalize(raw, cap);
      CHECK(is_canonical(canon, cap));
      CHECK(stream(sizes, cap).count(masks_of(canon)));
      std::vector<int> perm(cap);
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<ColorSet> moved;
      for (const auto& s : raw.lists()) {
        ColorSet m;
        for (Color c : s) m.insert(perm[c - 1]);
        moved.push_back(m);
      }
      CHECK(canonicalize(ListAssignment(moved), cap) == canon);
      CHECK(orbit_min(masks_of(canon), cap) == orbit_min(masks_of(raw), cap));
    }
  }

  TEST_CASE("stabilizer sizes follow the orbit-stabilizer law") {
    // Orbit size = cap! / |stabilizer|; summing over the stream counts raw assignments.
    for (auto [sizes, cap] : std::vector<std::pair<std::vector<int>, int>>{{{2, 2, 2, 2}, 4}, {{1, 2, 2}, 4}}) {
      std::size_t fact = 1;
      for (int i = 2; i <= cap; ++i) fact *= i;
      std::size_t total = 0;
      for_each_canonical(sizes, cap, [&](const ListAssignment& l) {
        total += fact / stabilizer_size(l, cap);
        return true;
      });
      CHECK(total == raw_assignments(sizes, cap).size());
    }
  }

  TEST_CASE("sampler draws canonical assignments uniformly") {
    AssignmentSampler sampler({1, 1}, 3, 7);
    std::map<Masks, int> freq;
    for (int i = 0; i < 4000; ++i) {
      auto l = sampler.next();
      CHECK(is_canonical(l, 3));
      ++freq[masks_of(l)];
    }
    REQUIRE(freq.size() == 2);
    for (auto& [m, f] : freq) {
      CHECK(f > 1800);
      CHECK(f < 2200);
    }
    AssignmentSampler again({1, 1}, 3, 7);
    AssignmentSampler first({1, 1}, 3, 7);
    for (int i = 0; i < 20; ++i) CHECK(again.next() == first.next());
  }

  TEST_CASE("cycles are not degree-swappable") {
    VerifyOptions o;
    o.cap = 4;
    for (int n : {4, 5, 6}) {
      auto g = generate("cycle(" + std::to_string(n) + ")");
      auto r = degree_swappable_verdict(g, o);
      CHECK(r.verdict() == Verdict::Counterexample);
      const CaseReport* bad = nullptr;
      for (const auto& c : r.cases)
        if (c.verdict == Verdict::Counterexample) bad = &c;
      REQUIRE(bad);
      REQUIRE(bad->counterexample);
      CHECK(mixing_classes(g, *bad->counterexample).classes >= 2);
    }
    // The frozen lists are a counterexample in their canonical form.
    auto frozen = canonicalize(make_lists({{1, 2}, {2, 3}, {3, 4}, {4, 1}}), 4);
    CHECK(mixing_classes(generate("cycle(4)"), frozen).classes == 2);
  }

  TEST_CASE("degree swappability preconditions") {
    auto two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(degree_swappable_verdict(two, {}), PreconditionError);
  }

  TEST_CASE("reports are reproducible and thread-count independent") {
    VerifyOptions o;
    o.cap = 3;
    o.samples = 40;
    o.sample_cap = 5;
    o.seed = 12;
    auto g = generate("cycle(8)");
    auto a = degree_swappable_verdict(g, o);
    o.jobs = 3;
    auto b = degree_swappable_verdict(g, o);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
      CHECK(a.cases[i].verdict == b.cases[i].verdict);
      CHECK(a.cases[i].checked == b.cases[i].checked);
      CHECK(a.cases[i].detail == b.cases[i].detail);
      CHECK(a.cases[i].counterexample == b.cases[i].counterexample);
    }
  }

  TEST_CASE("lemma harness edge cases") {
    VerifyOptions o;
    o.cap = 3;
    CHECK_THROWS_AS(verify_lemma("no-such-lemma", {}, o), ParameterError);
    CHECK(verify_lemma("prism", {"prism(1,1,1)"}, o).verdict() == Verdict::Rejected);
    CHECK(verify_lemma("barbell", {"barbell(3,4,0)"}, o).verdict() == Verdict::Rejected);
    CHECK(verify_lemma("short-theta", {"theta(2,2,2)"}, o).verdict() == Verdict::Rejected);
    CHECK(verify_lemma("barbell", {"barbell(1,4,0)"}, o).verdict() == Verdict::Rejected);
    CHECK(verify_lemma("cor-fix-two", {"cycle(5)"}, o).verdict() == Verdict::Rejected);
    for (const auto& id : lemma_ids())
      if (id != "k4k2") CHECK_FALSE(default_instances(id).empty());
  }

  TEST_CASE("small lemma instances verify") {
    VerifyOptions o;
    o.cap = 0;
    o.samples = 30;
    o.sample_cap = 5;
    CHECK(verify_lemma("barbell", {"barbell(4,4,0)"}, o).verdict() == Verdict::Verified);
    CHECK(verify_lemma("short-theta", {"theta(1,3,3)"}, o).verdict() == Verdict::Verified);
    o.cap = 4;
    CHECK(verify_lemma("cor-order", {"cycle(6)", "clique(4)"}, o).verdict() == Verdict::Verified);
    CHECK(verify_lemma("cor-fix-one", {"cycle(5)"}, o).verdict() == Verdict::Verified);
    CHECK(verify_lemma("cor-fix-two", {"theta(2,2,2)"}, o).verdict() == Verdict::Verified);
    CHECK(verify_lemma("big-intersection", {"theta(1,3,3)"}, o).verdict() == Verdict::Verified);
  }

  TEST_CASE("K4xK2 partition with equal lists is the five-class chain") {
    auto g = cartesian_product(generate("clique(4)"), generate("clique(2)"));
    ColoringSpace space(g, ListAssignment::uniform(8, {1, 2, 3, 4}));
    auto classes = k4k2_partition(space);
    CHECK(classes.size() == 5);
    auto r = mixing_classes(space);
    CHECK(cover_certificate(space, r, classes).certified);
    CHECK(r.classes == 1);
  }

  TEST_CASE("degenerate orders") {
    auto c5 = generate("cycle(5)");
    CHECK_FALSE(degenerate_order(c5, {2, 2, 2, 2, 2}));
    std::vector<Vertex> order;
    CHECK(degenerate_order(c5, {3, 2, 2, 2, 2}, &order));
    CHECK(order.size() == 5);
  }

  TEST_CASE("frozen colorings match the oracle") {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 40; ++t) {
      auto g = random_connected(pick(rng, 2, 6), 0.35, rng);
      std::vector<int> sizes;
      for (Vertex v = 0; v < g.order(); ++v) sizes.push_back(pick(rng, 1, 3));
      auto l = random_lists(sizes, 4, rng);
      auto oracle = oracle_mixing(g, l);
      std::vector<Coloring> want;
      for (int i : oracle.frozen) want.push_back(oracle.colorings[i]);
      CHECK(frozen_colorings(g, l) == want);
    }
  }
}
