// Acceptance gate: one pass/fail line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "kempe/blocks.hpp"
#include "kempe/choosability.hpp"
#include "kempe/configurations.hpp"
#include "kempe/discharging.hpp"
#include "kempe/families.hpp"
#include "kempe/isomorphism.hpp"
#include "kempe/lifting.hpp"
#include "kempe/plane_corpus.hpp"
#include "kempe/verify.hpp"
#include "support.hpp"

using namespace kempe;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string lemma_summary(const LemmaReport& r) {
  std::ostringstream os;
  std::size_t checked = 0;
  for (const auto& c : r.cases) checked += c.checked;
  os << to_string(r.verdict()) << ", " << r.cases.size() << " cases, " << checked
     << " assignments";
  for (const auto& c : r.cases)
    if (c.verdict != Verdict::Verified && c.verdict != Verdict::Rejected)
      os << "; " << c.instance << " " << c.mode << ": " << c.detail;
  return os.str();
}

Outcome frozen_cycle() {
  auto g = generate("cycle(4)");
  auto l = make_lists({{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  auto r = mixing_classes(g, l);
  std::ostringstream os;
  os << r.total << " colorings, " << r.classes << " classes, " << r.frozen.size() << " frozen";
  return {r.total == 2 && r.classes == 2 && r.frozen.size() == 2, os.str()};
}

Outcome single_edge() {
  auto g = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  auto l = make_lists({{1, 2}, {1, 3}});
  auto r = classify_swap(g, l, {1, 3}, SwapMove{1, 1, 3});
  bool ok = !r.valid() && r.violator && *r.violator == 0;
  return {ok, r.valid() ? "swap classified valid" : r.reason};
}

Outcome cycles_not_swappable() {
  Outcome out{true, ""};
  for (int n : {4, 6, 8}) {
    auto start = std::chrono::steady_clock::now();
    auto g = generate("cycle(" + std::to_string(n) + ")");
    VerifyOptions o;
    o.cap = 4;
    auto r = degree_swappable_verdict(g, o, "cycle(" + std::to_string(n) + ")");
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool found = r.verdict() == Verdict::Counterexample;
    for (const auto& c : r.cases)
      if (c.verdict == Verdict::Counterexample)
        found = found && c.counterexample && mixing_classes(g, *c.counterexample).classes >= 2;
    out.pass = out.pass && found && s < 10;
    char buf[96];
    std::snprintf(buf, sizeof buf, "C%d %s (%.2f s)", n, found ? "counterexample" : "none", s);
    out.detail += (out.detail.empty() ? "" : "; ") + std::string(buf);
  }
  return out;
}

Outcome prism_exception() {
  auto g = cartesian_product(generate("clique(3)"), generate("clique(2)"));
  auto r = mixing_classes(g, ListAssignment::uniform(6, {1, 2, 3}));
  return {r.classes >= 2, std::to_string(r.total) + " colorings, " + std::to_string(r.classes) + " classes"};
}

Outcome barbell_lemma() {
  VerifyOptions o;
  o.cap = 4;
  o.sample_cap = 6;
  o.samples = 1000;
  o.seed = 1;
  auto r = verify_lemma("barbell", {"barbell(4,4,0)", "barbell(4,4,1)"}, o);
  return {r.verdict() == Verdict::Verified, lemma_summary(r)};
}

Outcome k4k2_lemma() {
  VerifyOptions o;
  o.cap = 4;
  o.sample_cap = 6;
  o.samples = 1000;
  o.seed = 1;
  auto r = verify_lemma("k4k2", {}, o);
  bool fixed = false, sampled = false;
  for (const auto& c : r.cases) {
    fixed |= c.mode == "fixed" && c.verdict == Verdict::Verified;
    sampled |= c.mode == "sampled" && c.checked == 1000 && c.verdict == Verdict::Verified;
  }
  return {r.verdict() == Verdict::Verified && fixed && sampled, lemma_summary(r)};
}

Outcome theta_and_prisms() {
  VerifyOptions o;
  o.cap = 4;
  o.sample_cap = 6;
  o.samples = 500;
  o.seed = 1;
  auto t = verify_lemma("short-theta", {"theta(1,3,3)"}, o);
  auto p = verify_lemma("prism", {"prism(2,1,1)", "prism(2,2,1)", "prism(2,2,2)"}, o);
  auto x = verify_lemma("prism", {"prism(1,1,1)"}, o);
  bool ok = t.verdict() == Verdict::Verified && p.verdict() == Verdict::Verified &&
            x.verdict() == Verdict::Rejected;
  return {ok, "short-theta " + lemma_summary(t) + " | prism " + lemma_summary(p) +
                  " | prism(1,1,1) " + to_string(x.verdict())};
}

Outcome k24_line_graph() {
  auto l = line_graph(generate("complete_bipartite(2,4)"));
  auto p = cartesian_product(generate("clique(4)"), generate("clique(2)"));
  auto map = is_isomorphic(l, p);
  if (!map) return {false, "no isomorphism found"};
  // Check the mapping edge by edge, independently of is_isomorphism.
  std::size_t hits = 0;
  for (auto [u, v] : l.edges()) hits += p.adjacent((*map)[u], (*map)[v]);
  bool ok = l.size() == p.size() && hits == l.size() && is_isomorphism(l, p, *map);
  return {ok, std::to_string(hits) + " of " + std::to_string(l.size()) + " edges mapped"};
}

Outcome ert_crosscheck() {
  std::vector<Graph> corpus;
  for (const char* spec :
       {"cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)", "cycle(7)", "path(2)", "path(3)",
        "path(5)", "path(7)", "clique(2)", "clique(3)", "clique(4)", "clique(5)",
        "complete_bipartite(1,3)", "complete_bipartite(2,2)", "complete_bipartite(2,3)",
        "complete_bipartite(2,4)", "complete_bipartite(3,3)", "complete_bipartite(3,4)",
        "barbell(3,3,0)", "barbell(3,3,1)", "barbell(3,4,0)", "barbell(4,4,0)",
        "theta(1,2,2)", "theta(1,2,3)", "theta(2,2,2)", "theta(1,3,3)", "theta(2,2,3)",
        "prism(1,1,1)", "star(3)", "star(4)", "star(6)"})
    corpus.push_back(generate(spec));
  std::mt19937_64 rng(2024);
  while (corpus.size() < 80) {
    auto g = random_connected(pick(rng, 2, 7), 0.3, rng);
    if (g.max_degree() <= 4) corpus.push_back(g);
  }
  int disagreements = 0, checked = 0;
  std::string first;
  for (const auto& g : corpus) {
    if (g.max_degree() > 4) continue;
    ChoosabilityOptions o;
    o.cap = 4;
    o.max_assignments = SIZE_MAX;
    auto v = is_degree_choosable(g, o);
    ++checked;
    if (v.sampled || v.choosable == is_gallai_tree(g).gallai_tree) {
      if (!disagreements) first = "; first on " + std::to_string(g.order()) + " vertices";
      ++disagreements;
    }
  }
  return {checked >= 50 && disagreements == 0,
          std::to_string(checked) + " graphs, " + std::to_string(disagreements) + " disagreements" + first};
}

Outcome lifting() {
  std::mt19937_64 rng(7);
  int vertex_fail = 0, subgraph_fail = 0;
  std::string first;
  for (int t = 0; t < 100; ++t) {
    auto in = vertex_lift_instance(rng);
    std::string err;
    try {
      err = check_lift(in, lift_through_vertex(in.g, in.lists, in.removed[0], in.start, in.moves));
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
      if (first.empty()) first = "; vertex instance " + std::to_string(t) + ": " + err;
      ++vertex_fail;
    }
  }
  for (int t = 0; t < 25; ++t) {
    auto in = subgraph_lift_instance(rng, pick(rng, 1, 5));
    std::string err;
    try {
      err = check_lift(in, lift_through_subgraph(in.g, in.removed, in.lists, in.start, in.moves));
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
      if (first.empty()) first = "; subgraph instance " + std::to_string(t) + ": " + err;
      ++subgraph_fail;
    }
  }
  return {vertex_fail == 0 && subgraph_fail == 0,
          "vertex " + std::to_string(100 - vertex_fail) + "/100, subgraph " +
              std::to_string(25 - subgraph_fail) + "/25" + first};
}

Outcome discharging() {
  std::vector<PlaneGraph> corpus;
  for (const auto& name : platonic_names()) corpus.push_back(platonic(name));
  for (int rim = 3; rim <= 12; ++rim) corpus.push_back(wheel(rim));
  std::mt19937_64 rng(11);
  for (int n = 4; n <= 20; ++n)
    for (int rep = 0; rep < 3; ++rep) corpus.push_back(stacked_triangulation(n, rng));
  int violations = 0, runs = 0;
  for (const auto& pg : corpus)
    for (auto variant : {AuditVariant::Lemma1, AuditVariant::Lemma2}) {
      auto r = run_discharging(pg, variant);
      ++runs;
      bool ok = r.initial_total == Charge(-8) && r.conserved();
      for (const auto& a : r.rules) ok = ok && a.conserved();
      violations += !ok;
    }
  return {violations == 0, std::to_string(corpus.size()) + " plane graphs, " + std::to_string(runs) +
                               " runs, " + std::to_string(violations) + " violations"};
}

Outcome audit() {
  int none = 0, bad_witness = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto pg = random_plane_graph(20, seed);
    for (auto variant : {AuditVariant::Lemma1, AuditVariant::Lemma2}) {
      auto r = structural_audit(pg, variant);
      if (!r.any()) {
        ++none;
        if (first.empty()) first = "; none hold for seed " + std::to_string(seed);
      }
      const auto& g = pg.graph();
      if (r.c1 && revalidate(*r.c1, g, r.threshold) != "") ++bad_witness;
      auto sub = extract_special_subgraph(pg, variant == AuditVariant::Lemma1 ? SpecialKind::G3 : SpecialKind::G2);
      for (const auto* w : {&r.c2, &r.c3_theta, &r.c3_k24, &r.c3_k24_strict})
        if (*w && revalidate(**w, sub) != "") ++bad_witness;
    }
  }
  return {none == 0 && bad_witness == 0, "400 audits, " + std::to_string(none) + " with no configuration, " +
                                             std::to_string(bad_witness) + " bad witnesses" + first};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit;
  };
  const std::vector<Criterion> criteria{
      {"frozen 4-cycle: 2 colorings, 2 frozen classes", frozen_cycle, 1},
      {"single edge: 1,3-swap at w invalid, v violates", single_edge, 1},
      {"C4, C6, C8 not degree-swappable (cap 4)", cycles_not_swappable, 30},
      {"K3xK2 with lists 123 has 2+ classes", prism_exception, 10},
      {"barbell line graphs degree-swappable", barbell_lemma, 900},
      {"K4xK2 4-swappable", k4k2_lemma, 900},
      {"short theta and prisms degree-swappable; K3xK2 rejected", theta_and_prisms, 1800},
      {"L(K24) isomorphic to K4xK2", k24_line_graph, 1},
      {"ERT: degree-choosable iff not a Gallai tree", ert_crosscheck, 300},
      {"vertex and subgraph lifting replay", lifting, 300},
      {"discharging: total -8 and exact conservation", discharging, 60},
      {"structural audit finds a configuration", audit, 600},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && s <= criteria[i].limit;
    if (o.pass && !pass) o.detail += "; over the time limit";
    failures += !pass;
    std::printf("%s %2zu %s [%.2f s] %s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].name, s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures ? 1 : 0;
}
