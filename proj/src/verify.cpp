#include "kempe/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <thread>

#include "kempe/assignments.hpp"
#include "kempe/blocks.hpp"
#include "kempe/choosability.hpp"
#include "kempe/errors.hpp"
#include "kempe/families.hpp"
#include "kempe/isomorphism.hpp"

namespace kempe {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::BudgetExceeded: return "budget-exceeded";
    case Verdict::Rejected: return "rejected";
  }
  return "?";
}

Verdict LemmaReport::verdict() const {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::Rejected: return 0;
      case Verdict::Verified: return 1;
      case Verdict::BudgetExceeded: return 2;
      case Verdict::Counterexample: return 3;
    }
    return 0;
  };
  Verdict worst = Verdict::Rejected;
  for (const auto& c : cases)
    if (rank(c.verdict) > rank(worst)) worst = c.verdict;
  return worst;
}

namespace {

constexpr std::size_t kBatch = 256;

struct Outcome {
  enum Kind { Pass, Skip, Fail, Budget } kind = Pass;
  std::string text;
};

std::vector<Outcome> evaluate(const std::vector<ListAssignment>& batch,
                              const AssignmentCheck& check, unsigned jobs) {
  std::vector<Outcome> out(batch.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) {
      try {
        auto r = check(batch[i]);
        if (!r)
          out[i].kind = Outcome::Pass;
        else if (r->empty())
          out[i].kind = Outcome::Skip;
        else
          out[i] = {Outcome::Fail, *r};
      } catch (const BudgetError& e) {
        out[i] = {Outcome::Budget, e.what()};
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(batch.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

// Folds a batch into the case; returns false once the case is settled.
bool absorb(CaseReport& c, const std::vector<ListAssignment>& batch, const AssignmentCheck& check,
            unsigned jobs) {
  auto outcomes = evaluate(batch, check, jobs);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    switch (outcomes[i].kind) {
      case Outcome::Skip: break;
      case Outcome::Pass: ++c.checked; break;
      case Outcome::Fail:
        ++c.checked;
        c.verdict = Verdict::Counterexample;
        c.detail = outcomes[i].text;
        c.counterexample = batch[i];
        return false;
      case Outcome::Budget:
        c.verdict = Verdict::BudgetExceeded;
        c.detail = outcomes[i].text;
        return false;
    }
  }
  return true;
}

std::string describe_lists(const ListAssignment& l) {
  std::string out;
  for (int v = 0; v < l.order(); ++v) {
    if (v) out += ' ';
    out += '{';
    bool first = true;
    for (Color c : l[v]) {
      if (!first) out += ',';
      out += std::to_string(c);
      first = false;
    }
    out += '}';
  }
  return out;
}

AssignmentCheck swappable_check(const Graph& g, std::size_t budget) {
  return [&g, budget](const ListAssignment& l) -> std::optional<std::string> {
    ColoringSpace space(g, l, budget);
    if (is_swappable(space)) return std::nullopt;
    auto r = mixing_classes(space);
    return std::to_string(r.classes) + " classes over " + std::to_string(r.total) +
           " colorings, " + std::to_string(r.frozen.size()) + " frozen";
  };
}

CaseReport rejected(const std::string& instance, const std::string& why) {
  CaseReport c;
  c.instance = instance;
  c.mode = "hypothesis";
  c.verdict = Verdict::Rejected;
  c.detail = why;
  return c;
}

Graph instance_graph(const std::string& text) {
  try {
    return generate_instance(text);
  } catch (const ParseError& e) {
    throw ParameterError(e.what());
  }
}

std::vector<CaseReport> degree_cases(const Graph& g, const std::string& instance,
                                     const VerifyOptions& options) {
  return check_assignments(g, instance, degree_sizes(g), swappable_check(g, options.budget),
                           options);
}

void append(std::vector<CaseReport>& to, std::vector<CaseReport> from) {
  for (auto& c : from) to.push_back(std::move(c));
}

// Graph of a family spec, with the spec's family exposed for hypothesis checks.
struct Instance {
  std::string text;
  FamilySpec spec;
  Graph source;
};

std::optional<Instance> parse_family(const std::string& text, std::vector<CaseReport>& cases) {
  try {
    auto spec = FamilySpec::parse(text);
    return Instance{text, spec, generate(spec)};
  } catch (const ParameterError& e) {
    cases.push_back(rejected(text, e.what()));
    return std::nullopt;
  } catch (const ParseError& e) {
    cases.push_back(rejected(text, e.what()));
    return std::nullopt;
  }
}

const Graph& k23() {
  static const Graph g = generate("complete_bipartite(2,3)");
  return g;
}

bool choosable_hypothesis(const Graph& g, const VerifyOptions& options) {
  if (g.order() == 0 || !g.connected()) return false;
  bool ok = !is_gallai_tree(g).gallai_tree;
  if (options.confirm_choosability) {
    auto brute = is_degree_choosable(g);
    if (!brute.sampled && brute.choosable != ok)
      throw std::logic_error("Gallai-tree test and brute force disagree");
  }
  return ok;
}

std::vector<Vertex> all_but(int n, std::initializer_list<Vertex> drop) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

void lemma_line_family(LemmaReport& rep, const std::string& text, const VerifyOptions& options,
                       const std::function<std::string(const Instance&)>& hypothesis) {
  auto inst = parse_family(text, rep.cases);
  if (!inst) return;
  auto why = hypothesis(*inst);
  if (!why.empty()) {
    rep.cases.push_back(rejected(text, why));
    return;
  }
  append(rep.cases, degree_cases(line_graph(inst->source), "line(" + text + ")", options));
}

std::string barbell_hypothesis(const Instance& i) {
  if (i.spec.family != Family::Barbell) return "not a barbell";
  if (!i.source.bipartite()) return "barbell is not bipartite";
  return "";
}

std::string theta_hypothesis(const Instance& i) {
  if (i.spec.family != Family::Theta) return "not a theta graph";
  if (!i.source.bipartite()) return "theta graph is not bipartite";
  if (is_isomorphic(i.source, k23())) return "theta graph is K_{2,3}";
  return "";
}

std::string short_theta_hypothesis(const Instance& i) {
  auto why = theta_hypothesis(i);
  if (!why.empty()) return why;
  if (std::count(i.spec.params.begin(), i.spec.params.end(), 1) != 1)
    return "needs exactly one path of length 1";
  return "";
}

std::string reduc_hypothesis(const Instance& i) {
  if (i.spec.family == Family::Barbell) return barbell_hypothesis(i);
  if (i.spec.family == Family::Theta) return theta_hypothesis(i);
  if (i.spec.family == Family::CompleteBipartite) {
    auto p = i.spec.params;
    std::sort(p.begin(), p.end());
    if (p == std::vector<int>{2, 4}) return "";
  }
  return "not a bipartite barbell, bipartite theta graph or K_{2,4}";
}

void lemma_prism(LemmaReport& rep, const std::string& text, const VerifyOptions& options) {
  auto inst = parse_family(text, rep.cases);
  if (!inst) return;
  if (inst->spec.family != Family::Prism) {
    rep.cases.push_back(rejected(text, "not a prism"));
    return;
  }
  static const Graph excluded = cartesian_product(generate("clique(3)"), generate("clique(2)"));
  if (is_isomorphic(inst->source, excluded)) {
    rep.cases.push_back(rejected(text, "excluded instance K3xK2"));
    return;
  }
  append(rep.cases, degree_cases(inst->source, text, options));
}

void lemma_k4k2(LemmaReport& rep, const VerifyOptions& options) {
  static const Graph g = generate_instance("product(clique(4),clique(2))");
  const std::size_t budget = options.budget;
  AssignmentCheck check = [budget](const ListAssignment& l) -> std::optional<std::string> {
    ColoringSpace space(g, l, budget);
    auto report = mixing_classes(space);
    if (!report.swappable()) return std::to_string(report.classes) + " classes";
    auto cert = cover_certificate(space, report, k4k2_partition(space));
    if (!cert.certified)
      return std::string("cover pattern fails (") + cert.failed + "): " + cert.detail;
    return std::nullopt;
  };
  const std::string name = "product(clique(4),clique(2))";
  CaseReport fixed;
  fixed.instance = name;
  fixed.mode = "fixed";
  fixed.graph = g;
  absorb(fixed, {ListAssignment::uniform(8, ColorSet{1, 2, 3, 4})}, check, 1);
  rep.cases.push_back(fixed);
  append(rep.cases, check_assignments(g, name, std::vector<int>(8, 4), check, options));
}

// Shared shape of the corollaries: a per-graph precomputation, then a
// check against each degree assignment.
void lemma_big_intersection(LemmaReport& rep, const std::string& text,
                            const VerifyOptions& options) {
  Graph g;
  try {
    g = instance_graph(text);
  } catch (const ParameterError& e) {
    rep.cases.push_back(rejected(text, e.what()));
    return;
  }
  bool any = false;
  for (auto [v, w] : g.edges()) {
    Graph rest = g.without_edge(v, w);
    if (!choosable_hypothesis(rest, options)) continue;
    any = true;
    auto base = swappable_check(g, options.budget);
    AssignmentCheck check = [base, v = v, w = w](const ListAssignment& l) {
      if ((l[v] & l[w]).size() > 1) return std::optional<std::string>(kSkip);
      return base(l);
    };
    append(rep.cases, check_assignments(g, text + " edge " + std::to_string(v) + "-" +
                                               std::to_string(w),
                                        degree_sizes(g), check, options));
  }
  if (!any) rep.cases.push_back(rejected(text, "no edge vw with G-vw connected and "
                                               "degree-choosable"));
}

void lemma_cor_order(LemmaReport& rep, const std::string& text, const VerifyOptions& options) {
  Graph g;
  try {
    g = instance_graph(text);
  } catch (const ParameterError& e) {
    rep.cases.push_back(rejected(text, e.what()));
    return;
  }
  if (!g.connected()) {
    rep.cases.push_back(rejected(text, "graph is not connected"));
    return;
  }
  auto sizes = degree_sizes(g);
  Vertex slack = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (sizes[v] < sizes[slack]) slack = v;
  ++sizes[slack];
  if (!degenerate_order(g, sizes)) {
    rep.cases.push_back(rejected(text, "no admissible vertex order"));
    return;
  }
  append(rep.cases,
         check_assignments(g, text + " slack at " + std::to_string(slack), sizes,
                           swappable_check(g, options.budget), options));
}

void lemma_cor_fix(LemmaReport& rep, const std::string& text, const VerifyOptions& options,
                   bool two) {
  Graph g;
  try {
    g = instance_graph(text);
  } catch (const ParameterError& e) {
    rep.cases.push_back(rejected(text, e.what()));
    return;
  }
  const int n = g.order();
  // Qualifying vertices (one) or pairs (two), fixed per graph.
  std::vector<std::pair<Vertex, Vertex>> targets;
  if (!two) {
    for (Vertex v = 0; v < n; ++v)
      if (n > 1 && g.induced(all_but(n, {v})).connected()) targets.emplace_back(v, v);
  } else {
    for (Vertex v = 0; v < n; ++v)
      for (Vertex x = v + 1; x < n; ++x) {
        if (g.adjacent(v, x)) continue;
        bool common = false;
        for (Vertex w : g.neighbors(v)) common |= g.adjacent(w, x);
        if (common && n > 2 && g.induced(all_but(n, {v, x})).connected())
          targets.emplace_back(v, x);
      }
  }
  if (targets.empty()) {
    rep.cases.push_back(rejected(text, "no vertex set meets the hypothesis"));
    return;
  }
  const std::size_t budget = options.budget;
  AssignmentCheck check = [&g, targets, two,
                           budget](const ListAssignment& l) -> std::optional<std::string> {
    std::vector<ClassConstraint> claims;
    for (auto [v, x] : targets) {
      for (Color a : two ? (l[v] & l[x]) : l[v]) {
        if (!two) {
          bool missing = false;
          for (Vertex w : g.neighbors(v)) missing |= !l[w].contains(a);
          if (!missing) continue;
        }
        claims.push_back(two ? ClassConstraint::fixed(v, a) & ClassConstraint::fixed(x, a)
                             : ClassConstraint::fixed(v, a));
      }
    }
    if (claims.empty()) return kSkip;
    ColoringSpace space(g, l, budget);
    auto report = mixing_classes(space);
    if (report.swappable()) return std::nullopt;
    for (const auto& c : claims)
      if (!subset_mixes(space, report, c).mixes) return c.to_string() + " does not mix";
    return std::nullopt;
  };
  append(rep.cases, check_assignments(g, text, degree_sizes(g), check, options));
}

}  // namespace

std::vector<CaseReport> check_assignments(const Graph& g, const std::string& instance,
                                          const std::vector<int>& sizes,
                                          const AssignmentCheck& check,
                                          const VerifyOptions& options) {
  std::vector<CaseReport> out;
  const int need = sizes.empty() ? 1 : *std::max_element(sizes.begin(), sizes.end());
  auto base = [&](const std::string& mode, int cap) {
    if (cap < need)
      throw ParameterError("color universe " + std::to_string(cap) +
                           " is smaller than list size " + std::to_string(need));
    CaseReport c;
    c.instance = instance;
    c.mode = mode;
    c.cap = cap;
    c.graph = g;
    return c;
  };
  if (options.cap > 0) {
    CaseReport c = base("exhaustive", options.cap);
    std::vector<ListAssignment> batch;
    std::size_t seen = 0;
    bool open = true;
    try {
      for_each_canonical(sizes, options.cap, [&](const ListAssignment& l) {
        if (++seen > options.max_assignments)
          throw BudgetError("more than " + std::to_string(options.max_assignments) +
                                " canonical assignments",
                            options.max_assignments);
        batch.push_back(l);
        if (batch.size() == kBatch) {
          open = absorb(c, batch, check, options.jobs);
          batch.clear();
        }
        return open;
      });
      if (open) absorb(c, batch, check, options.jobs);
    } catch (const BudgetError& e) {
      c.verdict = Verdict::BudgetExceeded;
      c.detail = e.what();
    }
    out.push_back(c);
  }
  if (options.samples > 0) {
    CaseReport c = base("sampled", options.sample_cap);
    c.samples = options.samples;
    c.seed = options.seed;
    AssignmentSampler sampler(sizes, options.sample_cap, options.seed);
    std::vector<ListAssignment> batch;
    for (std::size_t i = 0; i < options.samples; ++i) {
      batch.push_back(sampler.next());
      if (batch.size() == kBatch || i + 1 == options.samples) {
        if (!absorb(c, batch, check, options.jobs)) break;
        batch.clear();
      }
    }
    out.push_back(c);
  }
  for (auto& c : out)
    if (c.counterexample && c.detail.find('{') == std::string::npos)
      c.detail += "; lists " + describe_lists(*c.counterexample);
  return out;
}

LemmaReport degree_swappable_verdict(const Graph& g, const VerifyOptions& options,
                                     const std::string& instance) {
  if (g.order() == 0 || !g.connected()) throw PreconditionError("graph is not connected");
  auto t0 = std::chrono::steady_clock::now();
  LemmaReport rep;
  rep.lemma = "degree-swappable";
  rep.cases = degree_cases(g, instance, options);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"reduc-lem",        "barbell",   "k4k2",
                                            "short-theta",      "prism",     "big-intersection",
                                            "cor-order",        "cor-fix-one", "cor-fix-two"};
  return ids;
}

std::vector<std::string> default_instances(const std::string& id) {
  if (id == "reduc-lem")
    return {"barbell(4,4,0)", "barbell(4,4,1)", "theta(1,3,3)", "theta(2,2,4)",
            "complete_bipartite(2,4)"};
  if (id == "barbell") return {"barbell(4,4,0)", "barbell(4,4,1)"};
  if (id == "k4k2") return {};
  if (id == "short-theta") return {"theta(1,3,3)"};
  if (id == "prism") return {"prism(2,1,1)", "prism(2,2,1)", "prism(2,2,2)"};
  if (id == "big-intersection")
    return {"theta(1,3,3)", "complete_bipartite(3,3)", "line(theta(1,3,3))"};
  if (id == "cor-order") return {"cycle(6)", "theta(2,2,2)", "clique(4)", "line(barbell(4,4,0))"};
  if (id == "cor-fix-one" || id == "cor-fix-two")
    return {"cycle(5)", "theta(2,2,2)", "complete_bipartite(3,3)", "line(barbell(4,4,0))"};
  throw ParameterError("unknown lemma id '" + id + "'");
}

LemmaReport verify_lemma(const std::string& id, const std::vector<std::string>& instances,
                         const VerifyOptions& options) {
  auto schedule = instances.empty() ? default_instances(id) : instances;
  auto t0 = std::chrono::steady_clock::now();
  LemmaReport rep;
  rep.lemma = id;
  if (id == "k4k2") {
    lemma_k4k2(rep, options);
  } else {
    for (const auto& text : schedule) {
      if (id == "reduc-lem")
        lemma_line_family(rep, text, options, reduc_hypothesis);
      else if (id == "barbell")
        lemma_line_family(rep, text, options, barbell_hypothesis);
      else if (id == "short-theta")
        lemma_line_family(rep, text, options, short_theta_hypothesis);
      else if (id == "prism")
        lemma_prism(rep, text, options);
      else if (id == "big-intersection")
        lemma_big_intersection(rep, text, options);
      else if (id == "cor-order")
        lemma_cor_order(rep, text, options);
      else if (id == "cor-fix-one")
        lemma_cor_fix(rep, text, options, false);
      else if (id == "cor-fix-two")
        lemma_cor_fix(rep, text, options, true);
      else
        throw ParameterError("unknown lemma id '" + id + "'");
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<Coloring> frozen_colorings(const Graph& g, const ListAssignment& lists,
                                       std::size_t budget) {
  ColoringSpace space(g, lists, budget);
  std::vector<Coloring> out;
  std::vector<Transition> scratch;
  for (std::size_t i = 0; i < space.size(); ++i) {
    space.transitions(i, scratch);
    if (scratch.empty()) out.push_back(space.coloring(i));
  }
  return out;
}

bool degenerate_order(const Graph& g, const std::vector<int>& sizes, std::vector<Vertex>* order) {
  const int n = g.order();
  std::vector<char> gone(n, 0);
  std::vector<int> live(n);
  for (Vertex v = 0; v < n; ++v) live[v] = g.degree(v);
  std::vector<Vertex> reversed;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v)
      if (!gone[v] && live[v] < sizes[v]) pick = v;
    if (pick < 0) return false;
    gone[pick] = 1;
    reversed.push_back(pick);
    for (Vertex w : g.neighbors(pick)) --live[w];
  }
  if (order) order->assign(reversed.rbegin(), reversed.rend());
  return true;
}

std::vector<ClassConstraint> k4k2_partition(const ColoringSpace& space) {
  const ListAssignment& l = space.lists();
  if (space.graph().order() != 8) throw PreconditionError("expects K4 x K2");
  auto fixed = ClassConstraint::fixed;
  std::vector<ClassConstraint> classes;

  int pi = -1, pj = -1;
  for (int i = 0; i < 4 && pi < 0; ++i)
    for (int j = 0; j < 4 && pi < 0; ++j)
      if (i != j && !(l[2 * i] == l[2 * j + 1])) pi = i, pj = j;

  if (pi < 0) {
    auto d = [&](int i, int j) {
      auto c = ClassConstraint::none();
      for (Color a : l[0]) c = c | (fixed(2 * (i - 1), a) & fixed(2 * (j - 1) + 1, a));
      return c;
    };
    classes = {d(1, 2), d(2, 3), d(1, 4), d(3, 2), d(1, 3)};
  } else {
    // Relabel so that v1 = v_pi, w2 = w_pj; 3 and 4 are the other indices.
    std::vector<int> idx{pi, pj};
    for (int k = 0; k < 4; ++k)
      if (k != pi && k != pj) idx.push_back(k);
    auto v = [&](int i) { return 2 * idx[i - 1]; };
    auto w = [&](int i) { return 2 * idx[i - 1] + 1; };
    ColorSet a = l[v(1)] & l[w(2)];
    ColorSet a1 = l[w(1)] & a, a2 = l[v(2)] & a;
    ColorSet b1 = l[w(1)] - a, b2 = l[v(2)] - a;

    auto c1 = ClassConstraint::none();
    for (Color c : b1) c1 = c1 | fixed(w(1), c);
    for (Color c : b2) c1 = c1 | fixed(v(2), c);
    classes.push_back(c1);

    ColorSet shared = l[v(2)] & l[w(1)];
    ColorSet beta_v1 = l[v(1)] - shared;
    if (!beta_v1.empty())
      classes.push_back(fixed(v(1), beta_v1.min()));
    else
      classes.push_back(fixed(w(2), (l[w(2)] - shared).min()));

    for (Color c : a1 & a2) classes.push_back(fixed(w(1), c) & fixed(v(2), c));
    for (Color c : a1)
      for (int i : {3, 4}) classes.push_back(fixed(w(1), c) & fixed(v(i), c));
    for (int i : {3, 4})
      for (Color c : l[v(i)] - l[v(1)]) classes.push_back(fixed(v(i), c));
  }

  // Drop empty classes, then order greedily by intersection.
  std::vector<std::vector<std::size_t>> members(classes.size());
  for (std::size_t n = 0; n < space.size(); ++n) {
    auto phi = space.coloring(n);
    for (std::size_t k = 0; k < classes.size(); ++k)
      if (classes[k].matches(phi)) members[k].push_back(n);
  }
  std::vector<std::size_t> pending;
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (!members[k].empty()) pending.push_back(k);
  std::vector<std::size_t> placed;
  std::vector<char> covered(space.size(), 0);
  while (!pending.empty()) {
    auto it = pending.begin();
    if (!placed.empty()) {
      it = std::find_if(pending.begin(), pending.end(), [&](std::size_t k) {
        return std::any_of(members[k].begin(), members[k].end(),
                           [&](std::size_t n) { return covered[n]; });
      });
      if (it == pending.end()) it = pending.begin();
    }
    for (std::size_t n : members[*it]) covered[n] = 1;
    placed.push_back(*it);
    pending.erase(it);
  }
  std::vector<ClassConstraint> out;
  for (std::size_t k : placed) out.push_back(classes[k]);
  return out;
}

}  // namespace kempe
