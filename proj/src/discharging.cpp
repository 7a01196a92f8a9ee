#include "kempe/discharging.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "kempe/errors.hpp"

namespace kempe {

std::string to_string(const Charge& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

std::string to_string(const Holder& h) {
  switch (h.kind) {
    case HolderKind::Vertex: return "v" + std::to_string(h.index);
    case HolderKind::Face: return "f" + std::to_string(h.index);
    case HolderKind::Pot: return "pot" + std::to_string(h.index);
  }
  return "?";
}

ChargeLedger::ChargeLedger(std::vector<Charge> vertices, std::vector<Charge> faces, int pots) {
  charge_[0] = std::move(vertices);
  charge_[1] = std::move(faces);
  charge_[2].assign(pots, Charge(0));
  for (int k = 0; k < 3; ++k) initial_[k] = charge_[k];
}

const Charge& ChargeLedger::charge(const Holder& h) const {
  return charge_[static_cast<int>(h.kind)].at(h.index);
}

const Charge& ChargeLedger::initial(const Holder& h) const {
  return initial_[static_cast<int>(h.kind)].at(h.index);
}

Charge& ChargeLedger::slot(const Holder& h) { return charge_[static_cast<int>(h.kind)].at(h.index); }

void ChargeLedger::transfer(const Holder& source, const Holder& sink, const Charge& amount,
                            const std::string& rule) {
  slot(source) -= amount;
  slot(sink) += amount;
  log_.push_back(Transfer{source, sink, amount, rule});
}

Charge ChargeLedger::total() const {
  Charge t(0);
  for (const auto& kind : charge_)
    for (const auto& c : kind) t += c;
  return t;
}

std::vector<Holder> ChargeLedger::holders() const {
  std::vector<Holder> out;
  for (int k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < charge_[k].size(); ++i)
      out.push_back(Holder{static_cast<HolderKind>(k), static_cast<int>(i)});
  return out;
}

Charge ChargeLedger::delta(const Holder& h, const std::string& rule) const {
  Charge d(0);
  for (const auto& t : log_) {
    if (t.rule != rule) continue;
    if (t.source == h) d -= t.amount;
    if (t.sink == h) d += t.amount;
  }
  return d;
}

bool DischargeReport::conserved() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleAudit& r) { return r.conserved(); });
}

namespace {

Holder vtx(Vertex v) { return {HolderKind::Vertex, v}; }
Holder face(int f) { return {HolderKind::Face, f}; }
Holder pot(int p) { return {HolderKind::Pot, p}; }

struct Context {
  const Graph& g;
  DischargeReport& report;
  /// Face ids around each vertex, one entry per incidence.
  std::vector<std::vector<int>> incidences;
  Graph special;
};

void note_multiplicity(Context& cx, Vertex v, const std::string& rule) {
  const auto& inc = cx.incidences[v];
  for (std::size_t i = 0; i < inc.size(); ++i)
    if (std::count(inc.begin(), inc.end(), inc[i]) > 1 &&
        std::find(inc.begin(), inc.end(), inc[i]) == inc.begin() + i)
      cx.report.notes.push_back(rule + ": " + to_string(vtx(v)) + " meets " +
                                to_string(face(inc[i])) + " " +
                                std::to_string(std::count(inc.begin(), inc.end(), inc[i])) +
                                " times");
}

void run_rule(Context& cx, const std::string& name, const std::function<void()>& body) {
  RuleAudit audit;
  audit.rule = name;
  audit.total_before = cx.report.ledger.total();
  std::size_t before = cx.report.ledger.log().size();
  body();
  audit.total_after = cx.report.ledger.total();
  audit.transfers = cx.report.ledger.log().size() - before;
  cx.report.rules.push_back(audit);
}

bool has_neighbor_of_degree(const Graph& g, Vertex v, int d) {
  for (Vertex w : g.neighbors(v))
    if (g.degree(w) == d) return true;
  return false;
}

// v lies on a 4-cycle of `sub`: two neighbours with a common neighbour other than v.
bool on_four_cycle(const Graph& sub, Vertex v) {
  const auto& nv = sub.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j)
      for (Vertex c : sub.neighbors(nv[i]))
        if (c != v && sub.adjacent(c, nv[j])) return true;
  return false;
}

// A 4-face whose four distinct boundary vertices induce a 4-cycle in G2.
bool two_alternating(const Face& f, const Graph& g2) {
  if (f.length() != 4) return false;
  std::set<Vertex> distinct(f.walk.begin(), f.walk.end());
  if (distinct.size() != 4) return false;
  for (int i = 0; i < 4; ++i)
    if (!g2.adjacent(f.walk[i], f.walk[(i + 1) % 4])) return false;
  return !g2.adjacent(f.walk[0], f.walk[2]) && !g2.adjacent(f.walk[1], f.walk[3]);
}

// Each vertex of degree >= 5 spreads its charge over its face incidences.
void spread_big_vertices(Context& cx, const std::string& rule) {
  auto& ledger = cx.report.ledger;
  std::vector<Charge> snapshot;
  for (Vertex v = 0; v < cx.g.order(); ++v) snapshot.push_back(ledger.charge(vtx(v)));
  for (Vertex v = 0; v < cx.g.order(); ++v) {
    if (cx.g.degree(v) < 5) continue;
    note_multiplicity(cx, v, rule);
    Charge share = snapshot[v] / static_cast<long long>(cx.incidences[v].size());
    for (int f : cx.incidences[v]) ledger.transfer(vtx(v), face(f), share, rule);
  }
}

void lemma1_rules(Context& cx) {
  const Graph& g = cx.g;
  auto& ledger = cx.report.ledger;
  const auto& pot_of = cx.report.pot_of;
  const int delta = g.max_degree();
  run_rule(cx, "R1", [&] {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == delta && has_neighbor_of_degree(g, v, 3))
        ledger.transfer(vtx(v), pot(pot_of[v]), Charge(1, 2), "R1");
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 3) ledger.transfer(pot(pot_of[v]), vtx(v), Charge(1), "R1");
  });
  run_rule(cx, "R2", [&] { spread_big_vertices(cx, "R2"); });
  run_rule(cx, "R3", [&] {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 3 || !on_four_cycle(cx.special, v)) continue;
      note_multiplicity(cx, v, "R3");
      for (int f : cx.incidences[v]) {
        if (cx.report.faces[f].length() < 4) continue;
        ledger.transfer(face(f), vtx(v), Charge(1, 2), "R3");
        ledger.transfer(vtx(v), pot(pot_of[v]), Charge(1, 2), "R3");
      }
    }
  });
}

void lemma2_rules(Context& cx) {
  const Graph& g = cx.g;
  auto& ledger = cx.report.ledger;
  const auto& pot_of = cx.report.pot_of;
  run_rule(cx, "R1", [&] {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) >= 15 && pot_of[v] >= 0 && has_neighbor_of_degree(g, v, 2))
        ledger.transfer(vtx(v), pot(pot_of[v]), Charge(1), "R1");
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 2) continue;
      if (pot_of[v] < 0) {
        cx.report.notes.push_back("R1: " + to_string(vtx(v)) + " is outside G2, no pot");
        continue;
      }
      ledger.transfer(pot(pot_of[v]), vtx(v), Charge(1), "R1");
    }
  });
  run_rule(cx, "R2", [&] { spread_big_vertices(cx, "R2"); });
  run_rule(cx, "R3", [&] {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 3) continue;
      note_multiplicity(cx, v, "R3");
      for (int f : cx.incidences[v]) ledger.transfer(face(f), vtx(v), Charge(1, 3), "R3");
    }
  });
  run_rule(cx, "R4", [&] {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 2) continue;
      note_multiplicity(cx, v, "R4");
      for (int f : cx.incidences[v]) {
        const Face& fc = cx.report.faces[f];
        Charge amount(1);
        if (fc.length() == 3)
          amount = Charge(1, 3);
        else if (two_alternating(fc, cx.special))
          amount = Charge(2, 3);
        ledger.transfer(face(f), vtx(v), amount, "R4");
      }
    }
  });
  run_rule(cx, "R5", [&] {
    std::vector<Charge> snapshot;
    for (Vertex v = 0; v < g.order(); ++v) snapshot.push_back(ledger.charge(vtx(v)));
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 2 || snapshot[v] <= 0) continue;
      if (pot_of[v] < 0) {
        cx.report.notes.push_back("R5: " + to_string(vtx(v)) + " keeps " +
                                  to_string(snapshot[v]) + ", no pot");
        continue;
      }
      ledger.transfer(vtx(v), pot(pot_of[v]), snapshot[v], "R5");
    }
  });
}

}  // namespace

DischargeReport run_discharging(const PlaneGraph& pg, AuditVariant variant) {
  const Graph& g = pg.graph();
  if (g.order() == 0) throw PreconditionError("empty graph");
  if (g.min_degree() < 2)
    throw PreconditionError("minimum degree " + std::to_string(g.min_degree()) + " is below 2");
  DischargeReport report;
  report.variant = variant;
  report.faces = trace_faces(pg);

  Context cx{g, report, std::vector<std::vector<int>>(g.order()), {}};
  for (std::size_t f = 0; f < report.faces.size(); ++f)
    for (Vertex v : report.faces[f].walk) cx.incidences[v].push_back(static_cast<int>(f));
  cx.special = extract_special_subgraph(
      pg, variant == AuditVariant::Lemma1 ? SpecialKind::G3 : SpecialKind::G2, report.faces);

  auto comp = cx.special.components();
  report.pot_of.assign(g.order(), -1);
  std::vector<int> renumber(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (cx.special.degree(v) == 0) continue;
    if (renumber[comp[v]] < 0) renumber[comp[v]] = report.pots++;
    report.pot_of[v] = renumber[comp[v]];
  }
  auto host_comp = g.components();
  report.components = *std::max_element(host_comp.begin(), host_comp.end()) + 1;

  std::vector<Charge> vc, fc;
  for (Vertex v = 0; v < g.order(); ++v) vc.emplace_back(g.degree(v) - 4);
  for (const auto& f : report.faces) fc.emplace_back(f.length() - 4);
  report.ledger = ChargeLedger(std::move(vc), std::move(fc), report.pots);
  report.initial_total = report.ledger.total();
  report.expected_total = Charge(-8LL * report.components);

  if (variant == AuditVariant::Lemma1)
    lemma1_rules(cx);
  else
    lemma2_rules(cx);

  for (const auto& h : report.ledger.holders())
    if (report.ledger.charge(h) < 0) report.negative.push_back(h);
  return report;
}

std::string format_ledger(const DischargeReport& report) {
  std::ostringstream out;
  out << "holder initial";
  for (const auto& r : report.rules) out << ' ' << r.rule;
  out << " final\n";
  const auto& ledger = report.ledger;
  for (const auto& h : ledger.holders()) {
    out << to_string(h) << ' ' << to_string(ledger.initial(h));
    for (const auto& r : report.rules) out << ' ' << to_string(ledger.delta(h, r.rule));
    out << ' ' << to_string(ledger.charge(h)) << '\n';
  }
  return out.str();
}

}  // namespace kempe
