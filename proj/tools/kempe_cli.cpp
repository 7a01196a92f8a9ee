// kempe: command-line front end.
//
// Exit status: 0 success, 1 negative finding, 2 budget exceeded, 3 input error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kempe/blocks.hpp"
#include "kempe/choosability.hpp"
#include "kempe/configurations.hpp"
#include "kempe/discharging.hpp"
#include "kempe/errors.hpp"
#include "kempe/families.hpp"
#include "kempe/graph_io.hpp"
#include "kempe/isomorphism.hpp"
#include "kempe/lifting.hpp"
#include "kempe/plane.hpp"
#include "kempe/plane_corpus.hpp"
#include "kempe/reconfig.hpp"
#include "kempe/verify.hpp"

using json = nlohmann::ordered_json;
using namespace kempe;

namespace {

enum Exit { kOk = 0, kNegative = 1, kBudget = 2, kInput = 3 };

struct Common {
  std::string report_path;
  std::size_t budget = kDefaultColoringBudget;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  bool timing = false;
  std::string dot_path;
};

struct Session {
  std::vector<std::string> argv;  // without --report
  Common common;
  json result = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

// ---- loading ----

Graph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_graph_auto(read_file(arg));
  return generate_instance(arg);
}

std::vector<int> call_params(const std::string& s, const std::string& name) {
  std::vector<int> out;
  std::string inner = s.substr(name.size() + 1, s.size() - name.size() - 2);
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad parameter '" + tok + "' in '" + s + "'");
    }
  }
  return out;
}

bool is_call(const std::string& s, const std::string& name) {
  return s.rfind(name + "(", 0) == 0 && s.back() == ')';
}

bool plane_spec(const std::string& s) {
  const auto& names = platonic_names();
  return std::find(names.begin(), names.end(), s) != names.end() || is_call(s, "wheel") ||
         is_call(s, "stacked") || is_call(s, "random_plane");
}

PlaneGraph generate_plane(const std::string& s) {
  if (is_call(s, "wheel")) {
    auto p = call_params(s, "wheel");
    if (p.size() != 1) throw ParameterError("wheel takes 1 parameter");
    return wheel(p[0]);
  }
  if (is_call(s, "stacked")) {
    auto p = call_params(s, "stacked");
    if (p.size() != 2) throw ParameterError("stacked takes (n,seed)");
    std::mt19937_64 rng(static_cast<std::uint64_t>(p[1]));
    return stacked_triangulation(p[0], rng);
  }
  if (is_call(s, "random_plane")) {
    auto p = call_params(s, "random_plane");
    if (p.size() != 2) throw ParameterError("random_plane takes (max_n,seed)");
    return random_plane_graph(p[0], static_cast<std::uint64_t>(p[1]));
  }
  return platonic(s);
}

PlaneGraph load_plane(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_rotation(read_file(arg));
  if (plane_spec(arg)) return generate_plane(arg);
  throw ParseError("no such rotation file or plane family: '" + arg + "'");
}

ListAssignment load_lists(const std::string& path, const Graph& g) {
  return read_lists(read_file(path), g.order());
}

Coloring load_coloring(const std::string& path, const Graph& g) {
  return read_coloring(read_file(path), g.order());
}

// ---- serialization ----

json to_json(const ListAssignment& l) {
  json out = json::array();
  for (int v = 0; v < l.order(); ++v) out.push_back(l[v].to_vector());
  return out;
}

json to_json(const std::vector<SwapMove>& moves) {
  json out = json::array();
  for (const auto& m : moves) out.push_back({m.anchor, m.alpha, m.beta});
  return out;
}

json to_json(const ConfigWitness& w) {
  json out{{"kind", to_string(w.kind)}, {"vertices", w.vertices}};
  json edges = json::array();
  for (auto [u, v] : w.edges) edges.push_back({u, v});
  out["edges"] = edges;
  switch (w.kind) {
    case ConfigKind::C1Edge: out["degree_sum"] = w.degree_sum; break;
    case ConfigKind::C2Barbell:
      out["cycles"] = w.cycles;
      out["path"] = w.path;
      break;
    case ConfigKind::C3Theta:
    case ConfigKind::C3K24:
      out["hubs"] = {w.hub_a, w.hub_b};
      out["paths"] = w.paths;
      if (w.kind == ConfigKind::C3K24) out["middle_host_two"] = w.middle_host_two;
      break;
  }
  return out;
}

void emit(std::ostream& os, const std::string& text) {
  os << text;
  if (text.empty() || text.back() != '\n') os << '\n';
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

// ---- commands ----

int cmd_gen(Session& s, const std::string& spec, const std::string& out, const std::string& format) {
  if (plane_spec(spec)) {
    auto pg = generate_plane(spec);
    write_output(out, write_rotation(pg));
    s.result = {{"vertices", pg.order()}, {"edges", pg.graph().size()}, {"format", "rotation"}};
    if (!s.common.dot_path.empty()) write_file(s.common.dot_path, to_dot(pg.graph()));
    return kOk;
  }
  Graph g = generate_instance(spec);
  write_output(out, format == "graph6" ? write_graph6(g) + "\n" : write_edge_list(g));
  if (!s.common.dot_path.empty()) write_file(s.common.dot_path, to_dot(g));
  s.result = {{"vertices", g.order()}, {"edges", g.size()}, {"format", format}};
  return kOk;
}

int cmd_line(Session& s, const std::string& input, const std::string& out, const std::string& format) {
  Graph l = line_graph(load_graph(input));
  write_output(out, format == "graph6" ? write_graph6(l) + "\n" : write_edge_list(l));
  if (!s.common.dot_path.empty()) write_file(s.common.dot_path, to_dot(l));
  s.result = {{"vertices", l.order()}, {"edges", l.size()}};
  return kOk;
}

int cmd_faces(Session& s, const std::string& input) {
  auto pg = load_plane(input);
  auto faces = trace_faces(pg);
  json arr = json::array();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::ostringstream line;
    line << "f" << i << " (" << faces[i].length() << "):";
    for (Vertex v : faces[i].walk) line << ' ' << v;
    emit(std::cout, line.str());
    arr.push_back(faces[i].walk);
  }
  s.result = {{"faces", arr}};
  return kOk;
}

int cmd_extract(Session& s, const std::string& input, const std::string& kind,
                const std::string& out) {
  auto pg = load_plane(input);
  SpecialKind k = kind == "G3" ? SpecialKind::G3 : SpecialKind::G2;
  Graph sub = extract_special_subgraph(pg, k);
  if (!out.empty()) write_file(out, write_edge_list(sub));
  emit(std::cout, kind + ": " + std::to_string(sub.size()) + " edges on " +
                      std::to_string(non_isolated(sub).size()) + " vertices");
  json edges = json::array();
  for (auto [u, v] : sub.edges()) edges.push_back({u, v});
  s.result = {{"kind", kind}, {"edges", edges}};
  return kOk;
}

int cmd_detect(Session& s, const std::string& kind, const std::string& input, int threshold) {
  Graph g = load_graph(input);
  std::optional<ConfigWitness> w;
  std::string note;
  if (kind == "C1-edge") {
    w = detect_c1(g, threshold);
  } else if (kind == "C2-barbell") {
    w = detect_barbell(g);
  } else if (kind == "C3-theta") {
    w = detect_theta(g);
    if (!w) {
      static const Graph k23 = generate("complete_bipartite(2,3)");
      auto support = g.induced(non_isolated(g));
      if (is_isomorphic(support, k23)) note = " (isomorphic to K_{2,3})";
    }
  } else if (kind == "C3-K24") {
    w = detect_k24(g);
  } else {
    throw ParameterError("unknown configuration kind '" + kind + "'");
  }
  s.result = {{"kind", kind}, {"present", w.has_value()}};
  if (!w) {
    emit(std::cout, "absent" + note);
    if (!note.empty()) s.result["note"] = note.substr(2, note.size() - 3);
    return kNegative;
  }
  auto problem = revalidate(*w, g, threshold);
  s.result["witness"] = to_json(*w);
  s.result["revalidated"] = problem.empty();
  std::ostringstream line;
  line << "present: " << to_string(w->kind) << " on vertices";
  for (Vertex v : w->vertices) line << ' ' << v;
  emit(std::cout, line.str());
  if (!problem.empty()) throw std::logic_error("witness failed re-validation: " + problem);
  return kOk;
}

AuditVariant parse_variant(const std::string& v) {
  if (v == "lemma1") return AuditVariant::Lemma1;
  if (v == "lemma2") return AuditVariant::Lemma2;
  throw ParameterError("variant must be lemma1 or lemma2");
}

int cmd_audit(Session& s, const std::string& input, const std::string& variant) {
  auto pg = load_plane(input);
  auto report = structural_audit(pg, parse_variant(variant));
  json r{{"variant", variant}, {"threshold", report.threshold},
         {"special_edges", report.special_edges.size()},
         {"special_bipartite", report.special_bipartite}};
  auto show = [&](const char* label, const std::optional<ConfigWitness>& w, const Graph& where) {
    if (!w) {
      emit(std::cout, std::string(label) + ": absent");
      r[label] = nullptr;
      return;
    }
    auto problem = revalidate(*w, where, report.threshold);
    if (!problem.empty()) throw std::logic_error("witness failed re-validation: " + problem);
    emit(std::cout, std::string(label) + ": present");
    r[label] = to_json(*w);
  };
  Graph special = Graph::from_edges(pg.order(), report.special_edges);
  show("C1", report.c1, pg.graph());
  show("C2", report.c2, special);
  show("C3-theta", report.c3_theta, special);
  if (report.variant == AuditVariant::Lemma2) {
    show("C3-K24", report.c3_k24, special);
    r["C3-K24-host-two"] = report.c3_k24_strict.has_value();
  }
  r["any"] = report.any();
  s.result = r;
  if (!report.any()) {
    emit(std::cout, "none of the configurations holds");
    return kNegative;
  }
  return kOk;
}

int cmd_discharge(Session& s, const std::string& input, const std::string& variant, bool ledger) {
  auto pg = load_plane(input);
  auto v = parse_variant(variant);
  auto report = run_discharging(pg, v);
  json rules = json::array();
  for (const auto& r : report.rules)
    rules.push_back({{"rule", r.rule},
                     {"transfers", r.transfers},
                     {"total_before", to_string(r.total_before)},
                     {"total_after", to_string(r.total_after)},
                     {"conserved", r.conserved()}});
  json negative = json::array();
  for (const auto& h : report.negative) negative.push_back(to_string(h));
  json holders = json::array();
  for (const auto& h : report.ledger.holders()) {
    json row{{"holder", to_string(h)}, {"initial", to_string(report.ledger.initial(h))}};
    for (const auto& r : report.rules) row[r.rule] = to_string(report.ledger.delta(h, r.rule));
    row["final"] = to_string(report.ledger.charge(h));
    holders.push_back(row);
  }
  s.result = {{"variant", variant},
              {"initial_total", to_string(report.initial_total)},
              {"expected_total", to_string(report.expected_total)},
              {"final_total", to_string(report.ledger.total())},
              {"rules", rules},
              {"negative", negative},
              {"notes", report.notes},
              {"ledger", holders}};
  emit(std::cout, "initial total " + to_string(report.initial_total) + ", final total " +
                      to_string(report.ledger.total()) + ", " +
                      std::to_string(report.negative.size()) + " negative holders");
  if (ledger) std::cout << format_ledger(report);
  if (!report.euler_ok() || !report.conserved()) {
    emit(std::cout, "charge is not conserved");
    return kNegative;
  }
  if (report.negative.empty()) {
    auto audit = structural_audit(pg, v);
    s.result["configuration_found"] = audit.any();
    if (!audit.any()) {
      emit(std::cout, "SEVERE: nonnegative final charges and no configuration");
      return kNegative;
    }
  }
  return kOk;
}

int cmd_colorings(Session& s, const std::string& gpath, const std::string& lpath) {
  Graph g = load_graph(gpath);
  auto lists = load_lists(lpath, g);
  auto all = enumerate_colorings(g, lists, s.common.budget);
  emit(std::cout, std::to_string(all.size()) + " colorings");
  for (const auto& phi : all) emit(std::cout, to_string(phi));
  json arr = json::array();
  for (const auto& phi : all) arr.push_back(phi);
  s.result = {{"count", all.size()}, {"colorings", arr}};
  return kOk;
}

int cmd_mix(Session& s, const std::string& gpath, const std::string& lpath) {
  Graph g = load_graph(gpath);
  auto lists = load_lists(lpath, g);
  ColoringSpace space(g, lists, s.common.budget);
  auto report = mixing_classes(space);
  emit(std::cout, std::to_string(report.classes) +
                      (report.classes == 1 ? " class" : " classes") + " over " +
                      std::to_string(report.total) + " colorings, " +
                      std::to_string(report.frozen.size()) + " frozen");
  json reps = json::array();
  for (const auto& r : report.representatives) reps.push_back(r);
  json frozen = json::array();
  for (auto i : report.frozen) frozen.push_back(space.coloring(i));
  s.result = {{"colorings", report.total}, {"classes", report.classes},
              {"class_sizes", report.class_sizes}, {"representatives", reps},
              {"frozen", frozen}};
  if (!s.common.dot_path.empty()) write_file(s.common.dot_path, reconfig_dot(space));
  return report.classes <= 1 ? kOk : kNegative;
}

int cmd_path(Session& s, const std::string& gpath, const std::string& lpath,
             const std::string& from, const std::string& to, const std::string& out) {
  Graph g = load_graph(gpath);
  auto lists = load_lists(lpath, g);
  auto path = equivalence_path(g, lists, load_coloring(from, g), load_coloring(to, g),
                               s.common.budget);
  if (!path) {
    emit(std::cout, "not equivalent");
    s.result = {{"equivalent", false}};
    return kNegative;
  }
  emit(std::cout, std::to_string(path->size()) + " moves");
  if (!out.empty())
    write_file(out, write_moves(*path));
  else
    std::cout << write_moves(*path);
  s.result = {{"equivalent", true}, {"moves", to_json(*path)}};
  return kOk;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string tok;
  std::stringstream ss(text);
  while (ss >> tok) {
    std::stringstream parts(tok);
    std::string piece;
    while (std::getline(parts, piece, ','))
      if (!piece.empty()) {
        try {
          out.push_back(std::stoi(piece));
        } catch (const std::exception&) {
          throw ParseError("bad vertex id '" + piece + "'");
        }
      }
  }
  return out;
}

int cmd_lift(Session& s, const std::string& gpath, const std::string& lpath,
             const std::string& start, const std::string& moves_path, int vertex,
             const std::string& subgraph, const std::string& target_path, bool no_verify,
             const std::string& out) {
  Graph g = load_graph(gpath);
  auto lists = load_lists(lpath, g);
  auto phi = load_coloring(start, g);
  auto moves = read_moves(read_file(moves_path));
  std::optional<Coloring> target;
  if (!target_path.empty()) target = load_coloring(target_path, g);
  std::vector<SwapMove> lifted;
  if (vertex >= 0) {
    lifted = lift_through_vertex(g, lists, vertex, phi, moves, target);
  } else {
    SubgraphLiftOptions opt;
    opt.verify_hypotheses = !no_verify;
    opt.budget = s.common.budget;
    lifted = lift_through_subgraph(g, parse_vertex_list(subgraph), lists, phi, moves, target, opt);
  }
  auto trail = replay(g, lists, phi, lifted);
  emit(std::cout, std::to_string(moves.size()) + " moves lifted to " +
                      std::to_string(lifted.size()));
  if (!out.empty())
    write_file(out, write_moves(lifted));
  else
    std::cout << write_moves(lifted);
  s.result = {{"input_moves", moves.size()}, {"moves", to_json(lifted)},
              {"final", trail.back()}};
  return kOk;
}

json case_json(const CaseReport& c) {
  json j{{"instance", c.instance}, {"mode", c.mode},     {"cap", c.cap},
         {"samples", c.samples},   {"seed", c.seed},     {"checked", c.checked},
         {"verdict", to_string(c.verdict)}, {"detail", c.detail}};
  if (c.counterexample) j["counterexample"] = to_json(*c.counterexample);
  return j;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Verified: return kOk;
    case Verdict::BudgetExceeded: return kBudget;
    default: return kNegative;
  }
}

int cmd_verify(Session& s, const std::string& id, std::vector<std::string> instances,
               const std::vector<int>& cycles, int path_len, const std::vector<int>& theta,
               const std::vector<int>& prism, VerifyOptions opt, const std::string& cx_dir) {
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  if (!cycles.empty()) {
    if (cycles.size() != 2) throw ParameterError("--cycles takes two lengths");
    instances.push_back("barbell(" + join(cycles) + "," + std::to_string(path_len) + ")");
  }
  if (!theta.empty()) instances.push_back("theta(" + join(theta) + ")");
  if (!prism.empty()) instances.push_back("prism(" + join(prism) + ")");
  opt.seed = s.common.seed;
  opt.jobs = s.common.jobs;
  opt.budget = s.common.budget;

  LemmaReport rep;
  if (id == "degree-swappable") {
    if (instances.empty()) throw ParameterError("degree-swappable needs --instance");
    rep.lemma = id;
    for (const auto& text : instances) {
      auto part = degree_swappable_verdict(generate_instance(text), opt, text);
      for (auto& c : part.cases) rep.cases.push_back(std::move(c));
    }
  } else {
    rep = verify_lemma(id, instances, opt);
  }
  json cases = json::array();
  int written = 0;
  for (const auto& c : rep.cases) {
    std::ostringstream line;
    line << c.instance << " [" << c.mode;
    if (c.cap) line << ", cap " << c.cap;
    if (c.samples) line << ", " << c.samples << " samples, seed " << c.seed;
    line << "]: " << to_string(c.verdict) << " (" << c.checked << " checked)";
    if (!c.detail.empty()) line << ": " << c.detail;
    emit(std::cout, line.str());
    auto j = case_json(c);
    if (c.counterexample && !cx_dir.empty()) {
      std::filesystem::create_directories(cx_dir);
      auto stem = cx_dir + "/" + id + "_" + std::to_string(written++);
      write_file(stem + ".graph", write_edge_list(c.graph));
      write_file(stem + ".lists", write_lists(*c.counterexample));
      j["files"] = {stem + ".graph", stem + ".lists"};
    }
    cases.push_back(j);
  }
  s.result = {{"lemma", id}, {"verdict", to_string(rep.verdict())}, {"cases", cases}};
  emit(std::cout, id + ": " + to_string(rep.verdict()));
  return exit_for(rep.verdict());
}

int cmd_frozen(Session& s, const std::string& gpath, const std::string& lpath) {
  Graph g = load_graph(gpath);
  auto lists = load_lists(lpath, g);
  auto frozen = frozen_colorings(g, lists, s.common.budget);
  emit(std::cout, std::to_string(frozen.size()) + " frozen colorings");
  json arr = json::array();
  for (const auto& phi : frozen) {
    emit(std::cout, to_string(phi));
    arr.push_back(phi);
  }
  s.result = {{"frozen", arr}};
  return frozen.empty() ? kOk : kNegative;
}

int cmd_choosable(Session& s, const std::string& input, int cap) {
  Graph g = load_graph(input);
  ChoosabilityOptions opt;
  opt.cap = cap;
  opt.seed = s.common.seed;
  auto v = is_degree_choosable(g, opt);
  bool gallai = is_gallai_tree(g).gallai_tree;
  emit(std::cout, std::string(v.choosable ? "degree-choosable" : "not degree-choosable") +
                      (v.sampled ? " (sampled)" : "") + "; Gallai tree: " +
                      (gallai ? "yes" : "no"));
  s.result = {{"choosable", v.choosable}, {"sampled", v.sampled}, {"cap", v.cap},
              {"checked", v.checked}, {"gallai_tree", gallai}};
  if (v.witness) s.result["witness"] = to_json(*v.witness);
  return v.choosable ? kOk : kNegative;
}

int dispatch(std::vector<std::string> args);

int cmd_replay(const std::string& path, const std::string& report_out) {
  json in;
  try {
    in = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!in.contains("config") || !in["config"].contains("argv"))
    throw ParseError("report has no embedded config");
  auto args = in["config"]["argv"].get<std::vector<std::string>>();
  if (!report_out.empty()) {
    args.push_back("--report");
    args.push_back(report_out);
  }
  return dispatch(args);
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--report", c.report_path, "Write a JSON report here");
  sub->add_option("--budget", c.budget, "Maximum colorings to enumerate");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_flag("--timing", c.timing, "Record runtime in the report");
  sub->add_option("--dot", c.dot_path, "Write a Graphviz rendering here");
}

std::vector<std::string> strip_report(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--report") {
      ++i;
      continue;
    }
    if (args[i].rfind("--report=", 0) == 0) continue;
    out.push_back(args[i]);
  }
  return out;
}

int dispatch(std::vector<std::string> args) {
  CLI::App app{"Kempe-swap reconfiguration toolkit"};
  app.require_subcommand(1);
  Session s;
  s.argv = strip_report(args);

  std::string spec, input, gpath, lpath, from, to, out, format = "edges", kind, variant = "lemma1";
  std::string start, moves, subgraph, target, cx_dir, replay_path;
  int threshold = 11, vertex = -1, path_len = 0, cap = 0;
  bool ledger = false, no_verify = false;
  std::vector<std::string> instances;
  std::vector<int> cycles, theta, prism;
  VerifyOptions vopt;
  std::string lemma;
  int code = kOk;

  auto gen = app.add_subcommand("gen", "Generate a family graph or plane graph");
  gen->add_option("spec", spec, "Family spec, e.g. theta(1,3,3), wheel(6), icosahedron")->required();
  gen->add_option("-o,--output", out, "Output file (default stdout)");
  gen->add_option("--format", format, "edges or graph6")->check(CLI::IsMember({"edges", "graph6"}));
  add_common(gen, s.common);
  gen->callback([&] { code = cmd_gen(s, spec, out, format); });

  auto line = app.add_subcommand("line", "Line graph");
  line->add_option("input", input, "Graph file or family spec")->required();
  line->add_option("-o,--output", out, "Output file (default stdout)");
  line->add_option("--format", format, "edges or graph6")->check(CLI::IsMember({"edges", "graph6"}));
  add_common(line, s.common);
  line->callback([&] { code = cmd_line(s, input, out, format); });

  auto faces = app.add_subcommand("faces", "Trace the faces of a plane graph");
  faces->add_option("input", input, "Rotation file or plane family")->required();
  add_common(faces, s.common);
  faces->callback([&] { code = cmd_faces(s, input); });

  auto extract = app.add_subcommand("extract", "Extract G3 or G2");
  extract->add_option("input", input, "Rotation file or plane family")->required();
  extract->add_option("--kind", kind, "G3 or G2")->required()->check(CLI::IsMember({"G3", "G2"}));
  extract->add_option("-o,--output", out, "Edge list of the subgraph");
  add_common(extract, s.common);
  extract->callback([&] { code = cmd_extract(s, input, kind, out); });

  auto detect = app.add_subcommand("detect", "Detect one configuration in a graph");
  detect->add_option("kind", kind, "C1-edge, C2-barbell, C3-theta or C3-K24")->required();
  detect->add_option("input", input, "Graph file or family spec")->required();
  detect->add_option("--threshold", threshold, "Degree-sum bound for C1-edge");
  add_common(detect, s.common);
  detect->callback([&] { code = cmd_detect(s, kind, input, threshold); });

  auto audit = app.add_subcommand("audit", "Structural audit of a plane graph");
  audit->add_option("input", input, "Rotation file or plane family")->required();
  audit->add_option("--variant", variant, "lemma1 or lemma2");
  add_common(audit, s.common);
  audit->callback([&] { code = cmd_audit(s, input, variant); });

  auto discharge = app.add_subcommand("discharge", "Run a discharging system");
  discharge->add_option("input", input, "Rotation file or plane family")->required();
  discharge->add_option("--variant", variant, "lemma1 or lemma2");
  discharge->add_flag("--ledger", ledger, "Print the per-holder ledger");
  add_common(discharge, s.common);
  discharge->callback([&] { code = cmd_discharge(s, input, variant, ledger); });

  auto colorings = app.add_subcommand("colorings", "Enumerate L-colorings");
  colorings->add_option("graph", gpath, "Graph file or family spec")->required();
  colorings->add_option("lists", lpath, "List file")->required();
  add_common(colorings, s.common);
  colorings->callback([&] { code = cmd_colorings(s, gpath, lpath); });

  auto mix = app.add_subcommand("mix", "Mixing classes under L-valid Kempe swaps");
  mix->add_option("graph", gpath, "Graph file or family spec")->required();
  mix->add_option("lists", lpath, "List file")->required();
  add_common(mix, s.common);
  mix->callback([&] { code = cmd_mix(s, gpath, lpath); });

  auto path = app.add_subcommand("path", "Shortest swap sequence between two colorings");
  path->add_option("graph", gpath, "Graph file or family spec")->required();
  path->add_option("lists", lpath, "List file")->required();
  path->add_option("from", from, "Start coloring file")->required();
  path->add_option("to", to, "Target coloring file")->required();
  path->add_option("-o,--output", out, "Move file (default stdout)");
  add_common(path, s.common);
  path->callback([&] { code = cmd_path(s, gpath, lpath, from, to, out); });

  auto lift = app.add_subcommand("lift", "Lift a swap sequence through a vertex or subgraph");
  lift->add_option("graph", gpath, "Graph file or family spec")->required();
  lift->add_option("lists", lpath, "List file")->required();
  lift->add_option("start", start, "Start coloring of the whole graph")->required();
  lift->add_option("moves", moves, "Moves on the reduced graph")->required();
  auto vopt_v = lift->add_option("--vertex", vertex, "Lift through this vertex");
  auto vopt_h = lift->add_option("--subgraph", subgraph, "Vertices of H, e.g. \"0,1,2,3\"");
  vopt_v->excludes(vopt_h);
  lift->add_option("--target", target, "Final coloring to reach");
  lift->add_flag("--no-verify", no_verify, "Skip re-checking the subgraph hypotheses");
  lift->add_option("-o,--output", out, "Move file (default stdout)");
  add_common(lift, s.common);
  lift->callback([&] {
    if (vertex < 0 && subgraph.empty()) throw ParameterError("give --vertex or --subgraph");
    code = cmd_lift(s, gpath, lpath, start, moves, vertex, subgraph, target, no_verify, out);
  });

  auto verify = app.add_subcommand("verify", "Brute-force check of a lemma");
  verify->add_option("lemma", lemma, "Lemma id, or degree-swappable")->required();
  verify->add_option("--instance", instances, "Instance spec (repeatable)");
  verify->add_option("--cycles", cycles, "Barbell cycle lengths")->expected(2);
  verify->add_option("--path", path_len, "Barbell path length");
  verify->add_option("--theta", theta, "Theta path lengths")->expected(3);
  verify->add_option("--prism", prism, "Prism path lengths")->expected(3);
  verify->add_option("--cap", vopt.cap, "Universe for the exhaustive pass (0 skips)");
  verify->add_option("--sample-cap", vopt.sample_cap, "Universe for sampling");
  verify->add_option("--samples", vopt.samples, "Number of sampled assignments");
  verify->add_option("--max-assignments", vopt.max_assignments, "Exhaustive pass budget");
  verify->add_flag("--confirm-choosability", vopt.confirm_choosability,
                   "Brute-force the degree-choosability hypotheses too");
  verify->add_option("--counterexample-dir", cx_dir, "Write counterexamples here");
  add_common(verify, s.common);
  verify->callback([&] {
    code = cmd_verify(s, lemma, instances, cycles, path_len, theta, prism, vopt, cx_dir);
  });

  auto frozen = app.add_subcommand("frozen", "L-colorings without a valid swap");
  frozen->add_option("graph", gpath, "Graph file or family spec")->required();
  frozen->add_option("lists", lpath, "List file")->required();
  add_common(frozen, s.common);
  frozen->callback([&] { code = cmd_frozen(s, gpath, lpath); });

  auto choosable = app.add_subcommand("choosable", "Degree-choosability by brute force");
  choosable->add_option("input", input, "Graph file or family spec")->required();
  choosable->add_option("--cap", cap, "Color universe (default max(4, Delta))");
  add_common(choosable, s.common);
  choosable->callback([&] { code = cmd_choosable(s, input, cap); });

  std::string replay_out;
  auto replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a report");
  replay_cmd->add_option("file", replay_path, "Report file")->required();
  replay_cmd->add_option("--report", replay_out, "Write the new report here");
  bool replaying = false;
  replay_cmd->callback([&] {
    replaying = true;
    code = cmd_replay(replay_path, replay_out);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  if (replaying) return code;

  if (!s.common.report_path.empty()) {
    json report;
    report["tool"] = "kempe";
    report["command"] = app.get_subcommands().front()->get_name();
    report["config"] = {{"argv", s.argv}, {"seed", s.common.seed}, {"budget", s.common.budget}};
    report["exit"] = code;
    report["result"] = s.result;
    if (s.common.timing)
      report["seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - s.start).count();
    write_file(s.common.report_path, report.dump(2) + "\n");
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return dispatch(args);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
