#include "kempe/reconfig.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <queue>

#include "kempe/errors.hpp"

namespace kempe {
namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

ColoringSpace::ColoringSpace(const Graph& g, const ListAssignment& lists, std::size_t budget)
    : graph_(g), lists_(lists), width_(static_cast<std::size_t>(g.order())) {
  if (lists.order() != g.order())
    throw PreconditionError("list assignment does not match the graph");
  if (lists.universe().mask() >> 63)
    throw ParameterError("color 63 is reserved");
  auto all = enumerate_colorings(g, lists, budget);
  count_ = all.size();
  data_.resize(count_ * width_);
  for (std::size_t i = 0; i < count_; ++i)
    for (std::size_t v = 0; v < width_; ++v)
      data_[i * width_ + v] = static_cast<std::uint8_t>(all[i][v]);
}

Coloring ColoringSpace::coloring(std::size_t i) const {
  const auto* r = row(i);
  return Coloring(r, r + width_);
}

std::optional<std::size_t> ColoringSpace::find_raw(const std::uint8_t* key) const {
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = width_ ? std::memcmp(row(mid), key, width_) : 0;
    if (c == 0) return mid;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

std::optional<std::size_t> ColoringSpace::find(const Coloring& phi) const {
  if (phi.size() != width_) return std::nullopt;
  std::vector<std::uint8_t> key(width_);
  for (std::size_t v = 0; v < width_; ++v) {
    if (phi[v] < 0 || phi[v] > kMaxColor) return std::nullopt;
    key[v] = static_cast<std::uint8_t>(phi[v]);
  }
  return find_raw(key.data());
}

std::vector<Transition> ColoringSpace::transitions(std::size_t i) const {
  std::vector<Transition> out;
  transitions(i, out);
  return out;
}

void ColoringSpace::transitions(std::size_t i, std::vector<Transition>& out) const {
  out.clear();
  const int n = graph_.order();
  thread_local std::vector<std::uint8_t> phi;
  thread_local std::vector<Vertex> comp;
  thread_local std::vector<std::uint32_t> mark;
  thread_local std::uint32_t stamp = 0;
  phi.assign(row(i), row(i) + width_);
  if (mark.size() < width_) mark.assign(width_, 0);

  for (Vertex v = 0; v < n; ++v) {
    const Color a = phi[v];
    for (Color b : lists_[v]) {
      if (b == a) continue;
      if (++stamp == 0) {
        std::fill(mark.begin(), mark.end(), 0);
        stamp = 1;
      }
      comp.clear();
      comp.push_back(v);
      mark[v] = stamp;
      bool least = true;
      for (std::size_t k = 0; k < comp.size() && least; ++k)
        for (Vertex y : graph_.neighbors(comp[k])) {
          if (mark[y] == stamp || (phi[y] != a && phi[y] != b)) continue;
          if (y < v) {
            least = false;
            break;
          }
          mark[y] = stamp;
          comp.push_back(y);
        }
      if (!least) continue;
      bool valid = true;
      for (Vertex x : comp)
        if (!lists_[x].contains(phi[x] == a ? b : a)) {
          valid = false;
          break;
        }
      if (!valid) continue;
      for (Vertex x : comp) phi[x] = static_cast<std::uint8_t>(phi[x] == a ? b : a);
      auto target = find_raw(phi.data());
      for (Vertex x : comp) phi[x] = static_cast<std::uint8_t>(phi[x] == a ? b : a);
      if (!target) throw std::logic_error("swap left the coloring space");
      out.push_back({SwapMove{v, std::min(a, b), std::max(a, b)}, *target});
    }
  }
}

MixingReport mixing_classes(const ColoringSpace& space) {
  MixingReport r;
  r.total = space.size();
  UnionFind uf(r.total);
  std::vector<Transition> ts;
  for (std::size_t i = 0; i < r.total; ++i) {
    space.transitions(i, ts);
    if (ts.empty()) r.frozen.push_back(i);
    for (const auto& t : ts) uf.unite(i, t.target);
  }
  r.class_of.assign(r.total, 0);
  std::vector<std::size_t> id(r.total, SIZE_MAX);
  for (std::size_t i = 0; i < r.total; ++i) {
    std::size_t root = uf.find(i);
    if (id[root] == SIZE_MAX) {
      id[root] = r.classes++;
      r.representatives.push_back(space.coloring(i));
      r.class_sizes.push_back(0);
    }
    r.class_of[i] = id[root];
    ++r.class_sizes[id[root]];
  }
  return r;
}

MixingReport mixing_classes(const Graph& g, const ListAssignment& lists, std::size_t budget) {
  return mixing_classes(ColoringSpace(g, lists, budget));
}

bool is_swappable(const ColoringSpace& space) {
  if (space.size() <= 1) return true;
  std::vector<char> seen(space.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  std::vector<Transition> ts;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    space.transitions(x, ts);
    for (const auto& t : ts)
      if (!seen[t.target]) {
        seen[t.target] = 1;
        ++reached;
        stack.push_back(t.target);
      }
  }
  return reached == space.size();
}

std::optional<std::vector<SwapMove>> equivalence_path(const ColoringSpace& space,
                                                      const Coloring& phi1,
                                                      const Coloring& phi2) {
  auto s = space.find(phi1);
  auto t = space.find(phi2);
  if (!s || !t) throw PreconditionError("equivalence_path needs two L-colorings");
  std::vector<std::size_t> parent(space.size(), SIZE_MAX);
  std::vector<SwapMove> via(space.size());
  std::queue<std::size_t> q;
  parent[*s] = *s;
  q.push(*s);
  std::vector<Transition> ts;
  while (!q.empty() && parent[*t] == SIZE_MAX) {
    std::size_t x = q.front();
    q.pop();
    space.transitions(x, ts);
    for (const auto& tr : ts)
      if (parent[tr.target] == SIZE_MAX) {
        parent[tr.target] = x;
        via[tr.target] = tr.move;
        q.push(tr.target);
      }
  }
  if (parent[*t] == SIZE_MAX) return std::nullopt;
  std::vector<SwapMove> moves;
  for (std::size_t x = *t; x != *s; x = parent[x]) moves.push_back(via[x]);
  std::reverse(moves.begin(), moves.end());
  auto trail = replay(space.graph(), space.lists(), phi1, moves);
  if (trail.back() != phi2) throw std::logic_error("equivalence path does not replay");
  return moves;
}

std::optional<std::vector<SwapMove>> equivalence_path(const Graph& g, const ListAssignment& lists,
                                                      const Coloring& phi1, const Coloring& phi2,
                                                      std::size_t budget) {
  return equivalence_path(ColoringSpace(g, lists, budget), phi1, phi2);
}

ClassConstraint ClassConstraint::all() {
  ClassConstraint c;
  c.terms_.push_back({});
  return c;
}

ClassConstraint ClassConstraint::none() { return {}; }

ClassConstraint ClassConstraint::fixed(Vertex v, Color color) {
  ClassConstraint c;
  c.terms_.push_back({Atom{v, color}});
  return c;
}

bool ClassConstraint::matches(const Coloring& phi) const {
  for (const auto& term : terms_) {
    bool ok = true;
    for (const auto& a : term)
      if (a.vertex < 0 || a.vertex >= static_cast<Vertex>(phi.size()) ||
          phi[a.vertex] != a.color) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::string ClassConstraint::to_string() const {
  if (terms_.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " | ";
    if (terms_[i].empty()) {
      out += "all";
      continue;
    }
    for (std::size_t j = 0; j < terms_[i].size(); ++j) {
      if (j) out += " & ";
      out += "L[" + std::to_string(terms_[i][j].vertex) + "=" +
             std::to_string(terms_[i][j].color) + "]";
    }
  }
  return out;
}

ClassConstraint operator|(const ClassConstraint& a, const ClassConstraint& b) {
  ClassConstraint c = a;
  c.terms_.insert(c.terms_.end(), b.terms_.begin(), b.terms_.end());
  return c;
}

ClassConstraint operator&(const ClassConstraint& a, const ClassConstraint& b) {
  ClassConstraint c;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      std::vector<Atom> t = x;
      t.insert(t.end(), y.begin(), y.end());
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      bool contradictory = false;
      for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i].vertex == t[i - 1].vertex) contradictory = true;
      if (!contradictory) c.terms_.push_back(std::move(t));
    }
  return c;
}

SubsetResult subset_mixes(const ColoringSpace& space, const MixingReport& report,
                          const ClassConstraint& c) {
  SubsetResult r;
  std::size_t cls = SIZE_MAX;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!c.matches(space.coloring(i))) continue;
    ++r.members;
    if (cls == SIZE_MAX)
      cls = report.class_of[i];
    else if (report.class_of[i] != cls)
      r.mixes = false;
  }
  r.empty = r.members == 0;
  return r;
}

CoverVerdict cover_certificate(const ColoringSpace& space, const MixingReport& report,
                               const std::vector<ClassConstraint>& classes) {
  CoverVerdict v;
  const std::size_t n = space.size();
  std::vector<std::vector<char>> member(classes.size(), std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    auto phi = space.coloring(i);
    for (std::size_t k = 0; k < classes.size(); ++k) member[k][i] = classes[k].matches(phi);
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    std::size_t cls = SIZE_MAX;
    for (std::size_t i = 0; i < n; ++i) {
      if (!member[k][i]) continue;
      if (cls == SIZE_MAX) cls = report.class_of[i];
      if (report.class_of[i] != cls) {
        v.failed = 'a';
        v.index = k;
        v.detail = "class " + std::to_string(k) + " (" + classes[k].to_string() +
                   ") does not mix";
        return v;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool covered = false;
    for (std::size_t k = 0; k < classes.size() && !covered; ++k) covered = member[k][i];
    if (!covered) {
      v.failed = 'b';
      v.index = i;
      v.detail = "coloring " + to_string(space.coloring(i)) + " lies in no class";
      return v;
    }
  }
  for (std::size_t k = 1; k < classes.size(); ++k) {
    bool meets = false;
    for (std::size_t j = 0; j < k && !meets; ++j)
      for (std::size_t i = 0; i < n && !meets; ++i) meets = member[k][i] && member[j][i];
    if (!meets) {
      v.failed = 'c';
      v.index = k;
      v.detail = "class " + std::to_string(k) + " (" + classes[k].to_string() +
                 ") meets no earlier class";
      return v;
    }
  }
  v.certified = true;
  return v;
}

std::string reconfig_dot(const ColoringSpace& space, std::size_t max_nodes) {
  if (space.size() > max_nodes)
    throw BudgetError("reconfiguration graph has " + std::to_string(space.size()) +
                          " nodes, DOT export limited to " + std::to_string(max_nodes),
                      max_nodes);
  std::string out = "graph reconfiguration {\n";
  for (std::size_t i = 0; i < space.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + to_string(space.coloring(i)) + "\"];\n";
  std::vector<Transition> ts;
  for (std::size_t i = 0; i < space.size(); ++i) {
    space.transitions(i, ts);
    for (const auto& t : ts)
      if (i < t.target)
        out += "  n" + std::to_string(i) + " -- n" + std::to_string(t.target) + " [label=\"" +
               to_string(t.move) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace kempe
