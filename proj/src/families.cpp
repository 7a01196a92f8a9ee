#include "kempe/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "kempe/errors.hpp"

namespace kempe {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<FamilyInfo, 8> kFamilies{{
    {Family::Cycle, "cycle", 1},
    {Family::Path, "path", 1},
    {Family::Clique, "clique", 1},
    {Family::CompleteBipartite, "complete_bipartite", 2},
    {Family::Barbell, "barbell", 3},
    {Family::Theta, "theta", 3},
    {Family::Prism, "prism", 3},
    {Family::Star, "star", 1},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw ParameterError("unknown family");
}

// Appends a path from `from` to `to` with `length` edges, allocating fresh
// internal vertices starting at `next`.
void add_path(std::vector<Edge>& es, Vertex from, Vertex to, int length, int& next) {
  Vertex prev = from;
  for (int i = 1; i < length; ++i) {
    es.emplace_back(prev, next);
    prev = next++;
  }
  es.emplace_back(prev, to);
}

void add_cycle(std::vector<Edge>& es, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    es.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto open = s.find('(');
  if (open == std::string::npos || s.empty() || s.back() != ')')
    throw ParseError("family spec must look like name(p1,...): '" + std::string(text) + "'");
  std::string name = s.substr(0, open);
  std::string args = s.substr(open + 1, s.size() - open - 2);
  const FamilyInfo* found = nullptr;
  for (const auto& i : kFamilies)
    if (i.name == name) found = &i;
  if (!found) throw ParseError("unknown family '" + name + "'");
  FamilySpec spec{found->family, {}};
  std::size_t pos = 0;
  while (pos <= args.size() && !args.empty()) {
    auto comma = args.find(',', pos);
    auto token = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
      throw ParseError("bad integer parameter '" + token + "' in '" + std::string(text) + "'");
    spec.params.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (spec.params.size() != found->arity)
    throw ParseError(std::string(found->name) + " takes " + std::to_string(found->arity) +
                     " parameter(s)");
  spec.validate();
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(info(family).name);
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out + ')';
}

void FamilySpec::validate() const {
  const auto& fi = info(family);
  if (params.size() != fi.arity)
    throw ParameterError(std::string(fi.name) + " takes " + std::to_string(fi.arity) +
                         " parameter(s)");
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw ParameterError(to_string() + ": " + what);
  };
  switch (family) {
    case Family::Cycle:
      require(params[0] >= 3, "cycle length must be >= 3");
      break;
    case Family::Path:
    case Family::Clique:
    case Family::Star:
      require(params[0] >= 1, "size must be >= 1");
      break;
    case Family::CompleteBipartite:
      require(params[0] >= 1 && params[1] >= 1, "part sizes must be >= 1");
      break;
    case Family::Barbell:
      require(params[0] >= 3 && params[1] >= 3, "barbell cycle lengths must be >= 3");
      require(params[2] >= 0, "barbell path length must be >= 0");
      break;
    case Family::Theta: {
      require(std::all_of(params.begin(), params.end(), [](int p) { return p >= 1; }),
              "theta path lengths must be >= 1");
      require(std::count(params.begin(), params.end(), 1) <= 1,
              "theta allows at most one path of length 1");
      break;
    }
    case Family::Prism:
      require(std::all_of(params.begin(), params.end(), [](int p) { return p >= 1; }),
              "prism path lengths must be >= 1");
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  std::vector<Edge> es;
  int n = 0;
  switch (spec.family) {
    case Family::Cycle: {
      n = p[0];
      std::vector<Vertex> vs(n);
      for (int i = 0; i < n; ++i) vs[i] = i;
      add_cycle(es, vs);
      break;
    }
    case Family::Path:
      n = p[0];
      for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
      break;
    case Family::Clique:
      n = p[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
      break;
    case Family::CompleteBipartite:
      n = p[0] + p[1];
      for (int i = 0; i < p[0]; ++i)
        for (int j = 0; j < p[1]; ++j) es.emplace_back(i, p[0] + j);
      break;
    case Family::Star:
      n = p[0] + 1;
      for (int i = 1; i < n; ++i) es.emplace_back(0, i);
      break;
    case Family::Barbell: {
      int next = 0;
      std::vector<Vertex> c1;
      for (int i = 0; i < p[0]; ++i) c1.push_back(next++);
      add_cycle(es, c1);
      Vertex far = 0;
      if (p[2] > 0) {
        // internal vertices first, then the far end
        Vertex prev = 0;
        for (int i = 1; i < p[2]; ++i) {
          es.emplace_back(prev, next);
          prev = next++;
        }
        far = next++;
        es.emplace_back(prev, far);
      }
      std::vector<Vertex> c2{far};
      for (int i = 1; i < p[1]; ++i) c2.push_back(next++);
      add_cycle(es, c2);
      n = next;
      break;
    }
    case Family::Theta: {
      int next = 2;
      for (int len : p) add_path(es, 0, 1, len, next);
      n = next;
      break;
    }
    case Family::Prism: {
      int next = 6;
      add_cycle(es, {0, 1, 2});
      add_cycle(es, {3, 4, 5});
      for (int i = 0; i < 3; ++i) add_path(es, i, i + 3, p[i], next);
      n = next;
      break;
    }
  }
  return Graph::from_edges(n, es);
}

Graph generate(std::string_view spec_text) { return generate(FamilySpec::parse(spec_text)); }

Graph generate_instance(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto wrapped = [&](std::string_view name) {
    return s.size() > name.size() + 2 && s.compare(0, name.size(), name) == 0 &&
           s[name.size()] == '(' && s.back() == ')';
  };
  if (wrapped("line")) return line_graph(generate_instance(s.substr(5, s.size() - 6)));
  if (wrapped("product")) {
    std::string inner = s.substr(8, s.size() - 9);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0)
        return cartesian_product(generate_instance(inner.substr(0, i)),
                                 generate_instance(inner.substr(i + 1)));
    }
    throw ParseError("product needs two factors: '" + s + "'");
  }
  return generate(s);
}

}  // namespace kempe
