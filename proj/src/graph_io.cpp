#include "kempe/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "kempe/errors.hpp"

namespace kempe {
namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string s;
  int number = 0;
  while (std::getline(in, s)) {
    ++number;
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos || s[first] == '#') continue;
    auto last = s.find_last_not_of(" \t\r");
    out.push_back({number, s.substr(first, last - first + 1)});
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
  throw ParseError("line " + std::to_string(l.number) + ": " + what + " ('" + l.text + "')");
}

std::vector<long long> integers(const Line& l, std::string_view body) {
  std::istringstream in{std::string(body)};
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      fail(l, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(l, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// Parses "v: rest" lines into a vertex-indexed table of integer rows.
std::vector<std::vector<long long>> vertex_table(std::string_view text, int n,
                                                 const char* what) {
  std::vector<std::vector<long long>> rows(n);
  std::vector<char> seen(n, 0);
  for (const auto& l : meaningful_lines(text)) {
    auto colon = l.text.find(':');
    if (colon == std::string::npos) fail(l, std::string("expected 'v: ...' in ") + what);
    auto head = integers(l, std::string_view(l.text).substr(0, colon));
    if (head.size() != 1) fail(l, "expected a single vertex id before ':'");
    long long v = head[0];
    if (v < 0 || v >= n) fail(l, "vertex id out of range");
    if (seen[v]) fail(l, "vertex listed twice");
    seen[v] = 1;
    rows[v] = integers(l, std::string_view(l.text).substr(colon + 1));
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      throw ParseError(std::string(what) + ": vertex " + std::to_string(v) + " missing");
  return rows;
}

}  // namespace

Graph read_edge_list(std::string_view text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("edge list is empty");
  auto head = integers(lines[0], lines[0].text);
  if (head.size() != 2 || head[0] < 0 || head[1] < 0)
    fail(lines[0], "header must be 'n m'");
  std::size_t m = static_cast<std::size_t>(head[1]);
  if (lines.size() != m + 1)
    throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= m; ++i) {
    auto e = integers(lines[i], lines[i].text);
    if (e.size() != 2) fail(lines[i], "edge must be 'u v'");
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  try {
    return Graph::from_edges(static_cast<int>(head[0]), edges);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_graph6(std::string_view text) {
  auto lines = meaningful_lines(text);
  if (lines.size() != 1) throw ParseError("graph6 input must be a single line");
  std::string s = lines[0].text;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
  std::size_t pos = 0;
  long long n = 0;
  if (s.empty()) throw ParseError("graph6: empty");
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw ParseError("graph6: unsupported size prefix");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (n == 0) bits = 0;
  if (s.size() - pos != (bits + 5) / 6) throw ParseError("graph6: wrong body length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw ParameterError("graph6 writer supports at most 258047 vertices");
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out + "\n";
}

Graph read_graph_auto(std::string_view text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("graph input is empty");
  if (lines[0].text.find_first_of(" \t") == std::string::npos &&
      lines[0].text.find_first_not_of("0123456789") != std::string::npos)
    return read_graph6(text);
  return read_edge_list(text);
}

ListAssignment read_lists(std::string_view text, int n) {
  auto rows = vertex_table(text, n, "list assignment");
  std::vector<ColorSet> lists(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v].empty())
      throw ParseError("list assignment: vertex " + std::to_string(v) + " has an empty list");
    for (long long c : rows[v]) {
      if (c < 0 || c > kMaxColor)
        throw ParseError("list assignment: color " + std::to_string(c) + " out of range");
      lists[v].insert(static_cast<Color>(c));
    }
  }
  return ListAssignment(std::move(lists));
}

std::string write_lists(const ListAssignment& lists) {
  std::string out;
  for (Vertex v = 0; v < lists.order(); ++v) {
    out += std::to_string(v) + ":";
    for (Color c : lists[v]) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

Coloring read_coloring(std::string_view text, int n) {
  auto rows = vertex_table(text, n, "coloring");
  Coloring phi(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v].size() != 1 || rows[v][0] < 0 || rows[v][0] > kMaxColor)
      throw ParseError("coloring: vertex " + std::to_string(v) + " needs exactly one color");
    phi[v] = static_cast<Color>(rows[v][0]);
  }
  return phi;
}

std::string write_coloring(const Coloring& phi) {
  std::string out;
  for (std::size_t v = 0; v < phi.size(); ++v)
    out += std::to_string(v) + ": " + std::to_string(phi[v]) + "\n";
  return out;
}

std::vector<SwapMove> read_moves(std::string_view text) {
  std::vector<SwapMove> out;
  for (const auto& l : meaningful_lines(text)) {
    auto v = integers(l, l.text);
    if (v.size() != 3) fail(l, "move must be 'anchor a b'");
    out.push_back({static_cast<Vertex>(v[0]), static_cast<Color>(v[1]),
                   static_cast<Color>(v[2])});
  }
  return out;
}

std::string write_moves(const std::vector<SwapMove>& moves) {
  std::string out;
  for (const auto& m : moves)
    out += std::to_string(m.anchor) + " " + std::to_string(m.alpha) + " " +
           std::to_string(m.beta) + "\n";
  return out;
}

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (g.has_labels()) out += " [label=\"" + g.label(v) + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

}  // namespace kempe
