#include "orthorep/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "orthorep/error.hpp"

namespace orthorep {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw InvalidArgument("graph too large for graph6");
  }
  int bits = 0;
  int acc = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(const std::string& text) {
  std::string s = trim(text);
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  std::size_t pos = 0;
  int n = s[0] - 63;
  pos = 1;
  if (s[0] == 126) {
    if (s.size() < 4 || s[1] == 126) throw ParseError("unsupported graph6 size prefix");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6 graph must have at least one vertex");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (pairs + 5) / 6;
  if (s.size() - pos != need) throw ParseError("graph6 length does not match vertex count");
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++bit) {
      const int byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<long> numbers;
  while (std::getline(is, line)) {
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw ParseError("edge list contains a non-integer token '" + tok + "'");
      numbers.push_back(v);
    }
  }
  if (numbers.size() < 2) throw ParseError("edge list needs an 'n m' header");
  const long n = numbers[0];
  const long m = numbers[1];
  if (n < 1) throw ParseError("edge list vertex count must be positive");
  if (m < 0 || numbers.size() != static_cast<std::size_t>(2 + 2 * m))
    throw ParseError("edge list does not contain exactly m edges");
  Graph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    const long u = numbers[2 + 2 * e];
    const long v = numbers[3 + 2 * e];
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("self-loops are not allowed");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw ParseError("duplicate edge in edge list");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph parse_graph(const std::string& text) {
  const auto t = trim(text);
  const bool single_token = !t.empty() && std::none_of(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); });
  const bool looks_numeric = std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  if (single_token && !looks_numeric) return from_graph6(t);
  return from_edge_list(t);
}

}  // namespace orthorep
