#include "sepchi/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace sepchi {

namespace {

bool parse_int(std::istringstream& in, long long& out) {
  in >> out;
  return !in.fail();
}

bool only_whitespace_left(std::istringstream& in) {
  std::string rest;
  in >> rest;
  return rest.empty();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) throw ParseError(1, "missing header 'n m'");
  ++lineno;
  std::istringstream header(line);
  long long n = 0, m = 0;
  if (!parse_int(header, n) || !parse_int(header, m) || !only_whitespace_left(header))
    throw ParseError(lineno, "malformed header, expected 'n m'");
  if (n < 0 || m < 0) throw ParseError(lineno, "negative counts in header");

  Graph g(static_cast<int>(n));
  long long seen = 0;
  while (seen < m) {
    if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of input, expected edge");
    ++lineno;
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!parse_int(row, u) || !parse_int(row, v) || !only_whitespace_left(row))
      throw ParseError(lineno, "malformed edge, expected 'u v'");
    if (u < 0 || v >= n) throw ParseError(lineno, "vertex index out of range");
    if (u == v) throw ParseError(lineno, "loop edge");
    if (u > v) throw ParseError(lineno, "expected u < v");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError(lineno, "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream rest(line);
    if (!only_whitespace_left(rest)) throw ParseError(lineno, "trailing content after last edge");
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6MaxSmall = 62;
constexpr long long kG6MaxOrder = 258047;  // 2^18 - 1

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kG6MaxOrder) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= kG6MaxSmall) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kG6Offset));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Offset));
  return out;
}

Graph read_graph6(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError(1, "empty graph6 string");

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw ParseError(1, "graph6 orders beyond 258047 are not supported");
    if (s.size() < 4) throw ParseError(1, "truncated graph6 header");
    for (int i = 1; i <= 3; ++i) {
      const int c = static_cast<unsigned char>(s[static_cast<std::size_t>(i)]);
      if (c < kG6Offset || c > 126) throw ParseError(1, "invalid graph6 header byte");
      n = (n << 6) | (c - kG6Offset);
    }
    pos = 4;
  } else {
    const int c = static_cast<unsigned char>(s[0]);
    if (c < kG6Offset || c > kG6Offset + kG6MaxSmall)
      throw ParseError(1, "invalid graph6 order byte");
    n = c - kG6Offset;
    pos = 1;
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t expect = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != expect)
    throw ParseError(1, "graph6 body has wrong length");

  Graph g(static_cast<int>(n));
  int acc = 0, have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        const int c = static_cast<unsigned char>(s[pos++]);
        if (c < kG6Offset || c > 126) throw ParseError(1, "invalid graph6 body byte");
        acc = c - kG6Offset;
        have = 6;
      }
      if ((acc >> (have - 1)) & 1) g.add_edge(i, j);
      --have;
    }
  }
  if (have > 0 && (acc & ((1 << have) - 1)) != 0)
    throw ParseError(1, "nonzero padding bits in graph6 body");
  return g;
}

namespace {

bool has_suffix(const std::string& path, const std::string& suffix) {
  return path.size() >= suffix.size() &&
         path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  if (has_suffix(path, ".g6")) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return read_graph6(line);
    }
    throw ParseError(1, "no graph6 line in " + path);
  }
  return read_edge_list(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (has_suffix(path, ".g6")) {
    out << write_graph6(g) << '\n';
  } else {
    write_edge_list(out, g);
  }
}

}  // namespace sepchi
