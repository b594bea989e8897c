#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>

#include "spantree/graph.hpp"

namespace spantree {

// graph6, short form only: one header byte n + 63 (n <= 62), then the upper
// triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// most significant bit first, each byte offset by 63, zero padded.

inline constexpr int kMaxGraph6Order = 62;

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw GraphError("graph6 short form supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw GraphError("graph6: empty input");
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw GraphError("graph6: long-form header (n > 62) not supported");
  if (head < 63 || head > 126) throw GraphError("graph6: malformed header byte");
  const int n = head - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw GraphError("graph6: truncated payload");
  if (text.size() - 1 > bytes) throw GraphError("graph6: trailing bytes after payload");

  Graph g(n);
  std::size_t pos = 0;
  auto bit_at = [&](std::size_t k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]);
    if (byte < 63 || byte > 126) throw GraphError("graph6: payload byte out of range");
    return ((byte - 63) >> (5 - k % 6)) & 1;
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bit_at(pos++)) g.add_edge(i, j);
  for (std::size_t k = bits; k < bytes * 6; ++k)
    if (bit_at(k)) throw GraphError("graph6: nonzero padding bits");
  return g;
}

/// "n" on the first line, then one "u v" pair per line. Blank lines are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto parse_ints = [&](const std::string& s) {
    std::vector<long> vals;
    std::istringstream ls(s);
    std::string tok;
    while (ls >> tok) {
      long v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw GraphError("edge list line " + std::to_string(line_no) + ": bad integer '" + tok +
                         "'");
      vals.push_back(v);
    }
    return vals;
  };

  int n = -1;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    auto vals = parse_ints(line);
    if (vals.empty()) continue;
    if (n < 0) {
      if (vals.size() != 1 || vals[0] < 0 || vals[0] > kMaxOrder)
        throw GraphError("edge list line " + std::to_string(line_no) + ": expected vertex count");
      n = static_cast<int>(vals[0]);
      g = Graph(n);
      continue;
    }
    if (vals.size() != 2)
      throw GraphError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    const long u = vals[0];
    const long v = vals[1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge list line " + std::to_string(line_no) + ": vertex out of range");
    if (u == v) throw GraphError("edge list line " + std::to_string(line_no) + ": loop edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw GraphError("edge list: missing vertex count");
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace spantree
