#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/graph_io.hpp"

namespace spantree {

inline Graph permute(const Graph& g, const std::vector<int>& position_to_vertex) {
  const int n = g.order();
  Graph out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(position_to_vertex[static_cast<std::size_t>(i)],
                     position_to_vertex[static_cast<std::size_t>(j)]))
        out.add_edge(i, j);
  return out;
}

/// Relabeling that minimizes the graph6 bit string (pairs (0,1),(0,2),(1,2),(0,3),...)
/// over all n! vertex orders. Positions are filled left to right; after position p is
/// fixed the next column of p bits is known, so only partial orders whose prefix equals
/// the best prefix survive a level. Partial orders with the same unplaced set and the
/// same adjacency of every unplaced vertex to the placed positions have identical
/// futures and are merged.
inline std::vector<int> canonical_labeling(const Graph& g) {
  const int n = g.order();
  struct Node {
    std::vector<int> order;
    std::uint64_t placed = 0;
    std::vector<std::uint64_t> col;  // bit (63 - i) set iff adjacent to position i
  };
  std::vector<Node> frontier(1);
  frontier[0].col.assign(static_cast<std::size_t>(n), 0);

  for (int p = 0; p < n; ++p) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const Node& node : frontier)
      for (int v = 0; v < n; ++v)
        if (!((node.placed >> v) & 1u)) best = std::min(best, node.col[static_cast<std::size_t>(v)]);

    std::vector<Node> next;
    std::set<std::vector<std::uint64_t>> seen;
    for (const Node& node : frontier) {
      for (int v = 0; v < n; ++v) {
        if (((node.placed >> v) & 1u) || node.col[static_cast<std::size_t>(v)] != best) continue;
        Node child = node;
        child.order.push_back(v);
        child.placed |= std::uint64_t{1} << v;
        const std::uint64_t mark = std::uint64_t{1} << (63 - p);
        for (std::uint64_t b = g.row(v); b != 0; b &= b - 1)
          child.col[static_cast<std::size_t>(std::countr_zero(b))] |= mark;
        std::vector<std::uint64_t> key;
        key.reserve(static_cast<std::size_t>(n) + 1);
        key.push_back(child.placed);
        for (int w = 0; w < n; ++w)
          if (!((child.placed >> w) & 1u)) key.push_back(child.col[static_cast<std::size_t>(w)]);
        if (seen.insert(std::move(key)).second) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return n == 0 ? std::vector<int>{} : frontier.front().order;
}

inline Graph canonical_form(const Graph& g) { return permute(g, canonical_labeling(g)); }

/// graph6 of the canonical form; equal keys iff isomorphic.
inline std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

/// Direct backtracking isomorphism test with degree filtering; no size limit beyond
/// what the search tolerates.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // map a's vertices in order of decreasing degree
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return da[static_cast<std::size_t>(x)] > da[static_cast<std::size_t>(y)];
  });
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int x = order[static_cast<std::size_t>(depth)];
    for (int y = 0; y < n; ++y) {
      if (((used >> y) & 1u) || db[static_cast<std::size_t>(y)] != da[static_cast<std::size_t>(x)]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int px = order[static_cast<std::size_t>(d)];
        ok = a.adjacent(x, px) == b.adjacent(y, image[static_cast<std::size_t>(px)]);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(x)] = y;
      used |= std::uint64_t{1} << y;
      if (self(self, depth + 1)) return true;
      used &= ~(std::uint64_t{1} << y);
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace spantree
