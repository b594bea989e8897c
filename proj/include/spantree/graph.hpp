#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spantree {

/// Raised for malformed input and violated preconditions anywhere in the library.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxOrder = 64;

/// Subset of {0, ..., n-1} stored as a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
  }
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on at most 64 vertices, adjacency kept as one bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : rows_(check_order(n), 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
    return twice / 2;
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (std::uint64_t b = rows_[u] >> u >> 1; b != 0; b &= b - 1)
        out.emplace_back(u, u + 1 + std::countr_zero(b));
    return out;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }

  bool operator==(const Graph&) const = default;

 private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > kMaxOrder)
      throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
    return static_cast<std::size_t>(n);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= order())
      throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                       std::to_string(order()));
  }

  std::vector<std::uint64_t> rows_;
};

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// n isolated vertices.
inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// K_{1,leaves}, center is vertex 0.
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

/// g1 on vertices [0, n1), g2 shifted to [n1, n1 + n2).
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  return g;
}

/// count disjoint copies of g.
inline Graph copies(int count, const Graph& g) {
  Graph out;
  for (int i = 0; i < count; ++i) out = disjoint_union(out, g);
  return out;
}

inline Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const int n1 = g1.order();
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < g2.order(); ++v) g.add_edge(u, n1 + v);
  return g;
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

/// Induced subgraph on the survivors of a vertex deletion.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> new_to_old;
  std::vector<int> old_to_new;  // -1 for deleted vertices
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  keep = keep & g.vertices();
  out.new_to_old = keep.members();
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i)
    out.old_to_new[static_cast<std::size_t>(out.new_to_old[i])] = static_cast<int>(i);
  out.graph = Graph(keep.size());
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i)
    for (std::size_t j = i + 1; j < out.new_to_old.size(); ++j)
      if (g.adjacent(out.new_to_old[i], out.new_to_old[j]))
        out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

inline InducedSubgraph delete_vertices(const Graph& g, VertexSet s) {
  if (!s.minus(g.vertices()).empty()) throw GraphError("vertex set exceeds graph order");
  return induced_subgraph(g, g.vertices().minus(s));
}

/// Vertices reachable from `start` inside `allowed`.
inline VertexSet reach(const Graph& g, int start, VertexSet allowed) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
    next &= allowed.bits() & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

/// Components of the subgraph induced by `within`, ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = reach(g, rest.front(), within);
    out.push_back(c);
    rest = rest.minus(c);
  }
  return out;
}

inline int component_count_within(const Graph& g, VertexSet within) {
  int count = 0;
  VertexSet rest = within;
  while (!rest.empty()) {
    rest = rest.minus(reach(g, rest.front(), within));
    ++count;
  }
  return count;
}

/// Vertices of `within` with no neighbor in `within`.
inline int isolated_count_within(const Graph& g, VertexSet within) {
  int count = 0;
  for (std::uint64_t b = within.bits(); b != 0; b &= b - 1)
    if ((g.row(std::countr_zero(b)) & within.bits()) == 0) ++count;
  return count;
}

inline std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

inline int isolated_count(const Graph& g) { return isolated_count_within(g, g.vertices()); }

inline bool is_connected(const Graph& g) {
  return g.order() >= 1 && reach(g, 0, g.vertices()) == g.vertices();
}

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = false;
};

inline DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0) throw GraphError("degree statistics undefined for the empty graph");
  DegreeStats s{g.degree(0), g.degree(0), false};
  for (int v = 1; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  s.is_regular = s.min_degree == s.max_degree;
  return s;
}

namespace detail {

// Calls fn(mask) for every size-k subset of {0..n-1} in lexicographic order of the
// sorted member lists; stops early when fn returns true. Returns whether it stopped.
template <typename Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int v : idx) mask |= std::uint64_t{1} << v;
    if (fn(VertexSet(mask))) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

/// Visits subsets by increasing size, lexicographically within each size.
template <typename Fn>
bool for_each_subset(int n, int min_size, int max_size, Fn&& fn) {
  for (int k = min_size; k <= max_size; ++k)
    if (detail::for_each_subset_of_size(n, k, fn)) return true;
  return false;
}

/// Minimum number of vertices whose removal disconnects g or leaves one vertex.
/// Exhaustive over cuts smaller than the minimum degree; 0 for disconnected input.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw GraphError("vertex connectivity undefined for the empty graph");
  if (!is_connected(g)) return 0;
  const int delta = degree_stats(g).min_degree;
  int found = delta;
  for_each_subset(n, 1, delta - 1, [&](VertexSet s) {
    VertexSet rest = g.vertices().minus(s);
    if (component_count_within(g, rest) > 1) {
      found = s.size();
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace spantree
