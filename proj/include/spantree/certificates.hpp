#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

struct SpanningTree {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
};

struct TreeStats {
  int max_degree = 0;
  /// Max over v of the number of degree-1 tree neighbours of v.
  int leaf_degree = 0;
};

inline TreeStats tree_stats(const SpanningTree& t) {
  std::vector<int> deg(static_cast<std::size_t>(t.order), 0);
  for (auto [u, v] : t.edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  std::vector<int> leaves(static_cast<std::size_t>(t.order), 0);
  for (auto [u, v] : t.edges) {
    if (deg[static_cast<std::size_t>(v)] == 1) ++leaves[static_cast<std::size_t>(u)];
    if (deg[static_cast<std::size_t>(u)] == 1) ++leaves[static_cast<std::size_t>(v)];
  }
  TreeStats s;
  for (int v = 0; v < t.order; ++v) {
    s.max_degree = std::max(s.max_degree, deg[static_cast<std::size_t>(v)]);
    s.leaf_degree = std::max(s.leaf_degree, leaves[static_cast<std::size_t>(v)]);
  }
  return s;
}

/// n-1 distinct host edges forming a connected acyclic spanning subgraph.
inline bool is_spanning_tree_of(const SpanningTree& t, const Graph& host) {
  const int n = host.order();
  if (t.order != n || n == 0) return false;
  if (static_cast<int>(t.edges.size()) != n - 1) return false;
  Graph tree(n);
  for (auto [u, v] : t.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    if (!host.adjacent(u, v) || tree.adjacent(u, v)) return false;
    tree.add_edge(u, v);
  }
  return is_connected(tree);
}

// Win: c(G-S) <= (k-2)|S| + 2 for all S implies a spanning tree of max degree <= k.
// Kaneko: a spanning tree of leaf degree <= k exists iff i(G-S) < (k+1)|S| for all S != {}.

/// First S in (size, lexicographic) order with c(G-S) > (k-2)|S| + 2. S = {} is tried first.
inline std::optional<VertexSet> find_win_violator(const Graph& g, int k) {
  if (k < 3) throw GraphError("Win condition needs k >= 3");
  const int n = g.order();
  // c(G-S) <= n - |S| bounds the sizes worth trying
  const int max_size = n >= 3 ? (n - 3) / (k - 1) : 0;
  std::optional<VertexSet> hit;
  for_each_subset(n, 0, std::min(max_size, n), [&](VertexSet s) {
    if (component_count_within(g, g.vertices().minus(s)) > (k - 2) * s.size() + 2) {
      hit = s;
      return true;
    }
    return false;
  });
  return hit;
}

/// First nonempty S in (size, lexicographic) order with i(G-S) >= (k+1)|S|.
inline std::optional<VertexSet> find_kaneko_violator(const Graph& g, int k) {
  if (k < 1) throw GraphError("Kaneko condition needs k >= 1");
  const int n = g.order();
  const int max_size = n / (k + 2);
  std::optional<VertexSet> hit;
  for_each_subset(n, 1, max_size, [&](VertexSet s) {
    if (isolated_count_within(g, g.vertices().minus(s)) >= (k + 1) * s.size()) {
      hit = s;
      return true;
    }
    return false;
  });
  return hit;
}

namespace detail {

enum class TreeBound { kMaxDegree, kLeafDegree };

// Include/exclude backtracking over the lexicographic edge list. A rollback union-find
// keeps the chosen forest; every exclusion is followed by a reachability check on the
// forest plus the undecided edges.
class TreeSearch {
 public:
  TreeSearch(const Graph& g, TreeBound bound, int k)
      : g_(g), bound_(bound), k_(k), n_(g.order()), edges_(g.edges()) {
    const auto un = static_cast<std::size_t>(n_);
    parent_.resize(un);
    size_.assign(un, 1);
    deg_.assign(un, 0);
    nbr_sum_.assign(un, 0);
    final_leaves_.assign(un, 0);
    last_edge_.assign(un, -1);
    for (int v = 0; v < n_; ++v) parent_[static_cast<std::size_t>(v)] = v;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      last_edge_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].first)] = e;
      last_edge_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].second)] = e;
    }
  }

  std::optional<SpanningTree> run() {
    if (n_ == 0 || !is_connected(g_)) return std::nullopt;
    if (n_ == 1) return SpanningTree{1, {}};
    if (!dfs(0)) return std::nullopt;
    return SpanningTree{n_, chosen_};
  }

 private:
  int find(int v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
    return v;
  }

  bool feasible(int from) const {
    // forest components merged through edges [from, m)
    std::vector<int> p(parent_.size());
    for (int v = 0; v < n_; ++v) p[static_cast<std::size_t>(v)] = find(v);
    auto root = [&](int v) {
      while (p[static_cast<std::size_t>(v)] != v) v = p[static_cast<std::size_t>(v)];
      return v;
    };
    int comps = 0;
    for (int v = 0; v < n_; ++v)
      if (p[static_cast<std::size_t>(v)] == v) ++comps;
    for (std::size_t e = static_cast<std::size_t>(from); e < edges_.size() && comps > 1; ++e) {
      int a = root(edges_[e].first);
      int b = root(edges_[e].second);
      if (a != b) {
        p[static_cast<std::size_t>(a)] = b;
        --comps;
      }
    }
    return comps == 1;
  }

  // Vertices whose last incident edge is e have fixed tree degree after deciding e.
  // Returns false if a finalized leaf pushes its neighbour past k; `touched` records
  // counters to roll back.
  bool settle(int e, std::vector<int>& touched) {
    if (bound_ != TreeBound::kLeafDegree) return true;
    bool ok = true;
    for (int w : {edges_[static_cast<std::size_t>(e)].first, edges_[static_cast<std::size_t>(e)].second}) {
      if (last_edge_[static_cast<std::size_t>(w)] != e || deg_[static_cast<std::size_t>(w)] != 1) continue;
      const int p = nbr_sum_[static_cast<std::size_t>(w)];
      touched.push_back(p);
      if (++final_leaves_[static_cast<std::size_t>(p)] > k_) ok = false;
    }
    return ok;
  }

  void unsettle(const std::vector<int>& touched) {
    for (int p : touched) --final_leaves_[static_cast<std::size_t>(p)];
  }

  bool complete_ok() const {
    if (bound_ == TreeBound::kMaxDegree) return true;
    return tree_stats(SpanningTree{n_, chosen_}).leaf_degree <= k_;
  }

  bool dfs(int e) {
    const int needed = n_ - 1 - static_cast<int>(chosen_.size());
    if (needed == 0) return complete_ok();
    const int m = static_cast<int>(edges_.size());
    if (m - e < needed) return false;

    const auto [u, v] = edges_[static_cast<std::size_t>(e)];
    const auto uu = static_cast<std::size_t>(u);
    const auto vv = static_cast<std::size_t>(v);
    const int ru = find(u);
    const int rv = find(v);
    const bool degree_ok = bound_ != TreeBound::kMaxDegree || (deg_[uu] < k_ && deg_[vv] < k_);
    if (ru != rv && degree_ok) {
      int big = ru;
      int small = rv;
      if (size_[static_cast<std::size_t>(big)] < size_[static_cast<std::size_t>(small)]) std::swap(big, small);
      parent_[static_cast<std::size_t>(small)] = big;
      size_[static_cast<std::size_t>(big)] += size_[static_cast<std::size_t>(small)];
      ++deg_[uu];
      ++deg_[vv];
      nbr_sum_[uu] += v;
      nbr_sum_[vv] += u;
      chosen_.emplace_back(u, v);

      std::vector<int> touched;
      const bool ok = settle(e, touched) && dfs(e + 1);
      if (ok) return true;
      unsettle(touched);

      chosen_.pop_back();
      nbr_sum_[uu] -= v;
      nbr_sum_[vv] -= u;
      --deg_[uu];
      --deg_[vv];
      size_[static_cast<std::size_t>(big)] -= size_[static_cast<std::size_t>(small)];
      parent_[static_cast<std::size_t>(small)] = small;
    }

    if (!feasible(e + 1)) return false;
    std::vector<int> touched;
    const bool ok = settle(e, touched) && dfs(e + 1);
    if (!ok) unsettle(touched);
    return ok;
  }

  const Graph& g_;
  TreeBound bound_;
  int k_;
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> parent_, size_, deg_, nbr_sum_, final_leaves_, last_edge_;
  std::vector<std::pair<int, int>> chosen_;
};

}  // namespace detail

/// Spanning tree with every degree <= k, or nullopt when none exists. Exact.
inline std::optional<SpanningTree> find_k_tree(const Graph& g, int k) {
  if (k < 1) throw GraphError("degree bound k must be positive");
  return detail::TreeSearch(g, detail::TreeBound::kMaxDegree, k).run();
}

/// Spanning tree with leaf degree <= k, or nullopt when none exists. Exact.
inline std::optional<SpanningTree> find_leaf_tree(const Graph& g, int k) {
  if (k < 1) throw GraphError("leaf degree bound k must be positive");
  return detail::TreeSearch(g, detail::TreeBound::kLeafDegree, k).run();
}

enum class CertificateKind { kTreeFound, kWinViolator, kKanekoViolator, kExhausted };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kTreeFound: return "tree_found";
    case CertificateKind::kWinViolator: return "win_violator";
    case CertificateKind::kKanekoViolator: return "kaneko_violator";
    case CertificateKind::kExhausted: return "exhausted";
  }
  return "?";
}

struct ViolatingSet {
  VertexSet set;
  int components = 0;
  int isolated = 0;
};

struct Certificate {
  CertificateKind kind = CertificateKind::kExhausted;
  std::variant<std::monostate, SpanningTree, ViolatingSet> payload;
};

inline ViolatingSet describe_cut(const Graph& g, VertexSet s) {
  const VertexSet rest = g.vertices().minus(s);
  return {s, component_count_within(g, rest), isolated_count_within(g, rest)};
}

/// Win violator if one exists, otherwise a k-tree, otherwise exhausted.
inline Certificate certify_win(const Graph& g, int k) {
  if (auto s = find_win_violator(g, k)) return {CertificateKind::kWinViolator, describe_cut(g, *s)};
  if (auto t = find_k_tree(g, k)) return {CertificateKind::kTreeFound, *t};
  return {CertificateKind::kExhausted, std::monostate{}};
}

/// Kaneko violator if one exists, otherwise a leaf-degree-k tree, otherwise exhausted.
inline Certificate certify_kaneko(const Graph& g, int k) {
  if (auto s = find_kaneko_violator(g, k))
    return {CertificateKind::kKanekoViolator, describe_cut(g, *s)};
  if (auto t = find_leaf_tree(g, k)) return {CertificateKind::kTreeFound, *t};
  return {CertificateKind::kExhausted, std::monostate{}};
}

}  // namespace spantree
