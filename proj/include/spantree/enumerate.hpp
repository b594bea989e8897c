#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spantree/canonical.hpp"
#include "spantree/graph.hpp"
#include "spantree/graph_io.hpp"

namespace spantree {

enum class FamilyKind { kAll, kConnected, kRegular, kFile };

inline const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::kAll: return "all";
    case FamilyKind::kConnected: return "connected";
    case FamilyKind::kRegular: return "regular";
    case FamilyKind::kFile: return "file";
  }
  return "?";
}

inline constexpr int kMaxEnumerationOrder = 8;
inline constexpr int kMaxRegularOrder = 12;

struct FamilySpec {
  FamilyKind kind = FamilyKind::kAll;
  int n = 0;
  int r = 0;
  bool dedup_iso = false;
  std::string path;

  void validate() const {
    switch (kind) {
      case FamilyKind::kAll:
      case FamilyKind::kConnected:
        if (n < 0 || n > kMaxEnumerationOrder)
          throw GraphError("enumeration order capped at " + std::to_string(kMaxEnumerationOrder));
        break;
      case FamilyKind::kRegular:
        if (n < 0 || n > kMaxRegularOrder)
          throw GraphError("regular enumeration order capped at " + std::to_string(kMaxRegularOrder));
        if (r < 0) throw GraphError("regularity must be nonnegative");
        break;
      case FamilyKind::kFile:
        if (path.empty()) throw GraphError("file family needs a path");
        break;
    }
  }

  std::string label() const {
    if (kind == FamilyKind::kFile) return "file:" + path;
    std::string s = std::string(to_string(kind)) + "-n" + std::to_string(n);
    if (kind == FamilyKind::kRegular) s += "-r" + std::to_string(r);
    if (dedup_iso) s += "-iso";
    return s;
  }
};

/// Pull-based, single-consumer graph source.
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual std::optional<Graph> next() = 0;
};

/// Pairs in graph6 order; pair e sits at mask bit (m - 1 - e) so (0,1) is most significant.
inline std::vector<std::pair<int, int>> graph6_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

inline std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) throw GraphError("order outside enumeration cap");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  const int m = n * (n - 1) / 2;
  int e = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++e)
      if ((mask >> (m - 1 - e)) & 1u) g.add_edge(i, j);
  return g;
}

inline std::uint64_t mask_of(const Graph& g) {
  const int n = g.order();
  const int m = n * (n - 1) / 2;
  if (m > 64) throw GraphError("adjacency mask needs more than 64 bits");
  std::uint64_t mask = 0;
  int e = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++e)
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << (m - 1 - e);
  return mask;
}

/// Labeled graphs with masks in [begin, end), ascending. cursor() is the next mask to
/// examine, so a stream can be resumed from any point.
class MaskStream : public GraphStream {
 public:
  MaskStream(int n, bool connected_only, std::uint64_t begin, std::uint64_t end)
      : n_(n), connected_only_(connected_only), cursor_(begin), end_(end) {}
  MaskStream(int n, bool connected_only)
      : MaskStream(n, connected_only, 0, labeled_graph_count(n)) {}

  std::optional<Graph> next() override {
    while (cursor_ < end_) {
      Graph g = graph_from_mask(n_, cursor_++);
      if (!connected_only_ || is_connected(g)) return g;
    }
    return std::nullopt;
  }

  std::uint64_t cursor() const { return cursor_; }

 private:
  int n_;
  bool connected_only_;
  std::uint64_t cursor_;
  std::uint64_t end_;
};

/// Connected labeled r-regular graphs in ascending mask order, by an iterative
/// depth-first walk over the upper triangle with degree and remaining-capacity bounds.
class RegularStream : public GraphStream {
 public:
  RegularStream(int n, int r) : n_(n), r_(r), pairs_(graph6_pairs(n)) {
    m_ = static_cast<int>(pairs_.size());
    val_.assign(static_cast<std::size_t>(m_), 0);
    deg_.assign(static_cast<std::size_t>(n), 0);
    rem_.assign(static_cast<std::size_t>(n), n - 1);
    done_ = r < 0 || r >= std::max(n, 1) || (n * r) % 2 != 0 || n == 0;
  }

  std::optional<Graph> next() override {
    if (done_) return std::nullopt;
    if (at_leaf_ && !backtrack()) return finish();
    at_leaf_ = false;
    while (true) {
      if (depth_ == m_) {
        at_leaf_ = true;
        Graph g = current();
        if (is_connected(g)) return g;
        if (!backtrack()) return finish();
        at_leaf_ = false;
        continue;
      }
      if (assign(depth_, 0) || assign(depth_, 1)) {
        ++depth_;
        continue;
      }
      if (!backtrack()) return finish();
    }
  }

 private:
  std::optional<Graph> finish() {
    done_ = true;
    return std::nullopt;
  }

  bool assign(int e, int x) {
    const auto [u, v] = pairs_[static_cast<std::size_t>(e)];
    const auto uu = static_cast<std::size_t>(u);
    const auto vv = static_cast<std::size_t>(v);
    if (x == 1 && (deg_[uu] >= r_ || deg_[vv] >= r_)) return false;
    --rem_[uu];
    --rem_[vv];
    deg_[uu] += x;
    deg_[vv] += x;
    if (deg_[uu] + rem_[uu] < r_ || deg_[vv] + rem_[vv] < r_) {
      undo(e, x);
      return false;
    }
    val_[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(x);
    return true;
  }

  void undo(int e, int x) {
    const auto [u, v] = pairs_[static_cast<std::size_t>(e)];
    ++rem_[static_cast<std::size_t>(u)];
    ++rem_[static_cast<std::size_t>(v)];
    deg_[static_cast<std::size_t>(u)] -= x;
    deg_[static_cast<std::size_t>(v)] -= x;
  }

  // Rewinds to the deepest pair still at 0 that can flip to 1.
  bool backtrack() {
    while (depth_ > 0) {
      --depth_;
      const int x = val_[static_cast<std::size_t>(depth_)];
      undo(depth_, x);
      if (x == 0 && assign(depth_, 1)) {
        ++depth_;
        return true;
      }
    }
    return false;
  }

  Graph current() const {
    Graph g(n_);
    for (int e = 0; e < m_; ++e)
      if (val_[static_cast<std::size_t>(e)]) g.add_edge(pairs_[static_cast<std::size_t>(e)].first, pairs_[static_cast<std::size_t>(e)].second);
    return g;
  }

  int n_;
  int r_;
  std::vector<std::pair<int, int>> pairs_;
  int m_ = 0;
  std::vector<std::int8_t> val_;
  std::vector<int> deg_, rem_;
  int depth_ = 0;
  bool at_leaf_ = false;
  bool done_ = false;
};

/// Serves a precomputed list in order.
class VectorStream : public GraphStream {
 public:
  explicit VectorStream(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  std::optional<Graph> next() override {
    if (pos_ >= graphs_.size()) return std::nullopt;
    return graphs_[pos_++];
  }

 private:
  std::vector<Graph> graphs_;
  std::size_t pos_ = 0;
};

/// graph6 file, one graph per line; blank lines skipped; errors carry the line number.
class Graph6FileStream : public GraphStream {
 public:
  explicit Graph6FileStream(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw GraphError("cannot open graph file '" + path + "'");
  }

  std::optional<Graph> next() override {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        return parse_graph6(line);
      } catch (const GraphError& e) {
        throw GraphError(path_ + ":" + std::to_string(line_no_) + ": " + e.what());
      }
    }
    if (in_.bad()) throw GraphError("read error on '" + path_ + "'");
    return std::nullopt;
  }

 private:
  std::string path_;
  std::ifstream in_;
  int line_no_ = 0;
};

namespace detail {

// One canonical representative per isomorphism class on n vertices, built by attaching
// a new vertex in every possible way to each class on n - 1 vertices.
inline std::set<std::string> iso_classes(int n) {
  std::set<std::string> level = {to_graph6(Graph(0))};
  for (int order = 1; order <= n; ++order) {
    std::set<std::string> nextlevel;
    for (const auto& key : level) {
      const Graph base = parse_graph6(key);
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (order - 1)); ++nb) {
        Graph g(order);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < order - 1; ++u)
          if ((nb >> u) & 1u) g.add_edge(u, order - 1);
        nextlevel.insert(canonical_key(g));
      }
    }
    level = std::move(nextlevel);
  }
  return level;
}

// Connected r-regular graphs labeled in breadth-first order from vertex 0: when vertex i
// is processed its undiscovered neighbours take the next free labels. Every connected
// graph has such a labeling, so canonicalizing these covers every class.
inline void bfs_regular(int n, int r, int i, int next, std::vector<int>& deg, Graph& g,
                        std::set<std::string>& out) {
  if (i == n) {
    out.insert(canonical_key(g));
    return;
  }
  if (i >= next) return;  // vertex i was never reached
  const int need = r - deg[static_cast<std::size_t>(i)];
  if (need < 0) return;
  std::vector<int> pool;
  for (int j = i + 1; j < next; ++j)
    if (deg[static_cast<std::size_t>(j)] < r) pool.push_back(j);
  const int pool_size = static_cast<int>(pool.size());
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pool_size); ++pick) {
    const int old = std::popcount(pick);
    const int fresh = need - old;
    if (fresh < 0 || next + fresh > n) continue;
    std::vector<int> chosen;
    for (int b = 0; b < pool_size; ++b)
      if ((pick >> b) & 1u) chosen.push_back(pool[static_cast<std::size_t>(b)]);
    for (int f = 0; f < fresh; ++f) chosen.push_back(next + f);
    for (int j : chosen) {
      g.add_edge(i, j);
      ++deg[static_cast<std::size_t>(j)];
    }
    deg[static_cast<std::size_t>(i)] += need;
    bfs_regular(n, r, i + 1, next + fresh, deg, g, out);
    deg[static_cast<std::size_t>(i)] -= need;
    for (int j : chosen) {
      g.remove_edge(i, j);
      --deg[static_cast<std::size_t>(j)];
    }
  }
}

inline std::set<std::string> regular_iso_classes(int n, int r) {
  std::set<std::string> out;
  if (n == 0 || r < 0 || r >= n || (n * r) % 2 != 0) return out;
  Graph g(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  bfs_regular(n, r, 0, 1, deg, g, out);
  return out;
}

inline std::vector<Graph> parse_all(const std::set<std::string>& keys, bool connected_only) {
  std::vector<Graph> out;
  for (const auto& k : keys) {
    Graph g = parse_graph6(k);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detail

/// Deterministic stream for a family. Enumeration kinds come in ascending mask order;
/// with dedup_iso, one canonical representative per class in ascending canonical order.
inline std::unique_ptr<GraphStream> generate(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::kAll:
    case FamilyKind::kConnected: {
      const bool connected = spec.kind == FamilyKind::kConnected;
      if (spec.dedup_iso)
        return std::make_unique<VectorStream>(detail::parse_all(detail::iso_classes(spec.n), connected));
      return std::make_unique<MaskStream>(spec.n, connected);
    }
    case FamilyKind::kRegular:
      if (spec.dedup_iso)
        return std::make_unique<VectorStream>(
            detail::parse_all(detail::regular_iso_classes(spec.n, spec.r), false));
      return std::make_unique<RegularStream>(spec.n, spec.r);
    case FamilyKind::kFile:
      return std::make_unique<Graph6FileStream>(spec.path);
  }
  throw GraphError("unknown family kind");
}

inline std::uint64_t count(const FamilySpec& spec) {
  if (!spec.dedup_iso && spec.kind == FamilyKind::kAll) {
    spec.validate();
    return labeled_graph_count(spec.n);
  }
  auto stream = generate(spec);
  std::uint64_t c = 0;
  while (stream->next()) ++c;
  return c;
}

}  // namespace spantree
