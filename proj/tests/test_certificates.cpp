#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spantree/certificates.hpp"
#include "spantree/enumerate.hpp"

using namespace spantree;

namespace {

SpanningTree as_tree(const Graph& g) { return {g.order(), g.edges()}; }

Graph k5_minus_edge() {
  Graph g = complete(5);
  g.remove_edge(3, 4);
  return g;
}

Graph spider() {
  // centre 0, legs 0-1-2, 0-3-4, 0-5-6
  return Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

}  // namespace

TEST(TreeStats, Examples) {
  auto s = tree_stats(as_tree(path(5)));
  EXPECT_EQ(s.max_degree, 2);
  EXPECT_EQ(s.leaf_degree, 1);

  s = tree_stats(as_tree(star(4)));
  EXPECT_EQ(s.max_degree, 4);
  EXPECT_EQ(s.leaf_degree, 4);

  s = tree_stats(as_tree(spider()));
  EXPECT_EQ(s.max_degree, 3);
  EXPECT_EQ(s.leaf_degree, 1);

  // K_2: each endpoint is the other's leaf neighbour
  EXPECT_EQ(tree_stats(as_tree(complete(2))).leaf_degree, 1);
}

TEST(TreeStats, SpanningTreeValidation) {
  EXPECT_TRUE(is_spanning_tree_of(as_tree(path(4)), complete(4)));
  EXPECT_FALSE(is_spanning_tree_of(as_tree(path(4)), star(3)));
  EXPECT_FALSE(is_spanning_tree_of(SpanningTree{4, {{0, 1}, {1, 2}, {0, 2}}}, complete(4)));
  EXPECT_FALSE(is_spanning_tree_of(SpanningTree{3, {{0, 1}, {0, 1}}}, complete(3)));
}

TEST(Violators, Win) {
  const auto s = find_win_violator(star(4), 3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, VertexSet::of({0}));
  EXPECT_EQ(describe_cut(star(4), *s).components, 4);

  EXPECT_FALSE(find_win_violator(cycle(6), 3).has_value());
  EXPECT_FALSE(find_win_violator(complete(4), 3).has_value());
  // disconnected: S = {} already violates
  EXPECT_EQ(find_win_violator(empty_graph(4), 3), VertexSet());
  EXPECT_THROW(find_win_violator(complete(3), 2), GraphError);
}

TEST(Violators, Kaneko) {
  const auto s = find_kaneko_violator(star(3), 1);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, VertexSet::of({0}));
  EXPECT_EQ(describe_cut(star(3), *s).isolated, 3);

  EXPECT_FALSE(find_kaneko_violator(path(4), 1).has_value());

  const Graph ext = join(complete(1), disjoint_union(complete(3), empty_graph(2)));
  EXPECT_EQ(find_kaneko_violator(ext, 1), VertexSet::of({0}));
  EXPECT_THROW(find_kaneko_violator(complete(3), 0), GraphError);
}

TEST(TreeSearch, KTree) {
  const auto p = find_k_tree(path(5), 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(is_spanning_tree_of(*p, path(5)));

  EXPECT_FALSE(find_k_tree(star(4), 3).has_value());

  const auto t = find_k_tree(k5_minus_edge(), 3);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(is_spanning_tree_of(*t, k5_minus_edge()));
  EXPECT_LE(tree_stats(*t).max_degree, 3);

  const auto ham = find_k_tree(k5_minus_edge(), 2);
  ASSERT_TRUE(ham.has_value());
  EXPECT_LE(tree_stats(*ham).max_degree, 2);

  EXPECT_FALSE(find_k_tree(empty_graph(3), 3).has_value());
  EXPECT_EQ(find_k_tree(complete(1), 2)->edges.size(), 0u);
}

TEST(TreeSearch, LeafTree) {
  const auto k4 = find_leaf_tree(complete(4), 1);
  ASSERT_TRUE(k4.has_value());
  EXPECT_TRUE(is_spanning_tree_of(*k4, complete(4)));
  EXPECT_EQ(tree_stats(*k4).leaf_degree, 1);

  EXPECT_FALSE(find_leaf_tree(star(3), 1).has_value());

  const auto c6 = find_leaf_tree(cycle(6), 1);
  ASSERT_TRUE(c6.has_value());
  EXPECT_TRUE(is_spanning_tree_of(*c6, cycle(6)));
  EXPECT_LE(tree_stats(*c6).leaf_degree, 1);

  EXPECT_TRUE(find_leaf_tree(star(3), 3).has_value());
  EXPECT_FALSE(find_leaf_tree(empty_graph(2), 1).has_value());
}

TEST(TreeSearch, AgreesWithSpanningTreeCensus) {
  for (int n = 1; n <= 6; ++n) {
    MaskStream stream(n, true);
    while (auto g = stream.next()) {
      const auto census = oracle::all_spanning_trees(*g);
      ASSERT_TRUE(census.any);
      for (int k = 1; k <= 4; ++k) {
        const auto kt = find_k_tree(*g, k);
        ASSERT_EQ(kt.has_value(), census.min_max_degree <= k) << to_graph6(*g) << " k=" << k;
        if (kt) {
          ASSERT_TRUE(is_spanning_tree_of(*kt, *g));
          ASSERT_LE(tree_stats(*kt).max_degree, k);
        }
        const auto lt = find_leaf_tree(*g, k);
        ASSERT_EQ(lt.has_value(), census.min_leaf_degree <= k) << to_graph6(*g) << " k=" << k;
        if (lt) {
          ASSERT_TRUE(is_spanning_tree_of(*lt, *g));
          ASSERT_LE(tree_stats(*lt).leaf_degree, k);
        }
      }
    }
  }
}

TEST(Certify, KanekoEquivalenceAndWinSufficiencySmall) {
  for (int n = 2; n <= 6; ++n) {
    MaskStream stream(n, true);
    while (auto g = stream.next()) {
      for (int k = 1; k <= 2; ++k) {
        if (*g == complete(3) && k == 1) {
          // P_3 is the only tree shape and its leaf degree is 2; no violator exists either
          ASSERT_EQ(certify_kaneko(*g, k).kind, CertificateKind::kExhausted);
          continue;
        }
        const auto c = certify_kaneko(*g, k);
        ASSERT_NE(c.kind, CertificateKind::kExhausted) << to_graph6(*g);
        ASSERT_EQ(find_kaneko_violator(*g, k).has_value(), !find_leaf_tree(*g, k).has_value());
      }
      for (int k = 3; k <= 4; ++k) {
        const auto c = certify_win(*g, k);
        if (c.kind == CertificateKind::kWinViolator) {
          const auto& cut = std::get<ViolatingSet>(c.payload);
          ASSERT_GT(cut.components, (k - 2) * cut.set.size() + 2);
        } else {
          ASSERT_EQ(c.kind, CertificateKind::kTreeFound) << to_graph6(*g) << " k=" << k;
        }
      }
    }
  }
}

TEST(Certify, MonotoneInK) {
  for (int n = 2; n <= 6; ++n) {
    MaskStream stream(n, true);
    while (auto g = stream.next()) {
      bool had_k = false, had_leaf = false;
      for (int k = 1; k <= n; ++k) {
        const bool kt = find_k_tree(*g, k).has_value();
        const bool lt = find_leaf_tree(*g, k).has_value();
        ASSERT_TRUE(!had_k || kt);
        ASSERT_TRUE(!had_leaf || lt);
        // a tree with max degree <= k has leaf degree <= k
        ASSERT_TRUE(!kt || lt);
        had_k = kt;
        had_leaf = lt;
      }
      ASSERT_TRUE(had_k);
    }
  }
}

TEST(Certify, Payloads) {
  const auto w = certify_win(star(4), 3);
  EXPECT_EQ(w.kind, CertificateKind::kWinViolator);
  EXPECT_EQ(std::get<ViolatingSet>(w.payload).set, VertexSet::of({0}));

  const auto t = certify_win(cycle(5), 3);
  EXPECT_EQ(t.kind, CertificateKind::kTreeFound);
  EXPECT_TRUE(is_spanning_tree_of(std::get<SpanningTree>(t.payload), cycle(5)));

  const auto kn = certify_kaneko(star(3), 1);
  EXPECT_EQ(kn.kind, CertificateKind::kKanekoViolator);
  EXPECT_EQ(std::get<ViolatingSet>(kn.payload).isolated, 3);
  EXPECT_STREQ(to_string(kn.kind), "kaneko_violator");
}
