#include <gtest/gtest.h>

#include <cmath>

#include "spantree/checkers.hpp"
#include "spantree/enumerate.hpp"

using namespace spantree;

namespace {

double real(const VerificationRecord& rec, std::string_view name) {
  const auto* v = rec.find(name);
  if (!v || !std::holds_alternative<double>(*v)) throw std::runtime_error("missing real " + std::string(name));
  return std::get<double>(*v);
}

Graph leaf_extremal(int n, int k, int s) { return build_leaf_extremal(LeafFamilyParams::make(n, k, s)); }

}  // namespace

TEST(Comparisons, StrictAndNonStrict) {
  EXPECT_EQ(strictly_less(1.0, 2.0), Tri::kTrue);
  EXPECT_EQ(strictly_less(2.0, 1.0), Tri::kFalse);
  EXPECT_EQ(strictly_less(1.0, 1.0 + 1e-12), Tri::kBoundary);
  EXPECT_EQ(strictly_greater(1.0 + 1e-12, 1.0), Tri::kBoundary);
  EXPECT_EQ(at_least(1.0, 1.0 + 1e-12), Tri::kTrue);
  EXPECT_EQ(at_least(1.0, 1.1), Tri::kFalse);
  EXPECT_EQ(at_most(1.0, 1.0 - 1e-12), Tri::kTrue);
}

TEST(Comparisons, Verdicts) {
  EXPECT_EQ(verdict_for(Tri::kTrue, true), Verdict::kPass);
  EXPECT_EQ(verdict_for(Tri::kTrue, false), Verdict::kCounterexample);
  EXPECT_EQ(verdict_for(Tri::kFalse, false), Verdict::kVacuous);
  EXPECT_EQ(verdict_for(Tri::kBoundary, false), Verdict::kBoundary);
  EXPECT_EQ(verdict_for(Tri::kBoundary, true), Verdict::kBoundary);
}

TEST(TheoremIds, Parse) {
  EXPECT_EQ(parse_theorem("T5.2"), TheoremId::kT52LeafLaplacian);
  EXPECT_EQ(parse_theorem("T5.2-leaf-laplacian"), TheoremId::kT52LeafLaplacian);
  EXPECT_EQ(parse_theorem("C4.4"), TheoremId::kC44LeafSpectralT1);
  EXPECT_FALSE(parse_theorem("T9.9").has_value());
  for (TheoremId id : kAllTheorems) EXPECT_EQ(parse_theorem(to_string(id)), id);
}

TEST(CheckT36, Examples) {
  const auto k4 = check_T36(complete(4), 3);
  EXPECT_EQ(k4.verdict, Verdict::kVacuous);

  const auto k5 = check_T36(complete(5), 3);
  EXPECT_EQ(k5.r, 4);
  EXPECT_EQ(std::get<long long>(*k5.find("q")), 4);
  EXPECT_NEAR(real(k5, "rho_rk"), 1 + std::sqrt(7.0), 1e-10);
  EXPECT_NEAR(real(k5, "lambda4"), -1.0, 1e-10);
  EXPECT_TRUE(k5.conclusion_holds);
  EXPECT_EQ(k5.verdict, Verdict::kPass);

  const auto k6 = check_T36(complete(6), 3);
  EXPECT_EQ(k6.verdict, Verdict::kPass);

  EXPECT_EQ(check_T36(cycle(6), 3).verdict, Verdict::kVacuous);
  EXPECT_EQ(check_T36(star(4), 3).verdict, Verdict::kVacuous);
  EXPECT_THROW(check_T36(complete(3), 3), GraphError);

  // q = 2 with r even: records "always", still checked against the tree search
  const auto k7 = check_T36(complete(7), 5);
  EXPECT_TRUE(std::holds_alternative<std::monostate>(*k7.find("rho_rk")));
  EXPECT_EQ(k7.verdict, Verdict::kPass);
}

TEST(CheckT43, Examples) {
  const auto kn = check_T43(complete(6), 1, 1);
  EXPECT_NEAR(real(kn, "lambda1"), 5.0, 1e-10);
  EXPECT_EQ(kn.verdict, Verdict::kPass);

  const auto ext = check_T43(leaf_extremal(6, 1, 1), 1, 1);
  EXPECT_NE(ext.verdict, Verdict::kPass);
  EXPECT_NE(ext.verdict, Verdict::kCounterexample);
  // no leaf tree, but the graph is one of the exceptions
  EXPECT_TRUE(ext.conclusion_holds);

  EXPECT_EQ(check_T43(cycle(8), 1, 1).verdict, Verdict::kVacuous);
  EXPECT_THROW(check_T43(cycle(8), 1, 3), GraphError);
  EXPECT_THROW(check_T43(cycle(8), 1, 0), GraphError);

  // at n = 9 the s = 1 graph sets the threshold and attains it
  const auto hi = check_T43(leaf_extremal(9, 1, 1), 1, 1);
  EXPECT_EQ(hi.verdict, Verdict::kBoundary);
}

TEST(CheckC44, Examples) {
  const auto kn = check_C44(complete(14), 1);
  EXPECT_NEAR(real(kn, "lambda1"), 13.0, 1e-9);
  EXPECT_EQ(kn.verdict, Verdict::kPass);

  const auto ext = check_C44(leaf_extremal(14, 1, 1), 1);
  EXPECT_EQ(ext.hypothesis_holds, Tri::kTrue);
  EXPECT_TRUE(ext.conclusion_holds);
  EXPECT_EQ(ext.verdict, Verdict::kPass);

  EXPECT_EQ(check_C44(path(14), 1).verdict, Verdict::kVacuous);
  EXPECT_EQ(check_C44(complete(13), 1).verdict, Verdict::kVacuous);
}

TEST(CheckT52, Examples) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto rec = check_T52(complete(n), k);
      EXPECT_NEAR(real(rec, "mu1"), n, 1e-9);
      EXPECT_NEAR(real(rec, "mu_n_minus_1"), n, 1e-9);
      EXPECT_EQ(rec.verdict, n == 3 && k == 1 ? Verdict::kCounterexample : Verdict::kPass) << n << " " << k;
    }
  const auto star3 = check_T52(star(3), 1);
  EXPECT_NEAR(real(star3, "mu1"), 4.0, 1e-10);
  EXPECT_NEAR(real(star3, "mu_n_minus_1"), 1.0, 1e-10);
  EXPECT_EQ(star3.verdict, Verdict::kVacuous);
  EXPECT_EQ(check_T52(empty_graph(2), 1).verdict, Verdict::kVacuous);
}

TEST(CheckC53, ConnectivityFilterAndNonStrict) {
  EXPECT_EQ(check_C53(complete(5), 1).verdict, Verdict::kPass);
  EXPECT_EQ(check_C53(path(4), 3).verdict, Verdict::kVacuous);  // connectivity 1
  // C_4: mu1 = 4, mu_{n-1} = 2, 4 <= 2*2 holds with equality
  const auto c4 = check_C53(cycle(4), 1);
  EXPECT_EQ(c4.hypothesis_holds, Tri::kTrue);
  EXPECT_EQ(c4.verdict, Verdict::kPass);
}

TEST(CheckT54, Examples) {
  const auto kn = check_T54(complete(5), 1);
  EXPECT_NEAR(real(kn, "lambda1_complement"), 0.0, 1e-10);
  EXPECT_EQ(kn.verdict, Verdict::kPass);

  const auto s = check_T54(star(3), 1);
  EXPECT_NEAR(real(s, "lambda1_complement"), 2.0, 1e-10);
  EXPECT_NEAR(real(s, "threshold"), 1.0, 0);
  EXPECT_EQ(s.verdict, Verdict::kVacuous);

  const auto c5 = check_T54(cycle(5), 1);
  EXPECT_NEAR(real(c5, "lambda1_complement"), 2.0, 1e-10);
  EXPECT_NEAR(real(c5, "threshold"), 3.0, 0);
  EXPECT_EQ(c5.verdict, Verdict::kPass);
}

TEST(CheckL51, Examples) {
  const auto p3 = check_L51(path(3), VertexSet::of({1}), VertexSet::of({0}), VertexSet::of({2}));
  EXPECT_NEAR(real(p3, "mu1"), 3.0, 1e-10);
  EXPECT_NEAR(real(p3, "x_bound"), 1.0, 1e-10);
  EXPECT_NEAR(real(p3, "s_bound"), 1.0, 1e-10);
  EXPECT_EQ(p3.verdict, Verdict::kPass);

  const auto st = check_L51(star(3), VertexSet::of({0}), VertexSet::of({1}), VertexSet::of({2, 3}));
  EXPECT_NEAR(real(st, "x_bound"), 1.5, 1e-10);
  EXPECT_NEAR(real(st, "s_bound"), 2.0 / 3.0, 1e-10);
  EXPECT_EQ(st.verdict, Verdict::kPass);

  EXPECT_THROW(check_L51(path(3), VertexSet::of({1}), VertexSet(), VertexSet::of({0, 2})), GraphError);
  EXPECT_THROW(check_L51(path(3), VertexSet(), VertexSet::of({0}), VertexSet::of({1, 2})), GraphError);
  EXPECT_THROW(check_L51(star(3), VertexSet::of({0}), VertexSet::of({1, 2}), VertexSet::of({3})), GraphError);
}

TEST(CheckL51, AllDecompositions) {
  const auto p3 = check_L51_all(path(3));
  // S = {1} with X = {0} or X = {2}
  EXPECT_EQ(std::get<long long>(*p3.find("decompositions")), 2);
  EXPECT_EQ(p3.verdict, Verdict::kPass);
  EXPECT_EQ(check_L51_all(complete(4)).verdict, Verdict::kVacuous);
  EXPECT_EQ(check_L51_all(empty_graph(3)).verdict, Verdict::kVacuous);
}

TEST(CrossChecks, KanekoIffAndWin) {
  EXPECT_EQ(check_kaneko_iff(star(3), 1).verdict, Verdict::kPass);
  EXPECT_EQ(check_kaneko_iff(complete(4), 1).verdict, Verdict::kPass);
  EXPECT_EQ(check_win_sufficiency(star(4), 3).verdict, Verdict::kVacuous);
  EXPECT_EQ(check_win_sufficiency(cycle(6), 3).verdict, Verdict::kPass);
}

// K_3 with k = 1: the only spanning tree is P_3 (leaf degree 2), yet no vertex set violates
// the isolated-vertex condition. Every check derived from that equivalence flags it.
TEST(Exhaustive, TriangleIsTheSmallException) {
  EXPECT_FALSE(find_leaf_tree(complete(3), 1).has_value());
  EXPECT_FALSE(find_kaneko_violator(complete(3), 1).has_value());
  for (TheoremId id : {TheoremId::kT52LeafLaplacian, TheoremId::kC53LeafLaplacianTConn,
                       TheoremId::kT54LeafComplement, TheoremId::kT43LeafSpectral, TheoremId::kKanekoIff})
    EXPECT_EQ(check(complete(3), id, {1, std::nullopt}).verdict, Verdict::kCounterexample) << to_string(id);
  for (TheoremId id : {TheoremId::kT52LeafLaplacian, TheoremId::kT54LeafComplement, TheoremId::kKanekoIff})
    EXPECT_EQ(check(complete(3), id, {2, std::nullopt}).verdict, Verdict::kPass) << to_string(id);
}

TEST(Exhaustive, NoCounterexamplesUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    MaskStream stream(n, true);
    while (auto g = stream.next()) {
      if (*g == complete(3)) continue;
      for (int k = 1; k <= 2; ++k) {
        for (TheoremId id : {TheoremId::kT52LeafLaplacian, TheoremId::kC53LeafLaplacianTConn,
                             TheoremId::kT54LeafComplement, TheoremId::kKanekoIff})
          ASSERT_NE(check(*g, id, {k, std::nullopt}).verdict, Verdict::kCounterexample)
              << to_string(id) << " " << to_graph6(*g) << " k=" << k;
        for (int t = 1; t <= n / (k + 2); ++t)
          ASSERT_NE(check_T43(*g, k, t).verdict, Verdict::kCounterexample) << to_graph6(*g);
      }
      ASSERT_NE(check_L51_all(*g).verdict, Verdict::kCounterexample) << to_graph6(*g);
      if (n >= 4) {
        for (int k = 3; k <= 4; ++k) ASSERT_NE(check_T36(*g, k).verdict, Verdict::kCounterexample);
      }
    }
  }
}
