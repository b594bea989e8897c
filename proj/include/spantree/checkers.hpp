#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spantree/canonical.hpp"
#include "spantree/certificates.hpp"
#include "spantree/extremal.hpp"
#include "spantree/graph.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/spectra.hpp"

namespace spantree {

enum class TheoremId {
  kT36KTreeLambda4,
  kT43LeafSpectral,
  kC44LeafSpectralT1,
  kT52LeafLaplacian,
  kC53LeafLaplacianTConn,
  kT54LeafComplement,
  kL51PartitionBound,
  kKanekoIff,
  kWinSufficiency,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::kT36KTreeLambda4,       TheoremId::kT43LeafSpectral,
    TheoremId::kC44LeafSpectralT1,     TheoremId::kT52LeafLaplacian,
    TheoremId::kC53LeafLaplacianTConn, TheoremId::kT54LeafComplement,
    TheoremId::kL51PartitionBound,     TheoremId::kKanekoIff,
    TheoremId::kWinSufficiency,
};

inline const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT36KTreeLambda4: return "T3.6-ktree-lambda4";
    case TheoremId::kT43LeafSpectral: return "T4.3-leaf-spectral";
    case TheoremId::kC44LeafSpectralT1: return "C4.4-leaf-spectral-t1";
    case TheoremId::kT52LeafLaplacian: return "T5.2-leaf-laplacian";
    case TheoremId::kC53LeafLaplacianTConn: return "C5.3-leaf-laplacian-tconn";
    case TheoremId::kT54LeafComplement: return "T5.4-leaf-complement";
    case TheoremId::kL51PartitionBound: return "L5.1-partition-bound";
    case TheoremId::kKanekoIff: return "K1.2-kaneko-iff";
    case TheoremId::kWinSufficiency: return "W1.1-win-sufficiency";
  }
  return "?";
}

/// Accepts the full id or its prefix before the first '-' (e.g. "T5.2").
inline std::optional<TheoremId> parse_theorem(std::string_view s) {
  for (TheoremId id : kAllTheorems) {
    std::string_view full = to_string(id);
    if (s == full || s == full.substr(0, full.find('-'))) return id;
  }
  return std::nullopt;
}

enum class Tri { kFalse, kTrue, kBoundary };
enum class Verdict { kPass, kCounterexample, kBoundary, kVacuous };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kCounterexample: return "counterexample";
    case Verdict::kBoundary: return "boundary";
    case Verdict::kVacuous: return "vacuous";
  }
  return "?";
}

/// a < b with margin: true below b - eps, false above b + eps, boundary between.
inline Tri strictly_less(double a, double b, double eps = kStrictEps) {
  if (a < b - eps) return Tri::kTrue;
  if (a > b + eps) return Tri::kFalse;
  return Tri::kBoundary;
}
inline Tri strictly_greater(double a, double b, double eps = kStrictEps) {
  return strictly_less(b, a, eps);
}
/// a >= b; ties within eps count as satisfied.
inline Tri at_least(double a, double b, double eps = kStrictEps) {
  return a >= b - eps ? Tri::kTrue : Tri::kFalse;
}
inline Tri at_most(double a, double b, double eps = kStrictEps) { return at_least(b, a, eps); }

/// Hypothesis value: real, integer, or absent.
using HypothesisScalar = std::variant<std::monostate, double, long long>;

struct HypothesisValue {
  std::string name;
  HypothesisScalar value;
};

struct VerificationRecord {
  std::string graph6;
  TheoremId theorem = TheoremId::kT36KTreeLambda4;
  std::optional<int> k, r, t;
  std::vector<HypothesisValue> hypothesis;
  Tri hypothesis_holds = Tri::kFalse;
  bool conclusion_holds = false;
  Verdict verdict = Verdict::kVacuous;
  /// Distance by which the hypothesis inequality holds; summary statistic only.
  std::optional<double> margin;

  const HypothesisScalar* find(std::string_view name) const {
    for (const auto& h : hypothesis)
      if (h.name == name) return &h.value;
    return nullptr;
  }
};

inline Verdict verdict_for(Tri hypothesis, bool conclusion) {
  switch (hypothesis) {
    case Tri::kFalse: return Verdict::kVacuous;
    case Tri::kBoundary: return Verdict::kBoundary;
    case Tri::kTrue: return conclusion ? Verdict::kPass : Verdict::kCounterexample;
  }
  return Verdict::kVacuous;
}

namespace detail {

inline VerificationRecord start_record(const Graph& g, TheoremId id, std::optional<int> k) {
  VerificationRecord rec;
  rec.graph6 = to_graph6(g);
  rec.theorem = id;
  rec.k = k;
  return rec;
}

inline void finish(VerificationRecord& rec, Tri hyp, bool conclusion) {
  rec.hypothesis_holds = hyp;
  rec.conclusion_holds = conclusion;
  rec.verdict = verdict_for(hyp, conclusion);
  if (rec.verdict != Verdict::kPass) rec.margin.reset();
}

inline void put(VerificationRecord& rec, std::string name, HypothesisScalar v) {
  rec.hypothesis.push_back({std::move(name), v});
}

}  // namespace detail

/// lambda_4(G) < rho_{r,k} on a connected r-regular graph implies a k-tree (3 <= k < r).
inline VerificationRecord check_T36(const Graph& g, int k) {
  const int n = g.order();
  if (n < 4) throw GraphError("lambda_4 undefined for graphs with fewer than 4 vertices");
  auto rec = detail::start_record(g, TheoremId::kT36KTreeLambda4, k);
  const bool tree = k >= 1 && find_k_tree(g, k).has_value();
  const auto deg = degree_stats(g);
  if (!is_connected(g) || !deg.is_regular) {
    detail::finish(rec, Tri::kFalse, tree);
    return rec;
  }
  const int r = deg.min_degree;
  rec.r = r;
  detail::put(rec, "r", static_cast<long long>(r));
  if (r < 3 || k < 3 || k >= r) {
    detail::finish(rec, Tri::kFalse, tree);
    return rec;
  }
  const int q = ceil_div(r, k - 2);
  const double lambda4 = adjacency_spectrum(g).nth(4);
  detail::put(rec, "q", static_cast<long long>(q));
  detail::put(rec, "lambda4", lambda4);
  if (q == 2 && r % 2 == 0) {
    // no obstruction exists: every such graph has a k-tree
    detail::put(rec, "rho_rk", std::monostate{});
    detail::finish(rec, Tri::kTrue, tree);
    return rec;
  }
  const double rho = rho_extremal(RegularCaseParams::make(r, k));
  detail::put(rec, "rho_rk", rho);
  rec.margin = rho - lambda4;
  detail::finish(rec, strictly_less(lambda4, rho), tree);
  return rec;
}

namespace detail {

inline VerificationRecord leaf_spectral(const Graph& g, TheoremId id, int k, int t, int s_hi,
                                        bool strict) {
  const int n = g.order();
  auto rec = start_record(g, id, k);
  if (id == TheoremId::kT43LeafSpectral) rec.t = t;
  const Graph low = build_leaf_extremal(LeafFamilyParams::make(n, k, t));
  const Graph high = build_leaf_extremal(LeafFamilyParams::make(n, k, s_hi));
  const double threshold = std::max(lambda1_leaf_extremal(LeafFamilyParams::make(n, k, t)),
                                    lambda1_leaf_extremal(LeafFamilyParams::make(n, k, s_hi)));
  const bool conclusion = find_leaf_tree(g, k).has_value() || are_isomorphic(g, low) ||
                          are_isomorphic(g, high);
  const bool connected = is_connected(g);
  const int kappa = connected ? vertex_connectivity(g) : 0;
  put(rec, "connectivity", static_cast<long long>(kappa));
  if (!connected || kappa < t) {
    put(rec, "threshold", threshold);
    finish(rec, Tri::kFalse, conclusion);
    return rec;
  }
  const double lambda1 = adjacency_spectrum(g).largest();
  put(rec, "lambda1", lambda1);
  put(rec, "threshold", threshold);
  rec.margin = lambda1 - threshold;
  finish(rec, strict ? strictly_greater(lambda1, threshold) : at_least(lambda1, threshold), conclusion);
  return rec;
}

}  // namespace detail

/// t-connected and lambda_1 above both extremal radii (s = t and s = floor(n/(k+2)))
/// implies a leaf-degree-k tree unless G is one of those two graphs.
inline VerificationRecord check_T43(const Graph& g, int k, int t) {
  const int n = g.order();
  if (k < 1 || t < 1 || t > n / (k + 2))
    throw GraphError("T4.3 needs k >= 1 and 1 <= t <= floor(n/(k+2))");
  return detail::leaf_spectral(g, TheoremId::kT43LeafSpectral, k, t, n / (k + 2), true);
}

/// n >= 2k+12 and lambda_1 >= lambda_1(K_1 v (K_{n-k-2} u (k+1)K_1)) implies a
/// leaf-degree-k tree unless G is that graph.
inline VerificationRecord check_C44(const Graph& g, int k) {
  if (k < 1) throw GraphError("C4.4 needs k >= 1");
  const int n = g.order();
  if (n < 2 * k + 12 || !is_connected(g)) {
    auto rec = detail::start_record(g, TheoremId::kC44LeafSpectralT1, k);
    detail::put(rec, "n", static_cast<long long>(n));
    detail::finish(rec, Tri::kFalse, find_leaf_tree(g, k).has_value());
    return rec;
  }
  return detail::leaf_spectral(g, TheoremId::kC44LeafSpectralT1, k, 1, 1, false);
}

/// mu_1 < (k+1) mu_{n-1} implies a leaf-degree-k tree.
inline VerificationRecord check_T52(const Graph& g, int k) {
  if (g.order() < 2) throw GraphError("T5.2 needs at least 2 vertices");
  if (k < 1) throw GraphError("T5.2 needs k >= 1");
  auto rec = detail::start_record(g, TheoremId::kT52LeafLaplacian, k);
  const auto mu = laplacian_spectrum(g);
  const double mu1 = mu.largest();
  const double mu_a = mu.nth(g.order() - 1);
  detail::put(rec, "mu1", mu1);
  detail::put(rec, "mu_n_minus_1", mu_a);
  rec.margin = (k + 1) * mu_a - mu1;
  // mu_{n-1} = 0 (disconnected) would need mu1 < 0
  const Tri hyp = mu_a <= kStrictEps ? Tri::kFalse : strictly_less(mu1, (k + 1) * mu_a);
  detail::finish(rec, hyp, find_leaf_tree(g, k).has_value());
  return rec;
}

/// t-connected (t >= 2) and mu_1 <= (k+1) mu_{n-1} implies a leaf-degree-k tree.
inline VerificationRecord check_C53(const Graph& g, int k, int t = 2) {
  if (g.order() < 2) throw GraphError("C5.3 needs at least 2 vertices");
  if (k < 1 || t < 2) throw GraphError("C5.3 needs k >= 1 and t >= 2");
  auto rec = detail::start_record(g, TheoremId::kC53LeafLaplacianTConn, k);
  rec.t = t;
  const auto mu = laplacian_spectrum(g);
  const double mu1 = mu.largest();
  const double mu_a = mu.nth(g.order() - 1);
  const int kappa = vertex_connectivity(g);
  detail::put(rec, "mu1", mu1);
  detail::put(rec, "mu_n_minus_1", mu_a);
  detail::put(rec, "connectivity", static_cast<long long>(kappa));
  rec.margin = (k + 1) * mu_a - mu1;
  const Tri hyp = kappa < t ? Tri::kFalse : at_most(mu1, (k + 1) * mu_a);
  detail::finish(rec, hyp, find_leaf_tree(g, k).has_value());
  return rec;
}

/// lambda_1(complement) < (k+1) delta - 1 on a connected graph implies a leaf-degree-k tree.
inline VerificationRecord check_T54(const Graph& g, int k) {
  if (g.order() < 2) throw GraphError("T5.4 needs at least 2 vertices");
  if (k < 1) throw GraphError("T5.4 needs k >= 1");
  auto rec = detail::start_record(g, TheoremId::kT54LeafComplement, k);
  const int delta = degree_stats(g).min_degree;
  const double lc = adjacency_spectrum(complement(g)).largest();
  const double threshold = (k + 1) * delta - 1.0;
  detail::put(rec, "lambda1_complement", lc);
  detail::put(rec, "min_degree", static_cast<long long>(delta));
  detail::put(rec, "threshold", threshold);
  rec.margin = threshold - lc;
  const Tri hyp = is_connected(g) ? strictly_less(lc, threshold) : Tri::kFalse;
  detail::finish(rec, hyp, find_leaf_tree(g, k).has_value());
  return rec;
}

inline constexpr double kPartitionTol = 1e-8;

struct PartitionBounds {
  double x_bound = 0;                    // n (mu1 - mu_a) / (2 mu1)
  std::optional<double> s_bound;         // |X| 2 mu_a / (mu1 - mu_a); absent when mu1 == mu_a
  bool first_holds = false;
  bool second_holds = false;
};

inline PartitionBounds partition_bounds(int n, double mu1, double mu_a, int s_size, int x_size) {
  PartitionBounds b;
  b.x_bound = n * (mu1 - mu_a) / (2 * mu1);
  b.first_holds = x_size <= b.x_bound + kPartitionTol;
  if (std::abs(mu1 - mu_a) <= kStrictEps) {
    b.second_holds = true;
  } else {
    b.s_bound = x_size * 2 * mu_a / (mu1 - mu_a);
    b.second_holds = s_size >= *b.s_bound - kPartitionTol;
  }
  return b;
}

/// Both bounds of the cut inequality for one decomposition V = S u X u Y with
/// G - S disconnected, e(X, Y) = 0, 0 < |X| <= |Y|.
inline VerificationRecord check_L51(const Graph& g, VertexSet s, VertexSet x, VertexSet y) {
  const int n = g.order();
  if (g.edge_count() == 0) throw GraphError("L5.1 needs at least one edge");
  if (!(s & x).empty() || !(s & y).empty() || !(x & y).empty())
    throw GraphError("S, X, Y must be disjoint");
  if ((s | x | y) != g.vertices()) throw GraphError("S, X, Y must cover V(G)");
  if (x.empty() || y.empty()) throw GraphError("X and Y must be nonempty");
  if (x.size() > y.size()) throw GraphError("need |X| <= |Y|");
  for (int v : x.members())
    if (!(g.neighbors(v) & y).empty()) throw GraphError("edge between X and Y");

  auto rec = detail::start_record(g, TheoremId::kL51PartitionBound, std::nullopt);
  const auto mu = laplacian_spectrum(g);
  const double mu1 = mu.largest();
  const double mu_a = mu.nth(n - 1);
  const auto b = partition_bounds(n, mu1, mu_a, s.size(), x.size());
  detail::put(rec, "mu1", mu1);
  detail::put(rec, "mu_n_minus_1", mu_a);
  detail::put(rec, "x_bound", b.x_bound);
  detail::put(rec, "s_bound", b.s_bound ? HypothesisScalar{*b.s_bound} : HypothesisScalar{});
  detail::put(rec, "second_inequality_skipped", static_cast<long long>(b.s_bound ? 0 : 1));
  detail::finish(rec, Tri::kTrue, b.first_holds && b.second_holds);
  return rec;
}

/// Every valid (S, X, Y): X a union of components of G - S, |X| <= |Y|.
inline VerificationRecord check_L51_all(const Graph& g) {
  const int n = g.order();
  auto rec = detail::start_record(g, TheoremId::kL51PartitionBound, std::nullopt);
  if (n < 2 || g.edge_count() == 0) {
    detail::finish(rec, Tri::kFalse, true);
    return rec;
  }
  const auto mu = laplacian_spectrum(g);
  const double mu1 = mu.largest();
  const double mu_a = mu.nth(n - 1);
  long long decompositions = 0;
  long long skipped = 0;
  bool all_hold = true;
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t sb = 1; sb < full; ++sb) {
    const VertexSet s(sb);
    const auto comps = components_within(g, g.vertices().minus(s));
    const int c = static_cast<int>(comps.size());
    if (c < 2) continue;
    const int rest = n - s.size();
    for (std::uint64_t pick = 1; pick + 1 < (std::uint64_t{1} << c); ++pick) {
      int xs = 0;
      for (int i = 0; i < c; ++i)
        if ((pick >> i) & 1u) xs += comps[static_cast<std::size_t>(i)].size();
      if (2 * xs > rest) continue;
      ++decompositions;
      const auto b = partition_bounds(n, mu1, mu_a, s.size(), xs);
      if (!b.s_bound) ++skipped;
      all_hold = all_hold && b.first_holds && b.second_holds;
    }
  }
  detail::put(rec, "mu1", mu1);
  detail::put(rec, "mu_n_minus_1", mu_a);
  detail::put(rec, "decompositions", decompositions);
  detail::put(rec, "second_inequality_skipped", skipped);
  detail::finish(rec, decompositions > 0 ? Tri::kTrue : Tri::kFalse, all_hold);
  return rec;
}

/// No Kaneko violator exactly when a leaf-degree-k tree is found (conclusion = agreement).
inline VerificationRecord check_kaneko_iff(const Graph& g, int k) {
  auto rec = detail::start_record(g, TheoremId::kKanekoIff, k);
  if (!is_connected(g)) {
    detail::finish(rec, Tri::kFalse, true);
    return rec;
  }
  const auto violator = find_kaneko_violator(g, k);
  const bool tree = find_leaf_tree(g, k).has_value();
  detail::put(rec, "violator_size",
              violator ? HypothesisScalar{static_cast<long long>(violator->size())} : HypothesisScalar{});
  detail::put(rec, "tree_found", static_cast<long long>(tree));
  detail::finish(rec, Tri::kTrue, violator.has_value() != tree);
  return rec;
}

/// No Win violator implies a k-tree (one direction only).
inline VerificationRecord check_win_sufficiency(const Graph& g, int k) {
  auto rec = detail::start_record(g, TheoremId::kWinSufficiency, k);
  const bool tree = find_k_tree(g, k).has_value();
  if (!is_connected(g)) {
    detail::finish(rec, Tri::kFalse, tree);
    return rec;
  }
  const auto violator = find_win_violator(g, k);
  detail::put(rec, "violator_size",
              violator ? HypothesisScalar{static_cast<long long>(violator->size())} : HypothesisScalar{});
  detail::finish(rec, violator ? Tri::kFalse : Tri::kTrue, tree);
  return rec;
}

struct CheckParams {
  int k = 1;
  std::optional<int> t;
};

inline VerificationRecord check(const Graph& g, TheoremId id, const CheckParams& p) {
  switch (id) {
    case TheoremId::kT36KTreeLambda4: return check_T36(g, p.k);
    case TheoremId::kT43LeafSpectral: return check_T43(g, p.k, p.t.value_or(1));
    case TheoremId::kC44LeafSpectralT1: return check_C44(g, p.k);
    case TheoremId::kT52LeafLaplacian: return check_T52(g, p.k);
    case TheoremId::kC53LeafLaplacianTConn: return check_C53(g, p.k, p.t.value_or(2));
    case TheoremId::kT54LeafComplement: return check_T54(g, p.k);
    case TheoremId::kL51PartitionBound: return check_L51_all(g);
    case TheoremId::kKanekoIff: return check_kaneko_iff(g, p.k);
    case TheoremId::kWinSufficiency: return check_win_sufficiency(g, p.k);
  }
  throw GraphError("unknown theorem id");
}

}  // namespace spantree
