#pragma once

#include <cmath>
#include <string>

#include "spantree/graph.hpp"
#include "spantree/spectra.hpp"

namespace spantree {

// Regular-graph obstruction H_{r,k}. With q = ceil(r / (k - 2)):
//   q >= 3 even:        K_{r-q+3} v co((q-2)/2 K_2)
//   q >= 3 odd:         K_{r-q+2} v co((q-1)/2 K_2)
//   q == 2, r odd:      (K_1 u K_2) v co((r-1)/2 K_2)
// q == 2 with r even has no obstruction: such graphs always carry a k-tree.

enum class RegularCase { kEvenQ, kOddQ, kQ2OddR };

inline const char* to_string(RegularCase c) {
  switch (c) {
    case RegularCase::kEvenQ: return "even_q_ge3";
    case RegularCase::kOddQ: return "odd_q_ge3";
    case RegularCase::kQ2OddR: return "q2_odd_r";
  }
  return "?";
}

/// Thrown for (r, k) with ceil(r/(k-2)) == 2 and r even.
class NoObstructionError : public GraphError {
 public:
  using GraphError::GraphError;
};

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct RegularCaseParams {
  int r = 0;
  int k = 0;  // 0 when built directly from r via q2_odd_r()
  int q = 0;
  RegularCase tag = RegularCase::kEvenQ;

  /// Validates r >= 3 and 3 <= k < r.
  static RegularCaseParams make(int r, int k) {
    if (r < 3) throw GraphError("regularity r must be at least 3");
    if (k < 3 || k >= r)
      throw GraphError("tree bound k must satisfy 3 <= k < r (got r=" + std::to_string(r) +
                       ", k=" + std::to_string(k) + ")");
    const int q = ceil_div(r, k - 2);
    if (q == 2 && r % 2 == 0)
      throw NoObstructionError("ceil(r/(k-2)) = 2 with r even: every connected r-regular graph "
                               "has a k-tree, no extremal graph exists");
    RegularCase tag = q == 2 ? RegularCase::kQ2OddR
                             : (q % 2 == 0 ? RegularCase::kEvenQ : RegularCase::kOddQ);
    return {r, k, q, tag};
  }

  /// The q == 2 branch for any odd r >= 3, independent of a particular k.
  static RegularCaseParams q2_odd_r(int r) {
    if (r < 3 || r % 2 == 0) throw GraphError("q = 2 branch needs odd r >= 3");
    return {r, 0, 2, RegularCase::kQ2OddR};
  }
};

/// co(m K_2): the complement of a perfect matching on 2m vertices.
inline Graph cocktail_party(int m) { return complement(copies(m, complete(2))); }

inline Graph build_H(const RegularCaseParams& p) {
  switch (p.tag) {
    case RegularCase::kEvenQ:
      return join(complete(p.r - p.q + 3), cocktail_party((p.q - 2) / 2));
    case RegularCase::kOddQ:
      return join(complete(p.r - p.q + 2), cocktail_party((p.q - 1) / 2));
    case RegularCase::kQ2OddR:
      return join(disjoint_union(complete(1), complete(2)), cocktail_party((p.r - 1) / 2));
  }
  throw GraphError("unknown case");
}

/// theta(r): largest root of x^3 + (2-r)x^2 - 2r x + r - 1.
inline double theta(int r) {
  const double rd = r;
  return largest_real_root({1.0, 2.0 - rd, -2.0 * rd, rd - 1.0}, rd + 2.0);
}

inline double rho_extremal(const RegularCaseParams& p) {
  const double r = p.r;
  const double q = p.q;
  switch (p.tag) {
    case RegularCase::kEvenQ: return r / 2 + std::sqrt(r * r + 4 * r - 4 * q + 12) / 2 - 1;
    case RegularCase::kOddQ: return r / 2 + std::sqrt(r * r + 4 * r - 4 * q + 8) / 2 - 1;
    case RegularCase::kQ2OddR: return theta(p.r);
  }
  throw GraphError("unknown case");
}

/// Equitable quotient of A(H_{r,k}) over {clique, co-matching} (or {K_1, K_2, co-matching}).
inline QuotientMatrix quotient_B(const RegularCaseParams& p) {
  QuotientMatrix b;
  b.equitable = true;
  const int r = p.r;
  const int q = p.q;
  switch (p.tag) {
    case RegularCase::kEvenQ:
      b.order = 2;
      b.entries = {double(r - q + 2), double(q - 2), double(r - q + 3), double(q - 4)};
      b.block_sizes = {r - q + 3, q - 2};
      break;
    case RegularCase::kOddQ:
      b.order = 2;
      b.entries = {double(r - q + 1), double(q - 1), double(r - q + 2), double(q - 3)};
      b.block_sizes = {r - q + 2, q - 1};
      break;
    case RegularCase::kQ2OddR:
      b.order = 3;
      b.entries = {0, 0, double(r - 1), 0, 1, double(r - 1), 1, 2, double(r - 3)};
      b.block_sizes = {1, 2, r - 1};
      break;
  }
  return b;
}

/// Vertex partition of build_H(p) matching the blocks of quotient_B(p).
inline Partition regular_case_partition(const RegularCaseParams& p) {
  auto block = [](int from, int to) {
    std::vector<int> b;
    for (int v = from; v < to; ++v) b.push_back(v);
    return b;
  };
  const Graph h = build_H(p);
  const int n = h.order();
  switch (p.tag) {
    case RegularCase::kEvenQ: return Partition(n, {block(0, p.r - p.q + 3), block(p.r - p.q + 3, n)});
    case RegularCase::kOddQ: return Partition(n, {block(0, p.r - p.q + 2), block(p.r - p.q + 2, n)});
    case RegularCase::kQ2OddR: return Partition(n, {block(0, 1), block(1, 3), block(3, n)});
  }
  throw GraphError("unknown case");
}

// Leaf-degree family K_s v (K_{n-(k+2)s} u (k+1)s K_1).

struct LeafFamilyParams {
  int n = 0;
  int k = 0;
  int s = 0;

  static LeafFamilyParams make(int n, int k, int s) {
    if (k < 1) throw GraphError("leaf degree bound k must be at least 1");
    if (s < 1) throw GraphError("cut size s must be at least 1");
    if (n < (k + 2) * s)
      throw GraphError("need n >= (k+2)s (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                       ", s=" + std::to_string(s) + ")");
    return {n, k, s};
  }

  int max_s() const { return n / (k + 2); }
};

/// Vertices [0, s) form the join block, then the clique, then the (k+1)s pendant-like vertices.
inline Graph build_leaf_extremal(const LeafFamilyParams& p) {
  const int clique = p.n - (p.k + 2) * p.s;
  return join(complete(p.s), disjoint_union(complete(clique), empty_graph((p.k + 1) * p.s)));
}

/// f(x) = x^3 + (s-n+ks+2)x^2 + (s-n+ks-ks^2-s^2+1)x + ns^2-3ks^3-ks^2-s^2-2s^3-k^2s^3+kns^2.
inline Polynomial f_poly(const LeafFamilyParams& p) {
  const double n = p.n;
  const double k = p.k;
  const double s = p.s;
  const double s2 = s * s;
  const double s3 = s2 * s;
  return {1.0, s - n + k * s + 2, s - n + k * s - k * s2 - s2 + 1,
          n * s2 - 3 * k * s3 - k * s2 - s2 - 2 * s3 - k * k * s3 + k * n * s2};
}

inline double lambda1_leaf_extremal(const LeafFamilyParams& p) {
  return largest_real_root(f_poly(p), static_cast<double>(p.n));
}

}  // namespace spantree
