#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

/// Strictness margin for comparisons of computed eigenvalues.
inline constexpr double kStrictEps = 1e-9;

/// Dense symmetric real matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order) : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {}

  /// Row-major entries; throws unless the data is square and symmetric.
  SymMatrix(int order, std::vector<double> entries) : n_(order), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(order) * order)
      throw GraphError("matrix entry count does not match order");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) throw GraphError("matrix is not symmetric");
  }

  int order() const { return n_; }
  double operator()(int i, int j) const { return at(i, j); }
  void set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }
  double trace() const {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  /// Principal submatrix on the given (sorted) indices.
  SymMatrix principal(std::span<const int> keep) const {
    SymMatrix out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        out.a_[out.idx(static_cast<int>(i), static_cast<int>(j))] = at(keep[i], keep[j]);
    return out;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  double at(int i, int j) const { return a_[idx(i, j)]; }

  int n_ = 0;
  std::vector<double> a_;
};

/// Eigenvalues in descending order.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  /// 1-based access matching the lambda_1 >= lambda_2 >= ... convention.
  double nth(int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

inline SymMatrix laplacian_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, -1.0);
  return m;
}

inline constexpr int kJacobiSweepCap = 100;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below 1e-12 * order.
inline Spectrum sym_eigenvalues(const SymMatrix& m) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  auto A = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = m(i, j);

  const double tol = 1e-12 * std::max(n, 1);
  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2 * A(i, j) * A(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= tol) {
    if (++sweep > kJacobiSweepCap) throw GraphError("Jacobi eigensolver did not converge");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
      }
    }
  }

  Spectrum out;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = A(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

inline Spectrum adjacency_spectrum(const Graph& g) {
  if (g.order() == 0) throw GraphError("spectrum undefined for the empty graph");
  return sym_eigenvalues(adjacency_matrix(g));
}

inline Spectrum laplacian_spectrum(const Graph& g) {
  if (g.order() == 0) throw GraphError("spectrum undefined for the empty graph");
  return sym_eigenvalues(laplacian_matrix(g));
}

/// Ordered list of disjoint nonempty blocks covering {0, ..., order-1}.
class Partition {
 public:
  Partition(int order, std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    std::vector<bool> seen(static_cast<std::size_t>(order), false);
    int covered = 0;
    for (const auto& b : blocks_) {
      if (b.empty()) throw GraphError("partition block is empty");
      for (int v : b) {
        if (v < 0 || v >= order) throw GraphError("partition index out of range");
        if (seen[static_cast<std::size_t>(v)]) throw GraphError("partition blocks overlap");
        seen[static_cast<std::size_t>(v)] = true;
        ++covered;
      }
    }
    if (covered != order) throw GraphError("partition does not cover every index");
    order_ = order;
  }

  static Partition singletons(int order) {
    std::vector<std::vector<int>> b;
    for (int i = 0; i < order; ++i) b.push_back({i});
    return Partition(order, std::move(b));
  }

  int order() const { return order_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

 private:
  int order_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Block-averaged matrix b[i][j] = (1/|P_i|) * sum of block (i, j). Carries the block
/// sizes so its spectrum can be taken through the similar symmetric matrix
/// s[i][j] / sqrt(|P_i| |P_j|).
struct QuotientMatrix {
  int order = 0;
  std::vector<double> entries;  // row-major, order x order
  std::vector<int> block_sizes;
  bool equitable = false;

  double operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(order) +
                   static_cast<std::size_t>(j)];
  }
};

namespace detail {

// row_sum(v, j): sum of m[v][w] over w in block j.
template <typename RowSum>
QuotientMatrix build_quotient(const Partition& p, RowSum&& row_sum, double tol) {
  const int t = p.block_count();
  QuotientMatrix q;
  q.order = t;
  q.entries.assign(static_cast<std::size_t>(t) * t, 0.0);
  q.equitable = true;
  for (int i = 0; i < t; ++i) {
    const auto& bi = p.block(i);
    q.block_sizes.push_back(static_cast<int>(bi.size()));
    for (int j = 0; j < t; ++j) {
      double total = 0;
      const double first = row_sum(bi.front(), j);
      for (int v : bi) {
        const double rs = row_sum(v, j);
        total += rs;
        if (std::abs(rs - first) > tol) q.equitable = false;
      }
      q.entries[static_cast<std::size_t>(i) * t + j] = total / static_cast<double>(bi.size());
    }
  }
  return q;
}

}  // namespace detail

inline QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& p) {
  if (p.order() != m.order()) throw GraphError("partition order does not match matrix");
  return detail::build_quotient(
      p,
      [&](int v, int j) {
        double s = 0;
        for (int w : p.block(j)) s += m(v, w);
        return s;
      },
      1e-10);
}

/// Quotient of the 0/1 adjacency matrix; equitability decided on exact integer counts.
inline QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
  if (p.order() != g.order()) throw GraphError("partition order does not match graph");
  std::vector<std::uint64_t> masks;
  for (int j = 0; j < p.block_count(); ++j) {
    std::uint64_t mask = 0;
    for (int v : p.block(j)) mask |= std::uint64_t{1} << v;
    masks.push_back(mask);
  }
  return detail::build_quotient(
      p,
      [&](int v, int j) {
        return static_cast<double>(std::popcount(g.row(v) & masks[static_cast<std::size_t>(j)]));
      },
      0.0);
}

inline Spectrum quotient_spectrum(const QuotientMatrix& q) {
  SymMatrix s(q.order);
  for (int i = 0; i < q.order; ++i)
    for (int j = i; j < q.order; ++j) {
      // block sum s_ij = |P_i| b_ij is symmetric in (i, j)
      const double sum = q(i, j) * q.block_sizes[static_cast<std::size_t>(i)];
      s.set(i, j,
            sum / std::sqrt(static_cast<double>(q.block_sizes[static_cast<std::size_t>(i)]) *
                            q.block_sizes[static_cast<std::size_t>(j)]));
    }
  return sym_eigenvalues(s);
}

/// Coefficients in descending powers: {c_d, ..., c_1, c_0}.
using Polynomial = std::vector<double>;

inline double evaluate(const Polynomial& p, double x) {
  double acc = 0;
  for (double c : p) acc = acc * x + c;
  return acc;
}

/// Largest real root at or below bracket_hi: unit-step scan downward to the first sign
/// change, then bisection to 1e-12.
inline double largest_real_root(const Polynomial& p, double bracket_hi) {
  auto sign = [](double v) { return (v > 0) - (v < 0); };
  double hi = bracket_hi;
  double f_hi = evaluate(p, hi);
  if (f_hi == 0.0) return hi;
  const double floor = -std::abs(bracket_hi);
  while (hi > floor) {
    const double lo = std::max(hi - 1.0, floor);
    const double f_lo = evaluate(p, lo);
    if (f_lo == 0.0) return lo;
    if (sign(f_lo) != sign(f_hi)) {
      double a = lo;
      double b = hi;
      const int sa = sign(f_lo);
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const double fm = evaluate(p, mid);
        if (fm == 0.0) return mid;
        if (sign(fm) == sa) a = mid; else b = mid;
      }
      return 0.5 * (a + b);
    }
    hi = lo;
    f_hi = f_lo;
  }
  throw GraphError("no sign change found in [-bracket, bracket]");
}

/// outer[i] >= inner[i] >= outer[i + |outer| - |inner|], within tol.
inline bool interlaces(const Spectrum& inner, const Spectrum& outer, double tol = 1e-8) {
  if (inner.size() > outer.size()) return false;
  const std::size_t shift = outer.size() - inner.size();
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] > outer[i] + tol) return false;
    if (inner[i] < outer[i + shift] - tol) return false;
  }
  return true;
}

}  // namespace spantree
