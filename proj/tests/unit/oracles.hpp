#pragma once

// Independent brute-force oracles used by the unit tests. Deliberately naive:
// subset scans and a local Gaussian elimination, sharing no code paths with
// the double description.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "twolevel/polytope.hpp"

namespace oracle {

using twolevel::Rational;
using twolevel::RatVector;

inline std::size_t rank_of(std::vector<RatVector> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// one nonzero solution of m x = 0 when the kernel is one-dimensional
inline RatVector kernel_vector(std::vector<RatVector> m, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::size_t free = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
      free = c;
      break;
    }
  RatVector x(cols, 0);
  if (free == cols) return x;
  x[free] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -m[i][free];
  return x;
}

inline std::size_t affine_dim(const std::vector<RatVector>& pts) {
  if (pts.size() < 2) return 0;
  std::vector<RatVector> diff;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVector d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diff.push_back(d);
  }
  return rank_of(diff);
}

struct Facet {
  std::uint64_t tight = 0;  // bit i: point i on the facet
  RatVector normal;         // in the linear space of the affine hull
  std::set<Rational> levels;  // distinct values of normal . p
};

// Facets by scanning affinely independent k-subsets (k = affine dimension):
// each spans a hyperplane of the hull; keep those with all points on one side.
inline std::vector<Facet> brute_facets(const std::vector<RatVector>& pts) {
  const std::size_t n = pts.size(), dim = pts.empty() ? 0 : pts[0].size();
  const std::size_t k = affine_dim(pts);
  std::vector<Facet> out;
  if (k == 0) return out;
  // basis of the difference space
  std::vector<RatVector> basis;
  for (std::size_t i = 1; i < n && basis.size() < k; ++i) {
    RatVector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    auto trial = basis;
    trial.push_back(d);
    if (rank_of(trial) == trial.size()) basis = trial;
  }
  std::set<std::uint64_t> seen;
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      // normal a = sum lambda_t basis_t with a . (p_idx[j] - p_idx[0]) = 0
      std::vector<RatVector> eqs;
      for (std::size_t j = 1; j < k; ++j) {
        RatVector row(k);
        for (std::size_t t = 0; t < k; ++t) {
          Rational s = 0;
          for (std::size_t c = 0; c < dim; ++c) s += basis[t][c] * (pts[idx[j]][c] - pts[idx[0]][c]);
          row[t] = s;
        }
        eqs.push_back(row);
      }
      if (rank_of(eqs) != k - 1) return;
      const RatVector lambda = kernel_vector(eqs, k);
      RatVector a(dim, 0);
      for (std::size_t t = 0; t < k; ++t)
        for (std::size_t c = 0; c < dim; ++c) a[c] += lambda[t] * basis[t][c];
      Rational b = 0;
      for (std::size_t c = 0; c < dim; ++c) b += a[c] * pts[idx[0]][c];
      int side = 0;
      Facet f;
      for (std::size_t i = 0; i < n; ++i) {
        Rational v = 0;
        for (std::size_t c = 0; c < dim; ++c) v += a[c] * pts[i][c];
        f.levels.insert(v);
        const int s = v < b ? -1 : (v > b ? 1 : 0);
        if (s == 0) f.tight |= std::uint64_t{1} << i;
        else if (side == 0) side = s;
        else if (side != s) return;
      }
      if (seen.insert(f.tight).second) {
        f.normal = a;
        out.push_back(f);
      }
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Edges: pairs whose common facets have normals of rank k - 1.
inline std::set<std::pair<std::size_t, std::size_t>> brute_edges(const std::vector<RatVector>& pts) {
  const auto facets = brute_facets(pts);
  const std::size_t k = affine_dim(pts);
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < pts.size(); ++u)
    for (std::size_t w = u + 1; w < pts.size(); ++w) {
      std::vector<RatVector> normals;
      for (const auto& f : facets)
        if ((f.tight >> u & 1u) && (f.tight >> w & 1u)) normals.push_back(f.normal);
      if (k >= 1 && rank_of(normals) == k - 1) out.insert({u, w});
    }
  return out;
}

// Tight-set masks of a library H-description against a point list.
inline std::set<std::uint64_t> tight_sets(const twolevel::HPolytope& h, const std::vector<RatVector>& pts) {
  std::set<std::uint64_t> out;
  for (const auto& row : h.inequalities) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational v = 0;
      for (std::size_t c = 0; c < pts[i].size(); ++c) v += Rational(row.a[c]) * pts[i][c];
      if (v == Rational(row.b)) m |= std::uint64_t{1} << i;
    }
    out.insert(m);
  }
  return out;
}

inline std::set<std::uint64_t> tight_sets(const std::vector<Facet>& fs) {
  std::set<std::uint64_t> out;
  for (const auto& f : fs) out.insert(f.tight);
  return out;
}

// Random 0/1 point sets in {0,1}^d (every such point is a vertex of the hull).
inline std::vector<RatVector> random_cube_subset(std::size_t d, std::size_t count, std::mt19937_64& rng) {
  std::vector<std::uint32_t> all(std::size_t{1} << d);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < std::min(count, all.size()); ++i) {
    RatVector p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = (all[i] >> j) & 1u;
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), twolevel::RatVectorLess{});
  return pts;
}

}  // namespace oracle
