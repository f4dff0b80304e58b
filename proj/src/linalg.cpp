#include "twolevel/linalg.hpp"

#include <utility>

namespace twolevel::linalg {

Rref rref(RatMatrix m) {
  Rref out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const IntMatrix& m) {
  RatMatrix q;
  q.reserve(m.size());
  for (const auto& row : m) q.push_back(to_rational(row));
  return rank(q);
}

RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
  const Rref e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, RatVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  Rref e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix t(m[0].size(), RatVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::vector<std::size_t> independent_rows(const RatMatrix& m) {
  std::vector<std::size_t> chosen;
  if (m.empty()) return chosen;
  // Incremental echelon basis: reduce each new row against the kept ones.
  RatMatrix basis;
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < m.size(); ++i) {
    RatVector v = m[i];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::size_t c = lead[k];
      if (sgn(v[c]) == 0) continue;
      const Rational f = v[c];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(basis[k][j]) != 0) v[j] -= f * basis[k][j];
    }
    std::size_t c = 0;
    while (c < v.size() && sgn(v[c]) == 0) ++c;
    if (c == v.size()) continue;
    const Rational inv = 1 / v[c];
    for (auto& x : v) x *= inv;
    // keep earlier basis rows reduced in the new lead column
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (sgn(basis[k][c]) == 0) continue;
      const Rational f = basis[k][c];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(v[j]) != 0) basis[k][j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    lead.push_back(c);
    chosen.push_back(i);
  }
  return chosen;
}

}  // namespace twolevel::linalg
