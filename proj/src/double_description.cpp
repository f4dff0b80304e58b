#include "twolevel/double_description.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "twolevel/error.hpp"
#include "twolevel/linalg.hpp"

namespace twolevel::dd {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVector v;
  Bits zero;  // processed rows on which the ray is tight
  std::vector<signed char> side;  // sign against every row, filled once
};

// Per-row counts of rays strictly on each side, updated as rays are born and
// removed.
struct Tally {
  const IntMatrix& rows;
  const std::vector<std::size_t>& pending;
  std::vector<std::size_t> pos, neg;

  void add(Ray& r) {
    r.side.assign(rows.size(), 0);
    for (auto k : pending) {
      const int s = sgn(dot(rows[k], r.v));
      r.side[k] = static_cast<signed char>(s);
      pos[k] += s > 0;
      neg[k] += s < 0;
    }
  }
  void remove(const Ray& r) {
    for (auto k : pending) {
      pos[k] -= r.side[k] > 0;
      neg[k] -= r.side[k] < 0;
    }
  }
};

void make_primitive(IntVector& v) {
  const Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

IntMatrix extreme_rays(const IntMatrix& rows) {
  require(!rows.empty(), "double description needs at least one row");
  const std::size_t n = rows[0].size();
  const std::size_t m = rows.size();

  RatMatrix qrows;
  qrows.reserve(m);
  for (const auto& r : rows) qrows.push_back(to_rational(r));
  const auto basis = linalg::independent_rows(qrows);
  require(basis.size() == n, "double description: cone is not pointed (rank " +
                                 std::to_string(basis.size()) + " < " + std::to_string(n) + ")");

  RatMatrix square;
  for (auto i : basis) square.push_back(qrows[i]);
  const auto inv = linalg::inverse(square);
  require(inv.has_value(), "double description: singular initial basis");

  std::vector<Ray> rays;
  rays.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = (*inv)[i][j];
    Ray r{primitive_integer(col), Bits(m), {}};
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) r.zero.set(basis[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(m, false);
  for (auto i : basis) in_basis[i] = true;

  Bits common(m);
  std::vector<std::size_t> pending;
  for (std::size_t k = 0; k < m; ++k)
    if (!in_basis[k]) pending.push_back(k);
  Tally tally{rows, pending, std::vector<std::size_t>(m, 0), std::vector<std::size_t>(m, 0)};
  for (auto& r : rays) tally.add(r);

  while (!pending.empty()) {
    // rows that create no rays go first (implicit equalities, redundant
    // rows); otherwise input order, which suits facet enumeration best
    std::size_t best = 0;
    for (std::size_t t = 0; t < pending.size(); ++t)
      if (tally.pos[pending[t]] == 0 || tally.neg[pending[t]] == 0) {
        best = t;
        break;
      }
    const std::size_t k = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const IntVector& row = rows[k];
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (rays[i].side[k] > 0) pos.push_back(i);
      else if (rays[i].side[k] < 0) neg.push_back(i);
      else rays[i].zero.set(k);
    }
    if (neg.empty()) continue;

    std::vector<Ray> fresh;
    for (auto p : pos) {
      for (auto q : neg) {
        common = rays[p].zero;
        common &= rays[q].zero;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size(); ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zero)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        // a > 0 and b > 0; the combination is tight on row k.
        const Integer a = dot(row, rays[p].v);
        const Integer b = -dot(row, rays[q].v);
        IntVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = a * rays[q].v[j] + b * rays[p].v[j];
        make_primitive(v);
        Ray nr{std::move(v), common, {}};
        nr.zero.set(k);
        tally.add(nr);
        fresh.push_back(std::move(nr));
      }
    }

    std::vector<Ray> next;
    next.reserve(rays.size() - neg.size() + fresh.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (rays[i].side[k] < 0) {
        tally.remove(rays[i]);
        continue;
      }
      next.push_back(std::move(rays[i]));
    }
    for (auto& r : fresh) next.push_back(std::move(r));
    rays = std::move(next);
  }

  IntMatrix out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end(), IntVectorLess{});
  return out;
}

}  // namespace twolevel::dd
