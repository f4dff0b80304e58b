#include "twolevel/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <set>

#include "twolevel/double_description.hpp"
#include "twolevel/error.hpp"
#include "twolevel/linalg.hpp"

namespace twolevel {

namespace {

using Bits = boost::dynamic_bitset<>;

bool row_less(const IntVector& a1, const Integer& b1, const IntVector& a2, const Integer& b2) {
  if (lex_less(a1, a2)) return true;
  if (lex_less(a2, a1)) return false;
  return b1 < b2;
}

template <class Row>
void sort_unique(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return row_less(x.a, x.b, y.a, y.b); });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// Affine hull of a point set as the reduced echelon form of all (c | delta)
// with c . p = delta on every point.
linalg::Rref affine_hull_equations(const std::vector<RatVector>& pts, std::size_t n) {
  RatMatrix m;
  m.reserve(pts.size());
  for (const auto& p : pts) {
    RatVector row(p);
    row.push_back(Rational(1));
    m.push_back(std::move(row));
  }
  RatMatrix null = linalg::nullspace(m, n + 1);
  for (auto& z : null) z[n] = -z[n];
  return linalg::rref(std::move(null));
}

std::vector<std::size_t> free_columns(const std::vector<std::size_t>& pivots, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots)
    if (p < n) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

// Rewrites a . x <= b so that the pivot coordinates of the equation echelon
// form have coefficient 0.
void eliminate(RatVector& a, Rational& b, const linalg::Rref& eqs, std::size_t n) {
  for (std::size_t i = 0; i < eqs.rows.size(); ++i) {
    const std::size_t p = eqs.pivots[i];
    if (sgn(a[p]) == 0) continue;
    const Rational f = a[p];
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(eqs.rows[i][j]) != 0) a[j] -= f * eqs.rows[i][j];
    b -= f * eqs.rows[i][n];
  }
}

std::vector<Bits> zero_sets(const VPolytope& v, const HPolytope& h) {
  const auto& pts = v.vertices();
  std::vector<Bits> z(pts.size(), Bits(h.inequalities.size()));
  for (std::size_t f = 0; f < h.inequalities.size(); ++f) {
    const auto& ineq = h.inequalities[f];
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(ineq.a, pts[i]) == ineq.b) z[i].set(f);
  }
  return z;
}

void check_dim(std::size_t d, const PolytopeOptions& opt) {
  if (d > opt.max_dim)
    fail(ErrorKind::DimensionGuardExceeded,
         "affine dimension " + std::to_string(d) + " exceeds --max-dim " + std::to_string(opt.max_dim));
}

}  // namespace

VPolytope::VPolytope(std::size_t ambient_dim, std::vector<RatVector> points)
    : ambient_dim_(ambient_dim), vertices_(std::move(points)) {
  for (const auto& p : vertices_)
    if (p.size() != ambient_dim_)
      fail(ErrorKind::DimensionMismatch,
           "point of length " + std::to_string(p.size()) + " in dimension " + std::to_string(ambient_dim_));
  std::sort(vertices_.begin(), vertices_.end(), RatVectorLess{});
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

VPolytope VPolytope::from_integers(std::size_t ambient_dim, const std::vector<std::vector<int>>& points) {
  std::vector<RatVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rational(p));
  return VPolytope(ambient_dim, std::move(pts));
}

bool VPolytope::contains_vertex(const RatVector& p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p, RatVectorLess{});
}

bool operator==(const VPolytope& a, const VPolytope& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
}

bool operator==(const Halfspace& x, const Halfspace& y) { return x.b == y.b && x.a == y.a; }
bool operator==(const Hyperplane& x, const Hyperplane& y) { return x.b == y.b && x.a == y.a; }

Halfspace make_halfspace(const RatVector& a, const Rational& b) {
  RatVector row(a);
  row.push_back(b);
  IntVector z = primitive_integer(row);
  Halfspace h;
  h.b = z.back();
  z.pop_back();
  h.a = std::move(z);
  return h;
}

Hyperplane make_hyperplane(const RatVector& a, const Rational& b) {
  RatVector row(a);
  row.push_back(b);
  IntVector z = primitive_integer(row);
  auto lead = std::find_if(z.begin(), z.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (lead != z.end() && sgn(*lead) < 0)
    for (auto& x : z) x = -x;
  Hyperplane h;
  h.b = z.back();
  z.pop_back();
  h.a = std::move(z);
  return h;
}

void canonicalize(HPolytope& h) {
  for (auto& r : h.inequalities) r = make_halfspace(to_rational(r.a), Rational(r.b));
  for (auto& r : h.equations) r = make_hyperplane(to_rational(r.a), Rational(r.b));
  sort_unique(h.inequalities);
  sort_unique(h.equations);
}

void drop_trivial_rows(HPolytope& h) {
  auto zero = [](const IntVector& a) { return std::all_of(a.begin(), a.end(), [](const Integer& x) { return sgn(x) == 0; }); };
  std::erase_if(h.inequalities, [&](const Halfspace& r) { return zero(r.a) && sgn(r.b) >= 0; });
  std::erase_if(h.equations, [&](const Hyperplane& r) { return zero(r.a) && sgn(r.b) == 0; });
}

HPolytope reduce_modulo_equations(const HPolytope& h) {
  const std::size_t n = h.ambient_dim;
  RatMatrix m;
  for (const auto& e : h.equations) {
    RatVector row = to_rational(e.a);
    row.push_back(Rational(e.b));
    m.push_back(std::move(row));
  }
  const linalg::Rref eqs = linalg::rref(std::move(m));
  if (!eqs.pivots.empty() && eqs.pivots.back() == n) fail(ErrorKind::Infeasible, "inconsistent equations");

  HPolytope out;
  out.ambient_dim = n;
  out.irredundant = h.irredundant;
  for (std::size_t i = 0; i < eqs.rows.size(); ++i) {
    RatVector c(eqs.rows[i].begin(), eqs.rows[i].begin() + static_cast<std::ptrdiff_t>(n));
    out.equations.push_back(make_hyperplane(c, eqs.rows[i][n]));
  }
  for (const auto& r : h.inequalities) {
    RatVector a = to_rational(r.a);
    Rational b(r.b);
    eliminate(a, b, eqs, n);
    out.inequalities.push_back(make_halfspace(a, b));
  }
  drop_trivial_rows(out);
  canonicalize(out);
  return out;
}

FSummary make_summary(std::size_t d, const Integer& f0, const Integer& fd1) {
  FSummary s;
  s.d = d;
  s.f0 = f0;
  s.fd1 = fd1;
  s.product = f0 * fd1;
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, d + 1);
  s.bound = Integer(static_cast<unsigned long>(d)) * pow2;
  s.satisfies = s.product <= s.bound;
  s.equality = s.product == s.bound;
  return s;
}

std::size_t affine_dimension(const VPolytope& v) {
  if (v.empty()) fail(ErrorKind::EmptyInput, "empty polytope has no affine dimension");
  const auto& pts = v.vertices();
  RatMatrix diff;
  diff.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVector d(v.ambient_dim());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diff.push_back(std::move(d));
  }
  return linalg::rank(diff);
}

HPolytope facets_of(const VPolytope& v, const PolytopeOptions& opt) {
  if (v.empty()) fail(ErrorKind::EmptyInput, "facets_of on an empty point set");
  const std::size_t n = v.ambient_dim();
  const auto& pts = v.vertices();
  const linalg::Rref eqs = affine_hull_equations(pts, n);
  const auto cols = free_columns(eqs.pivots, n);
  const std::size_t d = cols.size();
  check_dim(d, opt);

  HPolytope h;
  h.ambient_dim = n;
  h.irredundant = true;
  for (std::size_t i = 0; i < eqs.rows.size(); ++i) {
    RatVector c(eqs.rows[i].begin(), eqs.rows[i].begin() + static_cast<std::ptrdiff_t>(n));
    h.equations.push_back(make_hyperplane(c, eqs.rows[i][n]));
  }

  if (d > 0) {
    // Cone of valid inequalities y0 + y . x_F >= 0 in the free coordinates;
    // for a bounded full-dimensional polytope its extreme rays are the facets.
    IntMatrix rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) {
      RatVector r(d + 1);
      r[0] = 1;
      for (std::size_t j = 0; j < d; ++j) r[j + 1] = p[cols[j]];
      rows.push_back(primitive_integer(r));
    }
    std::sort(rows.begin(), rows.end(), IntVectorLess{});
    for (auto& y : dd::extreme_rays(rows)) {
      Halfspace f;
      f.a.assign(n, Integer(0));
      for (std::size_t j = 0; j < d; ++j) f.a[cols[j]] = -y[j + 1];
      f.b = y[0];
      h.inequalities.push_back(std::move(f));
    }
  }
  sort_unique(h.inequalities);
  sort_unique(h.equations);
  return h;
}

VPolytope vertices_of(const HPolytope& h, const PolytopeOptions& opt) {
  const std::size_t n = h.ambient_dim;
  RatMatrix m;
  for (const auto& e : h.equations) {
    RatVector row = to_rational(e.a);
    row.push_back(Rational(e.b));
    m.push_back(std::move(row));
  }
  const linalg::Rref eqs = linalg::rref(std::move(m));
  if (!eqs.pivots.empty() && eqs.pivots.back() == n) return VPolytope(n, {});
  const auto cols = free_columns(eqs.pivots, n);
  const std::size_t f = cols.size();
  check_dim(f, opt);

  // inequalities restricted to the free coordinates
  RatMatrix A;
  RatVector B;
  for (const auto& r : h.inequalities) {
    RatVector a = to_rational(r.a);
    Rational b(r.b);
    eliminate(a, b, eqs, n);
    RatVector af(f);
    for (std::size_t j = 0; j < f; ++j) af[j] = a[cols[j]];
    A.push_back(std::move(af));
    B.push_back(b);
  }

  auto lift = [&](const RatVector& xf) {
    RatVector x(n, Rational(0));
    for (std::size_t j = 0; j < f; ++j) x[cols[j]] = xf[j];
    for (std::size_t i = 0; i < eqs.rows.size(); ++i) {
      Rational val = eqs.rows[i][n];
      for (std::size_t j = 0; j < f; ++j) val -= eqs.rows[i][cols[j]] * xf[j];
      x[eqs.pivots[i]] = val;
    }
    return x;
  };

  if (f == 0) {
    for (const auto& b : B)
      if (sgn(b) < 0) return VPolytope(n, {});
    return VPolytope(n, {lift({})});
  }

  const linalg::Rref rowspace = linalg::rref(A);
  const std::size_t rho = rowspace.rows.size();
  const bool has_lineality = rho < f;

  // Coordinates for the cone: z = x_F without lineality, otherwise x_F = R^T z.
  RatMatrix coeff;
  if (!has_lineality) {
    coeff = A;
  } else {
    for (const auto& a : A) {
      RatVector c(rho);
      for (std::size_t k = 0; k < rho; ++k) c[k] = dot(a, rowspace.rows[k]);
      coeff.push_back(std::move(c));
    }
  }
  const std::size_t k = has_lineality ? rho : f;

  IntMatrix rows;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    RatVector r(k + 1);
    r[0] = B[i];
    for (std::size_t j = 0; j < k; ++j) r[j + 1] = -coeff[i][j];
    rows.push_back(primitive_integer(r));
  }
  {
    IntVector t(k + 1, Integer(0));
    t[0] = 1;
    rows.push_back(std::move(t));
  }
  std::sort(rows.begin(), rows.end(), IntVectorLess{});
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  bool feasible = false;
  bool recession = false;
  std::vector<RatVector> verts;
  if (k == 0) {
    // no free direction survives: feasible iff all right hand sides are >= 0
    feasible = std::all_of(B.begin(), B.end(), [](const Rational& b) { return sgn(b) >= 0; });
  } else {
    for (const auto& y : dd::extreme_rays(rows)) {
      if (sgn(y[0]) == 0) {
        recession = true;
        continue;
      }
      feasible = true;
      if (has_lineality) continue;
      RatVector xf(f);
      for (std::size_t j = 0; j < f; ++j) xf[j] = Rational(y[j + 1], y[0]);
      for (auto& q : xf) q.canonicalize();
      verts.push_back(lift(xf));
    }
  }
  if (!feasible) return VPolytope(n, {});
  if (has_lineality || recession) fail(ErrorKind::Unbounded, "inequality system describes an unbounded polyhedron");
  return VPolytope(n, std::move(verts));
}

VPolytope hull(std::size_t ambient_dim, std::vector<RatVector> points, const PolytopeOptions& opt) {
  VPolytope all(ambient_dim, std::move(points));
  if (all.size() <= 1) return all;
  const HPolytope h = facets_of(all, opt);
  const auto z = zero_sets(all, h);
  std::vector<RatVector> keep;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool vertex = true;
    for (std::size_t j = 0; j < all.size() && vertex; ++j)
      if (j != i && z[i].is_subset_of(z[j])) vertex = false;
    if (vertex) keep.push_back(all.vertices()[i]);
  }
  return VPolytope(ambient_dim, std::move(keep));
}

bool is_vertex_set(const VPolytope& v, const PolytopeOptions& opt) {
  return hull(v.ambient_dim(), v.vertices(), opt).size() == v.size();
}

SlackMatrix slack(const VPolytope& v, const HPolytope& h) {
  if (h.ambient_dim != v.ambient_dim()) fail(ErrorKind::DimensionMismatch, "slack: ambient dimensions differ");
  const auto& pts = v.vertices();
  for (const auto& e : h.equations)
    for (const auto& p : pts)
      if (dot(e.a, p) != e.b) fail(ErrorKind::InvalidPair, "a vertex violates an equation");

  SlackMatrix s;
  s.zero_one = true;
  for (const auto& ineq : h.inequalities) {
    RatVector row(pts.size());
    Rational smallest = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      row[i] = Rational(ineq.b) - dot(ineq.a, pts[i]);
      if (sgn(row[i]) < 0) fail(ErrorKind::InvalidPair, "a vertex violates an inequality");
      if (sgn(row[i]) > 0 && (sgn(smallest) == 0 || row[i] < smallest)) smallest = row[i];
    }
    RatVector scaled(row);
    if (sgn(smallest) > 0)
      for (auto& x : scaled) x /= smallest;
    for (const auto& x : scaled)
      if (x != 0 && x != 1) s.zero_one = false;
    s.entries.push_back(std::move(row));
    s.scaled.push_back(std::move(scaled));
  }
  return s;
}

TwoLevelCertificate is_two_level(const VPolytope& v, const HPolytope& facets) {
  TwoLevelCertificate c;
  for (const auto& ineq : facets.inequalities) {
    std::set<Rational> levels;
    for (const auto& p : v.vertices()) levels.insert(Rational(ineq.b) - dot(ineq.a, p));
    if (levels.size() > 2) {
      c.two_level = false;
      c.witness = ineq;
      c.witness_levels.assign(levels.begin(), levels.end());
      return c;
    }
  }
  return c;
}

TwoLevelCertificate is_two_level(const VPolytope& v, const PolytopeOptions& opt) {
  return is_two_level(v, facets_of(v, opt));
}

FSummary summary(const VPolytope& v, const HPolytope& facets) {
  return make_summary(affine_dimension(v), Integer(static_cast<unsigned long>(v.size())),
                      Integer(static_cast<unsigned long>(facets.inequalities.size())));
}

FSummary summary(const VPolytope& v, const PolytopeOptions& opt) { return summary(v, facets_of(v, opt)); }

std::vector<std::pair<std::size_t, std::size_t>> edges(const VPolytope& v, const HPolytope& facets) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t m = v.size();
  if (m < 2) return out;
  const auto z = zero_sets(v, facets);
  const std::size_t d = affine_dimension(v);
  Bits common;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t w = u + 1; w < m; ++w) {
      common = z[u] & z[w];
      // an edge lies on at least d-1 facets
      if (common.count() + 1 < d) continue;
      bool edge = true;
      for (std::size_t x = 0; x < m && edge; ++x)
        if (x != u && x != w && common.is_subset_of(z[x])) edge = false;
      if (edge) out.emplace_back(u, w);
    }
  }
  return out;
}

std::size_t count_edges(const VPolytope& v, const HPolytope& facets) { return edges(v, facets).size(); }

std::size_t count_edges(const VPolytope& v, const PolytopeOptions& opt) {
  if (v.size() < 2) return 0;
  return count_edges(v, facets_of(v, opt));
}

VPolytope polar(const VPolytope& v, const PolytopeOptions& opt) {
  const HPolytope h = facets_of(v, opt);
  if (!h.equations.empty() || h.inequalities.empty())
    fail(ErrorKind::OriginNotInterior, "polar needs a full-dimensional polytope");
  std::vector<RatVector> pts;
  for (const auto& f : h.inequalities) {
    if (sgn(f.b) <= 0) fail(ErrorKind::OriginNotInterior, "origin is not in the interior");
    RatVector y(f.a.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      y[j] = Rational(f.a[j], f.b);
      y[j].canonicalize();
    }
    pts.push_back(std::move(y));
  }
  return VPolytope(v.ambient_dim(), std::move(pts));
}

VPolytope product(const VPolytope& p, const VPolytope& q) {
  std::vector<RatVector> pts;
  pts.reserve(p.size() * q.size());
  for (const auto& x : p.vertices())
    for (const auto& y : q.vertices()) {
      RatVector z(x);
      z.insert(z.end(), y.begin(), y.end());
      pts.push_back(std::move(z));
    }
  return VPolytope(p.ambient_dim() + q.ambient_dim(), std::move(pts));
}

VPolytope twisted_prism(const VPolytope& p) {
  std::vector<RatVector> pts;
  pts.reserve(2 * p.size());
  for (const auto& x : p.vertices()) {
    RatVector up(x), down(x.size());
    up.push_back(Rational(1));
    for (std::size_t j = 0; j < x.size(); ++j) down[j] = -x[j];
    down.push_back(Rational(-1));
    pts.push_back(std::move(up));
    pts.push_back(std::move(down));
  }
  return VPolytope(p.ambient_dim() + 1, std::move(pts));
}

VPolytope affine_image(const VPolytope& p, const IntMatrix& A, const IntVector& t, bool expect_isomorphic,
                       const PolytopeOptions& opt) {
  if (A.size() != t.size()) fail(ErrorKind::DimensionMismatch, "affine_image: A and t disagree in rows");
  for (const auto& row : A)
    if (row.size() != p.ambient_dim()) fail(ErrorKind::DimensionMismatch, "affine_image: A has wrong column count");
  std::vector<RatVector> pts;
  pts.reserve(p.size());
  for (const auto& x : p.vertices()) {
    RatVector y(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) y[i] = dot(A[i], x) + Rational(t[i]);
    pts.push_back(std::move(y));
  }
  VPolytope image(A.size(), pts);
  if (expect_isomorphic && !p.empty() && affine_dimension(image) != affine_dimension(p))
    fail(ErrorKind::NonInjectiveOnHull, "affine map collapses the affine hull");
  return hull(A.size(), std::move(pts), opt);
}

}  // namespace twolevel
