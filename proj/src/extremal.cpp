#include "twolevel/extremal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "twolevel/double_description.hpp"
#include "twolevel/error.hpp"
#include "twolevel/linalg.hpp"

namespace twolevel {

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

Integer pow2(std::size_t k) {
  Integer p = 1;
  p <<= static_cast<mp_bitcnt_t>(k);
  return p;
}

Integer binom(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer as_int(std::size_t x) { return Integer(static_cast<unsigned long>(x)); }

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

bool acyclic(std::size_t n, const EdgeList& e, std::uint32_t mask) {
  Dsu dsu(n);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (mask >> j & 1U)
      if (!dsu.unite(e[j].first, e[j].second)) return false;
  return true;
}

// Vertices touched by the edge list are connected, ignoring `skip`.
bool touched_connected(std::size_t n, const EdgeList& e, std::size_t skip) {
  Dsu dsu(n);
  std::vector<bool> touched(n, false);
  for (auto [a, b] : e) {
    if (a == skip || b == skip) {
      if (a != skip) touched[a] = true;
      if (b != skip) touched[b] = true;
      continue;
    }
    touched[a] = touched[b] = true;
    dsu.unite(a, b);
  }
  std::size_t root = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (!touched[v] || v == skip) continue;
    if (root == n) root = dsu.find(v);
    if (dsu.find(v) != root) return false;
  }
  return true;
}

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t distinct_levels(const RatVector& row) {
  std::set<Rational> s(row.begin(), row.end());
  return s.size();
}

bool subset_of(const boost::dynamic_bitset<>& a, const boost::dynamic_bitset<>& b) { return a.is_subset_of(b); }

bool pairwise_incomparable(const std::vector<boost::dynamic_bitset<>>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (i != j && subset_of(v[i], v[j])) return false;
  return true;
}

std::vector<boost::dynamic_bitset<>> columns_of(const ZeroOneMatrix& m) {
  std::vector<boost::dynamic_bitset<>> cols(m.cols, boost::dynamic_bitset<>(m.rows));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.bits[i][j]) cols[j][i] = true;
  return cols;
}

RatMatrix to_rational(const ZeroOneMatrix& m) {
  RatMatrix out(m.rows, RatVector(m.cols, Rational(0)));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.bits[i][j]) out[i][j] = 1;
  return out;
}

}  // namespace

bool BoundReport::all_checks() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

BoundReport make_bound_report(std::string label, std::size_t d, Integer f0, bool f0_lower, Integer fd1,
                              bool fd1_lower) {
  BoundReport r;
  r.label = std::move(label);
  r.d = d;
  r.f0 = std::move(f0);
  r.f0_lower_bound = f0_lower;
  r.fd1 = std::move(fd1);
  r.fd1_lower_bound = fd1_lower;
  r.product = r.f0 * r.fd1;
  r.bound = as_int(d) * pow2(d + 1);
  r.violated = r.product > r.bound;
  return r;
}

BoundReport forest_study(std::size_t n) {
  if (n < 3 || n > 12) fail(ErrorKind::BadParams, "forest_study needs 3 <= n <= 12");
  const Graph g = complete_bipartite(2, n);
  const EdgeList& e = g.edges();  // (0, 2+j) for j < n, then (1, 2+j)
  Integer f0_lower = 1;
  for (std::size_t i = 0; i < n; ++i) f0_lower *= 3;
  const Integer fd1_lower = pow2(n) - as_int(n + 1);
  BoundReport r = make_bound_report("forest polytope of K_{2," + std::to_string(n) + "}", 2 * n, f0_lower, true,
                                    fd1_lower, true);
  if (n <= 6) {
    // each degree-2 vertex keeps no edge, its edge to hub 0, or its edge to hub 1
    bool sound = true;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::uint32_t mask = 0;
      std::size_t c = code;
      for (std::size_t j = 0; j < n; ++j, c /= 3) {
        if (c % 3 == 1) mask |= std::uint32_t{1} << j;
        if (c % 3 == 2) mask |= std::uint32_t{1} << (n + j);
      }
      sound = sound && acyclic(g.n(), e, mask);
    }
    r.checks.emplace_back("one_edge_per_leaf_subgraphs_are_forests", sound);
    std::size_t forests = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e.size()); ++mask) forests += acyclic(g.n(), e, mask);
    r.values.emplace_back("forests_exact", as_int(forests));
    r.checks.emplace_back("forests_exact_at_least_lower_bound", as_int(forests) >= f0_lower);
    if (n <= 4) {
      std::vector<RatVector> pts;
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e.size()); ++mask) {
        if (!acyclic(g.n(), e, mask)) continue;
        RatVector x(e.size(), Rational(0));
        for (std::size_t j = 0; j < e.size(); ++j)
          if (mask >> j & 1U) x[j] = 1;
        pts.push_back(std::move(x));
      }
      const auto facets = facets_of(VPolytope(e.size(), std::move(pts)));
      r.values.emplace_back("facets_exact", as_int(facets.inequalities.size()));
      r.checks.emplace_back("facets_exact_at_least_lower_bound", as_int(facets.inequalities.size()) >= fd1_lower);
    }
  }
  return r;
}

Integer spanning_tree_count(const Graph& g) {
  const std::size_t n = g.n();
  if (n <= 1) return 1;
  std::vector<std::vector<Integer>> lap(n - 1, std::vector<Integer>(n - 1, Integer(0)));
  for (auto [a, b] : g.edges()) {
    if (a < n - 1) lap[a][a] += 1;
    if (b < n - 1) lap[b][b] += 1;
    if (a < n - 1 && b < n - 1) {
      lap[a][b] -= 1;
      lap[b][a] -= 1;
    }
  }
  return bareiss_det(std::move(lap));
}

std::vector<std::uint32_t> enumerate_spanning_trees(const Graph& g) {
  const auto& e = g.edges();
  if (e.size() > 20) fail(ErrorKind::SizeGuardExceeded, "spanning tree enumeration needs |E| <= 20");
  std::vector<std::uint32_t> out;
  if (g.n() == 0) return out;
  const std::size_t k = g.n() - 1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e.size()); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == k && acyclic(g.n(), e, mask)) out.push_back(mask);
  return out;
}

bool matroid_connected(std::size_t n, const EdgeList& edges) {
  if (edges.size() <= 1) return true;
  std::vector<bool> touched(n, false);
  for (auto [a, b] : edges) {
    if (a == b) return false;  // a loop is its own component
    touched[a] = touched[b] = true;
  }
  const std::size_t verts = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), true));
  if (!touched_connected(n, edges, n)) return false;
  if (verts == 2) return true;
  for (std::size_t v = 0; v < n; ++v)
    if (touched[v] && !touched_connected(n, edges, v)) return false;
  return true;
}

std::size_t spanning_tree_flacets(const Graph& g) {
  const std::size_t n = g.n();
  if (n > 20) fail(ErrorKind::SizeGuardExceeded, "flacet search scans 2^|V| sets; |V| <= 20");
  if (n < 2 || !matroid_connected(n, g.edges()))
    fail(ErrorKind::BadParams, "the flacet criterion is for 2-connected graphs");
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size < 2 || size >= n) continue;
    EdgeList inside, contracted;
    std::uint32_t covered = 0;
    const std::size_t hub = static_cast<std::size_t>(std::countr_zero(s));
    for (auto [a, b] : g.edges()) {
      const bool ia = s >> a & 1U, ib = s >> b & 1U;
      if (ia && ib) {
        inside.emplace_back(a, b);
        covered |= (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
      } else {
        contracted.emplace_back(ia ? hub : a, ib ? hub : b);
      }
    }
    if (covered != s || !matroid_connected(n, inside)) continue;
    if (matroid_connected(n, contracted)) ++count;
  }
  for (std::size_t j = 0; j < g.edges().size(); ++j) {
    EdgeList rest = g.edges();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    if (matroid_connected(n, rest)) ++count;
  }
  return count;
}

BoundReport spanning_tree_study(const Graph& g, std::size_t geometric_edges) {
  if (g.n() > 16) fail(ErrorKind::SizeGuardExceeded, "spanning_tree_study needs |V| <= 16");
  if (!is_connected(g)) fail(ErrorKind::Disconnected, "spanning trees need a connected graph");
  const std::size_t m = g.edges().size();
  const Integer f0 = spanning_tree_count(g);
  const std::size_t flacets = spanning_tree_flacets(g);
  std::size_t d = m - 1;
  bool exact = false;
  std::vector<std::pair<std::string, bool>> checks;
  if (m <= 12) {
    const auto trees = enumerate_spanning_trees(g);
    checks.emplace_back("kirchhoff_matches_enumeration", as_int(trees.size()) == f0);
    if (m <= geometric_edges) {
      std::vector<RatVector> pts;
      for (auto t : trees) {
        RatVector x(m, Rational(0));
        for (std::size_t j = 0; j < m; ++j)
          if (t >> j & 1U) x[j] = 1;
        pts.push_back(std::move(x));
      }
      const VPolytope v(m, std::move(pts));
      PolytopeOptions opt;
      opt.max_dim = std::max<std::size_t>(opt.max_dim, m);
      const auto facets = facets_of(v, opt);
      checks.emplace_back("dimension_is_edges_minus_one", affine_dimension(v) == m - 1);
      checks.emplace_back("flacet_criterion_matches_facets_of", facets.inequalities.size() == flacets);
      d = affine_dimension(v);
      exact = true;
    }
  }
  BoundReport r = make_bound_report("spanning tree polytope", d, f0, false, as_int(flacets), !exact);
  r.checks = std::move(checks);
  return r;
}

std::vector<RatVector> one_block_vectors(std::size_t d) {
  std::vector<RatVector> out{RatVector(d, Rational(0))};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      RatVector x(d, Rational(0));
      for (std::size_t k = i; k <= j; ++k) x[k] = 1;
      out.push_back(std::move(x));
    }
  return out;
}

BoundReport three_level_minupdown(std::size_t d) {
  if (d < 3) fail(ErrorKind::BadParams, "three_level_minupdown needs d >= 3");
  const Integer f0 = binom(d + 1, 2) + 1;
  const Integer fd1 = pow2(d - 1) + as_int(d);
  BoundReport r = make_bound_report("3-level min up/down polytope, d = " + std::to_string(d), d, f0, false, fd1, false);
  if (d <= 8) {
    const VPolytope v(d, one_block_vectors(d));
    const auto facets = facets_of(v);
    r.checks.emplace_back("vertex_count_matches_formula", as_int(v.size()) == f0);
    r.checks.emplace_back("facet_count_matches_formula", as_int(facets.inequalities.size()) == fd1);
    const auto s = slack(v, facets);
    std::size_t most = 0;
    for (const auto& row : s.entries) most = std::max(most, distinct_levels(row));
    r.checks.emplace_back("three_level_witness", most == 3);
    r.checks.emplace_back("not_two_level", !is_two_level(v, facets).two_level);
  }
  return r;
}

HPolytope fractional_clique_relaxation(std::size_t d) {
  HPolytope h;
  h.ambient_dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    Halfspace row{IntVector(d, Integer(0)), Integer(0)};
    row.a[i] = -1;
    h.inequalities.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Halfspace row{IntVector(d, Integer(0)), Integer(1)};
      row.a[i] = row.a[j] = 1;
      h.inequalities.push_back(std::move(row));
    }
  canonicalize(h);
  return h;
}

BoundReport fractional_stab_clique(std::size_t d) {
  if (d < 3 || d > 10) fail(ErrorKind::BadParams, "fractional_stab_clique needs 3 <= d <= 10");
  const HPolytope h = fractional_clique_relaxation(d);
  const VPolytope v = vertices_of(h);
  const Integer f0_formula = pow2(d) - binom(d, 2);
  const Integer fd1 = as_int(d) + binom(d, 2);
  BoundReport r = make_bound_report("fractional stable set polytope of K_" + std::to_string(d), d,
                                    as_int(v.size()), false, fd1, false);
  r.checks.emplace_back("vertex_count_matches_formula", as_int(v.size()) == f0_formula);
  std::size_t integral = 0;
  bool half_shape = true;
  const Rational half(1, 2);
  for (const auto& x : v.vertices()) {
    const bool is_int = std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.get_den() == 1; });
    if (is_int) {
      ++integral;
      continue;
    }
    std::size_t halves = 0;
    for (const auto& c : x) {
      if (c == half) ++halves;
      else if (c != 0) half_shape = false;
    }
    half_shape = half_shape && halves >= 3;
  }
  r.checks.emplace_back("integral_vertices_are_d_plus_one", integral == d + 1);
  r.checks.emplace_back("fractional_vertices_are_halves_on_at_least_three", half_shape);
  if (d <= 7) r.checks.emplace_back("facet_count_matches_formula", as_int(facets_of(v).inequalities.size()) == fd1);
  return r;
}

IntegerHullResult integer_points(const HPolytope& h, const IntegerHullOptions& opt) {
  const std::size_t d = h.ambient_dim;
  if (d > opt.max_dim) fail(ErrorKind::SizeGuardExceeded, "integer_points: d = " + std::to_string(d) + " exceeds the guard");
  // slabs keyed by the normal with a positive leading entry
  struct Range {
    std::optional<Integer> lo, hi;
  };
  std::map<IntVector, Range, IntVectorLess> slabs;
  auto leading_positive = [](const IntVector& a) {
    for (const auto& c : a)
      if (c != 0) return c > 0;
    return true;
  };
  auto tighten_hi = [](Range& r, const Integer& b) {
    if (!r.hi || b < *r.hi) r.hi = b;
  };
  auto tighten_lo = [](Range& r, const Integer& b) {
    if (!r.lo || b > *r.lo) r.lo = b;
  };
  for (const auto& row : h.inequalities) {
    const IntVector a = primitive_integer(to_rational(row.a));
    if (std::all_of(a.begin(), a.end(), [](const Integer& c) { return c == 0; })) continue;
    // a.x <= b with a primitive and integral, so a.x <= floor(b / g)
    const Integer g = gcd_of(row.a);
    Integer b;
    mpz_fdiv_q(b.get_mpz_t(), row.b.get_mpz_t(), g.get_mpz_t());
    if (leading_positive(a)) {
      tighten_hi(slabs[a], b);
    } else {
      IntVector neg(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
      tighten_lo(slabs[neg], -b);
    }
  }
  for (const auto& eq : h.equations) {
    IntVector a = eq.a;
    Integer b = eq.b;
    const Integer g = gcd_of(a);
    if (g == 0) continue;
    if (b % g != 0) return {{}, VPolytope(d, {})};  // no integer solution
    for (auto& c : a) c /= g;
    b /= g;
    if (!leading_positive(a)) {
      for (auto& c : a) c = -c;
      b = -b;
    }
    tighten_lo(slabs[a], b);
    tighten_hi(slabs[a], b);
  }
  auto two_sided_rank = [&] {
    RatMatrix rows;
    for (const auto& [a, r] : slabs)
      if (r.lo && r.hi) rows.push_back(to_rational(a));
    return linalg::independent_rows(rows).size();
  };
  if (two_sided_rank() < d) {
    // missing sides come from the vertices of the relaxation
    const VPolytope relax = vertices_of(h, PolytopeOptions{opt.max_dim});
    if (relax.empty()) return {{}, VPolytope(d, {})};
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, Integer(0));
      e[i] = 1;
      slabs[e];
    }
    for (auto& [a, r] : slabs) {
      std::optional<Rational> lo, hi;
      for (const auto& x : relax.vertices()) {
        const Rational v = dot(a, x);
        if (!lo || v < *lo) lo = v;
        if (!hi || v > *hi) hi = v;
      }
      Integer c, f;
      mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      tighten_lo(r, c);
      tighten_hi(r, f);
    }
  }
  std::vector<std::pair<IntVector, std::pair<Integer, Integer>>> cand;
  for (const auto& [a, r] : slabs)
    if (r.lo && r.hi) {
      if (*r.lo > *r.hi) return {{}, VPolytope(d, {})};
      cand.push_back({a, {*r.lo, *r.hi}});
    }
  // narrow slabs first keeps the scan small
  std::stable_sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) {
    return x.second.second - x.second.first < y.second.second - y.second.first;
  });
  RatMatrix rat;
  std::vector<std::pair<Integer, Integer>> ranges;
  for (const auto& [a, r] : cand) {
    rat.push_back(to_rational(a));
    ranges.push_back(r);
  }
  const auto pick = linalg::independent_rows(rat);
  require(pick.size() == d, "integer_points: slab normals do not span the space");
  RatMatrix basis;
  std::vector<std::pair<Integer, Integer>> box;
  Integer scan = 1;
  for (std::size_t i = 0; i < d; ++i) {
    basis.push_back(rat[pick[i]]);
    box.push_back(ranges[pick[i]]);
    scan *= box.back().second - box.back().first + 1;
  }
  if (scan > as_int(opt.max_scan)) fail(ErrorKind::SizeGuardExceeded, "integer_points: slab scan too large");
  const auto inv = linalg::inverse(basis);
  require(inv.has_value(), "integer_points: chosen slab normals are singular");

  IntegerHullResult out;
  std::vector<Integer> y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = box[i].first;
  while (true) {
    RatVector x(d, Rational(0));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) x[r] += (*inv)[r][c] * y[c];
    bool ok = std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.get_den() == 1; });
    for (std::size_t k = 0; ok && k < h.inequalities.size(); ++k)
      ok = dot(h.inequalities[k].a, x) <= h.inequalities[k].b;
    for (std::size_t k = 0; ok && k < h.equations.size(); ++k) ok = dot(h.equations[k].a, x) == h.equations[k].b;
    if (ok) {
      if (opt.binary_only)
        for (const auto& c : x)
          if (c != 0 && c != 1) fail(ErrorKind::NonBinaryIntegerPoints, "an integer point leaves {0,1}^d");
      out.integer_points.push_back(std::move(x));
    }
    std::size_t i = 0;
    while (i < d && y[i] == box[i].second) {
      y[i] = box[i].first;
      ++i;
    }
    if (i == d) break;
    y[i] += 1;
  }
  std::sort(out.integer_points.begin(), out.integer_points.end(), RatVectorLess{});
  if (out.integer_points.empty()) {
    out.v = VPolytope(d, {});
  } else {
    PolytopeOptions popt;
    popt.max_dim = opt.max_dim;
    out.v = hull(d, out.integer_points, popt);
  }
  return out;
}

VPolytope integer_hull(const HPolytope& h, const IntegerHullOptions& opt) { return integer_points(h, opt).v; }

ZeroOneMatrix ZeroOneMatrix::from_strings(const std::vector<std::string>& rows) {
  ZeroOneMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& s : rows) {
    if (s.size() != m.cols) fail(ErrorKind::DimensionMismatch, "rows differ in length");
    boost::dynamic_bitset<> b(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (s[j] != '0' && s[j] != '1') fail(ErrorKind::BadInput, "bit strings use only 0 and 1");
      b[j] = s[j] == '1';
    }
    m.bits.push_back(std::move(b));
  }
  return m;
}

ZeroOneMatrix ZeroOneMatrix::from_slack(const SlackMatrix& s) {
  ZeroOneMatrix m;
  m.rows = s.rows();
  m.cols = s.cols();
  for (const auto& row : s.scaled) {
    boost::dynamic_bitset<> b(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (row[j] != 0 && row[j] != 1) fail(ErrorKind::BadInput, "scaled slack matrix is not 0/1");
      b[j] = row[j] == 1;
    }
    m.bits.push_back(std::move(b));
  }
  return m;
}

std::vector<std::string> ZeroOneMatrix::to_strings() const {
  std::vector<std::string> out;
  for (const auto& b : bits) {
    std::string s(cols, '0');
    for (std::size_t j = 0; j < cols; ++j)
      if (b[j]) s[j] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

bool ZeroOneMatrix::reduced() const {
  std::set<boost::dynamic_bitset<>> r(bits.begin(), bits.end());
  const auto c = columns_of(*this);
  std::set<boost::dynamic_bitset<>> cs(c.begin(), c.end());
  return r.size() == rows && cs.size() == cols;
}

ZeroOneMatrix ZeroOneMatrix::with_row(boost::dynamic_bitset<> row) const {
  if (row.size() != cols) fail(ErrorKind::DimensionMismatch, "row length differs from the column count");
  ZeroOneMatrix m = *this;
  m.bits.push_back(std::move(row));
  ++m.rows;
  return m;
}

ZeroOneMatrix ZeroOneMatrix::with_column(const boost::dynamic_bitset<>& col) const {
  if (col.size() != rows) fail(ErrorKind::DimensionMismatch, "column length differs from the row count");
  ZeroOneMatrix m = *this;
  for (std::size_t i = 0; i < rows; ++i) m.bits[i].push_back(col[i]);
  ++m.cols;
  return m;
}

std::optional<IdentityWitness> find_identity(const ZeroOneMatrix& m, std::size_t target) {
  if (target == 0) return IdentityWitness{};
  IdentityWitness cur;
  // allowed: columns that are zero on every chosen row
  std::function<bool(std::size_t, const boost::dynamic_bitset<>&)> grow = [&](std::size_t from,
                                                                              const boost::dynamic_bitset<>& allowed) {
    if (cur.rows.size() == target) return true;
    for (std::size_t r = from; r + (target - cur.rows.size()) <= m.rows; ++r) {
      const auto& row = m.bits[r];
      if (std::any_of(cur.cols.begin(), cur.cols.end(), [&](std::size_t c) { return row[c]; })) continue;
      const auto options = allowed & row;
      const auto next_allowed = allowed - row;
      for (auto c = options.find_first(); c != boost::dynamic_bitset<>::npos; c = options.find_next(c)) {
        cur.rows.push_back(r);
        cur.cols.push_back(c);
        if (grow(r + 1, next_allowed)) return true;
        cur.rows.pop_back();
        cur.cols.pop_back();
      }
    }
    return false;
  };
  boost::dynamic_bitset<> all(m.cols);
  all.set();
  if (grow(0, all)) return cur;
  return std::nullopt;
}

SlackMatrixReport slack_matrix_checks(const ZeroOneMatrix& m) {
  if (!m.reduced()) fail(ErrorKind::NotReduced, "matrix has a repeated row or column");
  SlackMatrixReport rep;
  rep.rows = m.rows;
  rep.cols = m.cols;
  const RatMatrix q = to_rational(m);
  rep.rank = linalg::rank(q);
  {
    RatMatrix with_ones = q;
    with_ones.push_back(RatVector(m.cols, Rational(1)));
    rep.ones_in_row_space = linalg::rank(with_ones) == rep.rank;
  }
  rep.rows_incomparable = pairwise_incomparable(m.bits);
  rep.cols_incomparable = pairwise_incomparable(columns_of(m));

  if (rep.rank > 0 && rep.rank <= 14) {
    // extreme rays of rowspace n R^n_+ must all be rows of m
    const auto basis = linalg::rref(q).rows;
    const std::size_t k = basis.size();
    IntMatrix cone;
    for (std::size_t j = 0; j < m.cols; ++j) {
      RatVector col(k);
      for (std::size_t i = 0; i < k; ++i) col[i] = basis[i][j];
      cone.push_back(primitive_integer(col));
    }
    std::sort(cone.begin(), cone.end(), IntVectorLess{});
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    std::set<IntVector, IntVectorLess> row_set;
    for (const auto& row : q) row_set.insert(primitive_integer(row));
    bool ok = true;
    for (const auto& ray : dd::extreme_rays(cone)) {
      RatVector x(m.cols, Rational(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) x[j] += Rational(ray[i]) * basis[i][j];
      ok = ok && row_set.count(primitive_integer(x)) > 0;
    }
    rep.cone_condition = ok;
  }

  rep.size = as_int(m.rows) * as_int(m.cols);
  rep.conjecture_bound = rep.rank == 0 ? Integer(0) : as_int(rep.rank - 1) * pow2(rep.rank);
  rep.conjecture_holds = rep.size <= rep.conjecture_bound;
  {
    const Integer cap = pow2(rep.rank);
    const bool rows_ok = as_int(m.rows) <= cap, cols_ok = as_int(m.cols) <= cap;
    rep.distinct_count_law = rows_ok && cols_ok && !(as_int(m.rows) == cap && as_int(m.cols) == cap);
  }

  rep.identity = find_identity(m, rep.rank);
  if (rep.identity && rep.rank > 0) {
    const auto& id = *rep.identity;
    const std::size_t k = rep.rank;
    // alpha of a column: its entries on the identity rows
    std::vector<Mask> alphas;
    for (std::size_t j = 0; j < m.cols; ++j) {
      Mask a = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (m.bits[id.rows[i]][j]) a |= Mask{1} << i;
      alphas.push_back(a);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (std::any_of(alphas.begin(), alphas.end(), [&](Mask x) { return (x >> a & 1U) && (x >> b & 1U); }))
          edges.emplace_back(a, b);
    const Graph g(k, edges);
    const auto adj = g.masks();
    std::set<Mask> cliques(alphas.begin(), alphas.end());
    std::set<Mask> stables;
    bool rows_stable = true;
    for (std::size_t r = 0; r < m.rows; ++r) {
      Mask s = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (m.bits[r][id.cols[i]]) s |= Mask{1} << i;
      for (auto v : to_set(s)) rows_stable = rows_stable && (adj[v] & s) == 0;
      stables.insert(s);
    }
    const auto trade = tradeoff_check(g);
    rep.clique_stable_mapping = cliques.size() == m.cols && stables.size() == m.rows && rows_stable &&
                                m.cols <= trade.cliques0 && m.rows <= trade.stable_sets0;
    rep.identity_bound = as_int(k + 1) * pow2(k);
    rep.identity_bound_holds = rep.size <= rep.identity_bound;
  }
  return rep;
}

}  // namespace twolevel
