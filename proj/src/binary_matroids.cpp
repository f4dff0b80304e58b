#include "twolevel/binary_matroids.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "twolevel/error.hpp"
#include "twolevel/matroids.hpp"

namespace twolevel {

namespace {

// Reduced row echelon form over GF(2); zero rows dropped, rows ordered by pivot.
std::vector<boost::dynamic_bitset<>> gf2_rref(std::vector<boost::dynamic_bitset<>> rows, std::size_t d,
                                             std::vector<std::size_t>* pivots = nullptr) {
  std::size_t top = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < d && top < rows.size(); ++c) {
    std::size_t p = top;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[top], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != top && rows[i][c]) rows[i] ^= rows[top];
    piv.push_back(c);
    ++top;
  }
  rows.resize(top);
  if (pivots) *pivots = std::move(piv);
  return rows;
}

bool lex_set_less(Mask a, Mask b) {
  if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
  return to_set(a) < to_set(b);
}

BinaryMatroid drop_column(const BinaryMatroid& m, std::size_t j) {
  std::vector<boost::dynamic_bitset<>> rows;
  for (const auto& row : m.rows()) {
    boost::dynamic_bitset<> out(m.d() - 1);
    for (std::size_t c = 0, k = 0; c < m.d(); ++c)
      if (c != j) out[k++] = row[c];
    rows.push_back(std::move(out));
  }
  return BinaryMatroid(m.d() - 1, std::move(rows));
}

BinaryMatroid contract_column(const BinaryMatroid& m, std::size_t j) {
  auto rows = m.rows();
  std::size_t p = 0;
  while (p < rows.size() && !rows[p][j]) ++p;
  if (p < rows.size()) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != p && rows[i][j]) rows[i] ^= rows[p];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return drop_column(BinaryMatroid(m.d(), std::move(rows)), j);
}

}  // namespace

BinaryMatroid::BinaryMatroid(std::size_t d, std::vector<boost::dynamic_bitset<>> rows) : d_(d) {
  if (d > 32) fail(ErrorKind::SizeGuardExceeded, "binary matroids are limited to 32 elements");
  for (const auto& row : rows)
    if (row.size() != d) fail(ErrorKind::DimensionMismatch, "every row needs " + std::to_string(d) + " bits");
  rows_ = gf2_rref(std::move(rows), d);
  cols_.assign(d, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (rows_[i][j]) cols_[j] |= Mask{1} << i;
}

BinaryMatroid BinaryMatroid::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) fail(ErrorKind::EmptyInput, "matrix has no rows; give the column count explicitly");
  const std::size_t d = rows[0].size();
  std::vector<boost::dynamic_bitset<>> bits;
  for (const auto& s : rows) {
    if (s.size() != d) fail(ErrorKind::DimensionMismatch, "rows differ in length");
    boost::dynamic_bitset<> row(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (s[j] != '0' && s[j] != '1') fail(ErrorKind::BadInput, "bit strings use only 0 and 1");
      row[j] = s[j] == '1';
    }
    bits.push_back(std::move(row));
  }
  return BinaryMatroid(d, std::move(bits));
}

std::vector<std::string> BinaryMatroid::row_strings() const {
  std::vector<std::string> out;
  for (const auto& row : rows_) {
    std::string s(d_, '0');
    for (std::size_t j = 0; j < d_; ++j)
      if (row[j]) s[j] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t BinaryMatroid::rank(Mask s) const {
  std::vector<Mask> basis;  // xor basis keyed by highest bit
  for (auto j : to_set(s & ground())) {
    Mask v = cols_[j];
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return basis.size();
}

BinaryMatroid from_graph(const Graph& g) {
  const auto& e = g.edges();
  std::vector<boost::dynamic_bitset<>> rows(g.n(), boost::dynamic_bitset<>(e.size()));
  for (std::size_t j = 0; j < e.size(); ++j) {
    rows[e[j].first][j] = true;
    rows[e[j].second][j] = true;
  }
  return BinaryMatroid(e.size(), std::move(rows));
}

BinaryMatroid cographic(const Graph& g) { return dual(from_graph(g)); }

BinaryMatroid dual(const BinaryMatroid& m) {
  std::vector<std::size_t> piv;
  const auto rows = gf2_rref(m.rows(), m.d(), &piv);
  std::vector<bool> is_pivot(m.d(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<boost::dynamic_bitset<>> out;
  for (std::size_t j = 0; j < m.d(); ++j) {
    if (is_pivot[j]) continue;
    boost::dynamic_bitset<> row(m.d());
    row[j] = true;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][j]) row[piv[i]] = true;
    out.push_back(std::move(row));
  }
  return BinaryMatroid(m.d(), std::move(out));
}

std::vector<Mask> sort_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), lex_set_less);
  return sets;
}

CycleSpace cycle_basis(const BinaryMatroid& m) {
  // rows of the dual are the fundamental circuits of the pivot basis
  CycleSpace cs;
  const BinaryMatroid du = dual(m);
  for (const auto& row : du.rows()) {
    Mask c = 0;
    for (std::size_t j = 0; j < m.d(); ++j)
      if (row[j]) c |= Mask{1} << j;
    cs.basis.push_back(c);
  }
  cs.dim = cs.basis.size();
  require(cs.dim == m.d() - m.r(), "cycle space dimension differs from d - r");
  return cs;
}

std::vector<Mask> enumerate_cycles(const BinaryMatroid& m) {
  const auto cs = cycle_basis(m);
  if (cs.dim > 22) fail(ErrorKind::SizeGuardExceeded, "cycle enumeration needs d - r <= 22");
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << cs.dim);
  Mask cur = 0;
  out.push_back(cur);
  // Gray code walk over the span
  for (std::size_t i = 1; i < (std::size_t{1} << cs.dim); ++i) {
    cur ^= cs.basis[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(cur);
  }
  return sort_sets(std::move(out));
}

std::vector<Mask> circuits(const BinaryMatroid& m) {
  if (m.d() > 16) fail(ErrorKind::SizeGuardExceeded, "circuit search needs d <= 16");
  std::vector<Mask> found;
  const std::size_t d = m.d();
  for (std::size_t k = 1; k <= std::min(d, m.r() + 1); ++k) {
    for (Mask s = 0; s < (Mask{1} << d); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
      if (std::any_of(found.begin(), found.end(), [&](Mask c) { return (c & s) == c; })) continue;
      if (m.rank(s) < k) found.push_back(s);
    }
  }
  return sort_sets(std::move(found));
}

std::vector<Mask> cocircuits(const BinaryMatroid& m) { return circuits(dual(m)); }

bool has_chord(const std::vector<Mask>& family, Mask c) {
  const std::unordered_set<Mask> members(family.begin(), family.end());
  for (auto c1 : family) {
    const Mask outside = c1 & ~c, inside = c1 & c;
    if (std::popcount(outside) != 1 || inside == 0 || inside == c) continue;
    if (members.count((c & ~c1) | outside)) return true;
  }
  return false;
}

std::vector<Mask> chordless_cocircuits(const BinaryMatroid& m) {
  const auto all = cocircuits(m);
  std::vector<Mask> out;
  for (auto c : all)
    if (!has_chord(all, c)) out.push_back(c);
  return out;
}

Preprocessed preprocess(const BinaryMatroid& m) {
  Preprocessed p;
  p.m = m;
  for (std::size_t j = 0; j < m.d(); ++j) p.kept.push_back(j);
  for (bool changed = true; changed;) {
    changed = false;
    const Mask all = p.m.ground();
    for (std::size_t j = 0; j < p.m.d(); ++j)
      if (p.m.rank(all & ~(Mask{1} << j)) < p.m.r()) {
        p.coloops.push_back(p.kept[j]);
        p.kept.erase(p.kept.begin() + static_cast<std::ptrdiff_t>(j));
        p.m = drop_column(p.m, j);
        changed = true;
        break;
      }
    if (changed) continue;
    // {e, f} is a cocircuit iff e and f are parallel in the dual
    const BinaryMatroid du = dual(p.m);
    for (std::size_t e = 0; e < du.d() && !changed; ++e)
      for (std::size_t f = e + 1; f < du.d() && !changed; ++f)
        if (du.column(e) != 0 && du.column(e) == du.column(f)) {
          p.contracted.push_back(p.kept[f]);
          p.kept.erase(p.kept.begin() + static_cast<std::ptrdiff_t>(f));
          p.m = contract_column(p.m, f);
          changed = true;
        }
  }
  return p;
}

CycleReport cycle_polytope(const BinaryMatroid& m, const PolytopeOptions& opt) {
  if (m.d() > 16) fail(ErrorKind::SizeGuardExceeded, "cycle_polytope needs d <= 16");
  CycleReport rep;
  rep.pre = preprocess(m);
  const BinaryMatroid& pm = rep.pre.m;
  const std::size_t d = pm.d();

  std::vector<RatVector> pts;
  for (auto c : enumerate_cycles(pm)) {
    RatVector x(d, Rational(0));
    for (auto j : to_set(c)) x[j] = 1;
    pts.push_back(std::move(x));
  }
  rep.v = VPolytope(d, std::move(pts));

  const auto co = cocircuits(pm);
  for (auto c : co) {
    if (std::popcount(c) == 3) ++rep.cotriangles;
    if (std::popcount(c) == 4) ++rep.cocircuits4;
    if (!has_chord(co, c)) rep.chordless.push_back(c);
  }
  for (auto c : rep.chordless)
    if (std::popcount(c) >= 5) rep.long_chordless.push_back(c);
  rep.two_level_condition = rep.long_chordless.empty();

  HPolytope h;
  h.ambient_dim = d;
  for (std::size_t j = 0; j < d; ++j) {
    Halfspace lo{IntVector(d, Integer(0)), Integer(0)}, hi{IntVector(d, Integer(0)), Integer(1)};
    lo.a[j] = -1;
    hi.a[j] = 1;
    h.inequalities.push_back(std::move(lo));
    h.inequalities.push_back(std::move(hi));
  }
  for (auto c : rep.chordless) {
    // odd subsets F of C: x(F) - x(C \ F) <= |F| - 1
    for (Mask f = c;; f = (f - 1) & c) {
      if (std::popcount(f) % 2 == 1) {
        Halfspace row{IntVector(d, Integer(0)), Integer(std::popcount(f) - 1)};
        for (auto j : to_set(c)) row.a[j] = (f >> j & 1U) ? 1 : -1;
        h.inequalities.push_back(std::move(row));
      }
      if (f == 0) break;
    }
  }
  rep.raw_inequalities = h.inequalities.size();

  Integer fd1 = static_cast<unsigned long>(rep.raw_inequalities);
  rep.geometric = d > 0 && d <= opt.max_dim;
  if (rep.geometric) {
    const HPolytope facets = facets_of(rep.v, opt);
    rep.h = reduce_modulo_equations(remove_redundant(h, rep.v));
    rep.description_matches = rep.h.inequalities == facets.inequalities && rep.h.equations == facets.equations;
    rep.two_level = is_two_level(rep.v, facets).two_level;
    fd1 = static_cast<unsigned long>(facets.inequalities.size());
  } else {
    canonicalize(h);
    rep.h = std::move(h);
  }
  rep.summary = make_summary(affine_dimension(rep.v), Integer(static_cast<unsigned long>(rep.v.size())), fd1);

  rep.arithmetic_lhs = Integer(static_cast<unsigned long>(2 * rep.cotriangles + 4 * rep.cocircuits4));
  Integer pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(pm.r());
  rep.arithmetic_rhs = Integer(static_cast<unsigned long>(d)) * (pow2 - 1);
  rep.arithmetic_holds = rep.arithmetic_lhs <= rep.arithmetic_rhs;
  return rep;
}

std::vector<Mask> induced_cycles(const Graph& g) {
  if (g.n() > 20) fail(ErrorKind::SizeGuardExceeded, "induced cycle search needs n <= 20");
  if (g.edges().size() > 32) fail(ErrorKind::SizeGuardExceeded, "edge masks hold at most 32 edges");
  const auto adj = g.masks();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << g.n()); ++s) {
    if (std::popcount(s) < 3) continue;
    bool two_regular = true;
    for (auto v : to_set(s)) two_regular = two_regular && std::popcount(adj[v] & s) == 2;
    if (!two_regular) continue;
    // connected: grow from the lowest vertex
    Mask seen = s & -s, frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (auto v : to_set(frontier)) next |= adj[v] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != s) continue;
    Mask edges = 0;
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
      const auto [a, b] = g.edges()[j];
      if ((s >> a & 1U) && (s >> b & 1U)) edges |= Mask{1} << j;
    }
    out.push_back(edges);
  }
  return sort_sets(std::move(out));
}

CutReport cut_polytope(const Graph& g, const PolytopeOptions& opt) {
  if (g.edges().size() > 16) fail(ErrorKind::SizeGuardExceeded, "cut_polytope needs |E| <= 16");
  CutReport rep;
  const BinaryMatroid m = cographic(g);
  const auto cycles = induced_cycles(g);
  rep.induced_cycles_match = chordless_cocircuits(m) == cycles;
  rep.has_long_induced_cycle =
      std::any_of(cycles.begin(), cycles.end(), [](Mask c) { return std::popcount(c) >= 5; });
  rep.cycle = cycle_polytope(m, opt);
  return rep;
}

}  // namespace twolevel
