#include "twolevel/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "twolevel/error.hpp"

namespace twolevel {

namespace {

Integer to_integer(std::size_t x) { return Integer(static_cast<unsigned long>(x)); }

RatVector indicator(const VertexSet& s, std::size_t n) {
  RatVector x(n, Rational(0));
  for (auto i : s) x[i] = 1;
  return x;
}

}  // namespace

PolytopePair stab(const Graph& g) {
  if (g.n() > 14) fail(ErrorKind::SizeGuardExceeded, "stab: n = " + std::to_string(g.n()) + " exceeds 14");
  if (!is_perfect(g)) fail(ErrorKind::NotPerfect, "stab needs a perfect graph");
  const std::size_t n = g.n();
  std::vector<RatVector> pts;
  for (const auto& s : enumerate_stable_sets(g, true)) pts.push_back(indicator(s, n));
  PolytopePair out{VPolytope(n, std::move(pts)), HPolytope{}};
  out.h.ambient_dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    Halfspace h{IntVector(n, Integer(0)), Integer(0)};
    h.a[i] = -1;
    out.h.inequalities.push_back(std::move(h));
  }
  for (const auto& c : maximal_cliques(g)) {
    Halfspace h{IntVector(n, Integer(0)), Integer(1)};
    for (auto i : c) h.a[i] = 1;
    out.h.inequalities.push_back(std::move(h));
  }
  canonicalize(out.h);
  return out;
}

FamilyResult hansen(const Graph& g, const PolytopeOptions& opt) {
  const std::size_t d = g.n() + 1;
  if (d > 12) fail(ErrorKind::SizeGuardExceeded, "hansen: d = " + std::to_string(d) + " exceeds 12");
  FamilyResult r;
  r.v = twisted_prism(stab(g).v);
  r.f0_formula = 2 * to_integer(enumerate_stable_sets(g, true).size());
  r.fd1_formula = 2 * to_integer(enumerate_cliques(g, true).size());
  if (d <= 10) {
    r.summary = summary(r.v, opt);
  } else {
    r.formula_only = true;
    r.summary = make_summary(d, to_integer(r.v.size()), r.fd1_formula);
  }
  return r;
}

Graph switch_graph(std::size_t d, std::size_t l) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  const std::size_t m = d - 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m && j - i <= l - 1; ++j) e.emplace_back(i, j);
  return Graph(m, e);
}

MinUpDownResult min_updown(const MinUpDownParams& p) {
  const std::size_t d = p.d, l = p.l;
  if (!(0 < l && l < d && d <= 14))
    fail(ErrorKind::BadParams, "min_updown needs 0 < l < d <= 14, got d=" + std::to_string(d) + " l=" + std::to_string(l));

  MinUpDownResult r;
  r.switch_graph = switch_graph(d, l);

  // Bit k of x is coordinate k+1. Bit k of a switch mask is index k+1.
  std::map<Mask, std::size_t> fibre;
  std::vector<RatVector> pts;
  for (Mask x = 0; x < (Mask{1} << d); ++x) {
    const Mask sw = (x ^ (x >> 1)) & ((Mask{1} << (d - 1)) - 1);
    bool ok = true;
    for (Mask a = sw; a && ok; a &= a - 1) {
      const int i = std::countr_zero(a);
      const Mask later = sw & ~((Mask{2} << i) - 1);
      if (later && std::countr_zero(later) - i < static_cast<int>(l)) ok = false;
    }
    if (!ok) continue;
    ++fibre[sw];
    RatVector v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = (x >> k) & 1U;
    pts.push_back(std::move(v));
  }
  r.v = VPolytope(d, std::move(pts));

  const auto stable = enumerate_stable_sets(r.switch_graph, true);
  r.switch_map_two_to_one = fibre.size() == stable.size();
  for (const auto& s : stable) {
    auto it = fibre.find(to_mask(s));
    if (it == fibre.end() || it->second != 2) r.switch_map_two_to_one = false;
  }

  r.h.ambient_dim = d;
  for (Mask s = 1; s < (Mask{1} << d); ++s) {
    if (std::popcount(s) % 2 == 0) continue;
    const int lo = std::countr_zero(s);
    const int hi = 31 - std::countl_zero(s);
    if (static_cast<std::size_t>(hi - lo) > l) continue;
    VertexSet idx;  // 1-based
    for (Mask a = s; a; a &= a - 1) idx.push_back(static_cast<std::size_t>(std::countr_zero(a)) + 1);
    Halfspace up{IntVector(d, Integer(0)), Integer(1)};
    Halfspace low{IntVector(d, Integer(0)), Integer(0)};
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const int sign = j % 2 == 0 ? 1 : -1;
      up.a[idx[j] - 1] = sign;
      low.a[idx[j] - 1] = -sign;
    }
    r.h.inequalities.push_back(std::move(up));
    r.h.inequalities.push_back(std::move(low));
    r.index_sets.push_back(std::move(idx));
  }
  canonicalize(r.h);

  // I -> I \ {min(min I + l, d)} should be a bijection onto the cliques of
  // G_{d,l} including the empty one.
  const auto cliques = enumerate_cliques(r.switch_graph, true);
  std::set<VertexSet> image;
  bool ok = true;
  for (const auto& I : r.index_sets) {
    const std::size_t j = std::min(I.front() + l, d);
    VertexSet J;
    for (auto i : I)
      if (i != j) J.push_back(i - 1);
    if (!J.empty() && J.back() >= d - 1) ok = false;
    image.insert(J);
  }
  std::set<VertexSet> clique_set(cliques.begin(), cliques.end());
  r.index_set_bijection = ok && image.size() == r.index_sets.size() && image == clique_set;
  return r;
}

FamilyResult birkhoff(std::size_t n, const PolytopeOptions& opt) {
  if (n < 2 || n > 5) fail(ErrorKind::BadParams, "birkhoff needs 2 <= n <= 5");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<RatVector> pts;
  do {
    RatVector x(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) x[i * n + perm[i]] = 1;
    pts.push_back(std::move(x));
  } while (std::next_permutation(perm.begin(), perm.end()));
  FamilyResult r;
  r.v = VPolytope(n * n, std::move(pts));
  r.f0_formula = to_integer(r.v.size());
  r.fd1_formula = n == 2 ? Integer(2) : to_integer(n * n);
  if (n <= 4) {
    r.summary = summary(r.v, opt);
  } else {
    r.formula_only = true;
    r.summary = make_summary((n - 1) * (n - 1), r.f0_formula, r.fd1_formula);
  }
  return r;
}

HannerExpr HannerExpr::polar_of(HannerExpr child) {
  HannerExpr e;
  e.kind = Kind::Polar;
  e.children.push_back(std::move(child));
  return e;
}

HannerExpr HannerExpr::product_of(std::vector<HannerExpr> children) {
  if (children.empty()) fail(ErrorKind::BadInput, "product of no factors");
  HannerExpr e;
  e.kind = Kind::Product;
  e.children = std::move(children);
  return e;
}

std::size_t HannerExpr::dimension() const {
  switch (kind) {
    case Kind::Segment: return 1;
    case Kind::Polar: return children.at(0).dimension();
    case Kind::Product: {
      std::size_t d = 0;
      for (const auto& c : children) d += c.dimension();
      return d;
    }
  }
  return 0;
}

std::string HannerExpr::to_string() const {
  switch (kind) {
    case Kind::Segment: return "seg";
    case Kind::Polar: return "polar(" + children.at(0).to_string() + ")";
    case Kind::Product: {
      std::string s = "prod(";
      for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i].to_string();
      return s + ")";
    }
  }
  return {};
}

namespace {

struct HannerParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  bool eat(std::string_view token) {
    skip();
    if (text.substr(pos, token.size()) != token) return false;
    pos += token.size();
    return true;
  }
  [[noreturn]] void error() const {
    fail(ErrorKind::BadInput, "malformed Hanner expression at offset " + std::to_string(pos) + ": '" + std::string(text) + "'");
  }
  HannerExpr expr() {
    if (eat("seg")) return HannerExpr::segment();
    if (eat("polar(")) {
      HannerExpr inner = expr();
      if (!eat(")")) error();
      return HannerExpr::polar_of(std::move(inner));
    }
    if (eat("prod(")) {
      std::vector<HannerExpr> kids{expr()};
      while (eat(",")) kids.push_back(expr());
      if (!eat(")")) error();
      return HannerExpr::product_of(std::move(kids));
    }
    error();
  }
};

}  // namespace

HannerExpr parse_hanner(std::string_view text) {
  HannerParser p{text};
  HannerExpr e = p.expr();
  p.skip();
  if (p.pos != text.size()) p.error();
  return e;
}

FamilyResult hanner(const HannerExpr& e, const PolytopeOptions& opt) {
  const std::size_t d = e.dimension();
  if (d > 10) fail(ErrorKind::DimensionGuardExceeded, "hanner: d = " + std::to_string(d) + " exceeds 10");
  struct Build {
    const PolytopeOptions& opt;
    VPolytope operator()(const HannerExpr& x) const {
      switch (x.kind) {
        case HannerExpr::Kind::Segment: return VPolytope(1, {{Rational(-1)}, {Rational(1)}});
        case HannerExpr::Kind::Polar: return polar((*this)(x.children.at(0)), opt);
        case HannerExpr::Kind::Product: {
          VPolytope acc = (*this)(x.children[0]);
          for (std::size_t i = 1; i < x.children.size(); ++i) acc = product(acc, (*this)(x.children[i]));
          return acc;
        }
      }
      return {};
    }
  };
  FamilyResult r;
  r.v = Build{opt}(e);
  r.summary = summary(r.v, opt);
  r.f0_formula = r.summary.f0;
  r.fd1_formula = r.summary.fd1;
  return r;
}

std::vector<HannerExpr> hanner_expressions(std::size_t d) {
  // irreducible(k): seg for k = 1, polar of a product otherwise.
  // products(k): multisets of >= 2 irreducibles with dimensions summing to k.
  std::vector<std::vector<HannerExpr>> irreducible(d + 1), products(d + 1);
  for (std::size_t k = 1; k <= d; ++k) {
    // enumerate non-increasing sequences of (dimension, index) pairs
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    std::vector<HannerExpr>& out = products[k];
    auto rec = [&](auto&& self, std::size_t left, std::pair<std::size_t, std::size_t> cap) -> void {
      if (left == 0) {
        if (parts.size() < 2) return;
        std::vector<HannerExpr> kids;
        for (auto [dim, idx] : parts) kids.push_back(irreducible[dim][idx]);
        out.push_back(HannerExpr::product_of(std::move(kids)));
        return;
      }
      for (std::size_t dim = std::min(left, cap.first); dim >= 1; --dim) {
        const std::size_t top = dim == cap.first ? cap.second : irreducible[dim].size() - 1;
        if (dim == k) continue;  // a single factor is not a product
        for (std::size_t idx = 0; idx <= top && idx < irreducible[dim].size(); ++idx) {
          parts.emplace_back(dim, idx);
          self(self, left - dim, std::pair{dim, idx});
          parts.pop_back();
        }
      }
    };
    if (k >= 2) rec(rec, k, std::pair{k - 1, std::size_t(-1)});
    if (k == 1) irreducible[1].push_back(HannerExpr::segment());
    for (const auto& p : products[k]) irreducible[k].push_back(HannerExpr::polar_of(p));
  }
  std::vector<HannerExpr> all = irreducible[d];
  all.insert(all.end(), products[d].begin(), products[d].end());
  return all;
}

EqualityShape equality_shape(const VPolytope& v, const HPolytope& facets) {
  const std::size_t d = affine_dimension(v);
  const std::size_t f0 = v.size(), fd1 = facets.inequalities.size();
  if (d == 0) return EqualityShape::None;
  const std::size_t p2 = std::size_t{1} << d;
  const std::size_t e = count_edges(v, facets);
  if (f0 == p2 && fd1 == 2 * d && e == d * (p2 / 2)) return EqualityShape::Cube;
  if (f0 == 2 * d && fd1 == p2 && e == 2 * d * (d - 1)) return EqualityShape::CrossPolytope;
  return EqualityShape::None;
}

}  // namespace twolevel
