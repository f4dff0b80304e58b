#include "twolevel/posets.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "twolevel/error.hpp"

namespace twolevel {

namespace {

constexpr std::size_t kPosetGuard = 20;

void guard(const Poset& p) {
  if (p.n() > kPosetGuard)
    fail(ErrorKind::SizeGuardExceeded, "poset has " + std::to_string(p.n()) + " elements, limit is 20");
}

bool set_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<VertexSet> sorted_sets(std::vector<Mask> masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(to_set(m));
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

RatVector indicator(const VertexSet& s, std::size_t n) {
  RatVector x(n, Rational(0));
  for (auto i : s) x[i] = 1;
  return x;
}

Halfspace row(std::size_t n, const std::vector<std::pair<std::size_t, int>>& coeffs, int b) {
  Halfspace h;
  h.a.assign(n, Integer(0));
  for (auto [i, c] : coeffs) h.a[i] = c;
  h.b = b;
  return h;
}

}  // namespace

Poset::Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : n_(n), below_(n, 0), above_(n, 0) {
  if (n > 32) fail(ErrorKind::SizeGuardExceeded, "poset larger than 32 elements");
  for (std::size_t v = 0; v < n; ++v) below_[v] = Mask{1} << v;
  for (auto [i, j] : relations) {
    if (i >= n || j >= n) fail(ErrorKind::BadInput, "relation element out of range");
    below_[j] |= Mask{1} << i;
  }
  // Warshall closure on masks
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (below_[j] >> k & 1U) below_[j] |= below_[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq(i, j) && leq(j, i))
        fail(ErrorKind::BadInput, "relations contain a cycle through " + std::to_string(i) + " and " + std::to_string(j));
  for (std::size_t j = 0; j < n; ++j)
    for (Mask r = below_[j]; r; r &= r - 1) above_[static_cast<std::size_t>(std::countr_zero(r))] |= Mask{1} << j;
  for (std::size_t j = 0; j < n; ++j) {
    const Mask strict = down(j);
    for (Mask r = strict; r; r &= r - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(r));
      // i is covered by j iff no k with i < k < j
      if ((up(i) & strict) == 0) covers_.emplace_back(i, j);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::vector<std::size_t> Poset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v)
    if (down(v) == 0) out.push_back(v);
  return out;
}

std::vector<std::size_t> Poset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v)
    if (up(v) == 0) out.push_back(v);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && leq(i, j)) out.emplace_back(i, j);
  return out;
}

Poset chain_poset(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> r;
  for (std::size_t i = 0; i + 1 < n; ++i) r.emplace_back(i, i + 1);
  return Poset(n, r);
}

Poset antichain_poset(std::size_t n) { return Poset(n, {}); }

Poset random_poset(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) r.emplace_back(i, j);
  return Poset(n, r);
}

std::vector<VertexSet> closed_sets(const Poset& p) {
  guard(p);
  std::vector<Mask> out;
  const Mask limit = Mask{1} << p.n();
  for (Mask s = 0; s < limit; ++s) {
    bool closed = true;
    for (Mask r = s; r && closed; r &= r - 1)
      if ((p.down(static_cast<std::size_t>(std::countr_zero(r))) & ~s) != 0) closed = false;
    if (closed) out.push_back(s);
  }
  return sorted_sets(std::move(out));
}

std::vector<VertexSet> antichains(const Poset& p) {
  guard(p);
  return enumerate_stable_sets(comparability_graph(p), true);
}

std::vector<VertexSet> chains(const Poset& p, bool include_empty) {
  guard(p);
  return enumerate_cliques(comparability_graph(p), include_empty);
}

std::vector<VertexSet> maximal_chains(const Poset& p) {
  guard(p);
  return maximal_cliques(comparability_graph(p));
}

Graph comparability_graph(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j)
      if (p.comparable(i, j)) e.emplace_back(i, j);
  return Graph(p.n(), e);
}

PolytopePair order_polytope(const Poset& p) {
  const std::size_t n = p.n();
  std::vector<RatVector> pts;
  for (const auto& s : closed_sets(p)) pts.push_back(indicator(s, n));
  PolytopePair out{VPolytope(n, std::move(pts)), HPolytope{}};
  out.h.ambient_dim = n;
  for (auto [i, j] : p.covers()) out.h.inequalities.push_back(row(n, {{i, -1}, {j, 1}}, 0));
  for (auto i : p.minimal()) out.h.inequalities.push_back(row(n, {{i, 1}}, 1));
  for (auto j : p.maximal()) out.h.inequalities.push_back(row(n, {{j, -1}}, 0));
  canonicalize(out.h);
  return out;
}

PolytopePair chain_polytope(const Poset& p) {
  const std::size_t n = p.n();
  std::vector<RatVector> pts;
  for (const auto& s : antichains(p)) pts.push_back(indicator(s, n));
  PolytopePair out{VPolytope(n, std::move(pts)), HPolytope{}};
  out.h.ambient_dim = n;
  for (std::size_t i = 0; i < n; ++i) out.h.inequalities.push_back(row(n, {{i, -1}}, 0));
  for (const auto& c : maximal_chains(p)) {
    std::vector<std::pair<std::size_t, int>> coeffs;
    for (auto i : c) coeffs.emplace_back(i, 1);
    out.h.inequalities.push_back(row(n, coeffs, 1));
  }
  canonicalize(out.h);
  return out;
}

HibiReport hibi_check(const Poset& p, const PolytopeOptions& opt) {
  HibiReport r;
  r.order_facets = facets_of(order_polytope(p).v, opt).inequalities.size();
  r.chain_facets = facets_of(chain_polytope(p).v, opt).inequalities.size();
  r.holds = r.order_facets <= r.chain_facets;
  return r;
}

DoubleOrderResult double_order_polytope(const Poset& p, const PolytopeOptions& opt) {
  const std::size_t n = p.n();
  std::vector<RatVector> pts;
  for (const auto& s : closed_sets(p)) {
    RatVector up(n + 1, Rational(0)), down(n + 1, Rational(0));
    for (auto i : s) {
      up[i] = 2;
      down[i] = -2;
    }
    up[n] = 1;
    down[n] = -1;
    pts.push_back(std::move(up));
    pts.push_back(std::move(down));
  }
  DoubleOrderResult r;
  r.v = VPolytope(n + 1, std::move(pts));
  r.summary = summary(r.v, opt);
  r.antichains = antichains(p).size();
  r.chains = chains(p, true).size();
  r.formula_matches = r.summary.f0 == static_cast<unsigned long>(2 * r.antichains) &&
                      r.summary.fd1 == static_cast<unsigned long>(2 * r.chains);
  return r;
}

}  // namespace twolevel
