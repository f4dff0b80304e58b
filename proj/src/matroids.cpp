#include "twolevel/matroids.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "twolevel/error.hpp"

namespace twolevel {

namespace {

// Removes bit i and shifts the higher bits down.
Mask drop_bit(Mask m, std::size_t i) {
  const Mask low = (Mask{1} << i) - 1;
  return (m & low) | ((m >> 1) & ~low);
}

Matroid reorder(const Matroid& m, const std::vector<std::string>& names) {
  std::vector<std::size_t> pos(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) pos[i] = m.index(names[i]);
  std::vector<Mask> bases;
  bases.reserve(m.bases().size());
  for (auto b : m.bases()) {
    Mask out = 0;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (b >> pos[i] & 1U) out |= Mask{1} << i;
    bases.push_back(out);
  }
  return Matroid(names, std::move(bases), false);
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
};

RatVector indicator(Mask b, std::size_t n) {
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    if (b >> i & 1U) x[i] = 1;
  return x;
}

}  // namespace

Matroid::Matroid(std::vector<std::string> elements, std::vector<Mask> bases, bool check_exchange)
    : elements_(std::move(elements)), bases_(std::move(bases)) {
  if (elements_.size() > 32) fail(ErrorKind::SizeGuardExceeded, "matroids are limited to 32 elements");
  {
    std::set<std::string> seen;
    for (const auto& e : elements_)
      if (!seen.insert(e).second) fail(ErrorKind::NameClash, "element name '" + e + "' used twice");
  }
  if (bases_.empty()) fail(ErrorKind::BadInput, "a matroid needs at least one base");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_ = static_cast<std::size_t>(std::popcount(bases_[0]));
  for (auto b : bases_) {
    if ((b & ~ground()) != 0) fail(ErrorKind::BadInput, "base uses an element outside the ground set");
    if (static_cast<std::size_t>(std::popcount(b)) != rank_) fail(ErrorKind::BadInput, "bases differ in size");
  }
  if (check_exchange && elements_.size() <= 12) {
    for (auto b1 : bases_)
      for (auto b2 : bases_)
        for (Mask x = b1 & ~b2; x; x &= x - 1) {
          const Mask xb = x & -x;
          bool ok = false;
          for (Mask y = b2 & ~b1; y && !ok; y &= y - 1) ok = is_base((b1 & ~xb) | (y & -y));
          if (!ok) fail(ErrorKind::BadInput, "base family violates the exchange axiom");
        }
  }
}

std::optional<std::size_t> Matroid::find(const std::string& name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Matroid::index(const std::string& name) const {
  auto i = find(name);
  if (!i) fail(ErrorKind::BadInput, "no element named '" + name + "'");
  return *i;
}

Mask Matroid::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& s : names) m |= Mask{1} << index(s);
  return m;
}

std::vector<std::string> Matroid::names_of(Mask m) const {
  std::vector<std::string> out;
  for (auto i : to_set(m)) out.push_back(elements_[i]);
  return out;
}

bool Matroid::is_base(Mask m) const { return std::binary_search(bases_.begin(), bases_.end(), m); }

bool Matroid::is_loop(std::size_t e) const {
  return std::none_of(bases_.begin(), bases_.end(), [&](Mask b) { return b >> e & 1U; });
}

bool Matroid::is_coloop(std::size_t e) const {
  return std::all_of(bases_.begin(), bases_.end(), [&](Mask b) { return b >> e & 1U; });
}

Matroid uniform(std::size_t n, std::size_t k, std::vector<std::string> names) {
  if (k > n) fail(ErrorKind::BadParams, "uniform matroid needs k <= n");
  if (names.size() != n) fail(ErrorKind::BadParams, "uniform matroid needs n names");
  if (n > 32) fail(ErrorKind::SizeGuardExceeded, "uniform matroid with more than 32 elements");
  std::vector<Mask> bases;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == k) bases.push_back(static_cast<Mask>(s));
  return Matroid(std::move(names), std::move(bases), false);
}

Matroid uniform(std::size_t n, std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return uniform(n, k, std::move(names));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  for (const auto& e : b.elements())
    if (a.find(e)) fail(ErrorKind::NameClash, "direct_sum: element '" + e + "' in both summands");
  std::vector<std::string> names = a.elements();
  names.insert(names.end(), b.elements().begin(), b.elements().end());
  std::vector<Mask> bases;
  for (auto x : a.bases())
    for (auto y : b.bases()) bases.push_back(x | (y << a.size()));
  return Matroid(std::move(names), std::move(bases), false);
}

std::size_t rank(const Matroid& m, Mask f) {
  int best = 0;
  for (auto b : m.bases()) best = std::max(best, std::popcount(b & f));
  return static_cast<std::size_t>(best);
}

std::size_t rank(const Matroid& m, const std::vector<std::string>& f) { return rank(m, m.mask_of(f)); }

Matroid delete_element(const Matroid& m, const std::string& e) {
  const std::size_t i = m.index(e);
  const bool coloop = m.is_coloop(i);
  std::vector<Mask> bases;
  for (auto b : m.bases())
    if (coloop || !(b >> i & 1U)) bases.push_back(drop_bit(b, i));
  auto names = m.elements();
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(i));
  return Matroid(std::move(names), std::move(bases), false);
}

Matroid contract_element(const Matroid& m, const std::string& e) {
  const std::size_t i = m.index(e);
  if (m.is_loop(i)) return delete_element(m, e);
  std::vector<Mask> bases;
  for (auto b : m.bases())
    if (b >> i & 1U) bases.push_back(drop_bit(b, i));
  auto names = m.elements();
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(i));
  return Matroid(std::move(names), std::move(bases), false);
}

bool is_connected(const Matroid& m) {
  const std::size_t n = m.size();
  if (n <= 1) return true;
  if (n > 20) fail(ErrorKind::SizeGuardExceeded, "connectivity test scans 2^|E| subsets; |E| <= 20");
  const std::size_t r = m.rank();
  const Mask all = m.ground();
  // separators containing element 0 suffice
  for (Mask s = 1; s < all; s += 2)
    if (rank(m, s) + rank(m, all & ~s) == r) return false;
  return true;
}

Matroid two_sum(const Matroid& a, const Matroid& b, const std::string& p) {
  const auto pa = a.find(p), pb = b.find(p);
  if (!pa || !pb) fail(ErrorKind::SharedElementInvalid, "two_sum: '" + p + "' is not in both matroids");
  for (const auto& e : b.elements())
    if (e != p && a.find(e)) fail(ErrorKind::NameClash, "two_sum: '" + e + "' in both matroids besides '" + p + "'");
  if (a.is_loop(*pa) || a.is_coloop(*pa) || b.is_loop(*pb) || b.is_coloop(*pb))
    fail(ErrorKind::SharedElementInvalid, "two_sum: '" + p + "' is a loop or coloop");
  std::vector<std::string> names;
  for (const auto& e : a.elements())
    if (e != p) names.push_back(e);
  for (const auto& e : b.elements())
    if (e != p) names.push_back(e);
  const std::size_t shift = a.size() - 1;
  std::vector<Mask> bases;
  for (auto x : a.bases())
    for (auto y : b.bases()) {
      const bool in_x = x >> *pa & 1U, in_y = y >> *pb & 1U;
      if (in_x == in_y) continue;
      bases.push_back(drop_bit(x, *pa) | (drop_bit(y, *pb) << shift));
    }
  return Matroid(std::move(names), std::move(bases), false);
}

bool same_bases(const Matroid& a, const Matroid& b) { return a.size() == b.size() && a.bases() == b.bases(); }

bool equal_matroids(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> sa = a.elements(), sb = b.elements();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return same_bases(a, reorder(b, a.elements()));
}

void TwoSumTree::validate() const {
  if (nodes.empty()) fail(ErrorKind::BadInput, "tree has no nodes");
  std::set<std::size_t> ids;
  for (const auto& nd : nodes) {
    if (!ids.insert(nd.id).second) fail(ErrorKind::BadInput, "duplicate node id " + std::to_string(nd.id));
    if (nd.elements.size() != nd.n) fail(ErrorKind::BadInput, "node " + std::to_string(nd.id) + ": n differs from its element list");
    if (nd.n < 3) fail(ErrorKind::BadInput, "node " + std::to_string(nd.id) + ": uniform nodes need n >= 3");
    if (nd.k == 0 || nd.k >= nd.n) fail(ErrorKind::BadInput, "node " + std::to_string(nd.id) + ": need 0 < k < n");
    std::set<std::string> names(nd.elements.begin(), nd.elements.end());
    if (names.size() != nd.n) fail(ErrorKind::NameClash, "node " + std::to_string(nd.id) + " repeats an element");
  }
  if (edges.size() + 1 != nodes.size()) fail(ErrorKind::BadInput, "a tree on t nodes has t-1 edges");
  Dsu dsu(nodes.size());
  std::map<std::string, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (const auto& e : nodes[i].elements) where[e].push_back(i);
  std::set<std::string> shared;
  for (const auto& ed : edges) {
    const std::size_t a = node_index(ed.a), b = node_index(ed.b);
    if (a == b) fail(ErrorKind::BadInput, "edge joins a node to itself");
    if (dsu.find(a) == dsu.find(b)) fail(ErrorKind::BadInput, "edges contain a cycle");
    dsu.parent[dsu.find(a)] = dsu.find(b);
    if (!shared.insert(ed.shared).second)
      fail(ErrorKind::SharedElementInvalid, "element '" + ed.shared + "' shared by two edges");
    const auto it = where.find(ed.shared);
    std::vector<std::size_t> expect{std::min(a, b), std::max(a, b)};
    if (it == where.end() || it->second != expect)
      fail(ErrorKind::SharedElementInvalid, "element '" + ed.shared + "' must lie in exactly the two endpoint nodes");
  }
  for (const auto& [name, list] : where)
    if (!shared.count(name) && list.size() != 1)
      fail(ErrorKind::NameClash, "element '" + name + "' appears in two nodes without an edge");
}

std::size_t TwoSumTree::node_index(std::size_t id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return i;
  fail(ErrorKind::BadInput, "no node with id " + std::to_string(id));
}

std::vector<std::string> TwoSumTree::ground_set() const {
  std::set<std::string> shared;
  for (const auto& e : edges) shared.insert(e.shared);
  std::vector<std::string> out;
  for (const auto& nd : nodes)
    for (const auto& e : nd.elements)
      if (!shared.count(e)) out.push_back(e);
  return out;
}

Matroid compose_tree(const TwoSumTree& t) {
  std::vector<std::size_t> order(t.edges.size());
  std::iota(order.begin(), order.end(), 0);
  return compose_tree(t, order);
}

Matroid compose_tree(const TwoSumTree& t, const std::vector<std::size_t>& edge_order) {
  t.validate();
  std::vector<Matroid> label;
  for (const auto& nd : t.nodes) label.push_back(uniform(nd.n, nd.k, nd.elements));
  Dsu dsu(t.nodes.size());
  for (auto ei : edge_order) {
    const auto& ed = t.edges.at(ei);
    const std::size_t a = dsu.find(t.node_index(ed.a)), b = dsu.find(t.node_index(ed.b));
    label[a] = two_sum(label[a], label[b], ed.shared);
    dsu.parent[b] = a;
  }
  return reorder(label[dsu.find(0)], t.ground_set());
}

Integer base_count(const TwoSumTree& t) {
  t.validate();
  std::map<std::string, std::size_t> edge_of;
  for (std::size_t i = 0; i < t.edges.size(); ++i) edge_of[t.edges[i].shared] = i;
  // returns coefficients of prod over the node's elements other than `up`
  struct Walk {
    const TwoSumTree& t;
    const std::map<std::string, std::size_t>& edge_of;
    std::pair<Integer, Integer> counts(std::size_t node, const std::string& up) const {
      std::vector<Integer> poly{Integer(1)};
      auto mul = [&](const Integer& c0, const Integer& c1) {
        std::vector<Integer> next(poly.size() + 1, Integer(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i] += c0 * poly[i];
          next[i + 1] += c1 * poly[i];
        }
        poly = std::move(next);
      };
      const auto& nd = t.nodes[node];
      for (const auto& e : nd.elements) {
        if (e == up) continue;
        auto it = edge_of.find(e);
        if (it == edge_of.end()) {
          mul(Integer(1), Integer(1));
          continue;
        }
        const auto& ed = t.edges[it->second];
        const std::size_t a = t.node_index(ed.a), b = t.node_index(ed.b);
        const std::size_t child = a == node ? b : a;
        // child part avoids e when e is in the node's base, contains it otherwise
        auto [without, with] = counts(child, e);
        mul(with, without);
      }
      auto coeff = [&](std::size_t i) { return i < poly.size() ? poly[i] : Integer(0); };
      if (up.empty()) return {coeff(nd.k), Integer(0)};
      return {coeff(nd.k), nd.k == 0 ? Integer(0) : coeff(nd.k - 1)};
    }
  };
  return Walk{t, edge_of}.counts(0, "").first;
}

VPolytope base_polytope(const Matroid& m) {
  if (m.size() > 14) fail(ErrorKind::SizeGuardExceeded, "base_polytope: |E| = " + std::to_string(m.size()) + " exceeds 14");
  std::vector<RatVector> pts;
  pts.reserve(m.bases().size());
  for (auto b : m.bases()) pts.push_back(indicator(b, m.size()));
  return VPolytope(m.size(), std::move(pts));
}

TreeDescription tree_description(const TwoSumTree& t) {
  const Matroid m = compose_tree(t);
  const std::size_t n = m.size();
  TreeDescription out;
  out.h.ambient_dim = n;
  for (std::size_t e = 0; e < n; ++e) {
    Halfspace lo{IntVector(n, Integer(0)), Integer(0)}, hi{IntVector(n, Integer(0)), Integer(1)};
    lo.a[e] = -1;
    hi.a[e] = 1;
    out.h.inequalities.push_back(std::move(lo));
    out.h.inequalities.push_back(std::move(hi));
  }
  out.h.equations.push_back(Hyperplane{IntVector(n, Integer(1)), Integer(static_cast<unsigned long>(m.rank()))});

  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    for (const auto& e : t.nodes[i].elements) owner[e] = i;

  out.ranks_match = true;
  for (std::size_t a = 0; a < t.edges.size(); ++a) {
    // side 1: nodes reachable from the first endpoint without edge a
    std::vector<int> side(t.nodes.size(), 2);
    std::vector<std::size_t> stack{t.node_index(t.edges[a].a)};
    side[stack[0]] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < t.edges.size(); ++b) {
        if (b == a) continue;
        const std::size_t x = t.node_index(t.edges[b].a), y = t.node_index(t.edges[b].b);
        const std::size_t w = x == v ? y : (y == v ? x : v);
        if (w != v && side[w] == 2) {
          side[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int s : {1, 2}) {
      CutInequality cut;
      cut.edge = a;
      cut.side = s;
      std::size_t nodes_in = 0, ksum = 0;
      for (std::size_t i = 0; i < t.nodes.size(); ++i)
        if (side[i] == s) {
          ++nodes_in;
          ksum += t.nodes[i].k;
        }
      cut.formula_rank = 1 + ksum - nodes_in;
      Halfspace row{IntVector(n, Integer(0)), Integer(static_cast<unsigned long>(cut.formula_rank))};
      for (std::size_t e = 0; e < n; ++e)
        if (side[owner.at(m.elements()[e])] == s) {
          cut.elements.push_back(m.elements()[e]);
          row.a[e] = 1;
        }
      cut.oracle_rank = rank(m, cut.elements);
      out.ranks_match = out.ranks_match && cut.oracle_rank == cut.formula_rank;
      out.h.inequalities.push_back(std::move(row));
      out.cuts.push_back(std::move(cut));
    }
  }
  out.raw_inequalities = out.h.inequalities.size();
  canonicalize(out.h);
  return out;
}

HPolytope remove_redundant(const HPolytope& h, const VPolytope& v) {
  const std::size_t d = affine_dimension(v);
  HPolytope out;
  out.ambient_dim = h.ambient_dim;
  out.equations = h.equations;
  std::set<std::vector<bool>> seen;
  for (const auto& row : h.inequalities) {
    std::vector<bool> tight(v.size());
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational s = Rational(row.b) - dot(row.a, v.vertices()[i]);
      require(sgn(s) >= 0, "remove_redundant: a vertex violates an inequality");
      tight[i] = sgn(s) == 0;
      if (tight[i]) pts.push_back(v.vertices()[i]);
    }
    if (pts.empty() || pts.size() == v.size()) continue;
    if (affine_dimension(VPolytope(v.ambient_dim(), pts)) + 1 != d) continue;
    if (!seen.insert(tight).second) continue;
    out.inequalities.push_back(row);
  }
  out.irredundant = true;
  return out;
}

std::vector<std::pair<Mask, Mask>> all_two_separations(const Matroid& m) {
  if (m.size() > 12) fail(ErrorKind::SizeGuardExceeded, "two_separation: |E| <= 12");
  if (!is_connected(m)) fail(ErrorKind::Disconnected, "two_separation needs a connected matroid");
  std::vector<std::pair<Mask, Mask>> out;
  const Mask all = m.ground();
  for (Mask s = 1; s < all; s += 2) {
    const Mask rest = all & ~s;
    if (std::popcount(s) < 2 || std::popcount(rest) < 2) continue;
    if (rank(m, s) + rank(m, rest) == m.rank() + 1) out.emplace_back(s, rest);
  }
  return out;
}

std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> two_separation(const Matroid& m) {
  const auto all = all_two_separations(m);
  if (all.empty()) return std::nullopt;
  return std::pair{m.names_of(all[0].first), m.names_of(all[0].second)};
}

MatroidCheck conjecture_check_matroid(const std::vector<TwoSumTree>& forest) {
  if (forest.empty()) fail(ErrorKind::EmptyInput, "no trees given");
  std::set<std::string> names;
  std::size_t total = 0, d = 0;
  for (const auto& t : forest) {
    t.validate();
    for (const auto& e : t.ground_set())
      if (!names.insert(e).second) fail(ErrorKind::NameClash, "element '" + e + "' in two trees");
    total += t.ground_set().size();
    d += t.ground_set().size() - 1;
  }
  MatroidCheck c;
  c.f0_recursion = 1;
  for (const auto& t : forest) c.f0_recursion *= base_count(t);

  Integer fd1 = 0;
  c.geometric = total <= 14;
  c.description_matches = c.geometric;
  c.two_level = c.geometric;
  if (c.geometric) {
    c.f0_enumerated = 1;
    for (const auto& t : forest) {
      const Matroid m = compose_tree(t);
      const VPolytope v = base_polytope(m);
      c.f0_enumerated *= static_cast<unsigned long>(v.size());
      const HPolytope reduced = reduce_modulo_equations(remove_redundant(tree_description(t).h, v));
      const HPolytope facets = facets_of(v);
      fd1 += static_cast<unsigned long>(reduced.inequalities.size());
      c.description_matches = c.description_matches && reduced.inequalities == facets.inequalities &&
                              reduced.equations == facets.equations;
      c.two_level = c.two_level && is_two_level(v, facets).two_level;
    }
  } else {
    for (const auto& t : forest) fd1 += static_cast<unsigned long>(tree_description(t).raw_inequalities);
  }
  c.summary = make_summary(d, c.f0_recursion, fd1);
  return c;
}

bool two_sum_product_isomorphism(const Matroid& a, const Matroid& b, const std::string& p) {
  const Matroid m = two_sum(a, b, p);
  const VPolytope left = base_polytope(m);
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t p1 = a.index(p), p2 = na + b.index(p);
  HPolytope h = facets_of(product(base_polytope(a), base_polytope(b)));
  Hyperplane glue{IntVector(na + nb, Integer(0)), Integer(1)};
  glue.a[p1] = 1;
  glue.a[p2] = 1;
  h.equations.push_back(std::move(glue));
  h.irredundant = false;
  const VPolytope q = vertices_of(h);
  std::vector<RatVector> projected;
  for (const auto& x : q.vertices()) {
    RatVector y;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != p1 && i != p2) y.push_back(x[i]);
    projected.push_back(std::move(y));
  }
  return VPolytope(na + nb - 2, std::move(projected)) == left && q.size() == left.size();
}

TwoSumTree random_tree(std::size_t max_nodes, std::size_t max_e, std::mt19937_64& rng) {
  if (max_nodes == 0 || max_e < 3) fail(ErrorKind::BadParams, "random_tree needs max_nodes >= 1 and max_e >= 3");
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  // |E| = sum n_i - 2(t-1) with n_i >= 3 gives |E| >= t + 2
  const std::size_t t = pick(1, std::min(max_nodes, max_e - 2));
  std::vector<std::size_t> parent(t, 0);
  std::vector<std::size_t> degree(t, 0);
  for (std::size_t i = 1; i < t; ++i) {
    parent[i] = pick(0, i - 1);
    ++degree[i];
    ++degree[parent[i]];
  }
  // private element counts: node i needs n_i = private_i + degree_i >= 3
  std::vector<std::size_t> priv(t);
  std::size_t used = 0;
  for (std::size_t i = 0; i < t; ++i) {
    priv[i] = degree[i] >= 3 ? 0 : 3 - degree[i];
    used += priv[i];
  }
  require(used <= max_e, "random_tree: budget below the minimum size");
  std::size_t extra = pick(0, max_e - used);
  while (extra-- > 0) ++priv[pick(0, t - 1)];

  TwoSumTree tree;
  std::size_t next_private = 0;
  for (std::size_t i = 0; i < t; ++i) {
    TreeNode nd;
    nd.id = i;
    for (std::size_t j = 0; j < priv[i]; ++j) nd.elements.push_back("e" + std::to_string(next_private++));
    tree.nodes.push_back(std::move(nd));
  }
  for (std::size_t i = 1; i < t; ++i) {
    const std::string s = "s" + std::to_string(i - 1);
    tree.nodes[i].elements.push_back(s);
    tree.nodes[parent[i]].elements.push_back(s);
    tree.edges.push_back(TreeEdge{parent[i], i, s});
  }
  for (auto& nd : tree.nodes) {
    nd.n = nd.elements.size();
    nd.k = pick(1, nd.n - 1);
  }
  tree.validate();
  return tree;
}

}  // namespace twolevel
