#include "twolevel/stable_matching.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "twolevel/error.hpp"
#include "twolevel/linalg.hpp"

namespace twolevel {

namespace {

using RotMask = std::uint64_t;

bool is_permutation_of(const std::vector<std::size_t>& v, std::size_t n) {
  if (v.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : v) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<Edge> minus(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t index_of(const StableLattice& lat, const Matching& mu) {
  auto it = std::lower_bound(lat.matchings.begin(), lat.matchings.end(), mu);
  require(it != lat.matchings.end() && *it == mu, "stable matching missing from the lattice");
  return static_cast<std::size_t>(it - lat.matchings.begin());
}

}  // namespace

void SMInstance::validate() const {
  if (men.size() != n || women.size() != n) fail(ErrorKind::BadInput, "instance needs n preference lists per side");
  for (const auto& l : men)
    if (!is_permutation_of(l, n)) fail(ErrorKind::BadInput, "a man's list is not a permutation of the women");
  for (const auto& l : women)
    if (!is_permutation_of(l, n)) fail(ErrorKind::BadInput, "a woman's list is not a permutation of the men");
}

std::size_t SMInstance::man_rank(std::size_t m, std::size_t w) const {
  return static_cast<std::size_t>(std::find(men[m].begin(), men[m].end(), w) - men[m].begin());
}

std::size_t SMInstance::woman_rank(std::size_t w, std::size_t m) const {
  return static_cast<std::size_t>(std::find(women[w].begin(), women[w].end(), m) - women[w].begin());
}

std::vector<std::size_t> Matching::husbands() const {
  std::vector<std::size_t> h(wife.size());
  for (std::size_t m = 0; m < wife.size(); ++m) h[wife[m]] = m;
  return h;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> e;
  for (std::size_t m = 0; m < wife.size(); ++m) e.emplace_back(m, wife[m]);
  return e;
}

RatVector Matching::incidence() const {
  const std::size_t n = wife.size();
  RatVector x(n * n, Rational(0));
  for (std::size_t m = 0; m < n; ++m) x[m * n + wife[m]] = 1;
  return x;
}

SMInstance random_instance(std::size_t n, std::mt19937_64& rng) {
  SMInstance inst;
  inst.n = n;
  std::vector<std::size_t> base(n);
  std::iota(base.begin(), base.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto a = base, b = base;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    inst.men.push_back(std::move(a));
    inst.women.push_back(std::move(b));
  }
  return inst;
}

bool is_stable(const SMInstance& inst, const Matching& mu) {
  const auto h = mu.husbands();
  for (std::size_t m = 0; m < inst.n; ++m)
    for (std::size_t w = 0; w < inst.n; ++w) {
      if (mu.wife[m] == w) continue;
      const bool m_prefers = inst.man_rank(m, w) < inst.man_rank(m, mu.wife[m]);
      const bool w_prefers = inst.woman_rank(w, m) < inst.woman_rank(w, h[w]);
      if (m_prefers && w_prefers) return false;
    }
  return true;
}

Matching deferred_acceptance(const SMInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n, none = n;
  std::vector<std::size_t> next(n, 0), husband(n, none), free_men(n);
  std::iota(free_men.begin(), free_men.end(), 0);
  while (!free_men.empty()) {
    const std::size_t m = free_men.back();
    free_men.pop_back();
    const std::size_t w = inst.men[m][next[m]++];
    if (husband[w] == none) {
      husband[w] = m;
    } else if (inst.woman_rank(w, m) < inst.woman_rank(w, husband[w])) {
      free_men.push_back(husband[w]);
      husband[w] = m;
    } else {
      free_men.push_back(m);
    }
  }
  Matching mu;
  mu.wife.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) mu.wife[husband[w]] = w;
  return mu;
}

std::vector<Matching> enumerate_stable(const SMInstance& inst) {
  inst.validate();
  if (inst.n > 7) fail(ErrorKind::SizeGuardExceeded, "enumerate_stable scans n! matchings; n <= 7");
  std::vector<Matching> out;
  Matching mu;
  mu.wife.resize(inst.n);
  std::iota(mu.wife.begin(), mu.wife.end(), 0);
  do {
    if (is_stable(inst, mu)) out.push_back(mu);
  } while (std::next_permutation(mu.wife.begin(), mu.wife.end()));
  require(!out.empty(), "no stable matching found");
  return out;
}

bool women_weakly_happier(const SMInstance& inst, const Matching& mu, const Matching& mu2) {
  const auto h1 = mu.husbands(), h2 = mu2.husbands();
  for (std::size_t w = 0; w < inst.n; ++w)
    if (inst.woman_rank(w, h2[w]) > inst.woman_rank(w, h1[w])) return false;
  return true;
}

StableLattice lattice(const SMInstance& inst) {
  StableLattice lat;
  lat.matchings = enumerate_stable(inst);
  const std::size_t k = lat.matchings.size();
  std::vector<std::vector<bool>> le(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) le[i][j] = women_weakly_happier(inst, lat.matchings[i], lat.matchings[j]);
  bool found0 = false, foundz = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::all_of(le[i].begin(), le[i].end(), [](bool b) { return b; })) {
      lat.mu0 = i;
      found0 = true;
    }
    bool top = true;
    for (std::size_t j = 0; j < k; ++j) top = top && le[j][i];
    if (top) {
      lat.muz = i;
      foundz = true;
    }
  }
  require(found0 && foundz, "stable matchings do not form a lattice");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !le[i][j]) continue;
      bool cover = true;
      for (std::size_t m = 0; m < k && cover; ++m)
        if (m != i && m != j && le[i][m] && le[m][j]) cover = false;
      if (cover) lat.arcs.emplace_back(i, j);
    }
  return lat;
}

RotationPoset rotation_poset(const SMInstance& inst) {
  RotationPoset rp;
  rp.lattice = lattice(inst);
  const auto& lat = rp.lattice;
  const std::size_t k = lat.matchings.size();
  rp.mu0 = lat.matchings[lat.mu0];
  rp.muz = lat.matchings[lat.muz];

  std::vector<Rotation> generated;
  for (auto [a, b] : lat.arcs) {
    const auto ea = lat.matchings[a].edges(), eb = lat.matchings[b].edges();
    generated.push_back(Rotation{minus(ea, eb), minus(eb, ea)});
  }
  rp.rotations = generated;
  std::sort(rp.rotations.begin(), rp.rotations.end());
  rp.rotations.erase(std::unique(rp.rotations.begin(), rp.rotations.end()), rp.rotations.end());
  const std::size_t R = rp.rotations.size();
  require(R <= 64, "more than 64 rotations");
  for (const auto& r : generated)
    rp.arc_rotation.push_back(static_cast<std::size_t>(
        std::lower_bound(rp.rotations.begin(), rp.rotations.end(), r) - rp.rotations.begin()));

  std::map<Edge, int> in_head, in_tail;
  for (const auto& r : rp.rotations) {
    require(!r.head.empty() && !r.tail.empty() && r.head.size() == r.tail.size(), "malformed rotation");
    for (const auto& e : r.head) require(++in_head[e] == 1, "edge in two rotation heads");
    for (const auto& e : r.tail) require(++in_tail[e] == 1, "edge in two rotation tails");
  }

  // Memoised sweep over the Hasse diagram in topological order. pi[v]: the
  // rotations on any mu0-v path; before[v][b] has bit a iff a occurs before b
  // on some mu0-v path.
  std::vector<std::vector<std::size_t>> in_arcs(k);
  std::vector<std::size_t> indeg(k, 0);
  for (std::size_t t = 0; t < lat.arcs.size(); ++t) {
    in_arcs[lat.arcs[t].second].push_back(t);
    ++indeg[lat.arcs[t].second];
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> queue{lat.mu0};
  std::vector<std::size_t> remaining = indeg;
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    order.push_back(v);
    for (std::size_t t = 0; t < lat.arcs.size(); ++t)
      if (lat.arcs[t].first == v && --remaining[lat.arcs[t].second] == 0) queue.push_back(lat.arcs[t].second);
  }
  require(order.size() == k, "Hasse diagram is not rooted at mu0");

  std::vector<RotMask> pi(k, 0);
  std::vector<std::vector<RotMask>> before(k, std::vector<RotMask>(R, 0));
  for (auto v : order) {
    bool first = true;
    for (auto t : in_arcs[v]) {
      const std::size_t u = lat.arcs[t].first;
      const std::size_t rho = rp.arc_rotation[t];
      require(!(pi[u] >> rho & 1U), "a path generates the same rotation twice");
      const RotMask set = pi[u] | (RotMask{1} << rho);
      if (first) pi[v] = set;
      require(pi[v] == set, "two paths to the same matching generate different rotations");
      first = false;
      for (std::size_t b = 0; b < R; ++b) before[v][b] |= before[u][b];
      before[v][rho] |= pi[u];
    }
  }
  const RotMask all = R == 64 ? ~RotMask{0} : (RotMask{1} << R) - 1;
  require(pi[lat.muz] == all, "a maximal path misses a rotation");

  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < R; ++a)
    for (std::size_t b = 0; b < R; ++b)
      if (a != b && !(before[lat.muz][a] >> b & 1U)) rel.emplace_back(a, b);
  rp.precedence = Poset(R, rel);
  for (auto [a, b] : rel) require(rp.precedence.leq(a, b), "precedence is not a partial order");
  require(rp.precedence.strict_relations().size() == rel.size(), "precedence is not transitive");

  rp.pi.resize(k);
  for (std::size_t v = 0; v < k; ++v)
    for (std::size_t r = 0; r < R; ++r)
      if (pi[v] >> r & 1U) rp.pi[v].push_back(r);
  return rp;
}

std::vector<std::size_t> pi_of(const SMInstance& inst, const RotationPoset& rp, const Matching& mu) {
  if (mu.wife.size() != inst.n || !is_stable(inst, mu)) fail(ErrorKind::NotStable, "pi_of needs a stable matching");
  const auto& set = rp.pi[index_of(rp.lattice, mu)];
  const Mask m = to_mask(set);
  for (auto r : set) require((rp.precedence.down(r) & ~m) == 0, "Pi(mu) is not a closed set");
  return set;
}

OrderEquivalenceReport verify_order_equivalence(const SMInstance& inst) {
  const RotationPoset rp = rotation_poset(inst);
  const std::size_t n = inst.n, E = n * n, R = rp.rotations.size();
  OrderEquivalenceReport rep;
  rep.matchings = rp.lattice.matchings.size();
  rep.rotations = R;

  IntMatrix A(E, IntVector(R, Integer(0)));
  RatMatrix columns;
  for (std::size_t r = 0; r < R; ++r) {
    for (auto [m, w] : rp.rotations[r].head) A[m * n + w][r] += 1;
    for (auto [m, w] : rp.rotations[r].tail) A[m * n + w][r] -= 1;
    RatVector col(E);
    for (std::size_t e = 0; e < E; ++e) col[e] = A[e][r];
    columns.push_back(std::move(col));
  }
  rep.columns_independent = linalg::rank(columns) == R;

  const RatVector chi0 = rp.mu0.incidence();
  rep.decomposition_holds = true;
  std::set<std::vector<std::size_t>> images;
  bool all_closed = true;
  for (const auto& mu : rp.lattice.matchings) {
    const auto set = pi_of(inst, rp, mu);
    images.insert(set);
    RatVector x = chi0;
    for (auto r : set)
      for (std::size_t e = 0; e < E; ++e) x[e] += A[e][r];
    if (x != mu.incidence()) rep.decomposition_holds = false;
    const Mask m = to_mask(set);
    for (auto r : set) all_closed = all_closed && (rp.precedence.down(r) & ~m) == 0;
  }
  const auto closed = closed_sets(rp.precedence);
  rep.pi_bijective = all_closed && images.size() == rep.matchings &&
                     images == std::set<std::vector<std::size_t>>(closed.begin(), closed.end());

  std::vector<RatVector> order_pts;
  for (const auto& c : closed) {
    RatVector x(R, Rational(0));
    for (auto r : c) x[r] = 1;
    order_pts.push_back(std::move(x));
  }
  IntVector t(E);
  for (std::size_t e = 0; e < E; ++e) t[e] = chi0[e].get_num();
  std::vector<RatVector> stable_pts;
  for (const auto& mu : rp.lattice.matchings) stable_pts.push_back(mu.incidence());
  PolytopeOptions opt;
  opt.max_dim = std::max<std::size_t>(opt.max_dim, R);
  const VPolytope image = affine_image(VPolytope(R, std::move(order_pts)), A, t, true, opt);
  rep.image_matches = image == VPolytope(E, std::move(stable_pts));

  rep.mu0_is_deferred_acceptance = deferred_acceptance(inst) == rp.mu0;
  return rep;
}

SMPolytopeResult smp_polytope(const SMInstance& inst, bool validate) {
  const RotationPoset rp = rotation_poset(inst);
  const std::size_t n = inst.n, E = n * n;
  SMPolytopeResult out;
  std::vector<RatVector> pts;
  for (const auto& mu : rp.lattice.matchings) pts.push_back(mu.incidence());
  out.v = VPolytope(E, std::move(pts));

  out.h.ambient_dim = E;
  auto blank = [&](int b) { return Halfspace{IntVector(E, Integer(0)), Integer(b)}; };
  for (std::size_t e = 0; e < E; ++e) {
    auto h = blank(0);
    h.a[e] = -1;
    out.h.inequalities.push_back(std::move(h));
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto man = blank(1), woman = blank(1);
    for (std::size_t u = 0; u < n; ++u) {
      man.a[v * n + u] = 1;
      woman.a[u * n + v] = 1;
    }
    out.h.inequalities.push_back(std::move(man));
    out.h.inequalities.push_back(std::move(woman));
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t w = 0; w < n; ++w) {
      // -(x_mw + sum over men w prefers to m + sum over women m prefers to w) <= -1
      auto h = blank(-1);
      h.a[m * n + w] = -1;
      for (std::size_t r = 0; r < inst.woman_rank(w, m); ++r) h.a[inst.women[w][r] * n + w] = -1;
      for (std::size_t r = 0; r < inst.man_rank(m, w); ++r) h.a[m * n + inst.men[m][r]] = -1;
      out.h.inequalities.push_back(std::move(h));
    }
  canonicalize(out.h);

  const Poset& P = rp.precedence;
  out.summary = make_summary(P.n(), Integer(static_cast<unsigned long>(closed_sets(P).size())),
                             Integer(static_cast<unsigned long>(P.covers().size() + P.minimal().size() + P.maximal().size())));
  if (validate) {
    PolytopeOptions opt;
    opt.max_dim = E;
    out.h_matches = vertices_of(out.h, opt) == out.v;
  }
  return out;
}

}  // namespace twolevel
