#include "twolevel/graphs.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "twolevel/error.hpp"

namespace twolevel {

namespace {

constexpr std::size_t kEnumGuard = 24;
constexpr std::size_t kPerfectGuard = 14;

void guard(const Graph& g, std::size_t limit, const char* what) {
  if (g.n() > limit)
    fail(ErrorKind::SizeGuardExceeded,
         std::string(what) + ": n = " + std::to_string(g.n()) + " exceeds " + std::to_string(limit));
}

bool set_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Branch-and-extend over vertices in increasing order; `ok` are the vertices
// compatible with every chosen one.
void extend(const std::vector<Mask>& compat, Mask chosen, Mask ok, std::size_t from, std::size_t n,
            std::vector<Mask>& out) {
  for (std::size_t v = from; v < n; ++v) {
    if (!(ok >> v & 1U)) continue;
    const Mask next = chosen | (Mask{1} << v);
    out.push_back(next);
    extend(compat, next, ok & compat[v], v + 1, n, out);
  }
}

std::vector<VertexSet> enumerate_compatible(const std::vector<Mask>& compat, std::size_t n, bool include_empty) {
  std::vector<Mask> masks;
  if (include_empty) masks.push_back(0);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  extend(compat, 0, all, 0, n, masks);
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(to_set(m));
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

// Induced cycle test for the vertex set s in the graph with adjacency masks adj.
bool induces_cycle(const std::vector<Mask>& adj, Mask s) {
  for (Mask r = s; r; r &= r - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(r));
    if (std::popcount(adj[v] & s) != 2) return false;
  }
  // 2-regular: a cycle iff connected
  const auto start = static_cast<std::size_t>(std::countr_zero(s));
  Mask seen = Mask{1} << start, frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask r = frontier; r; r &= r - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(r))] & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

bool has_odd_hole(const std::vector<Mask>& adj, std::size_t n) {
  const Mask limit = Mask{1} << n;
  for (Mask s = 0; s < limit; ++s) {
    const int k = std::popcount(s);
    if (k >= 5 && k % 2 == 1 && induces_cycle(adj, s)) return true;
  }
  return false;
}

}  // namespace

VertexSet to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return s;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (auto v : s) m |= Mask{1} << v;
  return m;
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : n_(n), adj_(n, std::vector<bool>(n, false)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) fail(ErrorKind::BadInput, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::BadInput, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adj_[u][v]) fail(ErrorKind::BadInput, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u][v] = adj_[v][u] = true;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<std::size_t> Graph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (adj_[v][u]) out.push_back(u);
  return out;
}

std::vector<Mask> Graph::masks() const {
  require(n_ <= 32, "adjacency masks need n <= 32");
  std::vector<Mask> m(n_, 0);
  for (auto [u, v] : edges_) {
    m[u] |= Mask{1} << v;
    m[v] |= Mask{1} << u;
  }
  return m;
}

Graph complement(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.n(), e);
}

Graph complete_graph(std::size_t n) { return complement(empty_graph(n)); }
Graph empty_graph(std::size_t n) { return Graph(n, {}); }

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorKind::BadParams, "a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph hypercube_graph(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < k; ++b)
      if (!(v >> b & 1U)) e.emplace_back(v, v | (std::size_t{1} << b));
  return Graph(n, e);
}

Graph wheel_graph(std::size_t k) {
  if (k < 3) fail(ErrorKind::BadParams, "a wheel needs a rim of at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= k; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % k + 1);
  }
  return Graph(k + 1, e);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) e.emplace_back(i, j);
  return Graph(s.size(), e);
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<bool> seen(g.n(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto u : g.neighbours(v))
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.n();
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1U) e.emplace_back(u, v);
  return Graph(n, e);
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, bool include_empty) {
  guard(g, kEnumGuard, "enumerate_cliques");
  return enumerate_compatible(g.masks(), g.n(), include_empty);
}

std::vector<VertexSet> enumerate_stable_sets(const Graph& g, bool include_empty) {
  guard(g, kEnumGuard, "enumerate_stable_sets");
  auto compat = g.masks();
  const Mask all = (Mask{1} << g.n()) - 1;
  for (std::size_t v = 0; v < g.n(); ++v) compat[v] = ~compat[v] & all & ~(Mask{1} << v);
  return enumerate_compatible(compat, g.n(), include_empty);
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  const auto all = enumerate_cliques(g, false);
  const auto adj = g.masks();
  std::vector<VertexSet> out;
  for (const auto& c : all) {
    const Mask m = to_mask(c);
    bool maximal = true;
    for (std::size_t v = 0; v < g.n() && maximal; ++v)
      if (!(m >> v & 1U) && (adj[v] & m) == m) maximal = false;
    if (maximal) out.push_back(c);
  }
  if (g.n() == 0) out.clear();
  return out;
}

TradeoffReport tradeoff_check(const Graph& g) {
  if (g.n() == 0) fail(ErrorKind::BadParams, "tradeoff_check needs n >= 1");
  TradeoffReport r;
  r.n = g.n();
  r.cliques = enumerate_cliques(g, false).size();
  r.stable_sets = enumerate_stable_sets(g, false).size();
  const std::uint64_t p2 = std::uint64_t{1} << r.n;
  r.product = std::uint64_t{r.cliques} * r.stable_sets;
  r.bound = r.n * (p2 - 1);
  r.holds = r.product <= r.bound;
  r.equality = r.product == r.bound;
  r.cliques0 = r.cliques + 1;
  r.stable_sets0 = r.stable_sets + 1;
  r.product0 = std::uint64_t{r.cliques0} * r.stable_sets0;
  r.bound0 = (r.n + 1) * p2;
  r.holds0 = r.product0 <= r.bound0;
  r.equality0 = r.product0 == r.bound0;
  const std::size_t m = g.edges().size();
  r.complete_or_edgeless = m == 0 || m == r.n * (r.n - 1) / 2;
  return r;
}

std::size_t union_preimage_count(const Graph& g, Mask w) {
  const auto adj = g.masks();
  auto is_clique = [&](Mask s) {
    for (Mask r = s; r; r &= r - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(r));
      if ((adj[v] & s) != (s & ~(Mask{1} << v))) return false;
    }
    return true;
  };
  auto is_stable = [&](Mask s) {
    for (Mask r = s; r; r &= r - 1)
      if (adj[static_cast<std::size_t>(std::countr_zero(r))] & s) return false;
    return true;
  };
  std::size_t count = 0;
  // C ranges over nonempty submasks of W; S = (W \ C) u T with T a submask of C.
  for (Mask c = w; c; c = (c - 1) & w) {
    if (!is_clique(c)) continue;
    const Mask rest = w & ~c;
    for (Mask t = c;; t = (t - 1) & c) {
      const Mask s = rest | t;
      if (s && is_stable(s)) ++count;
      if (t == 0) break;
    }
  }
  return count;
}

bool is_perfect(const Graph& g) {
  guard(g, kPerfectGuard, "is_perfect");
  const auto adj = g.masks();
  auto co = complement(g).masks();
  return !has_odd_hole(adj, g.n()) && !has_odd_hole(co, g.n());
}

}  // namespace twolevel
