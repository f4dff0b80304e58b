#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>
#include <set>

#include "twolevel/error.hpp"
#include "twolevel/graphs.hpp"
#include "twolevel/posets.hpp"

using namespace twolevel;

namespace {

bool is_clique(const Graph& g, Mask s) {
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v)
      if ((s >> u & 1u) && (s >> v & 1u) && !g.adjacent(u, v)) return false;
  return true;
}

bool is_stable(const Graph& g, Mask s) {
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v)
      if ((s >> u & 1u) && (s >> v & 1u) && g.adjacent(u, v)) return false;
  return true;
}

std::size_t count_sets(const Graph& g, bool cliques, bool include_empty) {
  std::size_t c = 0;
  for (Mask s = include_empty ? 0 : 1; s < (Mask{1} << g.n()); ++s) c += cliques ? is_clique(g, s) : is_stable(g, s);
  return c;
}

// perfect iff omega = chi on every induced subgraph; chi by DP over subsets
bool perfect_by_colouring(const Graph& g) {
  const std::size_t n = g.n();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> chi(std::size_t{1} << n, 0), omega(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & (~s + 1);
    int best = 100;
    for (Mask t = s; t; t = (t - 1) & s)
      if ((t & low) && is_stable(g, t)) best = std::min(best, 1 + chi[s & ~t]);
    chi[s] = best;
    for (Mask t = s; t; t = (t - 1) & s)
      if (is_clique(g, t)) omega[s] = std::max(omega[s], std::popcount(t));
    if (chi[s] != omega[s]) return false;
  }
  return true;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}

}  // namespace

TEST_CASE("clique and stable set enumeration examples", "[graphs]") {
  const auto k3 = complete_graph(3);
  CHECK(enumerate_cliques(k3, false).size() == 7);
  CHECK(enumerate_stable_sets(k3, false).size() == 3);

  const auto p7 = path_graph(7);
  CHECK(enumerate_cliques(p7, true).size() == 14);
  CHECK(enumerate_stable_sets(p7, true).size() == 34);

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto e = empty_graph(n);
    CHECK(enumerate_cliques(e, false).size() == n);
    CHECK(enumerate_stable_sets(e, false).size() == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("enumeration order is canonical", "[graphs]") {
  const auto cl = enumerate_cliques(cycle_graph(5), true);
  REQUIRE(cl.size() == 11);
  CHECK(cl[0].empty());
  CHECK(cl[1] == VertexSet{0});
  CHECK(cl[6] == VertexSet{0, 1});
  CHECK(cl[10] == VertexSet{3, 4});
  for (std::size_t i = 1; i < cl.size(); ++i)
    CHECK((cl[i - 1].size() < cl[i].size() || (cl[i - 1].size() == cl[i].size() && cl[i - 1] < cl[i])));
}

TEST_CASE("trade-off examples", "[graphs][tradeoff]") {
  const auto t = tradeoff_check(complete_graph(3));
  CHECK(t.cliques == 7);
  CHECK(t.stable_sets == 3);
  CHECK(t.product == 21);
  CHECK(t.bound == 21);
  CHECK(t.equality);

  const auto p = tradeoff_check(path_graph(7));
  CHECK(p.cliques0 == 14);
  CHECK(p.stable_sets0 == 34);
  CHECK(p.product0 == 476);
  CHECK(p.bound0 == 1024);
  CHECK(p.holds0);
  CHECK_FALSE(p.equality0);

  const auto one = tradeoff_check(empty_graph(1));
  CHECK(one.product == 1);
  CHECK(one.bound == 1);
  CHECK(one.equality);
}

TEST_CASE("perfectness examples", "[graphs][perfect]") {
  CHECK_FALSE(is_perfect(cycle_graph(5)));
  CHECK_FALSE(is_perfect(complement(cycle_graph(7))));
  CHECK(is_perfect(cycle_graph(6)));
  CHECK(is_perfect(complete_bipartite(3, 4)));
  CHECK(is_perfect(cycle_graph(4)));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 60; ++i) CHECK(is_perfect(comparability_graph(random_poset(1 + i % 8, 0.35, rng))));
}

TEST_CASE("input validation and guards", "[graphs][errors]") {
  auto kind = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::AssertionFailed;
  };
  CHECK(kind([] { Graph(3, {{0, 0}}); }) == ErrorKind::BadInput);
  CHECK(kind([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorKind::BadInput);
  CHECK(kind([] { Graph(3, {{0, 3}}); }) == ErrorKind::BadInput);
  CHECK(kind([] { enumerate_cliques(empty_graph(25), false); }) == ErrorKind::SizeGuardExceeded);
  CHECK(kind([] { is_perfect(empty_graph(15)); }) == ErrorKind::SizeGuardExceeded);
  CHECK(kind([] { tradeoff_check(empty_graph(0)); }) == ErrorKind::BadParams);
}

TEST_CASE("counts, trade-off and preimage bound on every graph with n <= 5", "[graphs][property]") {
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = graph_from_code(n, code);
      const std::size_t c = count_sets(g, true, false), s = count_sets(g, false, false);
      const auto t = tradeoff_check(g);
      CHECK(t.cliques == c);
      CHECK(t.stable_sets == s);
      const std::uint64_t bound = n * ((std::uint64_t{1} << n) - 1);
      CHECK(t.holds == (c * s <= bound));
      CHECK(t.holds);
      CHECK(t.holds0);
      const bool complete_or_edgeless = g.edges().empty() || g.edges().size() == pairs;
      CHECK(t.complete_or_edgeless == complete_or_edgeless);
      CHECK(t.equality == complete_or_edgeless);
      CHECK(t.equality0 == complete_or_edgeless);
      for (Mask w = 1; w < (Mask{1} << n); ++w) {
        // pairs (C, S) with C u S = W by brute force
        std::size_t pre = 0;
        for (Mask cm = w; cm; cm = (cm - 1) & w)
          for (Mask sm = w; sm; sm = (sm - 1) & w)
            if ((cm | sm) == w && is_clique(g, cm) && is_stable(g, sm)) ++pre;
        CHECK(union_preimage_count(g, w) == pre);
        if (std::popcount(w) >= 2) CHECK(pre <= 2 * static_cast<std::size_t>(std::popcount(w)));
      }
      ++graphs;
    }
  }
  CHECK(graphs == 1 + 2 + 8 + 64 + 1024);
}

TEST_CASE("complement duality", "[graphs][property]") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(1 + i % 9, 0.5, rng);
    CHECK(enumerate_cliques(g, true) == enumerate_stable_sets(complement(g), true));
    CHECK(enumerate_cliques(g, false) == enumerate_stable_sets(complement(g), false));
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("odd-hole test agrees with the colouring oracle", "[graphs][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = graph_from_code(n, code);
      CHECK(is_perfect(g) == perfect_by_colouring(g));
    }
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(6 + i % 2, 0.5, rng);
    CHECK(is_perfect(g) == perfect_by_colouring(g));
  }
}

TEST_CASE("graph_from_code enumerates distinct labelled graphs", "[graphs]") {
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (std::uint64_t code = 0; code < 64; ++code) seen.insert(graph_from_code(4, code).edges());
  CHECK(seen.size() == 64);
}
