#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "twolevel/binary_matroids.hpp"
#include "twolevel/error.hpp"

using namespace twolevel;

namespace {

Mask xor_columns(const BinaryMatroid& m, Mask s) {
  Mask acc = 0;
  for (std::size_t j = 0; j < m.d(); ++j)
    if (s >> j & 1u) acc ^= m.column(j);
  return acc;
}

std::vector<Mask> brute_cycles(const BinaryMatroid& m) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= m.ground(); ++s)
    if (xor_columns(m, s) == 0) out.push_back(s);
  return sort_sets(out);
}

std::vector<Mask> minimal_nonempty(const std::vector<Mask>& family) {
  std::vector<Mask> out;
  for (Mask s : family) {
    if (!s) continue;
    bool minimal = true;
    for (Mask t : family)
      if (t && t != s && (t & s) == t) minimal = false;
    if (minimal) out.push_back(s);
  }
  return sort_sets(out);
}

// cocircuits are the minimal sets whose removal drops the rank
std::vector<Mask> brute_cocircuits(const BinaryMatroid& m) {
  std::vector<Mask> hit;
  for (Mask s = 1; s <= m.ground(); ++s)
    if (m.rank(m.ground() & ~s) < m.r()) hit.push_back(s);
  return minimal_nonempty(hit);
}

BinaryMatroid random_matroid(std::size_t r, std::size_t d, std::mt19937_64& rng) {
  std::vector<boost::dynamic_bitset<>> rows;
  for (std::size_t i = 0; i < r; ++i) {
    boost::dynamic_bitset<> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = rng() & 1u;
    rows.push_back(row);
  }
  return BinaryMatroid(d, rows);
}

bool has_kind(ErrorKind k, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

}  // namespace

TEST_CASE("K4 graphic and cographic", "[binary-matroids]") {
  const auto k4 = complete_graph(4);
  const auto m = from_graph(k4);
  CHECK(m.d() == 6);
  CHECK(m.r() == 3);
  CHECK(enumerate_cycles(m).size() == 8);
  CHECK(circuits(m).size() == 7);
  CHECK(cocircuits(m).size() == 7);
  const auto c = cographic(k4);
  CHECK(c.r() == 3);
  CHECK(enumerate_cycles(c).size() == 8);

  const auto cut = cut_polytope(k4);
  CHECK(cut.cycle.summary.f0 == 8);
  CHECK(cut.cycle.summary.fd1 == 16);
  CHECK(cut.cycle.summary.d == 6);
  CHECK(cut.induced_cycles_match);
  CHECK_FALSE(cut.has_long_induced_cycle);
  CHECK(cut.cycle.description_matches);
  CHECK(cut.cycle.two_level);
}

TEST_CASE("cycles, coloops and 2-cocircuits", "[binary-matroids]") {
  const auto c5 = from_graph(cycle_graph(5));
  CHECK(enumerate_cycles(c5).size() == 2);
  CHECK(circuits(c5) == std::vector<Mask>{0b11111});
  const auto p5 = preprocess(c5);
  CHECK(p5.m.d() + p5.contracted.size() + p5.coloops.size() == 5);
  CHECK(p5.m.d() == 1);

  const auto c3 = cycle_polytope(from_graph(cycle_graph(3)));
  CHECK(c3.summary.f0 == 2);

  const auto id = BinaryMatroid::from_strings({"100", "010", "001"});
  const auto pid = preprocess(id);
  CHECK(pid.coloops.size() == 3);
  CHECK(pid.m.d() == 0);
  CHECK(has_kind(ErrorKind::DimensionMismatch, [] { BinaryMatroid::from_strings({"10", "101"}); }));
  CHECK(has_kind(ErrorKind::BadInput, [] { BinaryMatroid::from_strings({"1x0"}); }));
}

TEST_CASE("row space normal form", "[binary-matroids]") {
  const auto a = BinaryMatroid::from_strings({"110", "011"});
  const auto b = BinaryMatroid::from_strings({"101", "011", "110"});
  CHECK(a == b);
  CHECK(a.row_strings() == std::vector<std::string>{"101", "011"});
}

TEST_CASE("cycle space laws on random binary matroids", "[binary-matroids][property]") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = 1 + trial % 12;
    const std::size_t r = rng() % (d + 1);
    const auto m = random_matroid(r, d, rng);
    const auto cyc = enumerate_cycles(m);
    CHECK(cyc == brute_cycles(m));
    CHECK(cyc.size() == std::size_t{1} << (d - m.r()));
    CHECK(cycle_basis(m).dim == d - m.r());
    const std::set<Mask> cs(cyc.begin(), cyc.end());
    for (std::size_t i = 0; i < cyc.size() && i < 16; ++i)
      for (std::size_t j = 0; j < cyc.size() && j < 16; ++j) CHECK(cs.count(cyc[i] ^ cyc[j]) == 1);

    const auto circ = circuits(m);
    const auto coc = cocircuits(m);
    CHECK(circ == minimal_nonempty(cyc));
    CHECK(coc == brute_cocircuits(m));
    for (Mask c : circ)
      for (Mask k : coc) CHECK(std::popcount(c & k) % 2 == 0);

    const auto dm = dual(m);
    CHECK(dm.r() == d - m.r());
    CHECK(dual(dm) == m);
    CHECK(circuits(dm) == coc);

    const auto pre = preprocess(m);
    std::vector<std::size_t> all = pre.kept;
    all.insert(all.end(), pre.coloops.begin(), pre.coloops.end());
    all.insert(all.end(), pre.contracted.begin(), pre.contracted.end());
    std::sort(all.begin(), all.end());
    CHECK(all.size() == d);
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (Mask k : cocircuits(pre.m)) CHECK(std::popcount(k) >= 3);
    // the cycle space survives with the same dimension
    CHECK(enumerate_cycles(pre.m).size() == cyc.size());
  }
}

TEST_CASE("odd-set rows are valid on every cycle of a random binary matroid", "[binary-matroids][property]") {
  // random matroids may contain an excluded minor, so only validity and the
  // agreement cases are checked here
  std::mt19937_64 rng(67);
  int geometric = 0, mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 3 + trial % 8;
    const std::size_t r = 1 + rng() % (d - 1);
    const auto rep = cycle_polytope(random_matroid(r, d, rng));
    const auto& pm = rep.pre.m;
    std::size_t tri = 0, four = 0;
    for (Mask k : brute_cocircuits(pm)) {
      tri += std::popcount(k) == 3;
      four += std::popcount(k) == 4;
    }
    CHECK(rep.cotriangles == tri);
    CHECK(rep.cocircuits4 == four);
    CHECK(rep.arithmetic_lhs == Integer(2 * tri + 4 * four));
    CHECK(rep.summary.f0 == Integer(std::size_t{1} << (pm.d() - pm.r())));
    for (const auto& x : rep.v.vertices())
      for (const auto& row : rep.h.inequalities) CHECK(dot(row.a, x) <= Rational(row.b));
    for (Mask c : rep.chordless) CHECK_FALSE(has_chord(cocircuits(pm), c));
    CHECK(rep.two_level_condition == rep.long_chordless.empty());
    if (rep.geometric) {
      ++geometric;
      if (rep.description_matches) CHECK(rep.two_level == rep.two_level_condition);
      else ++mismatches;
      if (rep.two_level) {
        CHECK(rep.summary.satisfies);
        CHECK(rep.arithmetic_holds);
      }
    }
  }
  CHECK(geometric > 50);
  CHECK(mismatches < geometric);
}

TEST_CASE("dual Fano matroid: odd-set rows are only a relaxation", "[binary-matroids]") {
  const auto f7s = BinaryMatroid::from_strings({"1000110", "0100111", "0010101", "0001011"});
  const auto rep = cycle_polytope(f7s);
  CHECK(rep.summary.f0 == 8);
  CHECK(rep.geometric);
  CHECK_FALSE(rep.description_matches);
}

namespace {

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % 3) es.push_back({u, v});
  if (n == 5 && es.size() == 10) es.pop_back();  // avoid K5
  return Graph(n, es);
}

}  // namespace

TEST_CASE("graphic cycle polytopes: description, 2-level condition, arithmetic", "[binary-matroids][property]") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(3 + trial % 4, rng);
    if (g.edges().empty() || g.edges().size() > 10) continue;
    const auto rep = cycle_polytope(from_graph(g));
    if (!rep.geometric) continue;
    CHECK(rep.description_matches);
    CHECK(rep.two_level == rep.two_level_condition);
    if (rep.two_level) {
      CHECK(rep.summary.satisfies);
      CHECK(rep.arithmetic_holds);
    }
  }
}

TEST_CASE("cut polytopes of small graphs", "[binary-matroids][property]") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(3 + trial % 3, rng);
    if (g.edges().empty()) continue;
    const auto rep = cut_polytope(g);
    CHECK(rep.induced_cycles_match);
    CHECK(rep.has_long_induced_cycle == !rep.cycle.two_level_condition);
    if (rep.cycle.geometric) {
      CHECK(rep.cycle.description_matches);
      CHECK(rep.cycle.two_level == !rep.has_long_induced_cycle);
    }
  }
  const auto c5 = cut_polytope(cycle_graph(5));
  CHECK(c5.has_long_induced_cycle);
  CHECK_FALSE(c5.cycle.two_level);
}
