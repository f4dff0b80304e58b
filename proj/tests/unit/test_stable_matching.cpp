#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "twolevel/error.hpp"
#include "twolevel/stable_matching.hpp"

using namespace twolevel;

namespace {

SMInstance cyclic(std::size_t n) {
  SMInstance s;
  s.n = n;
  s.men.assign(n, {});
  s.women.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      s.men[i].push_back((i + k) % n);
      s.women[i].push_back((i + k + 1) % n);
    }
  return s;
}

// blocking pair scan over every permutation
std::vector<Matching> brute_stable(const SMInstance& s) {
  std::vector<std::size_t> p(s.n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Matching> out;
  do {
    std::vector<std::size_t> husband(s.n);
    for (std::size_t m = 0; m < s.n; ++m) husband[p[m]] = m;
    bool ok = true;
    for (std::size_t m = 0; m < s.n && ok; ++m)
      for (std::size_t w = 0; w < s.n && ok; ++w) {
        if (p[m] == w) continue;
        const auto& ml = s.men[m];
        const auto& wl = s.women[w];
        const bool man_prefers = std::find(ml.begin(), ml.end(), w) < std::find(ml.begin(), ml.end(), p[m]);
        const bool woman_prefers = std::find(wl.begin(), wl.end(), m) < std::find(wl.begin(), wl.end(), husband[w]);
        if (man_prefers && woman_prefers) ok = false;
      }
    if (ok) out.push_back(Matching{p});
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
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

TEST_CASE("small instances", "[stable-matching]") {
  SMInstance two;
  two.n = 2;
  two.men = {{0, 1}, {1, 0}};
  two.women = {{1, 0}, {0, 1}};
  const auto l2 = lattice(two);
  CHECK(l2.matchings.size() == 2);
  CHECK(l2.arcs.size() == 1);
  CHECK(deferred_acceptance(two) == Matching{{0, 1}});

  SMInstance unique;
  unique.n = 2;
  unique.men = {{0, 1}, {1, 0}};
  unique.women = {{0, 1}, {1, 0}};
  const auto ru = rotation_poset(unique);
  CHECK(ru.lattice.matchings.size() == 1);
  CHECK(ru.rotations.empty());
  CHECK(ru.mu0 == ru.muz);
  const auto pu = smp_polytope(unique);
  CHECK(pu.summary.f0 == 1);
  CHECK(pu.h_matches);
}

TEST_CASE("cyclic instance on three", "[stable-matching]") {
  const auto s = cyclic(3);
  const auto rp = rotation_poset(s);
  CHECK(rp.lattice.matchings.size() == 3);
  CHECK(rp.lattice.arcs.size() == 2);  // a chain
  CHECK(rp.rotations.size() == 2);
  CHECK(rp.precedence.leq(0, 1) != rp.precedence.leq(1, 0));
  CHECK(rp.mu0 == Matching{{0, 1, 2}});
  CHECK(rp.muz == Matching{{2, 0, 1}});  // woman w gets man w + 1
  for (const auto& r : rp.rotations) {
    CHECK(r.tail.size() == 3);
    CHECK(r.head.size() == 3);
  }
  const auto rep = verify_order_equivalence(s);
  CHECK(rep.all());
  CHECK(rep.mu0_is_deferred_acceptance);
  const auto poly = smp_polytope(s);
  CHECK(poly.summary.f0 == 3);
  CHECK(poly.h_matches);
}

TEST_CASE("bad input and unstable matchings", "[stable-matching][errors]") {
  SMInstance bad;
  bad.n = 2;
  bad.men = {{0, 0}, {1, 0}};
  bad.women = {{0, 1}, {1, 0}};
  CHECK(has_kind(ErrorKind::BadInput, [&] { bad.validate(); }));
  bad.men = {{0, 1}};
  CHECK(has_kind(ErrorKind::BadInput, [&] { bad.validate(); }));
  const auto s = cyclic(3);
  const auto rp = rotation_poset(s);
  CHECK(has_kind(ErrorKind::NotStable, [&] { pi_of(s, rp, Matching{{0, 2, 1}}); }));
}

TEST_CASE("lattice, rotations and Pi on random instances", "[stable-matching][property]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto s = random_instance(n, rng);
    const auto all = brute_stable(s);
    CHECK(enumerate_stable(s) == all);
    for (const auto& mu : all) CHECK(is_stable(s, mu));

    const auto rp = rotation_poset(s);
    const auto& ms = rp.lattice.matchings;
    CHECK(ms == all);
    CHECK(rp.mu0 == deferred_acceptance(s));
    // mu0 is man-optimal, so every woman is weakly happier elsewhere
    for (const auto& mu : ms) {
      CHECK(women_weakly_happier(s, rp.mu0, mu));
      CHECK(women_weakly_happier(s, mu, rp.muz));
    }
    for (const auto& [lo, hi] : rp.lattice.arcs) CHECK(women_weakly_happier(s, ms[lo], ms[hi]));

    // edges in at most one head and at most one tail
    std::set<Edge> heads, tails;
    for (const auto& r : rp.rotations) {
      for (const auto& e : r.head) CHECK(heads.insert(e).second);
      for (const auto& e : r.tail) CHECK(tails.insert(e).second);
    }

    // Pi is a bijection onto closed sets of the rotation poset
    std::set<std::vector<std::size_t>> images;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto p = pi_of(s, rp, ms[i]);
      CHECK(p == rp.pi[i]);
      images.insert(p);
      for (auto b : p)
        for (std::size_t a = 0; a < rp.rotations.size(); ++a)
          if (rp.precedence.leq(a, b)) CHECK(std::binary_search(p.begin(), p.end(), a));
    }
    CHECK(images.size() == ms.size());
    CHECK(closed_sets(rp.precedence).size() == ms.size());

    const auto rep = verify_order_equivalence(s);
    CHECK(rep.all());
    CHECK(rep.mu0_is_deferred_acceptance);
  }
}

TEST_CASE("stability inequalities describe the stable matching polytope", "[stable-matching][property]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 110; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto s = random_instance(n, rng);
    const auto r = smp_polytope(s);
    CHECK(r.h_matches);
    CHECK(r.v.size() == brute_stable(s).size());
    CHECK(r.summary.f0 == r.v.size());
    CHECK(r.summary.satisfies);
  }
}
