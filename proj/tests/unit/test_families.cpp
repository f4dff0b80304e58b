#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "twolevel/error.hpp"
#include "twolevel/families.hpp"
#include "twolevel/graphs.hpp"

using namespace twolevel;

namespace {

bool has_kind(ErrorKind k, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

Integer pow2(std::size_t d) { return Integer(1) << static_cast<unsigned>(d); }

// equality shape read from counts alone
EqualityShape shape_by_counts(const FSummary& s) {
  if (!s.equality) return EqualityShape::None;
  if (s.f0 == pow2(s.d) && s.fd1 == 2 * s.d) return EqualityShape::Cube;
  if (s.fd1 == pow2(s.d) && s.f0 == 2 * s.d) return EqualityShape::CrossPolytope;
  return EqualityShape::None;
}

// every facet of a 2-level polytope is 2-level
bool faces_two_level(const VPolytope& v, const HPolytope& h) {
  for (const auto& f : h.inequalities) {
    std::vector<RatVector> face;
    for (const auto& p : v.vertices())
      if (dot(f.a, p) == Rational(f.b)) face.push_back(p);
    if (!is_two_level(VPolytope(v.ambient_dim(), face)).two_level) return false;
  }
  return true;
}

void check_family_member(const VPolytope& v) {
  const auto h = facets_of(v);
  const auto s = summary(v, h);
  CHECK(is_two_level(v, h).two_level);
  CHECK(s.satisfies);
  CHECK(s.f0 <= pow2(s.d));
  CHECK(s.fd1 <= pow2(s.d));
  const auto shape = equality_shape(v, h);
  if (s.equality) CHECK(shape != EqualityShape::None);
  CHECK(shape == shape_by_counts(s));
  if (s.d <= 5) CHECK(faces_two_level(v, h));
}

}  // namespace

TEST_CASE("STAB examples", "[families][stab]") {
  const auto c4 = stab(cycle_graph(4));
  const auto s = summary(c4.v);
  CHECK(s.f0 == 7);
  CHECK(s.fd1 == 8);
  CHECK(s.product == 56);
  CHECK(s.bound == 128);
  CHECK(vertices_of(c4.h) == c4.v);

  const auto e3 = stab(empty_graph(3));
  const auto se = summary(e3.v);
  CHECK(se.equality);
  CHECK(equality_shape(e3.v, facets_of(e3.v)) == EqualityShape::Cube);

  const auto k3 = summary(stab(complete_graph(3)).v);
  CHECK(k3.f0 == 4);
  CHECK(k3.fd1 == 4);

  CHECK(has_kind(ErrorKind::NotPerfect, [] { stab(cycle_graph(5)); }));
  CHECK(has_kind(ErrorKind::SizeGuardExceeded, [] { stab(empty_graph(15)); }));
}

TEST_CASE("Hansen examples", "[families][hansen]") {
  const auto k2 = hansen(complete_graph(2));
  CHECK(k2.summary.d == 3);
  CHECK(k2.summary.f0 == 6);
  CHECK(k2.summary.fd1 == 8);
  CHECK(k2.summary.equality);
  CHECK(equality_shape(k2.v, facets_of(k2.v)) == EqualityShape::CrossPolytope);

  const auto e2 = hansen(empty_graph(2));
  CHECK(e2.summary.equality);
  CHECK(equality_shape(e2.v, facets_of(e2.v)) == EqualityShape::Cube);

  const auto p7 = hansen(path_graph(7));
  CHECK(p7.summary.f0 == 68);
  CHECK(p7.summary.fd1 == 28);
  CHECK(count_edges(p7.v) == 622);
  CHECK(has_kind(ErrorKind::NotPerfect, [] { hansen(cycle_graph(5)); }));
}

TEST_CASE("min up/down examples", "[families][minupdown]") {
  const auto p31 = min_updown({3, 1});
  CHECK(p31.v.size() == 8);
  CHECK(facets_of(p31.v).inequalities.size() == 6);
  const auto p32 = min_updown({3, 2});
  const auto s = summary(p32.v);
  CHECK(s.f0 == 6);
  CHECK(s.fd1 == 8);
  CHECK(s.equality);
  const auto p82 = min_updown({8, 2});
  CHECK(p82.v.size() == 68);
  const auto h82 = facets_of(p82.v);
  CHECK(h82.inequalities.size() == 28);
  CHECK(count_edges(p82.v, h82) == 604);
  CHECK(has_kind(ErrorKind::BadParams, [] { min_updown({3, 3}); }));
  CHECK(has_kind(ErrorKind::BadParams, [] { min_updown({3, 0}); }));
  CHECK(has_kind(ErrorKind::BadParams, [] { min_updown({15, 2}); }));
}

TEST_CASE("Birkhoff examples", "[families][birkhoff]") {
  const auto b3 = birkhoff(3);
  CHECK(b3.summary.f0 == 6);
  CHECK(b3.summary.fd1 == 9);
  CHECK(b3.summary.d == 4);
  const auto b4 = birkhoff(4);
  CHECK(b4.summary.f0 == 24);
  CHECK(b4.summary.fd1 == 16);
  CHECK(b4.summary.d == 9);
  CHECK(b4.summary.product == 384);
  CHECK(b4.summary.bound == 9 * 1024);
  const auto b2 = birkhoff(2);
  CHECK(b2.summary.d == 1);
  CHECK(b2.summary.f0 == 2);
  const auto b5 = birkhoff(5);
  CHECK(b5.formula_only);
  CHECK(b5.summary.f0 == 120);
  CHECK(b5.summary.fd1 == 25);
  CHECK(b5.summary.d == 16);
  CHECK(has_kind(ErrorKind::BadParams, [] { birkhoff(6); }));
}

TEST_CASE("Hanner examples and parsing", "[families][hanner]") {
  const auto seg = hanner(parse_hanner("seg"));
  CHECK(seg.summary.f0 == 2);
  CHECK(seg.summary.fd1 == 2);
  const auto cube = hanner(parse_hanner("prod(seg,seg,seg)"));
  CHECK(cube.summary.f0 == 8);
  CHECK(cube.summary.equality);
  const auto oct = hanner(parse_hanner("polar(prod(seg,seg,seg))"));
  CHECK(oct.summary.f0 == 6);
  CHECK(oct.summary.fd1 == 8);
  CHECK(oct.summary.equality);
  CHECK(parse_hanner(" polar( prod(seg , seg) ) ").to_string() == "polar(prod(seg,seg))");
  for (const char* bad : {"", "seg,", "prod()", "polar(seg,seg)", "cube", "prod(seg"})
    CHECK(has_kind(ErrorKind::BadInput, [&] { parse_hanner(bad); }));
  CHECK(has_kind(ErrorKind::DimensionGuardExceeded,
                 [] { hanner(parse_hanner("prod(seg,seg,seg,seg,seg,seg,seg,seg,seg,seg,seg)")); }));
}

TEST_CASE("Hanner expression counts", "[families][hanner]") {
  // number of Hanner polytopes up to the listed normalisation
  CHECK(hanner_expressions(1).size() == 1);
  CHECK(hanner_expressions(2).size() == 2);
  CHECK(hanner_expressions(3).size() == 4);
  for (std::size_t d = 1; d <= 6; ++d)
    for (const auto& e : hanner_expressions(d)) {
      CHECK(e.dimension() == d);
      CHECK(parse_hanner(e.to_string()).to_string() == e.to_string());
    }
}

TEST_CASE("STAB and Hansen on all perfect graphs with n <= 5", "[families][property]") {
  std::size_t perfect = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = graph_from_code(n, code);
      if (!is_perfect(g)) continue;
      ++perfect;
      const auto st = stab(g);
      const auto h = facets_of(st.v);
      auto sh = st.h;
      canonicalize(sh);
      CHECK(sh.inequalities == h.inequalities);  // maximal cliques + nonnegativity are the facets
      check_family_member(st.v);
      if (n <= 4) {
        const auto hn = hansen(g);
        CHECK(hn.summary.f0 == 2 * enumerate_stable_sets(g, true).size());
        CHECK(hn.summary.fd1 == 2 * enumerate_cliques(g, true).size());
        CHECK_FALSE(hn.formula_only);
        check_family_member(hn.v);
      }
    }
  }
  CHECK(perfect == 1 + 2 + 8 + 64 + 1012);
}

TEST_CASE("min up/down vertex sets and facet counts against brute force", "[families][property]") {
  for (std::size_t d = 2; d <= 7; ++d)
    for (std::size_t l = 1; l < d; ++l) {
      const auto m = min_updown({d, l});
      // vectors whose consecutive switch positions are at least l apart
      std::vector<RatVector> pts;
      for (Mask x = 0; x < (Mask{1} << d); ++x) {
        int last = -1000;
        bool ok = true;
        for (std::size_t i = 1; i < d; ++i)
          if (((x >> i) & 1u) != ((x >> (i - 1)) & 1u)) {
            if (static_cast<int>(i) - last < static_cast<int>(l)) ok = false;
            last = static_cast<int>(i);
          }
        if (!ok) continue;
        RatVector p(d);
        for (std::size_t j = 0; j < d; ++j) p[j] = (x >> j) & 1u;
        pts.push_back(p);
      }
      CHECK(m.v == VPolytope(d, pts));
      // cliques of G_{d,l} (incl. empty): index sets within a window of length l
      std::size_t cliques = 0;
      for (Mask s = 0; s < (Mask{1} << (d - 1)); ++s)
        cliques += s == 0 || (31 - std::countl_zero(s)) - std::countr_zero(s) <= static_cast<int>(l) - 1;
      const auto h = facets_of(m.v);
      CHECK(h.inequalities.size() == 2 * cliques);
      CHECK(m.switch_map_two_to_one);
      CHECK(m.index_set_bijection);
      CHECK(vertices_of(m.h) == m.v);
      check_family_member(m.v);
    }
}

TEST_CASE("Birkhoff and Hanner polytopes are 2-level and within the bound", "[families][property]") {
  for (std::size_t n = 2; n <= 4; ++n) check_family_member(birkhoff(n).v);
  for (std::size_t d = 1; d <= 5; ++d)
    for (const auto& e : hanner_expressions(d)) {
      const auto r = hanner(e);
      check_family_member(r.v);
      CHECK(r.summary.equality == (d <= 3 || r.summary.f0 == pow2(d) || r.summary.fd1 == pow2(d)));
    }
}
