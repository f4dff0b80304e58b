#include "twolevel/reproduce.hpp"

#include <algorithm>
#include <bit>

#include "twolevel/error.hpp"
#include "twolevel/extremal.hpp"
#include "twolevel/families.hpp"
#include "twolevel/graphs.hpp"
#include "twolevel/io.hpp"
#include "twolevel/matroids.hpp"

namespace twolevel {

namespace {

using io::json;
using io::to_json;

json counts(const FSummary& s, std::size_t edge_count) {
  json j = to_json(s);
  j["edges"] = edge_count;
  return j;
}

SuiteResult tradeoff_n6() {
  SuiteResult r;
  json per_n = json::object();
  bool holds = true, equality_exact = true, holds0 = true, preimage = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::size_t graphs = 0, equalities = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = graph_from_code(n, code);
      const auto t = tradeoff_check(g);
      ++graphs;
      equalities += t.equality;
      holds = holds && t.holds;
      holds0 = holds0 && t.holds0;
      equality_exact = equality_exact && (t.equality == t.complete_or_edgeless);
      for (Mask w = 1; w < (Mask{1} << n); ++w)
        preimage = preimage && union_preimage_count(g, w) <= 2 * static_cast<std::size_t>(std::popcount(w));
    }
    per_n[std::to_string(n)] = {{"graphs", graphs}, {"equality_cases", equalities}};
  }
  r.payload = {{"per_n", per_n}};
  r.expect("clique_stable_product_bounded", holds);
  r.expect("equality_exactly_on_complete_or_edgeless", equality_exact);
  r.expect("bound_with_empty_sets_holds", holds0);
  r.expect("preimage_at_most_twice_w", preimage);
  return r;
}

SuiteResult minupdown_vs_hansen(const SuiteOptions& opt) {
  SuiteResult r;
  const auto mud = min_updown({8, 2});
  const auto mud_f = facets_of(mud.v, opt.poly);
  const auto mud_s = summary(mud.v, mud_f);
  const auto mud_e = count_edges(mud.v, mud_f);

  const auto hans = hansen(path_graph(7), opt.poly);
  const auto hans_f = facets_of(hans.v, opt.poly);
  const auto hans_s = summary(hans.v, hans_f);
  const auto hans_e = count_edges(hans.v, hans_f);

  r.expect("p8_2_vertices_68", mud_s.f0 == 68);
  r.expect("p8_2_facets_28", mud_s.fd1 == 28);
  r.expect("p8_2_edges_604", mud_e == 604);
  r.expect("hansen_p7_vertices_68", hans_s.f0 == 68);
  r.expect("hansen_p7_facets_28", hans_s.fd1 == 28);
  r.expect("hansen_p7_edges_622", hans_e == 622);
  r.expect("same_dimension_8", mud_s.d == 8 && hans_s.d == 8);
  r.expect("both_two_level", is_two_level(mud.v, mud_f).two_level && is_two_level(hans.v, hans_f).two_level);
  r.expect("edge_counts_differ", mud_e != hans_e);

  json fixtures = json::object();
  for (const auto& [file, edges_expected] : {std::pair{std::string("p8_2.json"), std::size_t{604}},
                                             std::pair{std::string("hansen_p7.json"), std::size_t{622}}}) {
    const auto fx = io::load_fixture(file);
    const auto f = facets_of(*fx.v, opt.poly);
    const auto s = summary(*fx.v, f);
    const auto e = count_edges(*fx.v, f);
    fixtures[file] = counts(s, e);
    r.expect(file + "_matches_68_28", s.f0 == 68 && s.fd1 == 28);
    r.expect(file + "_edges", e == edges_expected);
  }
  r.payload = {{"minupdown_8_2", counts(mud_s, mud_e)}, {"hansen_p7", counts(hans_s, hans_e)}, {"fixtures", fixtures}};
  return r;
}

TwoSumTree two_node_tree() {
  TwoSumTree t;
  t.nodes.push_back({0, 5, 2, {"1", "2", "3", "4", "5"}});
  t.nodes.push_back({1, 6, 3, {"5", "6", "7", "8", "9", "10"}});
  t.edges.push_back({0, 1, "5"});
  return t;
}

SuiteResult two_node_matroid() {
  SuiteResult r;
  const TwoSumTree t = two_node_tree();
  const Matroid m = compose_tree(t);
  const auto desc = tree_description(t);
  const auto check = conjecture_check_matroid({t});
  const VPolytope bp = base_polytope(m);
  const auto from_h = vertices_of(desc.h, PolytopeOptions{std::max<std::size_t>(m.size(), 14)});
  const auto sep = two_separation(m);

  json cuts = json::array();
  for (const auto& c : desc.cuts)
    cuts.push_back({{"edge", c.edge}, {"side", c.side}, {"elements", c.elements}, {"formula_rank", c.formula_rank},
                    {"oracle_rank", c.oracle_rank}});
  r.payload = {{"elements", m.elements()},
               {"rank", m.rank()},
               {"bases", m.bases().size()},
               {"base_count_recursion", to_json(base_count(t))},
               {"cuts", cuts},
               {"raw_inequalities", desc.raw_inequalities},
               {"summary", to_json(check.summary)},
               {"tree", to_json(t)}};
  if (sep) r.payload["two_separation"] = {sep->first, sep->second};

  r.expect("nine_elements", m.size() == 9);
  r.expect("rank_4", m.rank() == 4);
  r.expect("bases_100", m.bases().size() == 100);
  r.expect("base_count_recursion_100", base_count(t) == 100);
  r.expect("basis_1_2_6_7", m.is_base(m.mask_of({"1", "2", "6", "7"})));
  bool cut_ranks = desc.cuts.size() == 2 && desc.ranks_match;
  for (const auto& c : desc.cuts) {
    const bool left = c.elements == std::vector<std::string>{"1", "2", "3", "4"};
    const bool right = c.elements == std::vector<std::string>{"6", "7", "8", "9", "10"};
    cut_ranks = cut_ranks && ((left && c.formula_rank == 2) || (right && c.formula_rank == 3));
  }
  r.expect("cut_ranks_2_and_3", cut_ranks);
  r.expect("tree_description_vertices_equal_base_polytope", from_h == bp);
  r.expect("reduced_description_equals_facets", check.description_matches);
  r.expect("two_level", check.two_level);
  r.expect("conjecture_bound", check.summary.satisfies);
  r.expect("two_separation_splits_at_shared_element",
           sep && sep->first == std::vector<std::string>{"1", "2", "3", "4"} &&
               sep->second == std::vector<std::string>{"6", "7", "8", "9", "10"});
  r.expect("connected", is_connected(m));
  return r;
}

SuiteResult q4_spanning_trees() {
  SuiteResult r;
  const auto k4 = spanning_tree_study(complete_graph(4));
  const auto w4 = spanning_tree_study(wheel_graph(4));
  const auto c4 = spanning_tree_study(cycle_graph(4));
  const auto q4 = spanning_tree_study(hypercube_graph(4));
  r.payload = {{"K4", to_json(k4)}, {"W4", to_json(w4)}, {"C4", to_json(c4)}, {"Q4", to_json(q4)}};
  r.expect("k4_sixteen_trees", k4.f0 == 16);
  r.expect("c4_four_trees", c4.f0 == 4);
  r.expect("k4_criterion_cross_validated", k4.all_checks() && !k4.fd1_lower_bound);
  r.expect("w4_criterion_cross_validated", w4.all_checks() && !w4.fd1_lower_bound);
  r.expect("q4_dimension_31", q4.d == 31);
  r.expect("q4_bound_is_31_times_2_pow_32", q4.bound == Integer("133143986176"));
  r.expect("q4_product_at_least_1_603e11", q4.product >= Integer("160300000000"));
  r.expect("q4_violated", q4.violated);
  return r;
}

SuiteResult k2n_forests() {
  SuiteResult r;
  json rows = json::object();
  bool checks = true;
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto b = forest_study(n);
    rows[std::to_string(n)] = to_json(b);
    checks = checks && b.all_checks();
    if (n == 9) {
      r.expect("n9_product_9880866", b.product == 9880866);
      r.expect("n9_bound_9437184", b.bound == 9437184);
      r.expect("n9_violated", b.violated);
    }
    if (n == 3) r.expect("n3_holds_at_lower_bound_108_le_768", b.product == 108 && b.bound == 768 && !b.violated);
  }
  r.expect("lower_bound_families_sound", checks);
  r.payload = {{"studies", rows}};
  return r;
}

SuiteResult three_level() {
  SuiteResult r;
  json rows = json::object();
  bool all_violated = true, checks = true;
  for (std::size_t d = 3; d <= 10; ++d) {
    const auto b = three_level_minupdown(d);
    rows[std::to_string(d)] = to_json(b);
    all_violated = all_violated && b.violated;
    checks = checks && b.all_checks();
    if (d == 3) r.expect("d3_49_gt_48", b.product == 49 && b.bound == 48);
    if (d == 4) r.expect("d4_132_gt_128", b.product == 132 && b.bound == 128);
  }
  r.expect("violated_for_3_le_d_le_10", all_violated);
  r.expect("geometric_cross_checks", checks);
  r.payload = {{"studies", rows}};
  return r;
}

SuiteResult frac_stab() {
  SuiteResult r;
  json rows = json::object();
  bool pattern = true, checks = true;
  for (std::size_t d = 3; d <= 10; ++d) {
    const auto b = fractional_stab_clique(d);
    rows[std::to_string(d)] = to_json(b);
    pattern = pattern && (b.violated == (d >= 5));
    checks = checks && b.all_checks();
    if (d == 5) r.expect("d5_330_gt_320", b.product == 330 && b.bound == 320);
    if (d == 4) r.expect("d4_100_le_128", b.product == 100 && b.bound == 128);
  }
  r.expect("violated_exactly_from_d5", pattern);
  r.expect("vertex_and_facet_counts_match_formulas", checks);
  r.payload = {{"studies", rows}};
  return r;
}

SuiteResult integer_hull_12(const SuiteOptions& opt) {
  SuiteResult r;
  const auto fx = io::load_fixture("appendixF.json");
  IntegerHullOptions hopt;
  hopt.max_dim = std::max<std::size_t>(opt.poly.max_dim, fx.dim);
  const auto pts = integer_points(*fx.h, hopt);
  const std::size_t d = affine_dimension(pts.v);
  r.payload = {{"dim", fx.dim}, {"integer_points", pts.integer_points.size()}, {"f0", pts.v.size()}, {"d", d},
               {"extended", opt.extended}};
  r.expect("full_dimensional_12", d == 12);
  r.expect("every_integer_point_is_a_vertex", pts.v.size() == pts.integer_points.size());
  if (opt.extended) {
    const auto facets = facets_of(pts.v, PolytopeOptions{hopt.max_dim});
    const auto s = summary(pts.v, facets);
    r.payload["summary"] = to_json(s);
    r.expect("product_535392", s.product == 535392);
    r.expect("bound_98304", s.bound == 98304);
    r.expect("violated", !s.satisfies);
  } else {
    r.payload["note"] = "facet enumeration runs with --extended";
  }
  return r;
}

SuiteResult marriage_equivalence(const SuiteOptions& opt) {
  SuiteResult r;
  const auto corpus = marriage_corpus(120, opt.seed);
  bool equivalence = true, da = true, h_matches = true;
  std::size_t most = 0, total = 0;
  json by_n = json::object();
  for (const auto& inst : corpus) {
    const auto rep = verify_order_equivalence(inst);
    equivalence = equivalence && rep.all();
    da = da && rep.mu0_is_deferred_acceptance;
    const auto poly = smp_polytope(inst, true);
    h_matches = h_matches && poly.h_matches;
    most = std::max(most, rep.matchings);
    total += rep.matchings;
    auto& slot = by_n[std::to_string(inst.n)];
    slot = slot.is_null() ? json(1) : json(slot.get<int>() + 1);
  }
  r.payload = {{"instances", corpus.size()}, {"instances_by_n", by_n}, {"stable_matchings_total", total},
               {"most_stable_matchings", most}, {"seed", opt.seed}};
  r.expect("at_least_100_instances", corpus.size() >= 100);
  r.expect("order_equivalence_all_instances", equivalence);
  r.expect("mu0_is_men_optimal_deferred_acceptance", da);
  r.expect("h_description_vertices_equal_stable_matchings", h_matches);
  r.expect("corpus_has_multiple_stable_matchings", most >= 5);
  return r;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"thm-tradeoff-n6", "prop-minupdown-vs-hansen", "fig2-matroid",
                                            "q4-spanning-trees", "k2n-forests",           "three-level",
                                            "frac-stab",        "appendixF",               "marriage-equivalence"};
  return ids;
}

std::vector<SMInstance> marriage_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<SMInstance> out;
  for (std::size_t n = 2; n <= 5; ++n) {
    // man i lists i, i+1, ...; woman j lists j+1, j+2, ..., j: n stable matchings
    SMInstance inst;
    inst.n = n;
    inst.men.assign(n, {});
    inst.women.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        inst.men[i].push_back((i + k) % n);
        inst.women[i].push_back((i + k + 1) % n);
      }
    out.push_back(std::move(inst));
  }
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    out.push_back(random_instance(n, rng));
  }
  return out;
}

SuiteResult reproduce(const std::string& id, const SuiteOptions& opt) {
  SuiteResult r;
  if (id == "thm-tradeoff-n6") r = tradeoff_n6();
  else if (id == "prop-minupdown-vs-hansen") r = minupdown_vs_hansen(opt);
  else if (id == "fig2-matroid") r = two_node_matroid();
  else if (id == "q4-spanning-trees") r = q4_spanning_trees();
  else if (id == "k2n-forests") r = k2n_forests();
  else if (id == "three-level") r = three_level();
  else if (id == "frac-stab") r = frac_stab();
  else if (id == "appendixF") r = integer_hull_12(opt);
  else if (id == "marriage-equivalence") r = marriage_equivalence(opt);
  else fail(ErrorKind::UnknownId, "unknown reproduction id '" + id + "'");
  r.id = id;
  return r;
}

}  // namespace twolevel
