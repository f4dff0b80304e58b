// twolevel: JSON in, JSON out. Reports go to stdout with sorted keys, wall
// time and diagnostics to stderr. Exit 0 ok, 1 input error, 2 assertion failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <boost/program_options.hpp>

#include "twolevel/binary_matroids.hpp"
#include "twolevel/error.hpp"
#include "twolevel/extremal.hpp"
#include "twolevel/families.hpp"
#include "twolevel/io.hpp"
#include "twolevel/matroids.hpp"
#include "twolevel/posets.hpp"
#include "twolevel/reproduce.hpp"
#include "twolevel/stable_matching.hpp"

namespace po = boost::program_options;
using namespace twolevel;
using io::json;
using io::to_json;

namespace {

struct Globals {
  PolytopeOptions poly;
  bool extended = false;
  std::uint64_t seed = 2017;
};

struct Report {
  json result = json::object();
  std::vector<Assertion> assertions;
  void expect(std::string name, bool pass) { assertions.push_back({std::move(name), pass}); }
};

json names_of(const std::vector<Mask>& sets) {
  json out = json::array();
  for (Mask s : sets) {
    json idx = json::array();
    for (std::size_t i = 0; i < 32; ++i)
      if (s >> i & 1u) idx.push_back(i);
    out.push_back(idx);
  }
  return out;
}

std::string shape_name(EqualityShape s) {
  switch (s) {
    case EqualityShape::Cube: return "cube";
    case EqualityShape::CrossPolytope: return "cross-polytope";
    default: return "none";
  }
}

// facets, summary, 2-level certificate and the equality shape of a V-polytope
void analyze(const VPolytope& v, const PolytopeOptions& opt, Report& r, bool conjecture_applies) {
  const HPolytope f = facets_of(v, opt);
  const FSummary s = summary(v, f);
  const auto cert = is_two_level(v, f);
  const auto shape = equality_shape(v, f);
  r.result["summary"] = to_json(s);
  r.result["two_level"] = to_json(cert);
  r.result["equality_shape"] = shape_name(shape);
  if (!conjecture_applies) return;
  r.expect("two_level", cert.two_level);
  r.expect("satisfies_bound", s.satisfies);
  r.expect("equality_only_for_cube_or_cross_polytope", !s.equality || shape != EqualityShape::None);
}

std::size_t param_size(const json& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_number_unsigned()) fail(ErrorKind::BadParams, std::string("missing \"") + key + "\"");
  return p.at(key).get<std::size_t>();
}

Report cmd_family(const std::string& name, const json& p, const Globals& g) {
  Report r;
  r.result["family"] = name;
  auto family_counts = [&](const FamilyResult& fr) {
    r.result["summary"] = to_json(fr.summary);
    r.result["formula_only"] = fr.formula_only;
    r.result["f0_formula"] = to_json(fr.f0_formula);
    r.result["fd1_formula"] = to_json(fr.fd1_formula);
    r.expect("f0_matches_formula", fr.summary.f0 == fr.f0_formula);
    r.expect("fd1_matches_formula", fr.summary.fd1 == fr.fd1_formula);
    if (!fr.formula_only && fr.summary.d <= g.poly.max_dim) analyze(fr.v, g.poly, r, true);
    else r.expect("satisfies_bound", fr.summary.satisfies);
  };
  if (name == "stab") {
    const Graph gr = io::graph_from(p.at("graph"));
    const auto pair = stab(gr);
    r.result["graph"] = to_json(gr);
    analyze(pair.v, g.poly, r, true);
    r.expect("clique_description_has_same_vertices", vertices_of(pair.h, g.poly) == pair.v);
  } else if (name == "hansen") {
    const Graph gr = io::graph_from(p.at("graph"));
    r.result["graph"] = to_json(gr);
    family_counts(hansen(gr, g.poly));
  } else if (name == "minupdown") {
    const std::size_t d = param_size(p, "d"), l = param_size(p, "l");
    const auto m = min_updown({d, l});
    r.result["d"] = d;
    r.result["l"] = l;
    r.result["index_sets"] = m.index_sets.size();
    r.expect("switch_map_two_to_one", m.switch_map_two_to_one);
    r.expect("index_sets_biject_to_cliques", m.index_set_bijection);
    analyze(m.v, g.poly, r, true);
    r.result["edges"] = count_edges(m.v, g.poly);
  } else if (name == "birkhoff") {
    family_counts(birkhoff(param_size(p, "n"), g.poly));
  } else if (name == "hanner") {
    if (!p.contains("expr") || !p.at("expr").is_string()) fail(ErrorKind::BadParams, "missing \"expr\"");
    const auto e = parse_hanner(p.at("expr").get<std::string>());
    r.result["expr"] = e.to_string();
    family_counts(hanner(e, g.poly));
  } else if (name == "order" || name == "chain") {
    const Poset pos = io::poset_from(p.at("poset"));
    const auto pair = name == "order" ? order_polytope(pos) : chain_polytope(pos);
    r.result["poset"] = to_json(pos);
    analyze(pair.v, g.poly, r, true);
    r.expect("description_has_same_vertices", vertices_of(pair.h, g.poly) == pair.v);
    const auto hibi = hibi_check(pos, g.poly);
    r.result["hibi"] = {{"order_facets", hibi.order_facets}, {"chain_facets", hibi.chain_facets}};
    r.expect("hibi_inequality", hibi.holds);
  } else if (name == "double-order") {
    const Poset pos = io::poset_from(p.at("poset"));
    const auto res = double_order_polytope(pos, g.poly);
    r.result["poset"] = to_json(pos);
    r.result["antichains"] = res.antichains;
    r.result["chains"] = res.chains;
    r.expect("counts_match_antichains_and_chains", res.formula_matches);
    analyze(res.v, g.poly, r, true);
  } else {
    fail(ErrorKind::UnknownId, "unknown family '" + name + "'");
  }
  return r;
}

Report cmd_check(const io::PolytopeFile& file, const Globals& g) {
  Report r;
  r.result["name"] = file.name;
  r.result["dim"] = file.dim;
  VPolytope v;
  if (file.integer_hull) {
    if (!file.h) fail(ErrorKind::BadInput, "\"hull\": \"integer\" needs an inequality description");
    IntegerHullOptions hopt;
    hopt.max_dim = std::max(g.poly.max_dim, file.dim);
    const auto pts = integer_points(*file.h, hopt);
    v = pts.v;
    r.result["integer_points"] = pts.integer_points.size();
    r.result["f0"] = v.size();
    r.result["d"] = affine_dimension(v);
    if (!g.extended) {
      r.result["note"] = "facet enumeration of the integer hull runs with --extended";
      return r;
    }
  } else if (file.v) {
    v = *file.v;
  } else if (file.h) {
    v = vertices_of(*file.h, g.poly);
  } else {
    fail(ErrorKind::EmptyInput, "the polytope file has neither vertices nor inequalities");
  }
  PolytopeOptions opt = g.poly;
  if (file.integer_hull) opt.max_dim = std::max(opt.max_dim, file.dim);
  const HPolytope f = facets_of(v, opt);
  const FSummary s = summary(v, f);
  r.result["summary"] = to_json(s);
  r.result["two_level"] = is_two_level(v, f).two_level;
  r.result["violated"] = !s.satisfies;
  if (file.h && !file.integer_hull) r.expect("description_vertices_match", vertices_of(*file.h, opt) == v);
  return r;
}

VPolytope polytope_vertices(const io::PolytopeFile& file, const Globals& g) {
  if (file.v) return *file.v;
  if (file.h) return vertices_of(*file.h, g.poly);
  fail(ErrorKind::EmptyInput, "the polytope file has neither vertices nor inequalities");
}

Report cmd_two_level(const io::PolytopeFile& file, const Globals& g) {
  Report r;
  const VPolytope v = polytope_vertices(file, g);
  const HPolytope f = facets_of(v, g.poly);
  r.result["name"] = file.name;
  r.result["certificate"] = to_json(is_two_level(v, f));
  r.result["summary"] = to_json(summary(v, f));
  return r;
}

Report cmd_edges(const io::PolytopeFile& file, const Globals& g) {
  Report r;
  const VPolytope v = polytope_vertices(file, g);
  const auto es = edges(v, facets_of(v, g.poly));
  r.result["name"] = file.name;
  r.result["count"] = es.size();
  r.result["edges"] = es;
  return r;
}

Report cmd_matroid_tree(const json& in) {
  Report r;
  std::vector<TwoSumTree> forest;
  if (in.contains("trees"))
    for (const auto& t : in.at("trees")) forest.push_back(io::tree_from(t));
  else
    forest.push_back(io::tree_from(in));
  const auto check = conjecture_check_matroid(forest);
  json trees = json::array();
  bool ranks = true, counts = true;
  for (const auto& t : forest) {
    const auto desc = tree_description(t);
    json cuts = json::array();
    for (const auto& c : desc.cuts)
      cuts.push_back({{"edge", c.edge}, {"side", c.side}, {"elements", c.elements},
                      {"formula_rank", c.formula_rank}, {"oracle_rank", c.oracle_rank}});
    trees.push_back({{"ground_set", t.ground_set()}, {"bases", to_json(base_count(t))}, {"cuts", cuts},
                     {"raw_inequalities", desc.raw_inequalities}});
    ranks = ranks && desc.ranks_match;
    counts = counts && desc.raw_inequalities <= 2 * t.ground_set().size() + 2 * t.edges.size();
  }
  r.result["trees"] = trees;
  r.result["summary"] = to_json(check.summary);
  r.result["geometric"] = check.geometric;
  r.result["two_level"] = check.two_level;
  r.expect("cut_ranks_match_oracle", ranks);
  r.expect("inequality_count_within_2e_plus_2t", counts);
  if (check.geometric) {
    r.expect("base_count_recursion_matches_enumeration", check.f0_recursion == check.f0_enumerated);
    r.expect("reduced_description_equals_facets", check.description_matches);
    r.expect("two_level", check.two_level);
  }
  r.expect("satisfies_bound", check.summary.satisfies);
  return r;
}

json cycle_json(const CycleReport& c) {
  return {{"kept_columns", c.pre.kept},
          {"coloops", c.pre.coloops},
          {"contracted", c.pre.contracted},
          {"matroid", to_json(c.pre.m)},
          {"summary", to_json(c.summary)},
          {"raw_inequalities", c.raw_inequalities},
          {"chordless_cocircuits", names_of(c.chordless)},
          {"long_chordless_cocircuits", names_of(c.long_chordless)},
          {"two_level_condition", c.two_level_condition},
          {"geometric", c.geometric},
          {"description_matches", c.description_matches},
          {"two_level", c.two_level},
          {"cotriangles", c.cotriangles},
          {"cocircuits4", c.cocircuits4},
          {"arithmetic_lhs", to_json(c.arithmetic_lhs)},
          {"arithmetic_rhs", to_json(c.arithmetic_rhs)},
          {"arithmetic_holds", c.arithmetic_holds}};
}

void cycle_assertions(const CycleReport& c, Report& r) {
  if (c.geometric) {
    // a mismatch means the odd-set rows do not cut out the cycle polytope
    r.expect("odd_set_description_equals_facets", c.description_matches);
    r.expect("two_level_iff_no_long_chordless_cocircuit", c.two_level == c.two_level_condition);
    if (c.two_level) r.expect("satisfies_bound", c.summary.satisfies);
  }
  if (c.two_level_condition) r.expect("arithmetic_bound", c.arithmetic_holds);
}

Report cmd_cycle(const BinaryMatroid& m, const Globals& g) {
  Report r;
  const auto c = cycle_polytope(m, g.poly);
  r.result = cycle_json(c);
  cycle_assertions(c, r);
  return r;
}

Report cmd_cut(const Graph& gr, const Globals& g) {
  Report r;
  const auto c = cut_polytope(gr, g.poly);
  r.result = cycle_json(c.cycle);
  r.result["graph"] = to_json(gr);
  r.result["has_long_induced_cycle"] = c.has_long_induced_cycle;
  r.expect("chordless_cocircuits_are_induced_cycles", c.induced_cycles_match);
  cycle_assertions(c.cycle, r);
  return r;
}

Report cmd_matching(const SMInstance& inst) {
  Report r;
  const auto rep = verify_order_equivalence(inst);
  const auto poly = smp_polytope(inst, true);
  json ms = json::array();
  for (const auto& mu : enumerate_stable(inst)) ms.push_back(to_json(mu));
  r.result["instance"] = to_json(inst);
  r.result["stable_matchings"] = ms;
  r.result["men_optimal"] = to_json(deferred_acceptance(inst));
  r.result["rotations"] = rep.rotations;
  r.result["summary"] = to_json(poly.summary);
  r.expect("rotation_columns_independent", rep.columns_independent);
  r.expect("decomposition_over_rotations", rep.decomposition_holds);
  r.expect("image_of_order_polytope_is_stable_matchings", rep.image_matches);
  r.expect("closed_sets_biject_to_matchings", rep.pi_bijective);
  r.expect("mu0_is_deferred_acceptance", rep.mu0_is_deferred_acceptance);
  r.expect("h_description_vertices_equal_stable_matchings", poly.h_matches);
  return r;
}

Report cmd_reproduce(const std::string& id, const Globals& g) {
  SuiteOptions opt;
  opt.poly = g.poly;
  opt.extended = g.extended;
  opt.seed = g.seed;
  const SuiteResult s = reproduce(id, opt);
  Report r;
  r.result = s.payload;
  r.assertions = s.assertions;
  return r;
}

void need(const std::vector<std::string>& args, std::size_t count, const std::string& usage) {
  if (args.size() != count) fail(ErrorKind::BadInput, "usage: twolevel " + usage);
}

constexpr const char* kUsage =
    "usage: twolevel [--max-dim N] [--extended] [--seed S] <command> [args]\n"
    "commands:\n"
    "  family <stab|hansen|minupdown|birkhoff|hanner|order|chain|double-order> <params.json|inline json>\n"
    "  check <polytope.json>       counts and the conjecture bound\n"
    "  two-level <polytope.json>   slack certificate\n"
    "  edges <polytope.json>       graph of the polytope\n"
    "  matroid-tree <tree.json>\n"
    "  cycle <matroid.json>\n"
    "  cut <graph.json>\n"
    "  matching <instance.json>\n"
    "  reproduce <id|list>\n";

int run(int argc, char** argv) {
  Globals g;
  std::string command;
  std::vector<std::string> args;
  po::options_description flags("options");
  flags.add_options()("help,h", "show usage")(
      "max-dim", po::value<std::size_t>(&g.poly.max_dim)->default_value(g.poly.max_dim),
      "largest affine dimension handed to the double description")(
      "extended", po::bool_switch(&g.extended), "enable long runs")(
      "seed", po::value<std::uint64_t>(&g.seed)->default_value(g.seed), "seed for randomized corpora");
  po::options_description hidden;
  hidden.add_options()("command", po::value<std::string>(&command))("args", po::value<std::vector<std::string>>(&args));
  po::options_description all;
  all.add(flags).add(hidden);
  po::positional_options_description pos;
  pos.add("command", 1).add("args", -1);
  po::variables_map vm;
  po::store(po::command_line_parser(argc, argv).options(all).positional(pos).run(), vm);
  po::notify(vm);
  if (vm.count("help")) {
    std::cout << kUsage << flags;
    return 0;
  }
  if (command.empty()) fail(ErrorKind::BadInput, "no command given");

  if (command == "reproduce" && args.size() == 1 && args[0] == "list") {
    std::cout << json(suite_ids()).dump(2) << "\n";
    return 0;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  if (command == "family") {
    need(args, 2, "family <name> <params>");
    r = cmd_family(args[0], io::load_inline_or_file(args[1]), g);
  } else if (command == "check") {
    need(args, 1, "check <polytope.json>");
    r = cmd_check(io::polytope_from(io::load_file(args[0])), g);
  } else if (command == "two-level") {
    need(args, 1, "two-level <polytope.json>");
    r = cmd_two_level(io::polytope_from(io::load_file(args[0])), g);
  } else if (command == "edges") {
    need(args, 1, "edges <polytope.json>");
    r = cmd_edges(io::polytope_from(io::load_file(args[0])), g);
  } else if (command == "matroid-tree") {
    need(args, 1, "matroid-tree <tree.json>");
    r = cmd_matroid_tree(io::load_inline_or_file(args[0]));
  } else if (command == "cycle") {
    need(args, 1, "cycle <matroid.json>");
    r = cmd_cycle(io::binary_matroid_from(io::load_inline_or_file(args[0])), g);
  } else if (command == "cut") {
    need(args, 1, "cut <graph.json>");
    r = cmd_cut(io::graph_from(io::load_inline_or_file(args[0])), g);
  } else if (command == "matching") {
    need(args, 1, "matching <instance.json>");
    r = cmd_matching(io::instance_from(io::load_inline_or_file(args[0])));
  } else if (command == "reproduce") {
    need(args, 1, "reproduce <id>");
    r = cmd_reproduce(args[0], g);
  } else {
    fail(ErrorKind::BadInput, "unknown command '" + command + "'");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json assertions = json::array();
  bool passed = true;
  for (const auto& a : r.assertions) {
    assertions.push_back({{"name", a.name}, {"pass", a.pass}});
    passed = passed && a.pass;
  }
  const json report = {{"command", command},
                       {"parameters", {{"args", args}, {"max_dim", g.poly.max_dim}, {"extended", g.extended},
                                       {"seed", g.seed}}},
                       {"result", r.result},
                       {"assertions", assertions},
                       {"passed", passed}};
  std::cout << report.dump(2) << "\n";
  std::cerr << "wall time: " << seconds << " s\n";
  return passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::AssertionFailed ? 2 : 1;
  } catch (const po::error& e) {
    std::cerr << "error: " << e.what() << "\n" << kUsage;
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
