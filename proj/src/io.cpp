#include "twolevel/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "twolevel/error.hpp"

#ifndef TWOLEVEL_FIXTURE_DIR
#define TWOLEVEL_FIXTURE_DIR "fixtures"
#endif

namespace twolevel::io {

namespace {

// nlohmann throws its own exception types on wrong shapes; callers see BadInput.
template <class F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    fail(ErrorKind::BadInput, std::string(what) + ": " + e.what());
  }
}

std::size_t size_from(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    fail(ErrorKind::BadInput, std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_from(const json& arr) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) fail(ErrorKind::BadInput, "expected a pair [u, v]");
    out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return out;
}

RatVector vector_from(const json& arr, std::size_t dim) {
  if (!arr.is_array() || arr.size() != dim)
    fail(ErrorKind::DimensionMismatch, "expected a vector of length " + std::to_string(dim));
  RatVector v;
  for (const auto& x : arr) v.push_back(rational_from(x));
  return v;
}

void add_rows(HPolytope& h, const json& arr, bool equations) {
  for (const auto& row : arr) {
    // {"a", "b"} with {"c", "d"} accepted as aliases
    const json& a = row.contains("a") ? row.at("a") : row.at("c");
    const json& b = row.contains("b") ? row.at("b") : row.at("d");
    const RatVector av = vector_from(a, h.ambient_dim);
    const Rational bv = rational_from(b);
    if (equations) h.equations.push_back(make_hyperplane(av, bv));
    else h.inequalities.push_back(make_halfspace(av, bv));
  }
}

}  // namespace

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json to_json(const Rational& q) {
  if (q.get_den() == 1) return to_json(Integer(q.get_num()));
  return json(twolevel::to_string(q));
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::BadInput, "expected an integer or a \"p/q\" string, got " + j.dump());
}

Integer integer_from(const json& j) {
  const Rational q = rational_from(j);
  if (q.get_den() != 1) fail(ErrorKind::BadInput, "expected an integer, got " + j.dump());
  return q.get_num();
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const VPolytope& v) {
  json pts = json::array();
  for (const auto& p : v.vertices()) pts.push_back(to_json(p));
  return {{"dim", v.ambient_dim()}, {"vertices", pts}};
}

json to_json(const HPolytope& h) {
  json ineqs = json::array(), eqs = json::array();
  for (const auto& r : h.inequalities) ineqs.push_back({{"a", to_json(to_rational(r.a))}, {"b", to_json(r.b)}});
  for (const auto& r : h.equations) eqs.push_back({{"a", to_json(to_rational(r.a))}, {"b", to_json(r.b)}});
  return {{"dim", h.ambient_dim}, {"ineqs", ineqs}, {"eqs", eqs}};
}

json to_json(const FSummary& s) {
  return {{"d", s.d},
          {"f0", to_json(s.f0)},
          {"fd1", to_json(s.fd1)},
          {"product", to_json(s.product)},
          {"bound", to_json(s.bound)},
          {"satisfies", s.satisfies},
          {"equality", s.equality}};
}

json to_json(const TwoLevelCertificate& c) {
  json out = {{"two_level", c.two_level}};
  if (c.witness) {
    out["witness"] = {{"a", to_json(to_rational(c.witness->a))}, {"b", to_json(c.witness->b)}};
    json levels = json::array();
    for (const auto& l : c.witness_levels) levels.push_back(to_json(l));
    out["witness_levels"] = levels;
  }
  return out;
}

json to_json(const BoundReport& r) {
  json checks = json::object(), values = json::object();
  for (const auto& [k, v] : r.checks) checks[k] = v;
  for (const auto& [k, v] : r.values) values[k] = to_json(v);
  return {{"label", r.label},
          {"d", r.d},
          {"f0", to_json(r.f0)},
          {"f0_lower_bound", r.f0_lower_bound},
          {"fd1", to_json(r.fd1)},
          {"fd1_lower_bound", r.fd1_lower_bound},
          {"product", to_json(r.product)},
          {"bound", to_json(r.bound)},
          {"violated", r.violated},
          {"checks", checks},
          {"values", values}};
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.n()}, {"edges", edges}};
}

json to_json(const Poset& p) {
  json rel = json::array();
  for (auto [a, b] : p.covers()) rel.push_back({a, b});
  return {{"n", p.n()}, {"relations", rel}};
}

json to_json(const SMInstance& inst) { return {{"n", inst.n}, {"men", inst.men}, {"women", inst.women}}; }

json to_json(const Matching& mu) { return json(mu.wife); }

json to_json(const TwoSumTree& t) {
  json nodes = json::array(), edges = json::array();
  for (const auto& nd : t.nodes) nodes.push_back({{"id", nd.id}, {"n", nd.n}, {"k", nd.k}, {"elements", nd.elements}});
  for (const auto& e : t.edges) edges.push_back({{"nodes", {e.a, e.b}}, {"shared", e.shared}});
  return {{"nodes", nodes}, {"edges", edges}};
}

json to_json(const BinaryMatroid& m) { return {{"rows", m.r()}, {"cols", m.d()}, {"bits", m.row_strings()}}; }

json to_json(const SlackMatrixReport& r) {
  json out = {{"rows", r.rows},
              {"cols", r.cols},
              {"rank", r.rank},
              {"ones_in_row_space", r.ones_in_row_space},
              {"rows_incomparable", r.rows_incomparable},
              {"cols_incomparable", r.cols_incomparable},
              {"size", to_json(r.size)},
              {"conjecture_bound", to_json(r.conjecture_bound)},
              {"conjecture_holds", r.conjecture_holds},
              {"distinct_count_law", r.distinct_count_law},
              {"has_identity", r.identity.has_value()}};
  out["cone_condition"] = r.cone_condition ? json(*r.cone_condition) : json(nullptr);
  if (r.identity) {
    out["identity"] = {{"rows", r.identity->rows}, {"cols", r.identity->cols}};
    out["clique_stable_mapping"] = r.clique_stable_mapping.value_or(false);
    out["identity_bound"] = to_json(r.identity_bound);
    out["identity_bound_holds"] = r.identity_bound_holds.value_or(false);
  }
  return out;
}

PolytopeFile polytope_from(const json& j) {
  return guarded("polytope", [&] {
    PolytopeFile f;
    if (!j.is_object()) fail(ErrorKind::BadInput, "polytope JSON must be an object");
    f.name = j.value("name", std::string());
    f.dim = size_from(j, "dim");
    if (j.contains("hull")) {
      const auto mode = j.at("hull").get<std::string>();
      if (mode != "integer") fail(ErrorKind::BadInput, "\"hull\" only accepts \"integer\"");
      f.integer_hull = true;
    }
    if (j.contains("vertices") || j.contains("polymake_vertices")) {
      std::vector<RatVector> pts;
      if (j.contains("vertices")) {
        for (const auto& p : j.at("vertices")) pts.push_back(vector_from(p, f.dim));
      } else {
        for (const auto& p : j.at("polymake_vertices")) {
          RatVector row = vector_from(p, f.dim + 1);
          if (row[0] == 0) fail(ErrorKind::BadInput, "homogenizing coordinate is 0 (a ray, not a point)");
          RatVector x(row.begin() + 1, row.end());
          for (auto& c : x) c /= row[0];
          pts.push_back(std::move(x));
        }
      }
      f.v = VPolytope(f.dim, std::move(pts));
    }
    if (j.contains("ineqs") || j.contains("eqs") || j.contains("polymake_ineqs")) {
      HPolytope h;
      h.ambient_dim = f.dim;
      if (j.contains("ineqs")) add_rows(h, j.at("ineqs"), false);
      if (j.contains("eqs")) add_rows(h, j.at("eqs"), true);
      if (j.contains("polymake_ineqs"))
        for (const auto& p : j.at("polymake_ineqs")) {
          // b + a.x >= 0  <=>  -a.x <= b
          const RatVector row = vector_from(p, f.dim + 1);
          RatVector a(row.begin() + 1, row.end());
          for (auto& c : a) c = -c;
          h.inequalities.push_back(make_halfspace(a, row[0]));
        }
      canonicalize(h);
      f.h = std::move(h);
    }
    if (!f.v && !f.h) fail(ErrorKind::BadInput, "polytope JSON needs \"vertices\" or \"ineqs\"");
    return f;
  });
}

Graph graph_from(const json& j) {
  return guarded("graph", [&] { return Graph(size_from(j, "n"), pairs_from(j.at("edges"))); });
}

Poset poset_from(const json& j) {
  return guarded("poset", [&] { return Poset(size_from(j, "n"), pairs_from(j.value("relations", json::array()))); });
}

SMInstance instance_from(const json& j) {
  return guarded("instance", [&] {
    SMInstance inst;
    inst.n = size_from(j, "n");
    inst.men = j.at("men").get<std::vector<std::vector<std::size_t>>>();
    inst.women = j.at("women").get<std::vector<std::vector<std::size_t>>>();
    inst.validate();
    return inst;
  });
}

TwoSumTree tree_from(const json& j) {
  return guarded("tree", [&] {
    TwoSumTree t;
    for (const auto& nd : j.at("nodes")) {
      TreeNode node;
      node.id = size_from(nd, "id");
      node.n = size_from(nd, "n");
      node.k = size_from(nd, "k");
      node.elements = nd.at("elements").get<std::vector<std::string>>();
      t.nodes.push_back(std::move(node));
    }
    for (const auto& e : j.value("edges", json::array())) {
      const auto ends = e.at("nodes").get<std::vector<std::size_t>>();
      if (ends.size() != 2) fail(ErrorKind::BadInput, "a tree edge joins two nodes");
      t.edges.push_back(TreeEdge{ends[0], ends[1], e.at("shared").get<std::string>()});
    }
    t.validate();
    return t;
  });
}

BinaryMatroid binary_matroid_from(const json& j) {
  return guarded("binary matroid", [&] {
    const std::size_t rows = size_from(j, "rows"), cols = size_from(j, "cols");
    const auto bits = j.at("bits").get<std::vector<std::string>>();
    if (bits.size() != rows) fail(ErrorKind::DimensionMismatch, "\"rows\" differs from the number of bit strings");
    std::vector<boost::dynamic_bitset<>> out;
    for (const auto& s : bits) {
      if (s.size() != cols) fail(ErrorKind::DimensionMismatch, "bit string length differs from \"cols\"");
      boost::dynamic_bitset<> row(cols);
      for (std::size_t c = 0; c < cols; ++c) {
        if (s[c] != '0' && s[c] != '1') fail(ErrorKind::BadInput, "bit strings use only 0 and 1");
        row[c] = s[c] == '1';
      }
      out.push_back(std::move(row));
    }
    return BinaryMatroid(cols, std::move(out));
  });
}

ZeroOneMatrix zero_one_from(const json& j) {
  return guarded("0/1 matrix", [&] {
    const auto bits = j.at("bits").get<std::vector<std::string>>();
    ZeroOneMatrix m = ZeroOneMatrix::from_strings(bits);
    if (j.contains("rows") && size_from(j, "rows") != m.rows) fail(ErrorKind::DimensionMismatch, "row count");
    if (j.contains("cols") && size_from(j, "cols") != m.cols) fail(ErrorKind::DimensionMismatch, "column count");
    return m;
  });
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return guarded(path.c_str(), [&] { return json::parse(buf.str()); });
}

json load_inline_or_file(const std::string& arg) {
  const auto start = arg.find_first_not_of(" \t\n");
  if (start != std::string::npos && (arg[start] == '{' || arg[start] == '['))
    return guarded("inline JSON", [&] { return json::parse(arg); });
  return load_file(arg);
}

std::string fixture_dir() {
  if (const char* env = std::getenv("TWOLEVEL_FIXTURES"); env && *env) return env;
  return TWOLEVEL_FIXTURE_DIR;
}

PolytopeFile load_fixture(const std::string& file_name) { return polytope_from(load_file(fixture_dir() + "/" + file_name)); }

}  // namespace twolevel::io
