#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "twolevel/binary_matroids.hpp"
#include "twolevel/extremal.hpp"
#include "twolevel/graphs.hpp"
#include "twolevel/matroids.hpp"
#include "twolevel/polytope.hpp"
#include "twolevel/posets.hpp"
#include "twolevel/stable_matching.hpp"

// JSON readers and writers. Readers turn malformed input into
// Error(BadInput); numbers are exact (integers, or "p/q" strings).
namespace twolevel::io {

using json = nlohmann::json;

/// Integer when it fits in 64 bits, decimal string otherwise.
json to_json(const Integer& z);
/// Integer when the denominator is 1 and it fits, else "p/q".
json to_json(const Rational& q);
Rational rational_from(const json& j);
Integer integer_from(const json& j);

json to_json(const RatVector& v);
json to_json(const VPolytope& v);
json to_json(const HPolytope& h);
json to_json(const FSummary& s);
json to_json(const TwoLevelCertificate& c);
json to_json(const BoundReport& r);
json to_json(const Graph& g);
json to_json(const Poset& p);
json to_json(const SMInstance& inst);
json to_json(const Matching& mu);
json to_json(const TwoSumTree& t);
json to_json(const BinaryMatroid& m);
json to_json(const SlackMatrixReport& r);

/// Polytope file: "vertices" and/or "ineqs"/"eqs"; the fixture keys
/// "polymake_vertices" (rows [1, x...]) and "polymake_ineqs" (rows [b, a...]
/// meaning b + a.x >= 0) are converted on load. "hull": "integer" asks the
/// checker for the integer hull of the inequality description.
struct PolytopeFile {
  std::string name;
  std::size_t dim = 0;
  std::optional<VPolytope> v;
  std::optional<HPolytope> h;
  bool integer_hull = false;
};

PolytopeFile polytope_from(const json& j);
Graph graph_from(const json& j);
Poset poset_from(const json& j);
SMInstance instance_from(const json& j);
TwoSumTree tree_from(const json& j);
BinaryMatroid binary_matroid_from(const json& j);
ZeroOneMatrix zero_one_from(const json& j);

/// Reads and parses a file. Error(BadInput) if it is missing or malformed.
json load_file(const std::string& path);
/// Text that starts with '{' or '[' is parsed inline, anything else is a path.
json load_inline_or_file(const std::string& arg);

/// $TWOLEVEL_FIXTURES if set, else the directory recorded at build time.
std::string fixture_dir();
PolytopeFile load_fixture(const std::string& file_name);

}  // namespace twolevel::io
