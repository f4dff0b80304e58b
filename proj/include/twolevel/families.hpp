#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twolevel/graphs.hpp"
#include "twolevel/polytope.hpp"
#include "twolevel/posets.hpp"

namespace twolevel {

/// STAB(G): V = stable-set vectors including 0, H = x >= 0 and x(C) <= 1 per
/// maximal clique C. Requires a perfect graph with n <= 14.
PolytopePair stab(const Graph& g);

struct FamilyResult {
  VPolytope v;
  FSummary summary;
  /// true when fd1 comes from the closed formula without a facets_of run
  bool formula_only = false;
  /// counts predicted by the construction's formula
  Integer f0_formula = 0;
  Integer fd1_formula = 0;
};

/// Twisted prism of STAB(G); G on d-1 vertices, d <= 12. Counts are checked
/// against 2|S'| and 2|C'| by facets_of while d <= 10.
FamilyResult hansen(const Graph& g, const PolytopeOptions& opt = {});

struct MinUpDownParams {
  std::size_t d = 0;
  std::size_t l = 0;
};

struct MinUpDownResult {
  VPolytope v;
  HPolytope h;
  Graph switch_graph;  // G_{d,l} on [d-1], stored 0-based
  /// odd index sets I (1-based) with max I - min I <= l
  std::vector<VertexSet> index_sets;
  bool switch_map_two_to_one = false;
  bool index_set_bijection = false;
};

/// Switch graph G_{d,l}: vertices 1..d-1 (stored as 0..d-2), i ~ j iff |i-j| <= l-1.
Graph switch_graph(std::size_t d, std::size_t l);
MinUpDownResult min_updown(const MinUpDownParams& p);

/// All n x n permutation matrices, row-major. fd1 and d from facets_of for
/// n <= 4, from n^2 and (n-1)^2 otherwise.
FamilyResult birkhoff(std::size_t n, const PolytopeOptions& opt = {});

/// Hanner expression: a segment leaf, a polar of one child, or a product.
struct HannerExpr {
  enum class Kind { Segment, Polar, Product };
  Kind kind = Kind::Segment;
  std::vector<HannerExpr> children;

  static HannerExpr segment() { return {}; }
  static HannerExpr polar_of(HannerExpr child);
  static HannerExpr product_of(std::vector<HannerExpr> children);

  std::size_t dimension() const;
  /// "seg", "polar(...)", "prod(a,b,...)"
  std::string to_string() const;
};

/// Parses the to_string() syntax. Error(BadInput) on malformed text.
HannerExpr parse_hanner(std::string_view text);

/// Builds the polytope by recursion; segment = [-1, 1]. d <= 10.
FamilyResult hanner(const HannerExpr& e, const PolytopeOptions& opt = {});

/// Hanner expressions of dimension d, distinct up to reordering product
/// factors, flattening nested products and cancelling double polars. Different
/// expressions can still give the same combinatorial type (square, diamond).
std::vector<HannerExpr> hanner_expressions(std::size_t d);

enum class EqualityShape { None, Cube, CrossPolytope };

/// Cube: 2^d vertices, 2d facets, d 2^(d-1) edges, each vertex of degree d.
/// Cross-polytope: 2d vertices, 2^d facets, 2d(d-1) edges. Only inspected when
/// the summary is an equality case.
EqualityShape equality_shape(const VPolytope& v, const HPolytope& facets);

}  // namespace twolevel
