#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "twolevel/graphs.hpp"
#include "twolevel/polytope.hpp"

namespace twolevel {

/// Counts against d 2^(d+1). A lower-bound flag marks a count that is only
/// certified from below; product and violated then refer to the lower bounds.
struct BoundReport {
  std::string label;
  std::size_t d = 0;
  Integer f0 = 0;
  bool f0_lower_bound = false;
  Integer fd1 = 0;
  bool fd1_lower_bound = false;
  Integer product = 0;
  Integer bound = 0;
  bool violated = false;
  /// named cross-validations run along the way
  std::vector<std::pair<std::string, bool>> checks;
  /// extra exact quantities (e.g. a brute-force count next to a lower bound)
  std::vector<std::pair<std::string, Integer>> values;

  bool all_checks() const;
};

BoundReport make_bound_report(std::string label, std::size_t d, Integer f0, bool f0_lower, Integer fd1,
                              bool fd1_lower);

/// Forest polytope of K_{2,n}, d = 2n. 3 <= n <= 12.
BoundReport forest_study(std::size_t n);

/// Spanning trees by the matrix tree theorem (exact Bareiss determinant).
Integer spanning_tree_count(const Graph& g);
/// Edge masks of all spanning trees; |E| <= 20.
std::vector<std::uint32_t> enumerate_spanning_trees(const Graph& g);

/// Multigraph 2-connectivity in the matroid sense: the cycle matroid of the
/// edge list is connected (no cut vertex, no isolated part; a single edge or
/// a bundle of parallel edges on two vertices counts as connected).
bool matroid_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Facet count of the spanning tree polytope of a 2-connected graph from the
/// flacet criterion: vertex sets S, 2 <= |S| < |V|, with G[S] and G/S both
/// 2-connected, plus one nonnegativity facet per edge e with G \ e 2-connected.
std::size_t spanning_tree_flacets(const Graph& g);

/// f0 by Kirchhoff, fd1 by the flacet criterion. When |E| <= geometric_edges
/// the polytope is also built from its vertices and facets_of confirms fd1
/// and d. |V| <= 16; Error(Disconnected) on disconnected input.
BoundReport spanning_tree_study(const Graph& g, std::size_t geometric_edges = 10);

/// 0/1 vectors with at most one block of ones. d >= 3; geometric checks for
/// d <= 8.
BoundReport three_level_minupdown(std::size_t d);
std::vector<RatVector> one_block_vectors(std::size_t d);

/// {x >= 0, x_i + x_j <= 1}. 3 <= d <= 10.
BoundReport fractional_stab_clique(std::size_t d);
HPolytope fractional_clique_relaxation(std::size_t d);

struct IntegerHullOptions {
  std::size_t max_dim = 14;
  /// Error(NonBinaryIntegerPoints) when an integer point leaves {0,1}^d.
  bool binary_only = false;
  /// cap on the number of slab lattice points scanned
  std::size_t max_scan = std::size_t{1} << 24;
};

struct IntegerHullResult {
  std::vector<RatVector> integer_points;  // sorted
  VPolytope v;                            // vertices of their convex hull
};

/// Integer points of a bounded H-polytope, found by choosing d linearly
/// independent two-sided slabs lo <= a.x <= hi (paired inequalities or
/// equations) and scanning the integer values of a.x. When the rows give
/// fewer than d slabs, the missing sides come from the vertices of the
/// relaxation (Error(Unbounded) if it has none).
IntegerHullResult integer_points(const HPolytope& h, const IntegerHullOptions& opt = {});
VPolytope integer_hull(const HPolytope& h, const IntegerHullOptions& opt = {});

struct ZeroOneMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<boost::dynamic_bitset<>> bits;  // one bitset per row

  /// Bit strings, one per row.
  static ZeroOneMatrix from_strings(const std::vector<std::string>& rows);
  /// From the row-scaled slack matrix; Error(BadInput) unless it is 0/1.
  static ZeroOneMatrix from_slack(const SlackMatrix& s);
  std::vector<std::string> to_strings() const;
  bool reduced() const;  // no repeated row or column
  ZeroOneMatrix with_row(boost::dynamic_bitset<> row) const;
  ZeroOneMatrix with_column(const boost::dynamic_bitset<>& col) const;
};

struct IdentityWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;  // rows[i] meets cols[i] in a 1, other pairs 0
};

/// Largest identity submatrix up to row/column permutation, searching sizes
/// down from `target`. Returns nullopt if none of that size exists.
std::optional<IdentityWitness> find_identity(const ZeroOneMatrix& m, std::size_t target);

struct SlackMatrixReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;               // over Q
  bool ones_in_row_space = false;     // (ii)
  std::optional<bool> cone_condition;  // (iii), when rank <= 14
  bool rows_incomparable = false;     // (iv)
  bool cols_incomparable = false;     // (v)
  /// m n <= (rank - 1) 2^rank, the conjecture read on a slack matrix of a
  /// (rank - 1)-polytope
  Integer size = 0;
  Integer conjecture_bound = 0;
  bool conjecture_holds = false;
  /// rows, cols <= 2^rank and not both equal to 2^rank
  bool distinct_count_law = false;
  std::optional<IdentityWitness> identity;  // of size rank
  /// with an identity: columns map to distinct cliques, rows to distinct
  /// stable sets of the derived graph, and m n <= (rank + 1) 2^rank
  std::optional<bool> clique_stable_mapping;
  std::optional<bool> identity_bound_holds;
  Integer identity_bound = 0;
};

/// Error(NotReduced) on repeated rows or columns.
SlackMatrixReport slack_matrix_checks(const ZeroOneMatrix& m);

}  // namespace twolevel
