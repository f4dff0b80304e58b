#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "twolevel/rational.hpp"

namespace twolevel {

/// Desk-scale guard on the affine dimension handed to the double description.
struct PolytopeOptions {
  std::size_t max_dim = 14;
};

/// A finite point set standing for its convex hull. Points are kept sorted
/// lexicographically and free of duplicates. The constructor does not prune
/// non-vertices; use hull() for arbitrary point clouds. Generators in this
/// library emit exact vertex sets and the tests check that with
/// is_vertex_set().
class VPolytope {
 public:
  VPolytope() = default;
  VPolytope(std::size_t ambient_dim, std::vector<RatVector> points);

  static VPolytope from_integers(std::size_t ambient_dim, const std::vector<std::vector<int>>& points);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  bool contains_vertex(const RatVector& p) const;

  friend bool operator==(const VPolytope& a, const VPolytope& b);

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RatVector> vertices_;
};

/// a . x <= b
struct Halfspace {
  IntVector a;
  Integer b;
};

/// a . x == b
struct Hyperplane {
  IntVector a;
  Integer b;
};

bool operator==(const Halfspace& x, const Halfspace& y);
bool operator==(const Hyperplane& x, const Hyperplane& y);

/// Primitive integer form: denominators cleared and gcd of (a, b) divided out.
/// Inequalities keep their orientation; equations get a positive leading
/// coefficient.
Halfspace make_halfspace(const RatVector& a, const Rational& b);
Hyperplane make_hyperplane(const RatVector& a, const Rational& b);

struct HPolytope {
  std::size_t ambient_dim = 0;
  std::vector<Halfspace> inequalities;
  std::vector<Hyperplane> equations;
  /// Set by facets_of: every inequality is facet-defining and the equations
  /// are the reduced echelon basis of the affine hull.
  bool irredundant = false;
};

/// Puts every row in primitive form, sorts, and removes duplicates.
void canonicalize(HPolytope& h);

/// Brings equations to reduced echelon form and eliminates the pivot
/// coordinates from every inequality, then canonicalises. Two descriptions of
/// the same polytope with irredundant inequalities become identical.
HPolytope reduce_modulo_equations(const HPolytope& h);

/// Infeasible equations or inequalities with zero normal and negative right
/// hand side are not removed here; only exact duplicates and 0 <= b rows.
void drop_trivial_rows(HPolytope& h);

struct SlackMatrix {
  /// rows = inequalities, columns = vertices, entries b - a . v
  std::vector<RatVector> entries;
  /// each row divided by its smallest nonzero entry
  std::vector<RatVector> scaled;
  bool zero_one = false;

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return entries.empty() ? 0 : entries[0].size(); }
};

struct FSummary {
  std::size_t d = 0;
  Integer f0 = 0;
  Integer fd1 = 0;
  Integer product = 0;
  Integer bound = 0;
  bool satisfies = false;
  bool equality = false;
};

/// Fills product, bound = d * 2^(d+1), and the two flags.
FSummary make_summary(std::size_t d, const Integer& f0, const Integer& fd1);

struct TwoLevelCertificate {
  bool two_level = true;
  std::optional<Halfspace> witness;   // a facet with more than two slack values
  std::vector<Rational> witness_levels;
};

std::size_t affine_dimension(const VPolytope& v);

HPolytope facets_of(const VPolytope& v, const PolytopeOptions& opt = {});
/// Returns an empty polytope when the system is infeasible.
VPolytope vertices_of(const HPolytope& h, const PolytopeOptions& opt = {});

/// Removes points that are not vertices of their convex hull.
VPolytope hull(std::size_t ambient_dim, std::vector<RatVector> points, const PolytopeOptions& opt = {});
bool is_vertex_set(const VPolytope& v, const PolytopeOptions& opt = {});

SlackMatrix slack(const VPolytope& v, const HPolytope& h);
TwoLevelCertificate is_two_level(const VPolytope& v, const PolytopeOptions& opt = {});
TwoLevelCertificate is_two_level(const VPolytope& v, const HPolytope& facets);

FSummary summary(const VPolytope& v, const PolytopeOptions& opt = {});
FSummary summary(const VPolytope& v, const HPolytope& facets);

std::vector<std::pair<std::size_t, std::size_t>> edges(const VPolytope& v, const HPolytope& facets);
std::size_t count_edges(const VPolytope& v, const PolytopeOptions& opt = {});
std::size_t count_edges(const VPolytope& v, const HPolytope& facets);

VPolytope polar(const VPolytope& v, const PolytopeOptions& opt = {});
VPolytope product(const VPolytope& p, const VPolytope& q);
VPolytope twisted_prism(const VPolytope& p);
/// x -> A x + t. With expect_isomorphic the map must preserve the affine
/// dimension (Error NonInjectiveOnHull otherwise). Non-vertices of the image
/// are pruned.
VPolytope affine_image(const VPolytope& p, const IntMatrix& A, const IntVector& t, bool expect_isomorphic,
                       const PolytopeOptions& opt = {});

}  // namespace twolevel
