#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twolevel/graphs.hpp"
#include "twolevel/polytope.hpp"

namespace twolevel {

/// Matroid given by its explicit base family. Subsets of the ground set are
/// bit masks over the element order; at most 32 elements.
class Matroid {
 public:
  Matroid() = default;
  /// Checks names are distinct (NameClash), the family is nonempty and
  /// equicardinal, and for |E| <= 12 the base exchange axiom (BadInput).
  /// Internal constructions that preserve the axioms skip the exchange check.
  Matroid(std::vector<std::string> elements, std::vector<Mask> bases, bool check_exchange = true);

  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::vector<Mask>& bases() const noexcept { return bases_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  Mask ground() const noexcept { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  /// Index of a named element; Error(BadInput) if absent.
  std::size_t index(const std::string& name) const;
  std::optional<std::size_t> find(const std::string& name) const;
  Mask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Mask m) const;
  bool is_base(Mask m) const;
  bool is_loop(std::size_t e) const;
  bool is_coloop(std::size_t e) const;

 private:
  std::vector<std::string> elements_;
  std::vector<Mask> bases_;  // sorted
  std::size_t rank_ = 0;
};

Matroid uniform(std::size_t n, std::size_t k, std::vector<std::string> names);
/// Names "1".."n".
Matroid uniform(std::size_t n, std::size_t k);
Matroid direct_sum(const Matroid& a, const Matroid& b);
/// rank(F) = max |B n F| over bases B
std::size_t rank(const Matroid& m, Mask f);
std::size_t rank(const Matroid& m, const std::vector<std::string>& f);
Matroid delete_element(const Matroid& m, const std::string& e);
Matroid contract_element(const Matroid& m, const std::string& e);
/// No proper nonempty S with r(S) + r(E \ S) = r(E).
bool is_connected(const Matroid& m);

/// Bases {B1 u B2 - p : p in exactly one of B1, B2}. The ground set is the
/// elements of a without p followed by those of b without p.
Matroid two_sum(const Matroid& a, const Matroid& b, const std::string& p);

/// Same base family up to renaming the ground set in the given order.
bool same_bases(const Matroid& a, const Matroid& b);
/// Same element names and the same bases as sets of names.
bool equal_matroids(const Matroid& a, const Matroid& b);

struct TreeNode {
  std::size_t id = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> elements;
};

struct TreeEdge {
  std::size_t a = 0;  // node ids
  std::size_t b = 0;
  std::string shared;
};

/// Tree of uniform matroids glued along shared elements.
struct TwoSumTree {
  std::vector<TreeNode> nodes;
  std::vector<TreeEdge> edges;

  /// Tree shape, shared-element placement, n >= 3 and 0 < k < n per node.
  void validate() const;
  std::size_t node_index(std::size_t id) const;
  /// Elements of the composed matroid: every non-shared element, in node
  /// order then list order.
  std::vector<std::string> ground_set() const;
};

/// Iterated two_sum in edge order (or in the given permutation of edges).
Matroid compose_tree(const TwoSumTree& t);
Matroid compose_tree(const TwoSumTree& t, const std::vector<std::size_t>& edge_order);

/// Base count by the 2-sum recursion on the tree, without enumerating bases.
Integer base_count(const TwoSumTree& t);

/// Characteristic vectors of bases in ground-set order. |E| <= 14.
VPolytope base_polytope(const Matroid& m);

struct CutInequality {
  std::size_t edge = 0;  // index into t.edges
  int side = 0;          // 1 or 2
  std::vector<std::string> elements;  // E_a^i
  std::size_t formula_rank = 0;       // 1 - |C_a^i| + sum of k_j
  std::size_t oracle_rank = 0;        // rank in the composed matroid
};

struct TreeDescription {
  HPolytope h;  // in the coordinates of compose_tree(t).elements()
  std::vector<CutInequality> cuts;
  bool ranks_match = false;
  std::size_t raw_inequalities = 0;  // before dedup: 2|E| + 2(t-1)
};

TreeDescription tree_description(const TwoSumTree& t);

/// Keeps one inequality per facet: an inequality is kept iff its tight
/// vertices affinely span a hyperplane of aff(v) and no earlier kept row has
/// the same tight set. Needs the exact vertex set of the polytope.
HPolytope remove_redundant(const HPolytope& h, const VPolytope& v);

/// A partition with |E1|, |E2| >= 2 and r(E1) + r(E2) = r(E) + 1; the first
/// one in mask order with element 0 in E1. |E| <= 12, m connected.
std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> two_separation(const Matroid& m);
std::vector<std::pair<Mask, Mask>> all_two_separations(const Matroid& m);

struct MatroidCheck {
  FSummary summary;
  Integer f0_recursion = 0;   // from base_count
  Integer f0_enumerated = 0;  // from the composed base family (geometric mode)
  bool geometric = false;     // fd1 from the reduced tree description
  bool description_matches = false;  // reduced tree description == facets_of(B(M)) mod equations
  bool two_level = false;
};

/// Forest of trees: the base polytope of the direct sum is the product of the
/// tree polytopes. Geometric mode when the total |E| <= 14; otherwise fd1 is
/// the raw inequality count, an upper bound.
MatroidCheck conjecture_check_matroid(const std::vector<TwoSumTree>& forest);

/// B(M1 (+)_2 M2) against B(M1) x B(M2) n {x_p1 + x_p2 = 1} projected by
/// dropping p1 and p2.
bool two_sum_product_isomorphism(const Matroid& a, const Matroid& b, const std::string& p);

/// Random valid tree with at most max_nodes uniform nodes and at most max_e
/// composed elements. Names are "e0", "e1", ... and shared "s0", "s1", ...
TwoSumTree random_tree(std::size_t max_nodes, std::size_t max_e, std::mt19937_64& rng);

}  // namespace twolevel
