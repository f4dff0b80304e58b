#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "twolevel/graphs.hpp"
#include "twolevel/polytope.hpp"

namespace twolevel {

/// Finite poset on 0..n-1 given by arbitrary relation pairs (i, j) meaning
/// i <= j. The reflexive-transitive closure is stored; a cycle through two
/// distinct elements is rejected with Error(BadInput).
class Poset {
 public:
  Poset() = default;
  Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t n() const noexcept { return n_; }
  bool leq(std::size_t i, std::size_t j) const { return below_[j] >> i & 1U; }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
  /// Elements strictly below / above v, as masks.
  Mask down(std::size_t v) const { return below_[v] & ~(Mask{1} << v); }
  Mask up(std::size_t v) const { return above_[v] & ~(Mask{1} << v); }
  /// Cover pairs (i, j): i < j with nothing strictly between. Sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;
  /// All strict relations (i, j), i != j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> strict_relations() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.below_ == b.below_; }

 private:
  std::size_t n_ = 0;
  std::vector<Mask> below_;  // below_[j] has bit i iff i <= j
  std::vector<Mask> above_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

Poset chain_poset(std::size_t n);
Poset antichain_poset(std::size_t n);
/// Random poset: each pair i < j is related with probability p, then closed.
Poset random_poset(std::size_t n, double p, std::mt19937_64& rng);

/// Down-closed sets (j in I and i <= j imply i in I), sorted by size then lex.
std::vector<VertexSet> closed_sets(const Poset& p);
std::vector<VertexSet> antichains(const Poset& p);
std::vector<VertexSet> chains(const Poset& p, bool include_empty);
std::vector<VertexSet> maximal_chains(const Poset& p);

Graph comparability_graph(const Poset& p);

struct PolytopePair {
  VPolytope v;
  HPolytope h;
};

/// V: closed-set vectors. H: x_i >= x_j per cover i < j, x_i <= 1 per minimal
/// element, x_j >= 0 per maximal element.
PolytopePair order_polytope(const Poset& p);
/// V: antichain vectors. H: x >= 0 and x(C) <= 1 per maximal chain C.
PolytopePair chain_polytope(const Poset& p);

struct HibiReport {
  std::size_t order_facets = 0;
  std::size_t chain_facets = 0;
  bool holds = false;
};

/// Facet counts of both polytopes from facets_of.
HibiReport hibi_check(const Poset& p, const PolytopeOptions& opt = {});

struct DoubleOrderResult {
  VPolytope v;
  FSummary summary;           // from facets_of
  std::size_t antichains = 0;  // including the empty set
  std::size_t chains = 0;      // including the empty set
  bool formula_matches = false;  // f0 = 2|A| and fd1 = 2|C|
};

/// conv( 2 O(P) x {1}  u  -2 O(P) x {-1} ) in dimension n + 1.
DoubleOrderResult double_order_polytope(const Poset& p, const PolytopeOptions& opt = {});

}  // namespace twolevel
