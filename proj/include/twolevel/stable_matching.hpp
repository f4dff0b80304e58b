#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "twolevel/polytope.hpp"
#include "twolevel/posets.hpp"

namespace twolevel {

/// Complete strict preferences, 0-indexed, most preferred first.
struct SMInstance {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> men;
  std::vector<std::vector<std::size_t>> women;

  /// Error(BadInput) unless every list is a permutation of 0..n-1.
  void validate() const;
  /// rank_of_woman(m, w): position of w in m's list (0 = favourite)
  std::size_t man_rank(std::size_t m, std::size_t w) const;
  std::size_t woman_rank(std::size_t w, std::size_t m) const;
};

using Edge = std::pair<std::size_t, std::size_t>;  // (man, woman)

/// Perfect matching stored as wife[m].
struct Matching {
  std::vector<std::size_t> wife;

  std::vector<std::size_t> husbands() const;
  std::vector<Edge> edges() const;
  /// 0/1 vector over E = M x W, coordinate m * n + w
  RatVector incidence() const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.wife == b.wife; }
  friend bool operator<(const Matching& a, const Matching& b) { return a.wife < b.wife; }
};

SMInstance random_instance(std::size_t n, std::mt19937_64& rng);
bool is_stable(const SMInstance& inst, const Matching& mu);
/// Men-proposing deferred acceptance.
Matching deferred_acceptance(const SMInstance& inst);

/// All stable matchings by scanning the n! perfect matchings. n <= 7.
std::vector<Matching> enumerate_stable(const SMInstance& inst);

/// mu <= mu' iff every woman is at least as happy in mu'.
bool women_weakly_happier(const SMInstance& inst, const Matching& mu, const Matching& mu2);

struct StableLattice {
  std::vector<Matching> matchings;       // sorted
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // covering pairs (lower, upper)
  std::size_t mu0 = 0;
  std::size_t muz = 0;
};

StableLattice lattice(const SMInstance& inst);

struct Rotation {
  std::vector<Edge> tail;  // mu \ mu'
  std::vector<Edge> head;  // mu' \ mu

  friend bool operator==(const Rotation& a, const Rotation& b) { return a.tail == b.tail && a.head == b.head; }
  friend bool operator<(const Rotation& a, const Rotation& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  }
};

struct RotationPoset {
  std::vector<Rotation> rotations;  // sorted, deduplicated
  Poset precedence;
  Matching mu0;
  Matching muz;
  StableLattice lattice;
  /// rotation index generated by each arc of the lattice
  std::vector<std::size_t> arc_rotation;
  /// Pi(mu) for every matching in lattice order, as sorted rotation indices
  std::vector<std::vector<std::size_t>> pi;
};

/// Rotations from the covering pairs; precedence from all mu0-muz paths of the
/// Hasse diagram (memoised over the DAG). Asserts that every path generates
/// each rotation exactly once and that edges occur in at most one head and at
/// most one tail.
RotationPoset rotation_poset(const SMInstance& inst);

/// Indices into rp.rotations. Error(NotStable) if mu is not stable.
std::vector<std::size_t> pi_of(const SMInstance& inst, const RotationPoset& rp, const Matching& mu);

struct OrderEquivalenceReport {
  std::size_t matchings = 0;
  std::size_t rotations = 0;
  bool columns_independent = false;     // rank A = |Pi|
  bool decomposition_holds = false;     // chi^mu = chi^mu0 + sum over Pi(mu)
  bool image_matches = false;           // chi^mu0 + A O(Pi) has the stable matchings as vertices
  bool pi_bijective = false;            // mu -> Pi(mu) onto closed sets
  bool mu0_is_deferred_acceptance = false;
  bool all() const {
    return columns_independent && decomposition_holds && image_matches && pi_bijective;
  }
};

OrderEquivalenceReport verify_order_equivalence(const SMInstance& inst);

struct SMPolytopeResult {
  VPolytope v;          // stable matching vectors
  HPolytope h;          // nonnegativity, degree and stability rows
  FSummary summary;     // via the order polytope of Pi
  bool h_matches = false;  // vertices_of(h) == v (only computed when requested)
};

/// Builds both descriptions. With validate, vertices_of(h) is compared with
/// the brute-force set; this runs the double description in R^(n^2).
SMPolytopeResult smp_polytope(const SMInstance& inst, bool validate = true);

}  // namespace twolevel
