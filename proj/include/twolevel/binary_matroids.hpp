#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "twolevel/graphs.hpp"
#include "twolevel/polytope.hpp"

namespace twolevel {

/// Binary matroid given by a GF(2) matrix whose columns are the elements.
/// The stored rows are the reduced row echelon form of the input, so two
/// matrices with the same row space compare equal. At most 32 elements.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  /// Every row must have d bits (DimensionMismatch).
  BinaryMatroid(std::size_t d, std::vector<boost::dynamic_bitset<>> rows);
  /// Rows as bit strings, character j = column j.
  static BinaryMatroid from_strings(const std::vector<std::string>& rows);

  std::size_t d() const noexcept { return d_; }
  std::size_t r() const noexcept { return rows_.size(); }
  const std::vector<boost::dynamic_bitset<>>& rows() const noexcept { return rows_; }
  std::vector<std::string> row_strings() const;
  /// Column j as a mask over the rows.
  Mask column(std::size_t j) const { return cols_[j]; }
  /// GF(2) rank of the columns in s.
  std::size_t rank(Mask s) const;
  Mask ground() const noexcept { return d_ == 32 ? ~Mask{0} : (Mask{1} << d_) - 1; }

  friend bool operator==(const BinaryMatroid& a, const BinaryMatroid& b) { return a.d_ == b.d_ && a.rows_ == b.rows_; }

 private:
  std::size_t d_ = 0;
  std::vector<boost::dynamic_bitset<>> rows_;
  std::vector<Mask> cols_;
};

/// Vertex-edge incidence; column j is g.edges()[j].
BinaryMatroid from_graph(const Graph& g);
/// dual(from_graph(g)); its cycles are the cuts of g.
BinaryMatroid cographic(const Graph& g);
/// Orthogonal complement of the row space.
BinaryMatroid dual(const BinaryMatroid& m);

/// Element sets are masks over the columns. Lists come back sorted by size,
/// then lexicographically.
std::vector<Mask> sort_sets(std::vector<Mask> sets);

struct CycleSpace {
  std::vector<Mask> basis;  // fundamental circuits of a greedy basis
  std::size_t dim = 0;      // d - r
};

CycleSpace cycle_basis(const BinaryMatroid& m);
/// All 2^(d-r) cycles including the empty one. d - r <= 22.
std::vector<Mask> enumerate_cycles(const BinaryMatroid& m);
/// Minimal dependent sets by increasing cardinality. d <= 16.
std::vector<Mask> circuits(const BinaryMatroid& m);
std::vector<Mask> cocircuits(const BinaryMatroid& m);
/// C is chorded when C = C1 xor C2 for cocircuits with C1 n C2 = {e}, e not in C.
bool has_chord(const std::vector<Mask>& family, Mask c);
std::vector<Mask> chordless_cocircuits(const BinaryMatroid& m);

struct Preprocessed {
  BinaryMatroid m;
  std::vector<std::size_t> kept;     // original index of each surviving column
  std::vector<std::size_t> coloops;  // original indices removed as coloops
  std::vector<std::size_t> contracted;  // original indices contracted from 2-cocircuits
};

/// Deletes coloops and contracts one element of each 2-element cocircuit
/// until neither remains. The cycle polytope is then full-dimensional.
Preprocessed preprocess(const BinaryMatroid& m);

struct CycleReport {
  Preprocessed pre;
  VPolytope v;                 // cycles of pre.m
  HPolytope h;                 // box + odd-set rows, redundancy removed
  std::size_t raw_inequalities = 0;
  FSummary summary;
  std::vector<Mask> chordless;   // chordless cocircuits of pre.m
  std::vector<Mask> long_chordless;  // those of length >= 5
  bool two_level_condition = false;  // no chordless cocircuit of length >= 5
  bool geometric = false;            // facets_of was run
  bool description_matches = false;  // reduced rows == facets_of(v)
  bool two_level = false;            // from the slack check (geometric mode)
  std::size_t cotriangles = 0;       // T
  std::size_t cocircuits4 = 0;       // S
  Integer arithmetic_lhs = 0;        // 2T + 4S
  Integer arithmetic_rhs = 0;        // d (2^r - 1)
  bool arithmetic_holds = false;
};

/// Preprocesses, builds V and the odd-set description over chordless
/// cocircuits, and checks the description against facets_of when the
/// dimension is within opt.max_dim. d <= 16.
CycleReport cycle_polytope(const BinaryMatroid& m, const PolytopeOptions& opt = {});

/// Edge sets of the induced cycles of g (chordless cycles of length >= 3).
std::vector<Mask> induced_cycles(const Graph& g);

struct CutReport {
  CycleReport cycle;
  /// chordless cocircuits of cographic(g) equal the induced cycles of g
  bool induced_cycles_match = false;
  bool has_long_induced_cycle = false;
};

/// cycle_polytope(cographic(g)). K5-minor freeness is the caller's promise.
/// |E| <= 16.
CutReport cut_polytope(const Graph& g, const PolytopeOptions& opt = {});

}  // namespace twolevel
