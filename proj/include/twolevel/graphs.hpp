#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace twolevel {

using VertexSet = std::vector<std::size_t>;  // sorted ascending
using Mask = std::uint32_t;

VertexSet to_set(Mask m);
Mask to_mask(const VertexSet& s);

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v, sorted. Loops, duplicates and out-of-range endpoints are
/// rejected with Error(BadInput).
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }
  std::vector<std::size_t> neighbours(std::size_t v) const;
  /// Adjacency as bit masks; only valid for n <= 32.
  std::vector<Mask> masks() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<bool>> adj_;
};

Graph complement(const Graph& g);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph hypercube_graph(std::size_t k);
/// Hub 0 joined to the cycle 1..k.
Graph wheel_graph(std::size_t k);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
/// Graph on n vertices whose edges are the set bits of `code` in the order
/// (0,1), (0,2), ..., (n-2,n-1). Used for exhaustive sweeps.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Sets come back sorted by size, then lexicographically.
std::vector<VertexSet> enumerate_cliques(const Graph& g, bool include_empty);
std::vector<VertexSet> enumerate_stable_sets(const Graph& g, bool include_empty);
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct TradeoffReport {
  std::size_t n = 0;
  std::size_t cliques = 0;            // nonempty
  std::size_t stable_sets = 0;        // nonempty
  std::uint64_t product = 0;
  std::uint64_t bound = 0;            // n (2^n - 1)
  bool holds = false;
  bool equality = false;
  std::size_t cliques0 = 0;           // with the empty set
  std::size_t stable_sets0 = 0;
  std::uint64_t product0 = 0;
  std::uint64_t bound0 = 0;           // (n + 1) 2^n
  bool holds0 = false;
  bool equality0 = false;
  bool complete_or_edgeless = false;  // equality is expected exactly here
};

TradeoffReport tradeoff_check(const Graph& g);

/// Number of pairs (C, S), C a nonempty clique and S a nonempty stable set,
/// with C u S = W.
std::size_t union_preimage_count(const Graph& g, Mask w);

/// No induced odd cycle of length >= 5 in g or its complement.
bool is_perfect(const Graph& g);

}  // namespace twolevel
