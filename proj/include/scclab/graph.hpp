#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "scclab/bitset.hpp"

namespace scclab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

/// Simple undirected graph on vertices 0..n-1 with per-vertex adjacency bitsets.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(static_cast<std::size_t>(v)); }
  const Bitset& neighbours(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].count()); }
  std::size_t edge_count() const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<Bitset> adjacency_;
};

/// Part sizes of a complete multipartite graph.
struct PartSpec {
  std::vector<int> sizes;

  int parts() const { return static_cast<int>(sizes.size()); }
  int max_part() const;
  int vertex_count() const;
  /// Copy with sizes sorted nonincreasing.
  PartSpec canonical() const;
};

/// Sorted vertex set inducing a complete subgraph of its host graph.
struct Clique {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  bool contains(Vertex v) const;
  auto operator<=>(const Clique&) const = default;
};

/// Complete multipartite graph; part p occupies a contiguous block of vertex ids
/// in the order given. Throws std::invalid_argument on an empty list or a size < 1.
Graph complete_multipartite(std::span<const int> sizes);
inline Graph complete_multipartite(const PartSpec& spec) { return complete_multipartite(spec.sizes); }
/// K_t(d): t parts of size d.
Graph balanced_multipartite(int t, int d);

Graph complement(const Graph& g);

int max_degree(const Graph& g);

/// True iff the listed vertices are pairwise adjacent (and distinct).
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

/// Every clique of size >= min_size, maximal or not, in lexicographic order of
/// the sorted vertex sequences. Throws std::invalid_argument unless
/// 1 <= min_size <= n. Practical for n up to about 24 on dense graphs.
/// Throws ResourceLimitError once more than max_count cliques are produced.
std::vector<Clique> enumerate_cliques(const Graph& g, int min_size,
                                      std::size_t max_count = static_cast<std::size_t>(-1));

/// Size of a largest clique (branch and bound with a greedy colouring bound).
/// Throws ResourceLimitError after max_nodes search nodes; 0 means unlimited.
int clique_number(const Graph& g, std::size_t max_nodes = 0);

}  // namespace scclab
