#pragma once

// Internal: cliques of a graph encoded as bitsets over the graph's edge list.

#include <vector>

#include "scclab/bitset.hpp"
#include "scclab/graph.hpp"

namespace scclab::detail {

class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g);

  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  int index(Vertex u, Vertex v) const { return index_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)]; }
  /// Edges incident to v.
  const Bitset& incident(Vertex v) const { return incident_[v]; }
  Bitset empty_set() const { return Bitset(edges_.size()); }
  Bitset all_edges() const;
  Bitset clique_edges(const Clique& c) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<int> index_;
  std::vector<Bitset> incident_;
};

}  // namespace scclab::detail
