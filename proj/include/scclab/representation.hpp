#pragma once

#include <utility>
#include <vector>

#include "scclab/cover.hpp"
#include "scclab/graph.hpp"

namespace scclab {

using Label = int;

/// Set-intersection representation: vertex v carries the label set labels[v];
/// distinct u, v are adjacent iff their label sets meet.
struct Representation {
  /// Sorted, duplicate-free label ids per vertex.
  std::vector<std::vector<Label>> labels;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  /// Number of distinct labels in use.
  int universe_size() const;
  /// Sum over vertices of |R(v)|.
  int weight() const;
  /// Relabels to dense ids 0..L-1 in order of first appearance (vertex order,
  /// then ascending old id) and sorts every label set.
  Representation canonical() const;
};

struct RepresentationReport {
  bool valid = true;
  /// Vertex pairs whose adjacency disagrees with label-set intersection.
  std::vector<Edge> wrong_pairs;
};

/// R(v) = ids of the cliques containing v. Isolated vertices get empty sets.
/// Throws std::invalid_argument if the cover does not verify against g.
Representation cover_to_representation(const Graph& g, const CliqueCover& cover);

/// Intersection graph of r plus one clique per label carried by >= 2 vertices.
/// Requires at least one vertex.
std::pair<Graph, CliqueCover> representation_to_cover(const Representation& r);

/// Throws std::invalid_argument if r is not defined on exactly V(g).
RepresentationReport verify_representation(const Graph& g, const Representation& r);

/// True iff every two label sets share at most one label.
bool is_linear(const Representation& r);

/// i(G): the fewest labels in any representation of g, found by exhaustive
/// search over label counts 0, 1, 2, ... Each label is a vertex subset that is
/// pairwise adjacent. Independent of the clique-cover solver; intended as an
/// oracle. Throws ResourceLimitError for n > 7.
int brute_force_intersection_number(const Graph& g);

}  // namespace scclab
