#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "scclab/graph.hpp"

namespace scclab {

enum class CoverMode { cover, partition };
enum class Objective { count, weight };

std::string_view to_string(CoverMode mode);
std::string_view to_string(Objective objective);
/// Throws std::invalid_argument on anything but "cover"/"partition".
CoverMode parse_cover_mode(std::string_view text);
/// Throws std::invalid_argument on anything but "count"/"weight".
Objective parse_objective(std::string_view text);

/// Multiset of cliques, each of size >= 2. In partition mode every edge must be
/// covered exactly once, otherwise at least once.
struct CliqueCover {
  std::vector<Clique> cliques;
  CoverMode mode = CoverMode::cover;
};

/// Default cap on enumerated objects (cliques, partitions, sampled candidates).
inline constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

struct SolveOptions {
  /// Soft scale limit; larger graphs raise ResourceLimitError.
  int max_vertices = 20;
  std::size_t max_cliques = kDefaultEnumerationBudget;
  /// Search nodes allowed before giving up; 0 means unlimited.
  std::size_t max_nodes = 0;
};

struct SolveResult {
  int optimum = 0;
  CliqueCover witness;
  std::size_t nodes_explored = 0;
};

struct CoverReport {
  bool valid = true;
  std::vector<Edge> uncovered;
  /// Edges covered more than once; only filled in partition mode.
  std::vector<Edge> multiply_covered;
  /// Vertex pairs sharing a clique that are not edges of the graph (or
  /// repeated/out-of-range vertices, reported as (v, v)).
  std::vector<Edge> non_edges;
  /// Indices of cliques with fewer than two vertices.
  std::vector<std::size_t> undersized;
};

int cover_weight(const CliqueCover& cover);
int objective_value(const CliqueCover& cover, Objective objective);

CoverReport verify_cover(const Graph& g, const CliqueCover& cover);

/// Greedy heuristic: repeatedly take the clique maximising
/// (newly covered edges) / (clique size), lowest lexicographic clique on ties.
CliqueCover greedy_cover(const Graph& g, std::size_t max_cliques = kDefaultEnumerationBudget);

/// Exact minimum clique cover or partition under the chosen objective:
/// cc(G), cp(G) for Objective::count and the sigma numbers scc(G), scp(G) for
/// Objective::weight. Branch and bound over all cliques of size >= 2.
///
/// The witness is the first optimum reached by a deterministic depth-first
/// search seeded with a heuristic incumbent, so it is reproducible but not
/// necessarily the lexicographically least optimum. An edgeless graph yields
/// optimum 0 and an empty witness.
///
/// Throws ResourceLimitError if the graph exceeds options.max_vertices, the
/// clique enumeration exceeds options.max_cliques, or the search exceeds
/// options.max_nodes.
SolveResult solve_cover(const Graph& g, Objective objective, CoverMode mode, const SolveOptions& options = {});

}  // namespace scclab
