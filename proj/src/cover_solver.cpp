#include <algorithm>
#include <limits>
#include <string>

#include "clique_space.hpp"
#include "scclab/cover.hpp"
#include "scclab/errors.hpp"

namespace scclab {

namespace detail {

EdgeIndex::EdgeIndex(const Graph& g)
    : n_(static_cast<std::size_t>(g.vertex_count())), edges_(g.edges()), index_(n_ * n_, -1) {
  incident_.assign(n_, Bitset(edges_.size()));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    index_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] = static_cast<int>(e);
    index_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(u)] = static_cast<int>(e);
    incident_[u].set(e);
    incident_[v].set(e);
  }
}

Bitset EdgeIndex::all_edges() const {
  Bitset all(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) all.set(e);
  return all;
}

Bitset EdgeIndex::clique_edges(const Clique& c) const {
  Bitset out(edges_.size());
  for (std::size_t a = 0; a < c.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < c.vertices.size(); ++b)
      out.set(static_cast<std::size_t>(index(c.vertices[a], c.vertices[b])));
  return out;
}

}  // namespace detail

namespace {

using detail::EdgeIndex;

int ceil_div(std::size_t a, std::size_t b) { return static_cast<int>((a + b - 1) / b); }

bool is_maximal(const Graph& g, const Clique& c) {
  Bitset common = g.neighbours(c.vertices.front());
  for (Vertex v : c.vertices) common &= g.neighbours(v);
  return common.none();
}

// a/b > c/d for positive denominators
bool better_ratio(std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return a * d > c * b; }

class CoverSearch {
 public:
  CoverSearch(const Graph& g, Objective objective, CoverMode mode, const SolveOptions& options)
      : graph_(g), objective_(objective), mode_(mode), options_(options), index_(g) {
    auto cliques = enumerate_cliques(g, 2, options.max_cliques);
    // A count-optimal cover can always be made of maximal cliques.
    const bool maximal_only = objective == Objective::count && mode == CoverMode::cover;
    omega_at_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    by_edge_.resize(index_.edge_count());
    for (auto& c : cliques) {
      if (maximal_only && !is_maximal(g, c)) continue;
      Candidate cand;
      cand.edges = index_.clique_edges(c);
      for (Vertex v : c.vertices) {
        cand.stars.push_back(cand.edges & index_.incident(v));
        omega_at_[v] = std::max(omega_at_[v], c.size());
      }
      omega_ = std::max(omega_, c.size());
      cand.clique = std::move(c);
      const auto id = static_cast<int>(candidates_.size());
      cand.edges.for_each([&](std::size_t e) { by_edge_[e].push_back(id); });
      candidates_.push_back(std::move(cand));
    }
  }

  SolveResult run() {
    seed_incumbent();
    Bitset uncovered = index_.all_edges();
    search(uncovered, 0);
    SolveResult result;
    result.optimum = best_value_;
    result.witness.mode = mode_;
    result.witness.cliques = best_cover_;
    std::sort(result.witness.cliques.begin(), result.witness.cliques.end());
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  struct Candidate {
    Clique clique;
    Bitset edges;
    std::vector<Bitset> stars;  // clique edges at each clique vertex
  };

  int value_of(const Candidate& c) const {
    return objective_ == Objective::count ? 1 : static_cast<int>(c.clique.size());
  }

  void seed_incumbent() {
    CliqueCover start;
    if (mode_ == CoverMode::cover) {
      start = greedy_cover(graph_, options_.max_cliques);
    } else {
      for (auto [u, v] : index_.edges()) start.cliques.push_back(Clique{{u, v}});
    }
    best_cover_ = start.cliques;
    best_value_ = objective_value(start, objective_);
  }

  bool usable(const Candidate& c, const Bitset& uncovered) const {
    if (mode_ == CoverMode::partition) return c.edges.is_subset_of(uncovered);
    if (objective_ == Objective::count) return true;
    // Weight: a vertex whose clique edges are all covered already can be dropped
    // from the clique at no loss, so such cliques are dominated.
    return std::all_of(c.stars.begin(), c.stars.end(), [&](const Bitset& s) { return s.intersects(uncovered); });
  }

  int lower_bound(const Bitset& uncovered) const {
    const std::size_t remaining = uncovered.count();
    const std::size_t max_edges = omega_ * (omega_ - 1) / 2;
    int per_vertex_sum = 0;
    int per_vertex_max = 0;
    for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
      const std::size_t at_v = uncovered.count_and(index_.incident(v));
      if (at_v == 0) continue;
      // every clique through v covers at most omega_v - 1 of its edges
      const int need = ceil_div(at_v, omega_at_[v] - 1);
      per_vertex_sum += need;
      per_vertex_max = std::max(per_vertex_max, need);
    }
    if (objective_ == Objective::count) return std::max(per_vertex_max, ceil_div(remaining, max_edges));
    // weight = sum over vertices of the number of cliques through the vertex
    return std::max(per_vertex_sum, ceil_div(2 * remaining, omega_ - 1));
  }

  void search(const Bitset& uncovered, int cost) {
    if (++nodes_ > options_.max_nodes && options_.max_nodes != 0)
      throw ResourceLimitError("cover search exceeded node budget of " + std::to_string(options_.max_nodes));
    if (uncovered.none()) {
      if (cost < best_value_) {
        best_value_ = cost;
        best_cover_.clear();
        for (int id : chosen_) best_cover_.push_back(candidates_[id].clique);
      }
      return;
    }
    if (cost + lower_bound(uncovered) >= best_value_) return;

    // Fail-first: the uncovered edge with the fewest usable cliques.
    std::size_t branch_edge = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (auto e = uncovered.find_first(); e < uncovered.capacity(); e = uncovered.find_next(e + 1)) {
      std::size_t count = 0;
      for (int id : by_edge_[e]) {
        if (usable(candidates_[id], uncovered) && ++count >= fewest) break;
      }
      if (count < fewest) {
        fewest = count;
        branch_edge = e;
        if (count == 0) return;
      }
    }

    struct Option {
      int id;
      std::size_t gain;
    };
    std::vector<Option> options;
    for (int id : by_edge_[branch_edge])
      if (usable(candidates_[id], uncovered)) options.push_back({id, uncovered.count_and(candidates_[id].edges)});
    std::stable_sort(options.begin(), options.end(), [&](const Option& a, const Option& b) {
      if (objective_ == Objective::count) return a.gain > b.gain;
      return better_ratio(a.gain, candidates_[a.id].clique.size(), b.gain, candidates_[b.id].clique.size());
    });

    for (const auto& opt : options) {
      const auto& cand = candidates_[opt.id];
      Bitset next = uncovered;
      next.subtract(cand.edges);
      chosen_.push_back(opt.id);
      search(next, cost + value_of(cand));
      chosen_.pop_back();
    }
  }

  const Graph& graph_;
  Objective objective_;
  CoverMode mode_;
  SolveOptions options_;
  EdgeIndex index_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<int>> by_edge_;
  std::vector<std::size_t> omega_at_;
  std::size_t omega_ = 2;

  std::vector<int> chosen_;
  std::vector<Clique> best_cover_;
  int best_value_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

CliqueCover greedy_cover(const Graph& g, std::size_t max_cliques) {
  CliqueCover out;
  if (g.edge_count() == 0) return out;
  EdgeIndex index(g);
  auto cliques = enumerate_cliques(g, 2, max_cliques);
  std::vector<Bitset> edge_sets;
  edge_sets.reserve(cliques.size());
  for (const auto& c : cliques) edge_sets.push_back(index.clique_edges(c));

  Bitset uncovered = index.all_edges();
  while (uncovered.any()) {
    std::size_t best = cliques.size();
    std::size_t best_gain = 0;
    for (std::size_t k = 0; k < cliques.size(); ++k) {
      const std::size_t gain = uncovered.count_and(edge_sets[k]);
      if (gain == 0) continue;
      if (best == cliques.size() || better_ratio(gain, cliques[k].size(), best_gain, cliques[best].size())) {
        best = k;
        best_gain = gain;
      }
    }
    out.cliques.push_back(cliques[best]);
    uncovered.subtract(edge_sets[best]);
  }
  return out;
}

SolveResult solve_cover(const Graph& g, Objective objective, CoverMode mode, const SolveOptions& options) {
  if (g.vertex_count() > options.max_vertices)
    throw ResourceLimitError("graph has " + std::to_string(g.vertex_count()) + " vertices; solver limit is " +
                             std::to_string(options.max_vertices));
  if (g.edge_count() == 0) return SolveResult{0, CliqueCover{{}, mode}, 0};
  return CoverSearch(g, objective, mode, options).run();
}

}  // namespace scclab
