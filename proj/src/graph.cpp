#include "scclab/graph.hpp"

#include "scclab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scclab {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex, got " + std::to_string(n));
  adjacency_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adjacency_[u].set(static_cast<std::size_t>(v));
  adjacency_[v].set(static_cast<std::size_t>(u));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    const auto& row = adjacency_[u];
    for (auto v = row.find_next(static_cast<std::size_t>(u) + 1); v < row.capacity(); v = row.find_next(v + 1))
      out.emplace_back(u, static_cast<Vertex>(v));
  }
  return out;
}

int PartSpec::max_part() const { return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end()); }

int PartSpec::vertex_count() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

PartSpec PartSpec::canonical() const {
  PartSpec out = *this;
  std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
  return out;
}

bool Clique::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

Graph complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("complete_multipartite: no parts given");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
  }
  Graph g(static_cast<int>(part_of.size()));
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph balanced_multipartite(int t, int d) {
  if (t < 1 || d < 1) throw std::invalid_argument("balanced_multipartite: t and d must be >= 1");
  return complete_multipartite(std::vector<int>(static_cast<std::size_t>(t), d));
}

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] < 0 || vertices[a] >= g.vertex_count()) return false;
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
  }
  return true;
}

namespace {

void extend(const Graph& g, std::vector<Vertex>& current, const Bitset& candidates, std::size_t min_size,
            std::size_t max_count, std::vector<Clique>& out) {
  for (auto v = candidates.find_first(); v < candidates.capacity(); v = candidates.find_next(v + 1)) {
    current.push_back(static_cast<Vertex>(v));
    if (current.size() >= min_size) {
      if (out.size() == max_count)
        throw ResourceLimitError("clique enumeration exceeded budget of " + std::to_string(max_count));
      out.push_back(Clique{current});
    }
    // only later neighbours keep the sequence increasing
    Bitset next = candidates & g.neighbours(static_cast<Vertex>(v));
    for (std::size_t w = 0; w <= v; ++w) next.reset(w);
    if (next.any()) extend(g, current, next, min_size, max_count, out);
    current.pop_back();
  }
}

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, std::size_t max_nodes) : g_(g), max_nodes_(max_nodes) {}

  int run() {
    Bitset all(static_cast<std::size_t>(g_.vertex_count()));
    for (Vertex v = 0; v < g_.vertex_count(); ++v) all.set(static_cast<std::size_t>(v));
    expand(0, all);
    return best_;
  }

 private:
  void expand(int size, Bitset candidates) {
    if (max_nodes_ != 0 && ++nodes_ > max_nodes_)
      throw ResourceLimitError("maximum clique search exceeded node budget of " + std::to_string(max_nodes_));
    // Greedy colouring: colour classes are independent sets, so a clique takes
    // at most one vertex per colour.
    std::vector<std::pair<std::size_t, int>> order;
    Bitset uncoloured = candidates;
    for (int colour = 1; uncoloured.any(); ++colour) {
      Bitset open = uncoloured;
      for (auto v = open.find_first(); v < open.capacity(); v = open.find_first()) {
        open.reset(v);
        open.subtract(g_.neighbours(static_cast<Vertex>(v)));
        uncoloured.reset(v);
        order.emplace_back(v, colour);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (size + it->second <= best_) return;
      const auto v = it->first;
      Bitset next = candidates & g_.neighbours(static_cast<Vertex>(v));
      if (next.none())
        best_ = std::max(best_, size + 1);
      else
        expand(size + 1, std::move(next));
      candidates.reset(v);
    }
  }

  const Graph& g_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  int best_ = 0;
};

}  // namespace

int clique_number(const Graph& g, std::size_t max_nodes) {
  // Colour high-degree vertices first (initial ordering as in MCQ).
  std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<Vertex>(k);
  Graph relabelled(g.vertex_count());
  for (auto [u, v] : g.edges()) relabelled.add_edge(position[u], position[v]);
  return MaxCliqueSearch(relabelled, max_nodes).run();
}

std::vector<Clique> enumerate_cliques(const Graph& g, int min_size, std::size_t max_count) {
  if (min_size < 1 || min_size > g.vertex_count())
    throw std::invalid_argument("enumerate_cliques: min_size " + std::to_string(min_size) + " out of range");
  std::vector<Clique> out;
  std::vector<Vertex> current;
  Bitset all(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.set(static_cast<std::size_t>(v));
  extend(g, current, all, static_cast<std::size_t>(min_size), max_count, out);
  return out;
}

}  // namespace scclab
