#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace scclab::oracle {

namespace {

bool cells_meet(const Cell& a, const Cell& b) {
  for (Element x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

}  // namespace

std::vector<std::uint32_t> clique_masks(const Graph& g, int min_size) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (std::popcount(s) < min_size) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1U) && (s >> v & 1U) && !g.adjacent(u, v)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

int exhaustive_cover_value(const Graph& g, Objective objective, CoverMode mode) {
  const auto edges = g.edges();
  const auto m = edges.size();
  if (m > 20) throw std::invalid_argument("exhaustive_cover_value: too many edges");
  std::vector<std::uint32_t> clique_edges;
  std::vector<int> clique_cost;
  for (auto s : clique_masks(g, 2)) {
    std::uint32_t mask = 0;
    for (std::size_t e = 0; e < m; ++e)
      if ((s >> edges[e].first & 1U) && (s >> edges[e].second & 1U)) mask |= 1U << e;
    clique_edges.push_back(mask);
    clique_cost.push_back(objective == Objective::count ? 1 : std::popcount(s));
  }
  constexpr int kInf = std::numeric_limits<int>::max();
  const std::uint32_t full = m == 32 ? ~0U : (1U << m) - 1;
  std::vector<int> best(std::size_t{1} << m, kInf);
  best[0] = 0;
  // Adding a clique never shrinks the covered set, so increasing order suffices.
  for (std::uint32_t covered = 0; covered <= full; ++covered) {
    if (best[covered] == kInf) continue;
    for (std::size_t k = 0; k < clique_edges.size(); ++k) {
      if (mode == CoverMode::partition && (clique_edges[k] & covered) != 0) continue;
      const std::uint32_t next = covered | clique_edges[k];
      if (next == covered) continue;
      best[next] = std::min(best[next], best[covered] + clique_cost[k]);
    }
  }
  return best[full];
}

Graph graph_from_pair_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1U) g.add_edge(u, v);
  return g;
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v) && !seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == g.vertex_count();
}

std::vector<Graph> connected_graph_classes(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::set<std::uint32_t> canonical_forms;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    const Graph g = graph_from_pair_mask(n, mask);
    if (!is_connected(g)) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t least = ~0U;
    do {
      std::uint32_t image = 0;
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (g.adjacent(perm[u], perm[v])) image |= 1U << bit;
      least = std::min(least, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (canonical_forms.insert(least).second) out.push_back(graph_from_pair_mask(n, least));
  }
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

int brute_force_N2(int n) {
  if (n > 6) throw std::invalid_argument("brute_force_N2: n <= 6 only");
  // 2-partitions {A, complement} with 0 in A and the complement nonempty.
  const std::uint32_t all = (1U << n) - 1;
  std::vector<std::uint32_t> sides;
  for (std::uint32_t a = 1; a < all; ++a)
    if (a & 1U) sides.push_back(a);
  auto crossing = [all](std::uint32_t a, std::uint32_t b) {
    return (a & b) && (a & ~b & all) && (~a & b & all) && (~a & ~b & all);
  };
  int best = sides.empty() ? 0 : 1;
  std::vector<std::uint32_t> chosen;
  // Enumerate every pairwise-crossing subset.
  auto grow = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t k = from; k < sides.size(); ++k) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::uint32_t c) { return crossing(c, sides[k]); })) continue;
      chosen.push_back(sides[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  return best;
}

bool has_family_property(const PartitionFamily& f) {
  for (int i = 0; i < f.t(); ++i)
    for (int j = 0; j < f.d; ++j)
      for (int i2 = 0; i2 < f.t(); ++i2)
        for (int j2 = 0; j2 < f.d; ++j2) {
          if (i == i2 && j == j2) continue;
          const bool should_meet = i != i2;
          if (cells_meet(f.cell(i, j), f.cell(i2, j2)) != should_meet) return false;
        }
  return true;
}

PartitionFamily thinned_family(const PartitionFamily& full, std::mt19937_64& rng, int deletions) {
  PartitionFamily f = full;
  for (int k = 0; k < deletions; ++k) {
    const auto i = static_cast<int>(rng() % static_cast<std::uint64_t>(f.t()));
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(f.d));
    auto& cell = f.rows[i].classes[j];
    if (cell.size() <= 1) continue;
    const auto pos = static_cast<std::ptrdiff_t>(rng() % cell.size());
    const Element removed = cell[static_cast<std::size_t>(pos)];
    cell.erase(cell.begin() + pos);
    if (!has_family_property(f)) cell.insert(cell.begin() + pos, removed);
  }
  return f;
}

}  // namespace scclab::oracle
