#include "scclab/representation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "scclab/errors.hpp"

namespace scclab {

int Representation::universe_size() const {
  std::vector<Label> all;
  for (const auto& set : labels) all.insert(all.end(), set.begin(), set.end());
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

int Representation::weight() const {
  int w = 0;
  for (const auto& set : labels) w += static_cast<int>(set.size());
  return w;
}

Representation Representation::canonical() const {
  std::map<Label, Label> dense;
  Representation out;
  out.labels.reserve(labels.size());
  for (auto set : labels) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (auto& l : set) l = dense.try_emplace(l, static_cast<Label>(dense.size())).first->second;
    std::sort(set.begin(), set.end());
    out.labels.push_back(std::move(set));
  }
  return out;
}

Representation cover_to_representation(const Graph& g, const CliqueCover& cover) {
  if (!verify_cover(g, cover).valid) throw std::invalid_argument("cover_to_representation: cover does not verify");
  Representation r;
  r.labels.resize(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t id = 0; id < cover.cliques.size(); ++id)
    for (Vertex v : cover.cliques[id].vertices) r.labels[v].push_back(static_cast<Label>(id));
  return r;
}

namespace {

bool sets_meet(const std::vector<Label>& a, const std::vector<Label>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

std::size_t common_count(const std::vector<Label>& a, const std::vector<Label>& b) {
  std::vector<Label> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

std::vector<std::vector<Label>> sorted_sets(const Representation& r) {
  auto sets = r.labels;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sets;
}

}  // namespace

std::pair<Graph, CliqueCover> representation_to_cover(const Representation& r) {
  const auto sets = sorted_sets(r);
  Graph g(r.vertex_count());
  std::map<Label, std::vector<Vertex>> carriers;
  for (Vertex v = 0; v < r.vertex_count(); ++v)
    for (Label l : sets[v]) carriers[l].push_back(v);
  CliqueCover cover;
  for (auto& [label, vs] : carriers) {
    if (vs.size() < 2) continue;
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) g.add_edge(vs[a], vs[b]);
    cover.cliques.push_back(Clique{vs});
  }
  return {std::move(g), std::move(cover)};
}

RepresentationReport verify_representation(const Graph& g, const Representation& r) {
  if (r.vertex_count() != g.vertex_count())
    throw std::invalid_argument("verify_representation: representation has " + std::to_string(r.vertex_count()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
  const auto sets = sorted_sets(r);
  RepresentationReport report;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v) != sets_meet(sets[u], sets[v])) report.wrong_pairs.emplace_back(u, v);
  report.valid = report.wrong_pairs.empty();
  return report;
}

bool is_linear(const Representation& r) {
  const auto sets = sorted_sets(r);
  for (std::size_t u = 0; u < sets.size(); ++u)
    for (std::size_t v = u + 1; v < sets.size(); ++v)
      if (common_count(sets[u], sets[v]) > 1) return false;
  return true;
}

namespace {

// Exhaustive search state for the intersection number oracle. Vertex pairs are
// bits of a 32-bit mask (n <= 7 gives at most 21 pairs).
struct LabelSearch {
  std::vector<std::uint32_t> label_pairs;  // pairs joined by each admissible label
  std::uint32_t target = 0;
  int max_pairs = 0;

  bool feasible(std::size_t from, int slots, std::uint32_t joined) const {
    if (joined == target) return true;
    if (slots == 0) return false;
    if (std::popcount(target & ~joined) > slots * max_pairs) return false;
    for (std::size_t k = from; k < label_pairs.size(); ++k)
      if (feasible(k + 1, slots - 1, joined | label_pairs[k])) return true;
    return false;
  }
};

}  // namespace

int brute_force_intersection_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 7) throw ResourceLimitError("brute_force_intersection_number supports n <= 7, got " + std::to_string(n));
  auto pair_bit = [n](int u, int v) { return std::uint32_t{1} << (u * n + v - (u + 1) * (u + 2) / 2); };

  LabelSearch search;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) search.target |= pair_bit(u, v);

  // A label shared by two vertices forces them adjacent, so only pairwise
  // adjacent carrier sets are admissible; labels on < 2 vertices are useless.
  for (std::uint32_t carriers = 0; carriers < (1U << n); ++carriers) {
    if (std::popcount(carriers) < 2) continue;
    std::uint32_t joined = 0;
    bool admissible = true;
    for (int u = 0; u < n && admissible; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((carriers >> u & 1U) && (carriers >> v & 1U)) {
          if (!g.adjacent(u, v)) {
            admissible = false;
            break;
          }
          joined |= pair_bit(u, v);
        }
    if (!admissible) continue;
    search.label_pairs.push_back(joined);
    search.max_pairs = std::max(search.max_pairs, std::popcount(joined));
  }

  for (int labels = 0;; ++labels)
    if (search.feasible(0, labels, 0)) return labels;
}

}  // namespace scclab
