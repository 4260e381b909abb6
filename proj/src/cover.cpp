#include "scclab/cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace scclab {

std::string_view to_string(CoverMode mode) { return mode == CoverMode::cover ? "cover" : "partition"; }

std::string_view to_string(Objective objective) { return objective == Objective::count ? "count" : "weight"; }

CoverMode parse_cover_mode(std::string_view text) {
  if (text == "cover") return CoverMode::cover;
  if (text == "partition") return CoverMode::partition;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected cover|partition)");
}

Objective parse_objective(std::string_view text) {
  if (text == "count") return Objective::count;
  if (text == "weight") return Objective::weight;
  throw std::invalid_argument("unknown objective '" + std::string(text) + "' (expected weight|count)");
}

int cover_weight(const CliqueCover& cover) {
  int w = 0;
  for (const auto& c : cover.cliques) w += static_cast<int>(c.size());
  return w;
}

int objective_value(const CliqueCover& cover, Objective objective) {
  return objective == Objective::count ? static_cast<int>(cover.cliques.size()) : cover_weight(cover);
}

CoverReport verify_cover(const Graph& g, const CliqueCover& cover) {
  CoverReport report;
  const int n = g.vertex_count();
  std::map<Edge, int> times_covered;
  for (std::size_t k = 0; k < cover.cliques.size(); ++k) {
    const auto& vs = cover.cliques[k].vertices;
    if (vs.size() < 2) report.undersized.push_back(k);
    for (std::size_t a = 0; a < vs.size(); ++a) {
      if (vs[a] < 0 || vs[a] >= n) {
        report.non_edges.emplace_back(vs[a], vs[a]);
        continue;
      }
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (vs[b] < 0 || vs[b] >= n) continue;
        Edge e{std::min(vs[a], vs[b]), std::max(vs[a], vs[b])};
        if (vs[a] == vs[b] || !g.adjacent(vs[a], vs[b]))
          report.non_edges.push_back(e);
        else
          ++times_covered[e];
      }
    }
  }
  for (const auto& e : g.edges()) {
    auto it = times_covered.find(e);
    if (it == times_covered.end())
      report.uncovered.push_back(e);
    else if (cover.mode == CoverMode::partition && it->second > 1)
      report.multiply_covered.push_back(e);
  }
  std::sort(report.non_edges.begin(), report.non_edges.end());
  report.non_edges.erase(std::unique(report.non_edges.begin(), report.non_edges.end()), report.non_edges.end());
  report.valid = report.uncovered.empty() && report.multiply_covered.empty() && report.non_edges.empty() &&
                 report.undersized.empty();
  return report;
}

}  // namespace scclab
