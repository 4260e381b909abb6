#include "scclab/json_io.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace scclab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

Json graph_to_json(const Graph& g) { return {{"n", g.vertex_count()}, {"edges", edge_list(g.edges())}}; }

Graph graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) throw std::invalid_argument("edges must be an array");
  Graph g(n);
  std::set<Edge> seen;
  for (const auto& e : edges) {
    auto uv = int_list(e, "edge");
    if (uv.size() != 2) throw std::invalid_argument("each edge must have two endpoints");
    if (uv[0] >= uv[1]) throw std::invalid_argument("edge endpoints must satisfy u < v");
    if (!seen.emplace(uv[0], uv[1]).second) throw std::invalid_argument("duplicate edge in graph JSON");
    g.add_edge(uv[0], uv[1]);
  }
  return g;
}

Json cover_to_json(const CliqueCover& c) {
  Json cliques = Json::array();
  for (const auto& q : c.cliques) cliques.push_back(q.vertices);
  return {{"mode", std::string(to_string(c.mode))}, {"cliques", cliques}};
}

CliqueCover cover_from_json(const Json& j) {
  CliqueCover c;
  if (j.is_object() && j.contains("mode")) {
    if (!j.at("mode").is_string()) throw std::invalid_argument("mode must be a string");
    c.mode = parse_cover_mode(j.at("mode").get<std::string>());
  }
  const auto& cliques = field(j, "cliques");
  if (!cliques.is_array()) throw std::invalid_argument("cliques must be an array");
  for (const auto& q : cliques) {
    auto vs = int_list(q, "clique vertex");
    std::sort(vs.begin(), vs.end());
    c.cliques.push_back(Clique{std::move(vs)});
  }
  return c;
}

Json representation_to_json(const Representation& r) { return {{"labels", r.labels}}; }

Representation representation_from_json(const Json& j) {
  const auto& labels = field(j, "labels");
  if (!labels.is_array()) throw std::invalid_argument("labels must be an array");
  Representation r;
  for (const auto& set : labels) {
    auto ls = int_list(set, "label");
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    r.labels.push_back(std::move(ls));
  }
  return r;
}

Json family_to_json(const PartitionFamily& f) {
  Json rows = Json::array();
  for (const auto& row : f.rows) rows.push_back(row.classes);
  return {{"n", f.ground_n}, {"t", f.t()}, {"d", f.d}, {"rows", rows}};
}

PartitionFamily family_from_json(const Json& j) {
  PartitionFamily f;
  f.ground_n = as_int(field(j, "n"), "n");
  f.d = as_int(field(j, "d"), "d");
  const int t = as_int(field(j, "t"), "t");
  const auto& rows = field(j, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != t)
    throw std::invalid_argument("rows must be an array of t rows");
  for (const auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("each row must be an array of cells");
    DPartition p{f.ground_n, {}};
    for (const auto& cell : row) {
      auto xs = int_list(cell, "cell element");
      std::sort(xs.begin(), xs.end());
      if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw std::invalid_argument("cell lists an element twice");
      p.classes.push_back(std::move(xs));
    }
    f.rows.push_back(std::move(p));
  }
  check_shape(f);
  return f;
}

Json solve_result_to_json(const SolveResult& r) {
  return {{"optimum", r.optimum}, {"witness", cover_to_json(r.witness)}, {"nodes", r.nodes_explored}};
}

Json cover_report_to_json(const CoverReport& r) {
  return {{"valid", r.valid},
          {"uncovered", edge_list(r.uncovered)},
          {"multiply_covered", edge_list(r.multiply_covered)},
          {"non_edges", edge_list(r.non_edges)},
          {"undersized", r.undersized}};
}

Json family_report_to_json(const FamilyReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"i", v.i},
                          {"j", v.j},
                          {"i2", v.i2},
                          {"j2", v.j2},
                          {"kind", v.kind == FamilyViolation::Kind::should_intersect ? "should_intersect"
                                                                                      : "should_be_disjoint"}});
  return {{"valid", r.valid}, {"violations", violations}};
}

Json chain_report_to_json(const ChainReport& r) {
  return {{"t", r.t},
          {"d", r.d},
          {"total_weight", r.total_weight},
          {"family_hypothesis", r.family_hypothesis},
          {"pair_sums", r.pair_sums},
          {"pair_ok", r.pair_ok},
          {"bollobas_total", r.bollobas_total},
          {"bollobas_total_ok", r.bollobas_total_ok},
          {"f_sum", r.f_sum},
          {"relaxation_ok", r.relaxation_ok},
          {"jensen_lhs", r.jensen_lhs},
          {"jensen_rhs", r.jensen_rhs},
          {"jensen_ok", r.jensen_ok},
          {"mean_ok", r.mean_ok},
          {"exp2_sum", r.exp2_sum},
          {"exp2_chain_ok", r.exp2_chain_ok},
          {"final_bound", r.final_bound},
          {"final_bound_ln", r.final_bound_ln},
          {"final_ok", r.final_ok},
          {"holds", r.holds()}};
}

Json experiment_row_to_json(const ExperimentRow& r) {
  return {{"t", r.t},
          {"d", r.d},
          {"exact_scc", optional_json(r.exact_scc)},
          {"greedy_weight", optional_json(r.greedy_weight)},
          {"construction_weight", optional_json(r.construction_weight)},
          {"construction_n", optional_json(r.construction_n)},
          {"construction_kind", r.construction_kind},
          {"lower_bound", r.lower_bound},
          {"lower_bound_ln", r.lower_bound_ln},
          {"djo_upper", r.djo_upper},
          {"ratio", optional_json(r.ratio)},
          {"notes", r.notes}};
}

}  // namespace scclab
