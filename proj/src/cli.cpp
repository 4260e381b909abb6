#include "scclab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scclab/bounds.hpp"
#include "scclab/errors.hpp"
#include "scclab/experiment.hpp"
#include "scclab/json_io.hpp"

namespace scclab {

namespace {

constexpr int kInvalid = 1;
constexpr int kResourceLimit = 2;

const std::vector<std::string> kExperimentColumns = {
    "t",         "d",         "exact_scc",   "greedy_weight", "construction_weight", "construction_n",
    "construction_kind", "lower_bound", "lower_bound_ln", "djo_upper", "ratio", "notes"};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

// Rows of flat objects; nested values are written as compact JSON.
void write_csv(std::ostream& out, const Json& rows, std::vector<std::string> columns) {
  const Json list = rows.is_array() ? rows : Json::array({rows});
  if (columns.empty() && !list.empty())
    for (const auto& item : list.front().items()) columns.push_back(item.key());
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << "\n";
  for (const auto& row : list) {
    for (std::size_t c = 0; c < columns.size(); ++c)
      out << (c ? "," : "") << csv_cell(row.contains(columns[c]) ? row.at(columns[c]) : Json(nullptr));
    out << "\n";
  }
}

std::size_t enumeration_budget() {
  if (const char* env = std::getenv("SCC_LAB_BUDGET")) {
    try {
      const auto value = std::stoull(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("SCC_LAB_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultEnumerationBudget;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"scc-lab: clique cover numbers, qualitatively independent partitions and their bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string graph_file, family_file, cover_file, kind, t_list;
  std::string objective_text = "weight", mode_text = "cover";
  int limit_n = SolveOptions{}.max_vertices;
  int n = 0, d = 0, t = 0;
  std::uint64_t seed = 1;
  bool use_mols = false;

  auto* solve = app.add_subcommand("solve", "Exact minimum clique cover or partition of a graph");
  solve->add_option("--graph", graph_file, "Graph JSON file")->required();
  solve->add_option("--objective", objective_text, "weight (scc/scp) or count (cc/cp)")
      ->check(CLI::IsMember({"weight", "count"}));
  solve->add_option("--mode", mode_text, "cover or partition")->check(CLI::IsMember({"cover", "partition"}));
  solve->add_option("--limit-n", limit_n, "Largest vertex count the solver accepts (default 20)");

  auto* construct = app.add_subcommand("construct", "Build a qualitatively independent partition family");
  construct->add_option("--kind", kind, "random or mols")->required()->check(CLI::IsMember({"random", "mols"}));
  construct->add_option("--n", n, "Ground set size (random)");
  construct->add_option("--d", d, "Classes per partition")->required();
  construct->add_option("--t", t, "Target number of partitions (random; truncates mols)");
  construct->add_option("--seed", seed, "Random seed (default 1)");

  auto* verify_family = app.add_subcommand("verify-family", "Check the disjointness property of a family");
  verify_family->add_option("--family,--file", family_file, "Family JSON file")->required();

  auto* verify_cover_cmd = app.add_subcommand("verify-cover", "Check a clique cover against a graph");
  verify_cover_cmd->add_option("--graph", graph_file, "Graph JSON file")->required();
  verify_cover_cmd->add_option("--cover", cover_file, "Cover JSON file (or solve output)")->required();

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for K_t(d)");
  bounds->add_option("--t", t, "Number of parts")->required();
  bounds->add_option("--d", d, "Part size")->required();

  auto* chain = app.add_subcommand("chain-check", "Evaluate the lower-bound inequality chain on a family");
  chain->add_option("--family,--file", family_file, "Family JSON file")->required();

  auto* experiment = app.add_subcommand(
      "experiment",
      "scc of K_t(d) against its bounds. Budgets: exact solving for t*d <= --limit-n (default 20) within "
      "250000 search nodes; at most 1000000 sampled partitions per row (SCC_LAB_BUDGET overrides).");
  experiment->add_option("--d", d, "Part size")->required();
  experiment->add_option("--t", t_list, "Comma-separated numbers of parts, e.g. 8,16,32")->required();
  experiment->add_option("--seed", seed, "Random seed (default 1)");
  experiment->add_option("--limit-n", limit_n, "Largest K_t(d) solved exactly (default 20)");
  experiment->add_flag("--mols", use_mols, "Also try the Latin-square family for prime d, t <= d+1");

  std::vector<const char*> argv{"scc-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInvalid;
  }

  auto emit = [&](const Json& result, std::vector<std::string> columns = {}) {
    if (format == "csv")
      write_csv(out, result, std::move(columns));
    else
      out << result.dump() << "\n";
  };

  try {
    const std::size_t budget = enumeration_budget();
    if (solve->parsed()) {
      SolveOptions options;
      options.max_vertices = limit_n;
      options.max_cliques = budget;
      const Graph g = graph_from_json(read_json_file(graph_file));
      emit(solve_result_to_json(
          solve_cover(g, parse_objective(objective_text), parse_cover_mode(mode_text), options)));
      return 0;
    }
    if (construct->parsed()) {
      PartitionFamily f;
      if (kind == "mols") {
        f = mols_family(d);
        if (t > 0) {
          if (t > f.t()) throw std::invalid_argument("mols family has only " + std::to_string(f.t()) + " rows");
          f.rows.resize(static_cast<std::size_t>(t));
        }
      } else {
        if (n <= 0 || t <= 0) throw std::invalid_argument("construct --kind random needs --n and --t");
        f = random_qi_family(n, d, t, seed);
      }
      emit(family_to_json(f));
      return 0;
    }
    if (verify_family->parsed()) {
      const auto f = family_from_json(read_json_file(family_file));
      const auto report = verify_family_property(f);
      Json result = family_report_to_json(report);
      result["pairwise_qi"] = is_pairwise_qi(f);
      result["weight"] = family_weight(f);
      emit(result);
      return report.valid ? 0 : kInvalid;
    }
    if (verify_cover_cmd->parsed()) {
      const Graph g = graph_from_json(read_json_file(graph_file));
      Json cover_json = read_json_file(cover_file);
      if (cover_json.is_object() && cover_json.contains("witness")) cover_json = cover_json.at("witness");
      const auto cover = cover_from_json(cover_json);
      const auto report = verify_cover(g, cover);
      Json result = cover_report_to_json(report);
      result["weight"] = cover_weight(cover);
      result["count"] = cover.cliques.size();
      emit(result);
      return report.valid ? 0 : kInvalid;
    }
    if (bounds->parsed()) {
      const int vertices = t * d;
      emit(Json{{"t", t},
                {"d", d},
                {"n", vertices},
                {"lower_bound", lower_bound_scc_multipartite(t, d, LogBase::two)},
                {"lower_bound_ln", lower_bound_scc_multipartite(t, d, LogBase::e)},
                {"djo_upper", djo_upper_bound(vertices, d)},
                {"egp", egp_bound(vertices)},
                {"katona_tarjan", katona_tarjan_bound(vertices)}});
      return 0;
    }
    if (chain->parsed()) {
      emit(chain_report_to_json(jensen_chain_check(family_from_json(read_json_file(family_file)))));
      return 0;
    }
    if (experiment->parsed()) {
      ExperimentBudget eb;
      eb.exact_max_vertices = limit_n;
      eb.sample_budget = budget;
      eb.use_mols = use_mols;
      const auto ts = parse_int_list(t_list);
      Json rows = Json::array();
      for (const auto& row : run_experiment(d, ts, seed, eb)) rows.push_back(experiment_row_to_json(row));
      emit(rows, kExperimentColumns);
      return 0;
    }
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  err << app.help();
  return kInvalid;
}

}  // namespace scclab
