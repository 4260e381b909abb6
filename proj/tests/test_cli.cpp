#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "scclab/cli.hpp"
#include "scclab/json_io.hpp"

using namespace scclab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("scclab_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
             std::to_string(std::rand()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("json round trips") {
  const Graph g = balanced_multipartite(3, 2);
  CHECK(graph_from_json(graph_to_json(g)) == g);

  const auto f = mols_family(3);
  CHECK(family_from_json(family_to_json(f)) == f);

  const CliqueCover c{{Clique{{0, 2, 4}}, Clique{{1, 3}}}, CoverMode::partition};
  const auto back = cover_from_json(cover_to_json(c));
  CHECK(back.cliques == c.cliques);
  CHECK(back.mode == CoverMode::partition);

  const Representation r{{{0, 1}, {1}, {}}};
  CHECK(representation_from_json(representation_to_json(r)).labels == r.labels);
}

TEST_CASE("json parsers reject malformed input") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1], [0, 1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 5]]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 2, "t": 1, "d": 2, "rows": [[[0]]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 2, "t": 2, "d": 2, "rows": [[[0], [1]]]})")),
                  std::invalid_argument);
}

TEST_CASE("cli solve and verify-cover") {
  TempDir dir;
  const auto graph = dir.write("k32.json", graph_to_json(balanced_multipartite(3, 2)).dump());
  const auto solved = run({"solve", "--graph", graph});
  REQUIRE(solved.code == 0);
  const auto result = Json::parse(solved.out);
  CHECK(result.at("optimum") == 12);

  const auto cover = dir.write("cover.json", solved.out);
  const auto verified = run({"verify-cover", "--graph", graph, "--cover", cover});
  CHECK(verified.code == 0);
  CHECK(Json::parse(verified.out).at("valid") == true);

  const auto partial = dir.write("partial.json", R"({"cliques": [[0, 2]]})");
  const auto rejected = run({"verify-cover", "--graph", graph, "--cover", partial});
  CHECK(rejected.code == 1);
  CHECK(Json::parse(rejected.out).at("valid") == false);

  const auto counted = run({"solve", "--graph", graph, "--objective", "count", "--mode", "partition"});
  REQUIRE(counted.code == 0);
  CHECK(Json::parse(counted.out).at("optimum") == 4);
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"solve", "--graph", "/nonexistent/graph.json"}).code == 1);
  CHECK(run({"solve", "--graph", dir.write("bad.json", "{not json")}).code == 1);
  CHECK(run({"bounds", "--t", "1", "--d", "2"}).code == 1);

  const auto big = dir.write("big.json", graph_to_json(balanced_multipartite(11, 2)).dump());
  const auto limited = run({"solve", "--graph", big});
  CHECK(limited.code == 2);
  CHECK_FALSE(limited.err.empty());
  CHECK(run({"solve", "--graph", big, "--limit-n", "10"}).code == 2);

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli honours SCC_LAB_BUDGET") {
  TempDir dir;
  const auto graph = dir.write("k42.json", graph_to_json(balanced_multipartite(4, 2)).dump());
  ::setenv("SCC_LAB_BUDGET", "5", 1);
  const auto starved = run({"solve", "--graph", graph});
  ::setenv("SCC_LAB_BUDGET", "zero", 1);
  const auto garbage = run({"solve", "--graph", graph});
  ::unsetenv("SCC_LAB_BUDGET");
  CHECK(starved.code == 2);
  CHECK(garbage.code == 1);
  CHECK(run({"solve", "--graph", graph}).code == 0);
}

TEST_CASE("cli construct, verify-family and chain-check") {
  TempDir dir;
  const auto mols = run({"construct", "--kind", "mols", "--d", "3"});
  REQUIRE(mols.code == 0);
  CHECK(family_from_json(Json::parse(mols.out)) == mols_family(3));
  const auto file = dir.write("mols.json", mols.out);

  const auto verified = run({"verify-family", "--family", file});
  CHECK(verified.code == 0);
  const auto report = Json::parse(verified.out);
  CHECK(report.at("valid") == true);
  CHECK(report.at("pairwise_qi") == true);
  CHECK(report.at("weight") == 36);

  const auto chain = run({"chain-check", "--file", file});
  CHECK(chain.code == 0);
  CHECK(Json::parse(chain.out).at("holds") == true);

  const auto truncated = run({"construct", "--kind", "mols", "--d", "2", "--t", "2"});
  CHECK(Json::parse(truncated.out).at("t") == 2);
  CHECK(run({"construct", "--kind", "mols", "--d", "4"}).code == 1);
  CHECK(run({"construct", "--kind", "random", "--d", "2"}).code == 1);

  const auto random = run({"construct", "--kind", "random", "--n", "12", "--d", "2", "--t", "6", "--seed", "4"});
  REQUIRE(random.code == 0);
  CHECK(random.out == run({"construct", "--kind", "random", "--n", "12", "--d", "2", "--t", "6", "--seed", "4"}).out);
  CHECK(is_pairwise_qi(family_from_json(Json::parse(random.out))));

  const auto broken = dir.write("broken.json", R"({"n": 2, "t": 2, "d": 2, "rows": [[[0], [1]], [[1], [0]]]})");
  const auto rejected = run({"verify-family", "--family", broken});
  CHECK(rejected.code == 1);
  CHECK(Json::parse(rejected.out).at("valid") == false);
  CHECK(run({"chain-check", "--family", broken}).code == 1);
}

TEST_CASE("cli bounds in json and csv") {
  const auto json = run({"bounds", "--t", "4", "--d", "2"});
  REQUIRE(json.code == 0);
  const auto b = Json::parse(json.out);
  CHECK(b.at("lower_bound").get<double>() == doctest::Approx(8.0));
  CHECK(b.at("egp") == 16);
  CHECK(b.at("katona_tarjan") == 32);

  const auto csv = run({"--format", "csv", "bounds", "--t", "4", "--d", "2"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header, values, extra;
  std::getline(lines, header);
  std::getline(lines, values);
  CHECK(header.find("lower_bound") != std::string::npos);
  CHECK(values.find("8.0") != std::string::npos);
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(run({"bounds", "--t", "4", "--d", "2", "--format", "csv"}).out == csv.out);
  CHECK(run({"--format", "xml", "bounds", "--t", "4", "--d", "2"}).code == 1);
}

TEST_CASE("cli experiment") {
  const auto json = run({"experiment", "--d", "2", "--t", "2,3"});
  REQUIRE(json.code == 0);
  const auto rows = Json::parse(json.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at("exact_scc") == 8);
  CHECK(rows[1].at("exact_scc") == 12);

  const auto csv = run({"--format", "csv", "experiment", "--d", "2", "--t", "2,3"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("t,d,exact_scc,greedy_weight,", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);

  CHECK(run({"experiment", "--d", "2", "--t", "2,x"}).code == 1);
  CHECK(run({"experiment", "--d", "2", "--t", "1"}).code == 1);
}
