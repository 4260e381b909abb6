#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scclab/cover.hpp"
#include "scclab/partitions.hpp"

namespace scclab {

struct ExperimentBudget {
  /// Exact solving and the greedy baseline run only on K_t(d) with t*d at most this.
  int exact_max_vertices = 20;
  std::size_t exact_max_nodes = 250'000;
  /// Random partitions drawn per row across the whole n search.
  std::size_t sample_budget = kDefaultEnumerationBudget;
  /// Seeds tried per ground-set size before declaring that size a failure.
  int attempts_per_n = 8;
  /// Also consider the Latin-square family (prime d, t <= d + 1).
  bool use_mols = false;
};

struct ExperimentRow {
  int t = 0;
  int d = 0;
  std::optional<int> exact_scc;
  std::optional<int> greedy_weight;
  std::optional<long long> construction_weight;
  /// Ground-set size of the best family, and "random" or "mols".
  std::optional<int> construction_n;
  std::string construction_kind;
  double lower_bound = 0;     // (d/2) t log2 t
  double lower_bound_ln = 0;  // (d/2) t ln t
  double djo_upper = 0;       // evaluated at n = t*d vertices
  std::optional<double> ratio;
  /// Budget exhaustion and skipped stages.
  std::vector<std::string> notes;
};

/// One row per t in t_values (each t >= 2, d >= 2). For each t: exact scc and
/// greedy weight of K_t(d) when small enough, then the smallest ground size n
/// at which random_qi_family reaches t rows, found by doubling n from d and
/// bisecting. Rows run concurrently; output is fully determined by seed.
std::vector<ExperimentRow> run_experiment(int d, std::span<const int> t_values, std::uint64_t seed,
                                          const ExperimentBudget& budget = {});

/// lower_bound <= every computed weight <= djo_upper.
bool sandwich_holds(const ExperimentRow& row);

/// Seed for one (t, n, attempt) cell of the search, derived from the run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t t, std::uint64_t n, std::uint64_t attempt);

}  // namespace scclab
