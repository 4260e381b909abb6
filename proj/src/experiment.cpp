#include "scclab/experiment.hpp"

#include <future>
#include <stdexcept>

#include "scclab/bounds.hpp"
#include "scclab/errors.hpp"

namespace scclab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Ground sets beyond this are not searched.
constexpr int kMaxGround = 4096;

class FamilySearch {
 public:
  FamilySearch(int d, int t, std::uint64_t seed, const ExperimentBudget& budget)
      : d_(d), t_(t), seed_(seed), budget_(budget) {}

  /// Smallest n found (doubling, then bisection) with a t-row QI family.
  std::optional<PartitionFamily> run() {
    int failed = d_ - 1;
    int n = d_;
    std::optional<PartitionFamily> best;
    while (!best && !exhausted_ && n <= kMaxGround) {
      best = attempt(n);
      if (!best) {
        failed = n;
        n *= 2;
      }
    }
    if (!best) return std::nullopt;
    int reached = n;
    while (reached - failed > 1 && !exhausted_) {
      const int mid = failed + (reached - failed) / 2;
      if (auto found = attempt(mid)) {
        reached = mid;
        best = std::move(found);
      } else {
        failed = mid;
      }
    }
    return best;
  }

  bool exhausted() const { return exhausted_; }

 private:
  std::optional<PartitionFamily> attempt(int n) {
    for (int a = 0; a < budget_.attempts_per_n; ++a) {
      if (drawn_ >= budget_.sample_budget) {
        exhausted_ = true;
        return std::nullopt;
      }
      auto sample = sample_qi_family(n, d_, t_, derive_seed(seed_, static_cast<std::uint64_t>(t_),
                                                            static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a)));
      drawn_ += sample.candidates;
      if (sample.family.t() >= t_) return std::move(sample.family);
    }
    return std::nullopt;
  }

  int d_, t_;
  std::uint64_t seed_;
  ExperimentBudget budget_;
  std::size_t drawn_ = 0;
  bool exhausted_ = false;
};

ExperimentRow run_row(int d, int t, std::uint64_t seed, const ExperimentBudget& budget) {
  ExperimentRow row;
  row.t = t;
  row.d = d;
  row.lower_bound = lower_bound_scc_multipartite(t, d, LogBase::two);
  row.lower_bound_ln = lower_bound_scc_multipartite(t, d, LogBase::e);
  row.djo_upper = djo_upper_bound(t * d, d);

  if (t * d <= budget.exact_max_vertices) {
    const Graph g = balanced_multipartite(t, d);
    SolveOptions options;
    options.max_vertices = budget.exact_max_vertices;
    options.max_nodes = budget.exact_max_nodes;
    options.max_cliques = budget.sample_budget;
    try {
      row.greedy_weight = cover_weight(greedy_cover(g, options.max_cliques));
      row.exact_scc = solve_cover(g, Objective::weight, CoverMode::cover, options).optimum;
    } catch (const ResourceLimitError& e) {
      row.notes.push_back(std::string("exact: ") + e.what());
    }
  } else {
    row.notes.push_back("exact: skipped, " + std::to_string(t * d) + " vertices exceeds limit " +
                        std::to_string(budget.exact_max_vertices));
  }

  FamilySearch search(d, t, seed, budget);
  if (auto family = search.run()) {
    row.construction_weight = family_weight(*family);
    row.construction_n = family->ground_n;
    row.construction_kind = "random";
  } else {
    row.notes.push_back(search.exhausted() ? "construction: sample budget exhausted"
                                           : "construction: no family within ground-set limit");
  }

  if (budget.use_mols && t <= d + 1) {
    try {
      auto mols = mols_family(d);
      mols.rows.resize(static_cast<std::size_t>(t));
      const long long w = family_weight(mols);
      if (!row.construction_weight || w <= *row.construction_weight) {
        row.construction_weight = w;
        row.construction_n = mols.ground_n;
        row.construction_kind = "mols";
      }
    } catch (const UnsupportedError& e) {
      row.notes.push_back(std::string("mols: ") + e.what());
    }
  }

  if (row.construction_weight) row.ratio = static_cast<double>(*row.construction_weight) / row.lower_bound;
  return row;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t t, std::uint64_t n, std::uint64_t attempt) {
  return splitmix64(splitmix64(splitmix64(splitmix64(seed) ^ t) ^ n) ^ attempt);
}

std::vector<ExperimentRow> run_experiment(int d, std::span<const int> t_values, std::uint64_t seed,
                                          const ExperimentBudget& budget) {
  if (d < 2) throw std::invalid_argument("run_experiment: d must be >= 2");
  if (t_values.empty()) throw std::invalid_argument("run_experiment: no t values given");
  for (int t : t_values)
    if (t < 2) throw std::invalid_argument("run_experiment: every t must be >= 2");

  std::vector<std::future<ExperimentRow>> pending;
  for (int t : t_values) pending.push_back(std::async(std::launch::async, run_row, d, t, seed, budget));
  std::vector<ExperimentRow> rows;
  for (auto& p : pending) rows.push_back(p.get());
  return rows;
}

bool sandwich_holds(const ExperimentRow& row) {
  auto inside = [&](double w) { return row.lower_bound <= w && w <= row.djo_upper; };
  if (row.exact_scc && !inside(*row.exact_scc)) return false;
  if (row.construction_weight && !inside(static_cast<double>(*row.construction_weight))) return false;
  return true;
}

}  // namespace scclab
