#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "scclab/cover.hpp"
#include "scclab/graph.hpp"

namespace scclab {

using Element = int;
using Cell = std::vector<Element>;  // sorted, duplicate-free

/// Ordered tuple of d pairwise disjoint classes over the ground set
/// {0, ..., ground_n - 1}. Partial when the classes do not exhaust the ground
/// set or some class is empty.
struct DPartition {
  int ground_n = 0;
  std::vector<Cell> classes;

  int d() const { return static_cast<int>(classes.size()); }
  bool is_full() const;
  friend bool operator==(const DPartition&, const DPartition&) = default;
};

/// t rows of d cells each over a shared ground set. The cells A[i][j] model
/// the families whose only disjoint cell pairs are distinct cells of one row.
struct PartitionFamily {
  int ground_n = 0;
  int d = 0;
  std::vector<DPartition> rows;

  int t() const { return static_cast<int>(rows.size()); }
  const Cell& cell(int i, int j) const { return rows[i].classes[j]; }
  friend bool operator==(const PartitionFamily&, const PartitionFamily&) = default;
};

/// Throws std::invalid_argument unless every row has d cells over ground_n with
/// sorted, duplicate-free, in-range elements.
void check_shape(const PartitionFamily& f);

/// Every class of p meets every class of q. Throws std::invalid_argument if
/// either partition is partial or the ground sets differ.
bool is_qualitatively_independent(const DPartition& p, const DPartition& q);

struct FamilyViolation {
  enum class Kind { should_intersect, should_be_disjoint };
  int i, j, i2, j2;
  Kind kind;
  friend bool operator==(const FamilyViolation&, const FamilyViolation&) = default;
};

struct FamilyReport {
  bool valid = true;
  std::vector<FamilyViolation> violations;
};

/// Checks that A[i][j] and A[i2][j2] are disjoint exactly when i == i2 and
/// j != j2, over all unordered cell pairs. Shape errors throw (see check_shape).
FamilyReport verify_family_property(const PartitionFamily& f);

/// True iff every two rows are qualitatively independent full partitions.
bool is_pairwise_qi(const PartitionFamily& f);

/// Extends each row to a full partition of X, the union of all cells, by
/// putting every element of X not in the row's first d-1 cells into the last
/// cell. Elements of X are renumbered 0..|X|-1 preserving order (the identity
/// when X is already {0, ..., |X|-1}). Throws std::invalid_argument if f does
/// not have the family property.
PartitionFamily complete_family(const PartitionFamily& f);

struct QiSample {
  PartitionFamily family;
  /// Random partitions drawn, accepted or not.
  std::size_t candidates = 0;
};

/// Greedy random search for pairwise QI d-partitions of an n-set: draw uniform
/// class assignments (redrawn while a class is empty) and keep each one that is
/// QI with all kept rows. Stops at target_t rows or after max_rejections
/// consecutive rejections (0 selects 200 * target_t). Deterministic in seed.
/// Throws std::invalid_argument unless n >= d >= 2 and target_t >= 1.
QiSample sample_qi_family(int n, int d, int target_t, std::uint64_t seed, std::size_t max_rejections = 0);

inline PartitionFamily random_qi_family(int n, int d, int target_t, std::uint64_t seed,
                                        std::size_t max_rejections = 0) {
  return sample_qi_family(n, d, target_t, seed, max_rejections).family;
}

/// d + 1 pairwise QI d-partitions of Z_d x Z_d (point (x, y) is element
/// x * d + y): classes by x, classes by y, and the lines y = kx + c for each
/// slope k = 1..d-1. Any two classes from different rows meet in exactly one
/// point. Throws UnsupportedError unless d is prime.
PartitionFamily mols_family(int d);

/// Every d-partition of {0..n-1} into nonempty classes, each listed once with
/// classes ordered by least element. Throws ResourceLimitError if there are
/// more than budget of them.
std::vector<DPartition> all_d_partitions(int n, int d, std::size_t budget = kDefaultEnumerationBudget);

inline constexpr std::size_t kDefaultCliqueSearchNodes = 500'000;

/// N(n, d): the largest number of pairwise QI d-partitions of an n-set, as a
/// maximum clique of the QI compatibility graph on all d-partitions. Throws
/// ResourceLimitError if the partitions exceed budget or the clique search
/// exceeds max_nodes. In practice d = 2 finishes for n <= 10 and d = 3 for
/// n <= 9; the Kneser-like compatibility graphs beyond that defeat the
/// colouring bound.
int exact_N(int n, int d, std::size_t budget = kDefaultEnumerationBudget,
            std::size_t max_nodes = kDefaultCliqueSearchNodes);

/// Clique cover of K_t(d) from a family: vertex i*d + j stands for A[i][j] and
/// each ground element x gives the clique of cells containing x. Elements lying
/// in fewer than two cells give no clique, so the cover weight equals
/// family_weight exactly when every used element lies in at least two cells.
/// Throws std::invalid_argument if f lacks the family property or is empty.
std::pair<Graph, CliqueCover> family_to_cover(const PartitionFamily& f);

/// Sum of all cell sizes.
long long family_weight(const PartitionFamily& f);

}  // namespace scclab
