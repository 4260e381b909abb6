#include "scclab/partitions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "scclab/bitset.hpp"
#include "scclab/errors.hpp"

namespace scclab {

namespace {

Bitset to_bitset(const Cell& cell, int ground_n) {
  Bitset b(static_cast<std::size_t>(ground_n));
  for (Element x : cell) b.set(static_cast<std::size_t>(x));
  return b;
}

std::vector<Bitset> class_bitsets(const DPartition& p) {
  std::vector<Bitset> out;
  out.reserve(p.classes.size());
  for (const auto& c : p.classes) out.push_back(to_bitset(c, p.ground_n));
  return out;
}

bool all_meet(const std::vector<Bitset>& p, const std::vector<Bitset>& q) {
  for (const auto& a : p)
    for (const auto& b : q)
      if (!a.intersects(b)) return false;
  return true;
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int k = 2; k * k <= d; ++k)
    if (d % k == 0) return false;
  return true;
}

void check_cell(const Cell& cell, int ground_n) {
  for (std::size_t k = 0; k < cell.size(); ++k) {
    if (cell[k] < 0 || cell[k] >= ground_n)
      throw std::invalid_argument("element " + std::to_string(cell[k]) + " outside ground set of size " +
                                  std::to_string(ground_n));
    if (k > 0 && cell[k - 1] >= cell[k]) throw std::invalid_argument("cells must be sorted and duplicate-free");
  }
}

}  // namespace

bool DPartition::is_full() const {
  Bitset seen(static_cast<std::size_t>(ground_n));
  std::size_t total = 0;
  for (const auto& c : classes) {
    if (c.empty()) return false;
    for (Element x : c) {
      if (x < 0 || x >= ground_n || seen.test(static_cast<std::size_t>(x))) return false;
      seen.set(static_cast<std::size_t>(x));
      ++total;
    }
  }
  return total == static_cast<std::size_t>(ground_n);
}

void check_shape(const PartitionFamily& f) {
  if (f.ground_n < 0 || f.d < 1) throw std::invalid_argument("family needs ground_n >= 0 and d >= 1");
  for (const auto& row : f.rows) {
    if (row.ground_n != f.ground_n) throw std::invalid_argument("row ground set differs from family ground set");
    if (row.d() != f.d)
      throw std::invalid_argument("row has " + std::to_string(row.d()) + " cells, expected " + std::to_string(f.d));
    for (const auto& c : row.classes) check_cell(c, f.ground_n);
  }
}

bool is_qualitatively_independent(const DPartition& p, const DPartition& q) {
  if (p.ground_n != q.ground_n) throw std::invalid_argument("QI test on partitions of different ground sets");
  if (!p.is_full() || !q.is_full()) throw std::invalid_argument("QI test requires full partitions");
  return all_meet(class_bitsets(p), class_bitsets(q));
}

FamilyReport verify_family_property(const PartitionFamily& f) {
  check_shape(f);
  std::vector<std::vector<Bitset>> cells;
  for (const auto& row : f.rows) cells.push_back(class_bitsets(row));
  FamilyReport report;
  for (int i = 0; i < f.t(); ++i)
    for (int j = 0; j < f.d; ++j)
      for (int i2 = i; i2 < f.t(); ++i2)
        for (int j2 = (i2 == i ? j + 1 : 0); j2 < f.d; ++j2) {
          const bool meet = cells[i][j].intersects(cells[i2][j2]);
          if (i == i2 && meet)
            report.violations.push_back({i, j, i2, j2, FamilyViolation::Kind::should_be_disjoint});
          else if (i != i2 && !meet)
            report.violations.push_back({i, j, i2, j2, FamilyViolation::Kind::should_intersect});
        }
  report.valid = report.violations.empty();
  return report;
}

bool is_pairwise_qi(const PartitionFamily& f) {
  for (const auto& row : f.rows)
    if (!row.is_full() || row.ground_n != f.ground_n) return false;
  for (int i = 0; i < f.t(); ++i)
    for (int i2 = i + 1; i2 < f.t(); ++i2)
      if (!is_qualitatively_independent(f.rows[i], f.rows[i2])) return false;
  return true;
}

PartitionFamily complete_family(const PartitionFamily& f) {
  if (!verify_family_property(f).valid)
    throw std::invalid_argument("complete_family: input lacks the family property");
  std::vector<int> rank(static_cast<std::size_t>(f.ground_n), -1);
  for (const auto& row : f.rows)
    for (const auto& c : row.classes)
      for (Element x : c) rank[x] = 0;
  int used = 0;
  for (auto& r : rank)
    if (r == 0) r = used++;

  PartitionFamily out{used, f.d, {}};
  for (const auto& row : f.rows) {
    DPartition full{used, {}};
    std::vector<bool> taken(static_cast<std::size_t>(used), false);
    for (int j = 0; j + 1 < f.d; ++j) {
      Cell c;
      for (Element x : row.classes[j]) {
        c.push_back(rank[x]);
        taken[rank[x]] = true;
      }
      full.classes.push_back(std::move(c));
    }
    Cell last;
    for (int x = 0; x < used; ++x)
      if (!taken[x]) last.push_back(x);
    full.classes.push_back(std::move(last));
    out.rows.push_back(std::move(full));
  }
  return out;
}

QiSample sample_qi_family(int n, int d, int target_t, std::uint64_t seed, std::size_t max_rejections) {
  if (d < 2 || n < d) throw std::invalid_argument("random_qi_family needs n >= d >= 2");
  if (target_t < 1) throw std::invalid_argument("random_qi_family needs target_t >= 1");
  if (max_rejections == 0) max_rejections = 200 * static_cast<std::size_t>(target_t);

  std::mt19937_64 rng(seed);
  QiSample sample;
  sample.family = PartitionFamily{n, d, {}};
  std::vector<std::vector<Bitset>> kept;
  std::vector<int> assignment(static_cast<std::size_t>(n));
  std::vector<int> class_sizes(static_cast<std::size_t>(d));
  std::size_t rejections = 0;

  while (sample.family.t() < target_t && rejections < max_rejections) {
    do {
      std::fill(class_sizes.begin(), class_sizes.end(), 0);
      for (auto& a : assignment) ++class_sizes[a = static_cast<int>(rng() % static_cast<std::uint64_t>(d))];
    } while (std::find(class_sizes.begin(), class_sizes.end(), 0) != class_sizes.end());
    ++sample.candidates;

    DPartition p{n, std::vector<Cell>(static_cast<std::size_t>(d))};
    for (int x = 0; x < n; ++x) p.classes[assignment[x]].push_back(x);
    auto bits = class_bitsets(p);
    const bool accepted =
        std::all_of(kept.begin(), kept.end(), [&](const std::vector<Bitset>& row) { return all_meet(row, bits); });
    if (!accepted) {
      ++rejections;
      continue;
    }
    rejections = 0;
    kept.push_back(std::move(bits));
    sample.family.rows.push_back(std::move(p));
  }
  return sample;
}

PartitionFamily mols_family(int d) {
  if (!is_prime(d)) throw UnsupportedError("mols_family: d=" + std::to_string(d) + " is not prime");
  const int n = d * d;
  auto point = [d](int x, int y) { return x * d + y; };
  PartitionFamily f{n, d, {}};

  DPartition by_x{n, std::vector<Cell>(static_cast<std::size_t>(d))};
  DPartition by_y{n, std::vector<Cell>(static_cast<std::size_t>(d))};
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      by_x.classes[x].push_back(point(x, y));
      by_y.classes[y].push_back(point(x, y));
    }
  for (auto& c : by_y.classes) std::sort(c.begin(), c.end());
  f.rows.push_back(std::move(by_x));
  f.rows.push_back(std::move(by_y));

  for (int slope = 1; slope < d; ++slope) {
    DPartition lines{n, std::vector<Cell>(static_cast<std::size_t>(d))};
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        const int intercept = ((y - slope * x) % d + d) % d;
        lines.classes[intercept].push_back(point(x, y));
      }
    f.rows.push_back(std::move(lines));
  }
  return f;
}

std::vector<DPartition> all_d_partitions(int n, int d, std::size_t budget) {
  if (n < 0 || d < 1) throw std::invalid_argument("all_d_partitions needs n >= 0 and d >= 1");
  if (n < d) return {};

  // Stirling numbers of the second kind, saturated at budget + 1.
  const std::size_t cap = budget + 1;
  std::vector<std::vector<std::size_t>> stirling(static_cast<std::size_t>(n) + 1,
                                                 std::vector<std::size_t>(static_cast<std::size_t>(d) + 1, 0));
  stirling[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= d; ++k)
      stirling[m][k] = std::min(cap, static_cast<std::size_t>(k) * stirling[m - 1][k] + stirling[m - 1][k - 1]);
  if (stirling[n][d] > budget)
    throw ResourceLimitError("more than " + std::to_string(budget) + " " + std::to_string(d) + "-partitions of a " +
                             std::to_string(n) + "-set");

  // Restricted growth strings: element x joins an existing class or opens the next one.
  std::vector<DPartition> out;
  std::vector<int> growth(static_cast<std::size_t>(n), 0);
  auto recurse = [&](auto&& self, int x, int opened) -> void {
    if (opened + (n - x) < d) return;
    if (x == n) {
      DPartition p{n, std::vector<Cell>(static_cast<std::size_t>(d))};
      for (int y = 0; y < n; ++y) p.classes[growth[y]].push_back(y);
      out.push_back(std::move(p));
      return;
    }
    for (int c = 0; c < std::min(opened + 1, d); ++c) {
      growth[x] = c;
      self(self, x + 1, std::max(opened, c + 1));
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

int exact_N(int n, int d, std::size_t budget, std::size_t max_nodes) {
  const auto parts = all_d_partitions(n, d, budget);
  if (parts.empty()) return 0;
  std::vector<std::vector<Bitset>> bits;
  for (const auto& p : parts) bits.push_back(class_bitsets(p));
  Graph compatible(static_cast<int>(parts.size()));
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (all_meet(bits[a], bits[b])) compatible.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return clique_number(compatible, max_nodes);
}

std::pair<Graph, CliqueCover> family_to_cover(const PartitionFamily& f) {
  if (f.t() == 0) throw std::invalid_argument("family_to_cover: empty family");
  if (!verify_family_property(f).valid) throw std::invalid_argument("family_to_cover: input lacks the family property");
  std::vector<std::vector<Vertex>> cells_of(static_cast<std::size_t>(f.ground_n));
  for (int i = 0; i < f.t(); ++i)
    for (int j = 0; j < f.d; ++j)
      for (Element x : f.cell(i, j)) cells_of[x].push_back(i * f.d + j);
  CliqueCover cover;
  for (auto& vs : cells_of)
    if (vs.size() >= 2) cover.cliques.push_back(Clique{std::move(vs)});
  return {balanced_multipartite(f.t(), f.d), std::move(cover)};
}

long long family_weight(const PartitionFamily& f) {
  long long w = 0;
  for (const auto& row : f.rows)
    for (const auto& c : row.classes) w += static_cast<long long>(c.size());
  return w;
}

}  // namespace scclab
