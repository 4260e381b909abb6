#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "scclab/errors.hpp"
#include "scclab/partitions.hpp"

using namespace scclab;

namespace {

DPartition part(int n, std::vector<Cell> classes) { return DPartition{n, std::move(classes)}; }

PartitionFamily family(int n, int d, std::vector<std::vector<Cell>> rows) {
  PartitionFamily f{n, d, {}};
  for (auto& r : rows) f.rows.push_back(part(n, std::move(r)));
  return f;
}

std::size_t meet_size(const Cell& a, const Cell& b) {
  std::size_t k = 0;
  for (Element x : a) k += static_cast<std::size_t>(std::count(b.begin(), b.end(), x));
  return k;
}

bool all_pairs_qi(const PartitionFamily& f) {
  for (int a = 0; a < f.t(); ++a)
    for (int b = a + 1; b < f.t(); ++b)
      if (!is_qualitatively_independent(f.rows[a], f.rows[b])) return false;
  return true;
}

}  // namespace

// Elements 1..4 of the usual examples are 0..3 here.
TEST_CASE("is_qualitatively_independent") {
  CHECK(is_qualitatively_independent(part(4, {{0, 1}, {2, 3}}), part(4, {{0, 2}, {1, 3}})));
  CHECK_FALSE(is_qualitatively_independent(part(4, {{0, 1}, {2, 3}}), part(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_qualitatively_independent(part(4, {{0}, {1, 2, 3}}), part(4, {{1}, {0, 2, 3}})));
  CHECK_THROWS_AS(is_qualitatively_independent(part(4, {{0}, {1}}), part(4, {{0, 2}, {1, 3}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_qualitatively_independent(part(4, {{0, 1}, {2, 3}}), part(5, {{0, 2}, {1, 3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("verify_family_property") {
  CHECK(verify_family_property(family(4, 2, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}})).valid);

  const auto bad = verify_family_property(family(2, 2, {{{0}, {1}}, {{1}, {0}}}));
  CHECK_FALSE(bad.valid);
  const FamilyViolation expected{0, 0, 1, 0, FamilyViolation::Kind::should_intersect};
  CHECK(std::find(bad.violations.begin(), bad.violations.end(), expected) != bad.violations.end());

  // A repeated element inside one row breaks disjointness of that row's cells.
  const auto overlap = verify_family_property(family(3, 2, {{{0, 1}, {1, 2}}}));
  CHECK_FALSE(overlap.valid);
  REQUIRE(overlap.violations.size() == 1);
  CHECK(overlap.violations[0].kind == FamilyViolation::Kind::should_be_disjoint);

  CHECK_THROWS_AS(verify_family_property(family(2, 2, {{{0}, {5}}})), std::invalid_argument);
}

TEST_CASE("pairwise QI full families have the family property, and conversely") {
  for (int d : {2, 3}) {
    const auto parts = all_d_partitions(5, d);
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        PartitionFamily f{5, d, {parts[a], parts[b]}};
        CHECK(is_pairwise_qi(f) == verify_family_property(f).valid);
        CHECK(is_pairwise_qi(f) == oracle::has_family_property(f));
      }
  }
}

TEST_CASE("verify_family_property agrees with the direct scan on random small families") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int d = 2 + static_cast<int>(rng() % 2);
    const int t = 1 + static_cast<int>(rng() % 4);
    PartitionFamily f{n, d, {}};
    for (int i = 0; i < t; ++i) {
      DPartition p{n, std::vector<Cell>(static_cast<std::size_t>(d))};
      for (Element x = 0; x < n; ++x) {
        const auto j = rng() % static_cast<std::uint64_t>(d + 1);  // d leaves x unused
        if (j < static_cast<std::uint64_t>(d)) p.classes[j].push_back(x);
      }
      f.rows.push_back(p);
    }
    CHECK(verify_family_property(f).valid == oracle::has_family_property(f));
  }
}

TEST_CASE("complete_family") {
  const auto full = family(4, 2, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  CHECK(complete_family(full) == full);

  // Row 1 lacks element 2, which row 0 uses; it lands in row 1's last cell.
  const auto partial = family(6, 2, {{{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 4, 5}}});
  REQUIRE(verify_family_property(partial).valid);
  const auto completed = complete_family(partial);
  CHECK(completed.ground_n == 6);
  CHECK(completed.rows[0] == partial.rows[0]);
  CHECK(completed.rows[1].classes == std::vector<Cell>{{0, 3}, {1, 2, 4, 5}});

  // Unused ground elements are trimmed and the rest renumbered in order.
  const auto sparse = family(9, 2, {{{1, 3}, {5, 8}}, {{1, 5}, {3, 8}}});
  const auto trimmed = complete_family(sparse);
  CHECK(trimmed == full);

  CHECK_THROWS_AS(complete_family(family(2, 2, {{{0}, {1}}, {{1}, {0}}})), std::invalid_argument);
}

TEST_CASE("complete_family keeps cells and yields pairwise QI rows on thinned families") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    const auto full = random_qi_family(8 + 2 * d, d, 6, 100 + static_cast<std::uint64_t>(trial));
    const auto thin = oracle::thinned_family(full, rng, 30);
    REQUIRE(oracle::has_family_property(thin));
    const auto done = complete_family(thin);
    CHECK(oracle::has_family_property(done));
    CHECK(all_pairs_qi(done));
    if (done.ground_n != thin.ground_n) continue;  // renumbered; cells no longer comparable
    for (int i = 0; i < thin.t(); ++i)
      for (int j = 0; j < d; ++j)
        CHECK(std::includes(done.cell(i, j).begin(), done.cell(i, j).end(), thin.cell(i, j).begin(),
                            thin.cell(i, j).end()));
  }
}

TEST_CASE("random_qi_family") {
  bool reached_three = false;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = random_qi_family(4, 2, 3, seed);
    CHECK(f.t() >= 1);
    CHECK(f.t() <= 3);
    CHECK(is_pairwise_qi(f));
    reached_three = reached_three || f.t() == 3;
  }
  CHECK(reached_three);

  for (int d = 2; d <= 4; ++d) CHECK(random_qi_family(d, d, 2, 5).t() == 1);

  const auto big = random_qi_family(20, 2, 16, 9);
  CHECK(big.t() >= 2);
  CHECK(all_pairs_qi(big));
  CHECK(big == random_qi_family(20, 2, 16, 9));

  CHECK_THROWS_AS(random_qi_family(3, 4, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_qi_family(4, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_qi_family(4, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("mols_family") {
  const auto two = mols_family(2);
  CHECK(two.t() == 3);
  CHECK(two.ground_n == 4);
  CHECK(two.rows[0].classes == std::vector<Cell>{{0, 1}, {2, 3}});
  CHECK(two.rows[1].classes == std::vector<Cell>{{0, 2}, {1, 3}});
  CHECK(two.rows[2].classes == std::vector<Cell>{{0, 3}, {1, 2}});

  for (int d : {2, 3, 5}) {
    const auto f = mols_family(d);
    CHECK(f.t() == d + 1);
    CHECK(f.ground_n == d * d);
    CHECK(verify_family_property(f).valid);
    for (int i = 0; i < f.t(); ++i)
      for (int i2 = i + 1; i2 < f.t(); ++i2)
        for (int j = 0; j < d; ++j)
          for (int j2 = 0; j2 < d; ++j2) CHECK(meet_size(f.cell(i, j), f.cell(i2, j2)) == 1);
  }
  CHECK_THROWS_AS(mols_family(4), UnsupportedError);
  CHECK_THROWS_AS(mols_family(1), UnsupportedError);
}

TEST_CASE("mols families give optimal covers of K_{d+1}(d)") {
  for (int d : {2, 3}) {
    const auto f = mols_family(d);
    const auto [g, cover] = family_to_cover(f);
    CHECK(g == balanced_multipartite(d + 1, d));
    CHECK(verify_cover(g, cover).valid);
    CHECK(cover_weight(cover) == (d + 1) * d * d);
    CHECK(solve_cover(g, Objective::weight, CoverMode::cover).optimum == cover_weight(cover));
  }
}

TEST_CASE("all_d_partitions counts are Stirling numbers") {
  CHECK(all_d_partitions(4, 2).size() == 7);
  CHECK(all_d_partitions(5, 3).size() == 25);
  CHECK(all_d_partitions(6, 6).size() == 1);
  CHECK(all_d_partitions(3, 4).empty());
  CHECK_THROWS_AS(all_d_partitions(12, 4, 1000), ResourceLimitError);
  for (const auto& p : all_d_partitions(5, 3)) CHECK(p.is_full());
}

TEST_CASE("exact_N") {
  CHECK(exact_N(4, 2) == 3);
  CHECK(exact_N(5, 2) == 4);
  for (int d = 2; d <= 4; ++d) CHECK(exact_N(d, d) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(exact_N(n, 2) == oracle::brute_force_N2(n));
  int previous = 0;
  for (int n = 2; n <= 9; ++n) {
    const int value = exact_N(n, 2);
    CHECK(value >= previous);
    previous = value;
  }
  CHECK(exact_N(9, 3) >= 4);  // the Latin-square family on 9 points
  CHECK_THROWS_AS(exact_N(12, 2, 1000), ResourceLimitError);
}

TEST_CASE("family_to_cover and family_weight") {
  const auto [g, cover] = family_to_cover(mols_family(2));
  CHECK(g == balanced_multipartite(3, 2));
  CHECK(cover_weight(cover) == 12);
  CHECK(family_weight(mols_family(2)) == 12);
  CHECK(family_weight(mols_family(3)) == 36);
  CHECK(family_weight(PartitionFamily{3, 2, {}}) == 0);

  // One row: K_1(d) has no edges and every element clique is a singleton.
  const auto [g1, c1] = family_to_cover(family(4, 2, {{{0, 1}, {2, 3}}}));
  CHECK(g1.edge_count() == 0);
  CHECK(c1.cliques.empty());

  CHECK_THROWS_AS(family_to_cover(PartitionFamily{3, 2, {}}), std::invalid_argument);
  CHECK_THROWS_AS(family_to_cover(family(2, 2, {{{0}, {1}}, {{1}, {0}}})), std::invalid_argument);
}

TEST_CASE("family_to_cover is valid and weighs family_weight less singly-used elements") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 2;
    const auto full = random_qi_family(10 + d, d, 5, 200 + static_cast<std::uint64_t>(trial));
    if (full.t() < 2) continue;
    for (const auto& f : {full, oracle::thinned_family(full, rng, 20)}) {
      const auto [g, cover] = family_to_cover(f);
      CHECK(verify_cover(g, cover).valid);
      std::vector<int> uses(static_cast<std::size_t>(f.ground_n), 0);
      for (const auto& row : f.rows)
        for (const auto& c : row.classes)
          for (Element x : c) ++uses[x];
      const bool no_loners = std::none_of(uses.begin(), uses.end(), [](int u) { return u == 1; });
      if (no_loners)
        CHECK(cover_weight(cover) == family_weight(f));
      else
        CHECK(cover_weight(cover) < family_weight(f));
    }
  }
}
