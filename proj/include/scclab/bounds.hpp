#pragma once

#include <vector>

#include "scclab/partitions.hpp"

namespace scclab {

/// k[i][j] = |A[i][j]| for a t x d family, t, d >= 2, with the cyclic column
/// convention k[i][d] = k[i][0].
class WeightMatrix {
 public:
  /// Row-major entries; throws std::invalid_argument on t < 2, d < 2, a size
  /// mismatch or a negative entry.
  WeightMatrix(int t, int d, std::vector<long long> entries);
  static WeightMatrix from_family(const PartitionFamily& f);
  /// Every entry equal to value.
  static WeightMatrix constant(int t, int d, long long value);

  int t() const { return t_; }
  int d() const { return d_; }
  /// Column index taken modulo d.
  long long operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * d_ + j % d_)]; }
  long long total() const;

 private:
  int t_, d_;
  std::vector<long long> entries_;
};

enum class LogBase { two, e };

/// 1 / C(n, k) in extended precision.
long double inverse_binomial(long long n, long long k);

struct BollobasResult {
  double sum = 0;
  /// sum <= 1, decided in exact rational arithmetic when every binomial has
  /// n <= 60, otherwise with a 1e-12 slack.
  bool ok = false;
};

/// sum_i 1 / C(k[i][j] + k[i][j2], k[i][j]) for raw sizes, no hypothesis.
BollobasResult bollobas_sum(const WeightMatrix& k, int j, int j2);

/// Two-families sum for columns j != j2 of a family. Throws
/// std::invalid_argument if f lacks the family property or the columns are
/// equal or out of range.
BollobasResult bollobas_check(const PartitionFamily& f, int j, int j2);

/// Piecewise-linear extension of m -> 1 / C(m, m/2) through the even integers;
/// f(0) = 1. Throws std::invalid_argument for x < 0.
double f_interp(double x);

/// Every inequality of the lower-bound argument evaluated literally.
struct ChainReport {
  int t = 0;
  int d = 0;
  long long total_weight = 0;  // S = sum k[i][j]
  bool family_hypothesis = false;

  /// Bollobás sums for the cyclic column pairs (j, j+1 mod d).
  std::vector<double> pair_sums;
  std::vector<bool> pair_ok;  // each sum <= 1
  double bollobas_total = 0;
  bool bollobas_total_ok = false;  // total <= d

  /// sum f(k[i][j] + k[i][j+1]) and whether it stays below bollobas_total.
  /// Diagnostic only: the linear extension f lies above 1/C(m, m/2) at odd
  /// m >= 5 (f(5) = 13/120 > 1/10), so this can fail on valid families.
  double f_sum = 0;
  bool relaxation_ok = false;

  /// f(2S / td) <= f_sum / td.
  double jensen_lhs = 0;
  double jensen_rhs = 0;
  bool jensen_ok = false;

  /// f(2S / td) <= 1 / t. Diagnostic only; it inherits the relaxation gap.
  bool mean_ok = false;

  /// The same chain through 2^-m <= 1/C(m, a), which holds for every m:
  /// sum 2^-(k[i][j] + k[i][j+1]) <= d and 2^(-2S / td) <= 1 / t.
  double exp2_sum = 0;
  bool exp2_chain_ok = false;

  /// S >= (td / 2) log2 t, with the natural-log value kept for reference.
  double final_bound = 0;
  double final_bound_ln = 0;
  bool final_ok = false;

  /// Column-pair sums, their total, the Jensen step and the final bound. For a
  /// raw matrix only jensen_ok is guaranteed; the rest need the family
  /// hypothesis.
  bool holds() const;
};

ChainReport jensen_chain_check(const WeightMatrix& k, bool family_hypothesis = false);
/// Throws std::invalid_argument if f lacks the family property.
ChainReport jensen_chain_check(const PartitionFamily& f);

/// (d/2) t log t; base 2 by default. Throws std::invalid_argument for t, d < 2.
double lower_bound_scc_multipartite(int t, int d, LogBase base = LogBase::two);

/// (e^2 + 1) n d ceil(ln((n-1)/(d-1))) for graphs whose complement has maximum
/// degree d - 1. Throws std::invalid_argument unless n > d >= 2.
double djo_upper_bound(int n, int d);

/// floor(n^2 / 4), the bound on i(G). Throws std::invalid_argument for n < 1.
long long egp_bound(int n);

/// floor(n^2 / 2), the bound on scc(G). Throws std::invalid_argument for n < 1.
long long katona_tarjan_bound(int n);

}  // namespace scclab
