#include "scclab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace scclab {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr long long kExactLimit = 60;
constexpr double kSlack = 1e-12;

cpp_int binomial_exact(long long n, long long k) {
  k = std::min(k, n - k);
  cpp_int c = 1;
  for (long long r = 1; r <= k; ++r) c = c * (n - k + r) / r;
  return c;
}

void require_at_least_two(int t, int d, const char* what) {
  if (t < 2 || d < 2) throw std::invalid_argument(std::string(what) + ": t and d must be >= 2");
}

}  // namespace

WeightMatrix::WeightMatrix(int t, int d, std::vector<long long> entries) : t_(t), d_(d), entries_(std::move(entries)) {
  require_at_least_two(t, d, "WeightMatrix");
  if (entries_.size() != static_cast<std::size_t>(t) * static_cast<std::size_t>(d))
    throw std::invalid_argument("WeightMatrix: expected t*d entries");
  if (std::any_of(entries_.begin(), entries_.end(), [](long long v) { return v < 0; }))
    throw std::invalid_argument("WeightMatrix: entries must be nonnegative");
}

WeightMatrix WeightMatrix::from_family(const PartitionFamily& f) {
  std::vector<long long> entries;
  for (const auto& row : f.rows)
    for (const auto& c : row.classes) entries.push_back(static_cast<long long>(c.size()));
  return WeightMatrix(f.t(), f.d, std::move(entries));
}

WeightMatrix WeightMatrix::constant(int t, int d, long long value) {
  require_at_least_two(t, d, "WeightMatrix");
  return WeightMatrix(t, d, std::vector<long long>(static_cast<std::size_t>(t * d), value));
}

long long WeightMatrix::total() const {
  long long s = 0;
  for (long long v : entries_) s += v;
  return s;
}

long double inverse_binomial(long long n, long long k) {
  if (k < 0 || k > n) throw std::invalid_argument("inverse_binomial: need 0 <= k <= n");
  if (n <= kExactLimit) return 1.0L / binomial_exact(n, k).convert_to<long double>();
  return std::exp(std::lgamma(static_cast<long double>(k) + 1) + std::lgamma(static_cast<long double>(n - k) + 1) -
                  std::lgamma(static_cast<long double>(n) + 1));
}

BollobasResult bollobas_sum(const WeightMatrix& k, int j, int j2) {
  if (j < 0 || j2 < 0 || j >= k.d() || j2 >= k.d()) throw std::invalid_argument("bollobas_sum: column out of range");
  bool exact = true;
  for (int i = 0; i < k.t(); ++i) exact = exact && k(i, j) + k(i, j2) <= kExactLimit;

  BollobasResult out;
  if (exact) {
    cpp_rational sum = 0;
    for (int i = 0; i < k.t(); ++i) sum += cpp_rational(1, binomial_exact(k(i, j) + k(i, j2), k(i, j)));
    out.sum = sum.convert_to<double>();
    out.ok = sum <= 1;
  } else {
    long double sum = 0;
    for (int i = 0; i < k.t(); ++i) sum += inverse_binomial(k(i, j) + k(i, j2), k(i, j));
    out.sum = static_cast<double>(sum);
    out.ok = sum <= 1 + kSlack;
  }
  return out;
}

BollobasResult bollobas_check(const PartitionFamily& f, int j, int j2) {
  if (j == j2) throw std::invalid_argument("bollobas_check: columns must differ");
  if (!verify_family_property(f).valid)
    throw std::invalid_argument("bollobas_check: family property fails, two-families hypothesis does not hold");
  return bollobas_sum(WeightMatrix::from_family(f), j, j2);
}

double f_interp(double x) {
  if (!(x >= 0)) throw std::invalid_argument("f_interp: argument must be >= 0");
  const auto half = static_cast<long long>(std::floor(x / 2));
  const long double lo = inverse_binomial(2 * half, half);
  const long double hi = inverse_binomial(2 * half + 2, half + 1);
  const long double frac = (static_cast<long double>(x) - 2.0L * static_cast<long double>(half)) / 2.0L;
  return static_cast<double>(lo + frac * (hi - lo));
}

bool ChainReport::holds() const {
  return std::all_of(pair_ok.begin(), pair_ok.end(), [](bool b) { return b; }) && bollobas_total_ok &&
         jensen_ok && final_ok;
}

ChainReport jensen_chain_check(const WeightMatrix& k, bool family_hypothesis) {
  ChainReport r;
  r.t = k.t();
  r.d = k.d();
  r.total_weight = k.total();
  r.family_hypothesis = family_hypothesis;

  cpp_rational exact_total = 0;
  bool exact = true;
  for (int j = 0; j < k.d(); ++j) {
    const int next = (j + 1) % k.d();
    auto pair = bollobas_sum(k, j, next);
    r.pair_sums.push_back(pair.sum);
    r.pair_ok.push_back(pair.ok);
    r.bollobas_total += pair.sum;
    for (int i = 0; i < k.t() && exact; ++i) {
      if (k(i, j) + k(i, next) > kExactLimit)
        exact = false;
      else
        exact_total += cpp_rational(1, binomial_exact(k(i, j) + k(i, next), k(i, j)));
    }
  }
  r.bollobas_total_ok = exact ? exact_total <= k.d() : r.bollobas_total <= k.d() + kSlack;

  long double f_sum = 0;
  for (int j = 0; j < k.d(); ++j)
    for (int i = 0; i < k.t(); ++i) f_sum += f_interp(static_cast<double>(k(i, j) + k(i, j + 1)));
  r.f_sum = static_cast<double>(f_sum);
  r.relaxation_ok = r.f_sum <= r.bollobas_total + kSlack;

  const double cells = static_cast<double>(k.t()) * k.d();
  r.jensen_lhs = f_interp(2.0 * static_cast<double>(r.total_weight) / cells);
  r.jensen_rhs = r.f_sum / cells;
  r.jensen_ok = r.jensen_lhs <= r.jensen_rhs + kSlack;
  r.mean_ok = r.jensen_lhs <= 1.0 / k.t() + kSlack;

  long double exp2_sum = 0;
  for (int j = 0; j < k.d(); ++j)
    for (int i = 0; i < k.t(); ++i) exp2_sum += std::exp2(-static_cast<long double>(k(i, j) + k(i, j + 1)));
  r.exp2_sum = static_cast<double>(exp2_sum);
  r.exp2_chain_ok = r.exp2_sum <= r.bollobas_total + kSlack && r.exp2_sum <= k.d() + kSlack &&
                    std::exp2(-2.0 * static_cast<double>(r.total_weight) / cells) <= 1.0 / k.t() + kSlack;

  r.final_bound = lower_bound_scc_multipartite(k.t(), k.d(), LogBase::two);
  r.final_bound_ln = lower_bound_scc_multipartite(k.t(), k.d(), LogBase::e);
  r.final_ok = static_cast<double>(r.total_weight) >= r.final_bound;
  return r;
}

ChainReport jensen_chain_check(const PartitionFamily& f) {
  if (!verify_family_property(f).valid) throw std::invalid_argument("jensen_chain_check: family property fails");
  return jensen_chain_check(WeightMatrix::from_family(f), true);
}

double lower_bound_scc_multipartite(int t, int d, LogBase base) {
  require_at_least_two(t, d, "lower_bound_scc_multipartite");
  const double log_t = base == LogBase::two ? std::log2(static_cast<double>(t)) : std::log(static_cast<double>(t));
  return d / 2.0 * t * log_t;
}

double djo_upper_bound(int n, int d) {
  if (d < 2 || n <= d) throw std::invalid_argument("djo_upper_bound: need n > d >= 2");
  const double e2 = std::numbers::e * std::numbers::e;
  return (e2 + 1) * n * d * std::ceil(std::log(static_cast<double>(n - 1) / (d - 1)));
}

long long egp_bound(int n) {
  if (n < 1) throw std::invalid_argument("egp_bound: n must be >= 1");
  return static_cast<long long>(n) * n / 4;
}

long long katona_tarjan_bound(int n) {
  if (n < 1) throw std::invalid_argument("katona_tarjan_bound: n must be >= 1");
  return static_cast<long long>(n) * n / 2;
}

}  // namespace scclab
