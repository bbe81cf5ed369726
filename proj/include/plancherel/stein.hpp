#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "plancherel/chains.hpp"

namespace plancherel {

// The character-ratio statistic W(lambda) = (n-1)/sqrt(2) chi^lambda(12)/dim.
// The rational part r = (n-1) chi(12)/dim is exact; sqrt(2) enters only when
// a floating-point value is materialized for sampling statistics. W = 0 for
// n <= 1 by convention.
struct WStat {
  Partition lambda;
  Rational r;
  double value = 0;
};

inline Rational w_ratio(const Partition& lambda) {
  int n = lambda.n();
  if (n <= 1) return Rational(0);
  return Rational(n - 1) * frobenius_ratio(lambda);
}

inline WStat w_statistic(const Partition& lambda) {
  WStat w;
  w.lambda = lambda;
  w.r = w_ratio(lambda);
  w.value = to_double(w.r) / std::sqrt(2.0);
  if (abs(w.r) > Rational(lambda.n() - 1) && lambda.n() >= 2)
    throw InvariantViolation("w_statistic: character ratio outside [-1,1]");
  return w;
}

namespace detail {

// The exchangeable pair lives on one step of updown(1); the exact matrix per
// n is shared process-wide.
inline const TransitionMatrix& updown1_matrix(int n) {
  static std::map<int, TransitionMatrix> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, transition_matrix({ChainKind::updown, n, 1})).first;
  return it->second;
}

inline RatVector w_ratios(const PartitionIndex& index) {
  RatVector r(index.size());
  for (int i = 0; i < index.size(); ++i) r(i) = w_ratio(index.at(i));
  return r;
}

}  // namespace detail

// E^lambda(W*) computed from the exact chain row; must equal
// (1 - 2/(n+1)) W(lambda) exactly. Returns the common rational part.
inline Rational conditional_first_moment(const Partition& lambda) {
  int n = lambda.n();
  const TransitionMatrix& tm = detail::updown1_matrix(n);
  int i = tm.index.index_of(lambda);
  Rational computed(0);
  for (int j = 0; j < tm.index.size(); ++j)
    computed += tm.rows(i, j) * w_ratio(tm.index.at(j));
  Rational expected = Rational(Int(n - 1), Int(n + 1)) * w_ratio(lambda);
  if (computed != expected)
    throw InvariantViolation("conditional_first_moment: chain row disagrees with (1-2/(n+1)) W at " +
                             lambda.to_string());
  return computed;
}

// E^lambda((W*)^2) from the exact chain row; must equal the three-term
// character formula (with the small-n conventions that the padded classes
// contribute 0 when they do not fit).
inline Rational conditional_second_moment(const Partition& lambda) {
  int n = lambda.n();
  const TransitionMatrix& tm = detail::updown1_matrix(n);
  int i = tm.index.index_of(lambda);
  Rational computed(0);
  for (int j = 0; j < tm.index.size(); ++j) {
    Rational rj = w_ratio(tm.index.at(j));
    computed += tm.rows(i, j) * rj * rj / Rational(2);
  }
  Rational formula = Rational(Int(n) - 1, Int(n));
  formula += Rational(Int(2) * (n - 1) * (n - 2) * (n - 2), Int(n) * (n + 1)) *
             padded_cycle_ratio(lambda, 3);
  formula += Rational(Int(n - 1) * (n - 2) * (n - 3) * (n - 3), Int(2) * n * (n + 1)) *
             double_transposition_ratio(lambda);
  if (computed != formula)
    throw InvariantViolation("conditional_second_moment: chain row disagrees with the formula at " +
                             lambda.to_string());
  return computed;
}

// E(W) = 0 and Var(W) = 1 - 1/n over Plancherel measure, exactly.
inline std::pair<Rational, Rational> mean_variance_check(int n) {
  ExactDist pi = plancherel_dist(n);
  Rational mean(0), second(0);
  for (int i = 0; i < pi.index.size(); ++i) {
    Rational r = w_ratio(pi.index.at(i));
    mean += pi.probs(i) * r;
    second += pi.probs(i) * r * r / Rational(2);
  }
  if (mean != Rational(0)) throw InvariantViolation("mean_variance_check: E(W) != 0");
  Rational var_target = n >= 1 ? Rational(Int(n - 1), Int(n)) : Rational(0);
  if (second != var_target)
    throw InvariantViolation("mean_variance_check: Var(W) != 1 - 1/n");
  return {mean, second};
}

// E_pi[(-1 + (n+1)/4 E^lambda(W*-W)^2)]^2, exactly; equals
// (3n^2 - 5n + 6)/(4 n^3). The conditional square uses
// E^lambda(W*-W)^2 = (4/(n+1) - 1) W^2 + E^lambda((W*)^2).
inline Rational term1_exact(int n) {
  if (n < 2) throw std::invalid_argument("term1_exact: needs n >= 2");
  ExactDist pi = plancherel_dist(n);
  const TransitionMatrix& tm = detail::updown1_matrix(n);
  RatVector r = detail::w_ratios(tm.index);

  Rational total(0);
  for (int i = 0; i < tm.index.size(); ++i) {
    Rational wsq = r(i) * r(i) / Rational(2);
    Rational second(0);
    for (int j = 0; j < tm.index.size(); ++j)
      second += tm.rows(i, j) * r(j) * r(j) / Rational(2);
    Rational cond_diff_sq = Rational(Int(3 - n), Int(n + 1)) * wsq + second;
    Rational inner = Rational(-1) + Rational(Int(n + 1), Int(4)) * cond_diff_sq;
    total += pi.probs(i) * inner * inner;
  }
  Rational target(Int(3) * n * n - Int(5) * n + 6, Int(4) * n * n * n);
  if (total != target)
    throw InvariantViolation("term1_exact: expectation does not match (3n^2-5n+6)/(4n^3)");
  return total;
}

inline double term2_bound(int n) {
  double root_n = std::sqrt(static_cast<double>(n));
  double cube = std::pow(4.0 * std::exp(1.0) * std::sqrt(2.0) / root_n, 3);
  return cube + 2.0 * std::exp(-2.0 * std::exp(1.0) * root_n) * std::pow(2.0 * std::sqrt(2.0), 3);
}

struct Term2Report {
  int n = 0;
  long long samples = 0;
  double empirical_third_moment = 0;
  double bound = 0;
  double max_abs_diff = 0;  // max |W*-W| observed
  long long pathwise_violations = 0;
  bool pass = false;
};

// Samples (lambda, lambda*) pairs through RSK + one updown step and averages
// |W*-W|^3. The pathwise bound |W*-W| <= min(2 sqrt(2), 2 sqrt(2)/n *
// max(lambda_1, lambda_1')) is asserted exactly on every transition; a
// violation is a hard failure.
inline Term2Report term2_empirical(int n, long long samples, const SeededStream& rng) {
  if (n < 2) throw std::invalid_argument("term2_empirical: needs n >= 2");
  Term2Report report;
  report.n = n;
  report.samples = samples;
  report.bound = term2_bound(n);
  double sum_cubes = 0;
  for (long long i = 0; i < samples; ++i) {
    SeededStream sub = rng.substream(static_cast<std::uint64_t>(i));
    Partition lambda = rsk_sample(n, sub);
    Partition lambda_star = updown_step(lambda, sub);
    Rational dr = abs(w_ratio(lambda_star) - w_ratio(lambda));
    int max_row_col = std::max(lambda.first_row(), lambda.first_col());
    // |W*-W| <= 2 sqrt(2) is |dr| <= 4; the refined bound is n |dr| <= 4 max.
    if (dr > Rational(4) || Rational(n) * dr > Rational(4 * max_row_col)) {
      ++report.pathwise_violations;
      throw InvariantViolation("term2_empirical: pathwise |W*-W| bound violated at " +
                               lambda.to_string() + " -> " + lambda_star.to_string());
    }
    double diff = to_double(dr) / std::sqrt(2.0);
    report.max_abs_diff = std::max(report.max_abs_diff, diff);
    sum_cubes += diff * diff * diff;
  }
  report.empirical_third_moment = sum_cubes / static_cast<double>(samples);
  report.pass = report.empirical_third_moment <= report.bound;
  return report;
}

// ---------------------------------------------------------------------------
// Normal approximation machinery.

// Standard normal CDF via the C library erfc (documented in the README;
// accurate to well below 1e-10).
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Supremum over the sample of |empirical CDF - Phi|, evaluating both
// one-sided limits at every point. The sample must be sorted.
inline double kolmogorov_distance(const std::vector<double>& sorted_sample) {
  if (sorted_sample.empty()) throw std::invalid_argument("kolmogorov_distance: empty sample");
  double count = static_cast<double>(sorted_sample.size());
  double dist = 0;
  for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
    double phi = normal_cdf(sorted_sample[i]);
    dist = std::max(dist, std::abs(static_cast<double>(i) / count - phi));
    dist = std::max(dist, std::abs(static_cast<double>(i + 1) / count - phi));
  }
  return dist;
}

struct CltReport {
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  double kolmogorov = 0;
  double bound = 0;  // 40.1 n^{-1/4}
  double mean = 0;
  double variance = 0;
  double third_abs_moment_diff = 0;  // empirical E|W*-W|^3
  bool bound_ok = false;
};

// Seeded Monte Carlo CLT experiment: Plancherel samples through RSK, one
// updown step per sample for the pair statistics, Kolmogorov distance of W
// against the standard normal.
inline CltReport clt_experiment(int n, long long samples, const SeededStream& rng) {
  if (n < 2) throw std::invalid_argument("clt_experiment: needs n >= 2");
  if (samples < 1) throw std::invalid_argument("clt_experiment: needs samples >= 1");
  CltReport report;
  report.n = n;
  report.samples = samples;
  report.seed = rng.seed();
  report.stream = rng.stream();
  report.bound = 40.1 * std::pow(static_cast<double>(n), -0.25);

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(samples));
  double sum = 0, sum_sq = 0, sum_cubes = 0;
  const double root2 = std::sqrt(2.0);
  for (long long i = 0; i < samples; ++i) {
    SeededStream sub = rng.substream(static_cast<std::uint64_t>(i));
    Partition lambda = rsk_sample(n, sub);
    Partition lambda_star = updown_step(lambda, sub);
    Rational r = w_ratio(lambda);
    Rational dr = abs(w_ratio(lambda_star) - r);
    int max_row_col = std::max(lambda.first_row(), lambda.first_col());
    if (dr > Rational(4) || Rational(n) * dr > Rational(4 * max_row_col))
      throw InvariantViolation("clt_experiment: pathwise |W*-W| bound violated at " +
                               lambda.to_string());
    double w = to_double(r) / root2;
    values.push_back(w);
    sum += w;
    sum_sq += w * w;
    double d = to_double(dr) / root2;
    sum_cubes += d * d * d;
  }
  std::sort(values.begin(), values.end());
  report.kolmogorov = kolmogorov_distance(values);
  report.mean = sum / static_cast<double>(samples);
  report.variance = sum_sq / static_cast<double>(samples) - report.mean * report.mean;
  report.third_abs_moment_diff = sum_cubes / static_cast<double>(samples);
  report.bound_ok = report.kolmogorov <= report.bound;
  return report;
}

struct SteinBoundReport {
  double n_lo = 0, n_hi = 0;
  int points = 0;
  double max_ratio = 0;  // max over the grid of lhs / (40.1 n^{-1/4})
  bool pass = false;
  bool aux_pass = false;  // exp(-2e sqrt(n)) <= n^{-3/2} on the grid
};

// The closing inequality of the main bound: for every n on a geometric grid
// over [n_lo, n_hi],
//   sqrt(3) n^{-1/4} + (2 pi)^{-1/4} sqrt((n+1)/2 ((4 e sqrt2/sqrt n)^3
//     + 2 (2 sqrt2)^3 / n^{3/2}))  <=  40.1 n^{-1/4},
// together with the auxiliary exp(-2e sqrt(n)) <= n^{-3/2}.
inline SteinBoundReport stein_bound_constant_check(double n_lo = 2, double n_hi = 1e6) {
  if (n_lo < 2 || n_hi < n_lo)
    throw std::invalid_argument("stein_bound_constant_check: needs 2 <= n_lo <= n_hi");
  SteinBoundReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.pass = true;
  report.aux_pass = true;

  std::vector<double> grid;
  for (double n = n_lo; n <= std::min(n_hi, 101.0); n += 1.0) grid.push_back(n);
  for (double n = grid.back() * 1.05; n < n_hi; n *= 1.05) grid.push_back(n);
  grid.push_back(n_hi);

  for (double n : grid) {
    double root_n = std::sqrt(n);
    double third = std::pow(4.0 * std::exp(1.0) * std::sqrt(2.0) / root_n, 3) +
                   2.0 * std::pow(2.0 * std::sqrt(2.0), 3) / std::pow(n, 1.5);
    double lhs = std::sqrt(3.0) * std::pow(n, -0.25) +
                 std::pow(2.0 * M_PI, -0.25) * std::sqrt((n + 1.0) / 2.0 * third);
    double rhs = 40.1 * std::pow(n, -0.25);
    report.max_ratio = std::max(report.max_ratio, lhs / rhs);
    if (lhs > rhs) report.pass = false;
    if (std::exp(-2.0 * std::exp(1.0) * root_n) > std::pow(n, -1.5)) report.aux_pass = false;
  }
  report.points = static_cast<int>(grid.size());
  return report;
}

// Exchangeability of the pair (W, W*): the joint law pi(lambda) J(lambda, mu)
// aggregated by the exact r-values on both coordinates is symmetric.
inline CheckResult verify_exchangeability(int n) {
  CheckResult result{"stein/exchangeability(n=" + std::to_string(n) + ")", true, ""};
  const TransitionMatrix& tm = detail::updown1_matrix(n);
  ExactDist pi = plancherel_dist(n);
  RatVector r = detail::w_ratios(tm.index);
  std::map<std::pair<std::string, std::string>, Rational> joint;
  for (int i = 0; i < tm.index.size(); ++i)
    for (int j = 0; j < tm.index.size(); ++j)
      joint[{to_string(r(i)), to_string(r(j))}] += pi.probs(i) * tm.rows(i, j);
  for (const auto& [key, mass] : joint) {
    auto it = joint.find({key.second, key.first});
    if (it == joint.end() || it->second != mass) {
      result.pass = false;
      result.detail = "asymmetric at (" + key.first + "," + key.second + ")";
      return result;
    }
  }
  return result;
}

}  // namespace plancherel
