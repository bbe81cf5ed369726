#pragma once

#include <cmath>
#include <vector>

#include "plancherel/measure.hpp"

namespace plancherel {

// Multiplicities of the irreducibles of S_n in the r-th tensor power of the
// representation induced from the trivial representation of S_{n-k}.
struct MultiplicityVector {
  int n = 0, k = 0, r = 0;
  PartitionIndex index;
  std::vector<Int> mult;

  MultiplicityVector(int n_, int k_, int r_, PartitionIndex idx, std::vector<Int> m)
      : n(n_), k(k_), r(r_), index(std::move(idx)), mult(std::move(m)) {}

  const Int& at(const Partition& lambda) const { return mult[index.index_of(lambda)]; }

  // Total dimension must be ((n)(n-1)...(n-k+1))^r exactly.
  void check_dimension_conservation() const {
    Int total = 0;
    for (int i = 0; i < index.size(); ++i) total += mult[i] * dimension(index.at(i));
    if (total != int_pow(falling_factorial(Int(n), k), r))
      throw InternalError("MultiplicityVector: total dimension is not ((n)_k)^r");
  }
};

// Character-side computation: mult(lambda) = (1/n!) sum_C |C| theta_C^r
// chi^lambda(C) with theta_C the falling factorial in the fixed points.
// Integrality and non-negativity are asserted; they are a strong global
// check of the character engine.
inline MultiplicityVector tensor_multiplicities(int n, int k, int r) {
  if (k < 1 || k >= n) throw std::invalid_argument("tensor_multiplicities: needs 1 <= k < n");
  if (r < 0) throw std::invalid_argument("tensor_multiplicities: needs r >= 0");
  if (n > exact_cap()) throw ResourceLimit("tensor_multiplicities: n exceeds the exact cap");
  PartitionIndex index(n);
  auto classes = class_data(n);
  std::vector<Int> weights;  // |C| (n_1)_k^r per class
  weights.reserve(classes.size());
  for (const CycleType& c : classes)
    weights.push_back(c.class_size() * int_pow(falling_factorial(c.fixed_points(), k), r));

  Int fact = factorial(n);
  std::vector<Int> mult(index.size());
  for (int i = 0; i < index.size(); ++i) {
    Int sum = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      sum += weights[c] * character(index.at(i), classes[c]);
    if (sum % fact != 0 || sum < 0)
      throw InternalError("tensor_multiplicities: non-integer or negative multiplicity at " +
                          index.at(i).to_string());
    mult[i] = sum / fact;
  }
  MultiplicityVector mv(n, k, r, std::move(index), std::move(mult));
  mv.check_dimension_conservation();
  return mv;
}

// Lattice-recursion oracle for k = 1: tensoring with the defining
// representation is induction of the restriction, so one power corresponds
// to one down/up branching sweep:
// m_{r+1}(mu) = sum_lambda m_r(lambda) #(common down-neighbors of lambda, mu).
inline MultiplicityVector tensor_multiplicities_by_recursion(int n, int k, int r) {
  if (k != 1) throw std::invalid_argument("tensor_multiplicities_by_recursion: only k = 1");
  if (n < 2) throw std::invalid_argument("tensor_multiplicities_by_recursion: needs n >= 2");
  if (r < 0) throw std::invalid_argument("tensor_multiplicities_by_recursion: needs r >= 0");
  PartitionIndex index(n);
  int size = index.size();

  std::vector<std::vector<int>> common(size, std::vector<int>(size, 0));
  for (int i = 0; i < size; ++i) {
    auto down_i = down_neighbors(index.at(i));
    for (int j = 0; j < size; ++j) {
      int count = 0;
      for (const Partition& tau : down_i)
        if (index.at(j).contains(tau)) ++count;
      common[i][j] = count;
    }
  }

  std::vector<Int> mult(size, Int(0));
  mult[index.index_of(Partition(std::vector<int>{n}))] = 1;
  for (int step = 0; step < r; ++step) {
    std::vector<Int> next(size, Int(0));
    for (int i = 0; i < size; ++i) {
      if (mult[i] == 0) continue;
      for (int j = 0; j < size; ++j)
        if (common[i][j] != 0) next[j] += mult[i] * common[i][j];
    }
    mult = std::move(next);
  }
  MultiplicityVector mv(n, 1, r, std::move(index), std::move(mult));
  mv.check_dimension_conservation();
  return mv;
}

struct DeviationReport {
  int n = 0, k = 0, r = 0;
  Rational beta;       // (n-k)(n-k-1) / (n(n-1))
  Rational deviation;  // sum_lambda |n! mult/(dim (n)_k^r) - 1|^2 pi(lambda)
  Rational bound;      // n! beta^{2r}
  bool bound_ok = false;
  double implied_c = 0;     // c with r = (n log n + c)/(2 log(1/beta))
  double c_guarantee = 0;   // sqrt(2 pi) e^{-c}
  bool c_guarantee_ok = true;
  std::vector<std::pair<Partition, Rational>> normalized;  // per-lambda ratio
};

// Exact weighted squared deviation of the normalized multiplicities from 1
// under Plancherel measure, against the spectral bound. Both sides are
// rational, so the comparison has zero tolerance.
inline DeviationReport deviation_report(int n, int k, int r) {
  if (n < 3) throw std::invalid_argument("deviation_report: needs n >= 3");
  MultiplicityVector mv = tensor_multiplicities(n, k, r);
  ExactDist pi = plancherel_dist(n);

  DeviationReport report;
  report.n = n;
  report.k = k;
  report.r = r;
  report.beta = Rational(Int(n - k) * (n - k - 1), Int(n) * (n - 1));

  Int fact = factorial(n);
  Int scale = int_pow(falling_factorial(Int(n), k), r);
  Rational deviation(0);
  for (int i = 0; i < mv.index.size(); ++i) {
    Rational ratio(fact * mv.mult[i], dimension(mv.index.at(i)) * scale);
    Rational dev = ratio - Rational(1);
    deviation += dev * dev * pi.probs(i);
    report.normalized.emplace_back(mv.index.at(i), std::move(ratio));
  }
  report.deviation = deviation;
  report.bound = Rational(fact) * rat_pow(report.beta, 2 * r);
  report.bound_ok = report.deviation <= report.bound;

  double log_inv_beta = -std::log(to_double(report.beta));
  report.implied_c = 2.0 * r * log_inv_beta - n * std::log(static_cast<double>(n));
  if (report.implied_c > 0) {
    report.c_guarantee = std::sqrt(2.0 * M_PI) * std::exp(-report.implied_c);
    report.c_guarantee_ok = to_double(report.deviation) <= report.c_guarantee;
  }
  return report;
}

struct EquidistributionReport {
  int n = 0, k = 0, r_max = 0;
  std::vector<double> max_rel_deviation;  // per r = 0..r_max
  std::vector<double> l2_deviation;       // sqrt of the exact weighted square
  int first_r_l2_below_e = -1;            // first r with L2^2 <= sqrt(2 pi)/e
  double threshold_r = 0;                 // (n log n + 1)/(2 log(1/beta))
  bool threshold_ok = false;
  double heuristic_r = 0;                 // n^2 log n / 4
};

// Tracks how fast the normalized multiplicities flatten: the max relative
// deviation and the L2 deviation per power, the first power at which the L2
// deviation drops below sqrt(2 pi) e^{-1}, and the two reference scales for
// that power (the spectral threshold at c = 1 and the n^2 log n / 4
// heuristic, which are not reconciled here).
inline EquidistributionReport equidistribution_summary(int n, int k, int r_max) {
  if (n < 3) throw std::invalid_argument("equidistribution_summary: needs n >= 3");
  EquidistributionReport report;
  report.n = n;
  report.k = k;
  report.r_max = r_max;
  Rational beta(Int(n - k) * (n - k - 1), Int(n) * (n - 1));
  double log_inv_beta = -std::log(to_double(beta));
  report.threshold_r = (n * std::log(static_cast<double>(n)) + 1.0) / (2.0 * log_inv_beta);
  report.heuristic_r =
      static_cast<double>(n) * n * std::log(static_cast<double>(n)) / 4.0;
  double target = std::sqrt(2.0 * M_PI) * std::exp(-1.0);

  for (int r = 0; r <= r_max; ++r) {
    DeviationReport dev = deviation_report(n, k, r);
    double max_rel = 0;
    for (const auto& [lambda, ratio] : dev.normalized)
      max_rel = std::max(max_rel, std::abs(to_double(ratio) - 1.0));
    report.max_rel_deviation.push_back(max_rel);
    report.l2_deviation.push_back(std::sqrt(to_double(dev.deviation)));
    if (report.first_r_l2_below_e < 0 && to_double(dev.deviation) <= target)
      report.first_r_l2_below_e = r;
  }
  report.threshold_ok = report.first_r_l2_below_e >= 0 &&
                        report.first_r_l2_below_e <=
                            static_cast<int>(std::ceil(report.threshold_r));
  return report;
}

}  // namespace plancherel
