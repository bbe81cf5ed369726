#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "plancherel/characters.hpp"
#include "plancherel/partition.hpp"
#include "plancherel/rng.hpp"

namespace plancherel {

// Exact probability distribution over the partitions of n.
struct ExactDist {
  PartitionIndex index;
  RatVector probs;

  ExactDist(PartitionIndex idx, RatVector p) : index(std::move(idx)), probs(std::move(p)) {
    Rational total(0);
    for (int i = 0; i < probs.size(); ++i) {
      if (probs(i).sign() < 0) throw InvariantViolation("ExactDist: negative probability");
      total += probs(i);
    }
    if (total != Rational(1)) throw InvariantViolation("ExactDist: probabilities do not sum to 1");
  }

  int n() const { return index.n(); }
  const Rational& prob(const Partition& p) const { return probs(index.index_of(p)); }
};

// Plancherel measure pi(lambda) = dim(lambda)^2 / n!.
inline ExactDist plancherel_dist(int n) {
  if (n < 0) throw std::invalid_argument("plancherel_dist: n must be >= 0");
  if (n > exact_cap())
    throw ResourceLimit("plancherel_dist: n exceeds the exact enumeration cap");
  PartitionIndex index(n);
  RatVector probs(index.size());
  Int fact = factorial(n);
  for (int i = 0; i < index.size(); ++i) {
    Int d = dimension(index.at(i));
    probs(i) = Rational(d * d, fact);
  }
  return ExactDist(std::move(index), std::move(probs));
}

// Law of the cycle type of a uniform permutation: 1 / (centralizer order).
// This is the stationary law of the Kingman chain.
inline ExactDist cycle_type_dist(int n) {
  PartitionIndex index(n);
  RatVector probs(index.size());
  for (int i = 0; i < index.size(); ++i)
    probs(i) = Rational(Int(1), CycleType(index.at(i)).centralizer_order());
  return ExactDist(std::move(index), std::move(probs));
}

// ---------------------------------------------------------------------------
// Coherent single-box moves on the Young lattice.
//
// Up from lambda (|lambda| = m): to Lambda with probability
// dim(Lambda) / ((m+1) dim(lambda)); down: to mu with probability
// dim(mu) / dim(lambda). Both are computed exactly by hook-length
// cancellation: only the hooks in the row and column of the moved corner
// change, so the ratio is a short product of small integers. The weights of
// each move sum to exactly 1 (asserted), which is the coherence of the
// Plancherel family.

namespace detail {

inline int hook_at(const Partition& lambda, const Partition& conj, int r, int c) {
  return lambda.parts()[r] - c + conj.parts()[c] - r - 1;
}

}  // namespace detail

inline std::vector<std::pair<Partition, Rational>> up_step_weights(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  std::vector<std::pair<Partition, Rational>> out;
  Rational total(0);
  for (int i = 0; i <= lambda.rows(); ++i) {
    bool addable = i == 0 || i == lambda.rows() || lambda.parts()[i] < lambda.parts()[i - 1];
    if (i < lambda.rows() && !addable) continue;
    int col = i < lambda.rows() ? lambda.parts()[i] : 0;
    Int num = 1, den = 1;
    if (i < lambda.rows()) {
      for (int j = 0; j < lambda.parts()[i]; ++j) {
        int h = detail::hook_at(lambda, conj, i, j);
        num *= h;
        den *= h + 1;
      }
    }
    for (int r = 0; r < i && r < lambda.rows(); ++r) {
      int h = detail::hook_at(lambda, conj, r, col);
      num *= h;
      den *= h + 1;
    }
    std::vector<int> parts = lambda.parts();
    if (i < lambda.rows())
      ++parts[i];
    else
      parts.push_back(1);
    Rational w(num, den);
    total += w;
    out.emplace_back(Partition(std::move(parts)), std::move(w));
  }
  if (total != Rational(1))
    throw InvariantViolation("up_step_weights: coherent probabilities do not sum to 1");
  return out;
}

inline std::vector<std::pair<Partition, Rational>> down_step_weights(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("down_step_weights: empty partition");
  Partition conj = conjugate(lambda);
  int n = lambda.n();
  std::vector<std::pair<Partition, Rational>> out;
  Rational total(0);
  for (int i = lambda.rows() - 1; i >= 0; --i) {
    if (i < lambda.rows() - 1 && lambda.parts()[i] == lambda.parts()[i + 1]) continue;
    int col = lambda.parts()[i] - 1;
    Int num = 1, den = Int(n);
    for (int j = 0; j < col; ++j) {
      int h = detail::hook_at(lambda, conj, i, j);
      num *= h;
      den *= h - 1;
    }
    for (int r = 0; r < i; ++r) {
      int h = detail::hook_at(lambda, conj, r, col);
      num *= h;
      den *= h - 1;
    }
    std::vector<int> parts = lambda.parts();
    if (--parts[i] == 0) parts.pop_back();
    Rational w(num, den);
    total += w;
    out.emplace_back(Partition(std::move(parts)), std::move(w));
  }
  if (total != Rational(1))
    throw InvariantViolation("down_step_weights: branching probabilities do not sum to 1");
  return out;
}

namespace detail {

// Exact weights are materialized as doubles only at the sampling draw;
// the float sum is guarded even though the rational sum was asserted.
inline const Partition& sample_move(const std::vector<std::pair<Partition, Rational>>& moves,
                                    SeededStream& rng) {
  std::vector<double> weights(moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) weights[i] = to_double(moves[i].second);
  return moves[rng.next_categorical(weights)].first;
}

}  // namespace detail

// One Plancherel-coherent growth path from the empty partition to size n.
inline Partition growth_sample(int n, SeededStream& rng) {
  if (n < 0) throw std::invalid_argument("growth_sample: n must be >= 0");
  Partition shape;
  for (int m = 0; m < n; ++m) shape = detail::sample_move(up_step_weights(shape), rng);
  return shape;
}

// Law of the growth process at size n, computed exactly by dynamic
// programming over the lattice levels (no sampling).
inline ExactDist growth_law(int n) {
  PartitionIndex level(0);
  RatVector cur(1);
  cur(0) = Rational(1);
  for (int m = 0; m < n; ++m) {
    PartitionIndex next_level(m + 1);
    RatVector next = RatVector::Constant(next_level.size(), Rational(0));
    for (int i = 0; i < level.size(); ++i) {
      if (cur(i).is_zero()) continue;
      for (const auto& [target, w] : up_step_weights(level.at(i)))
        next(next_level.index_of(target)) += cur(i) * w;
    }
    level = std::move(next_level);
    cur = std::move(next);
  }
  return ExactDist(std::move(level), std::move(cur));
}

// ---------------------------------------------------------------------------
// Robinson-Schensted insertion.

// Shape of the insertion tableau of a permutation of 1..n. The first row
// length is the longest increasing subsequence of w, the first column length
// the longest decreasing one.
inline Partition rsk_shape(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("rsk_shape: not a permutation of 1..n");
    seen[v] = true;
  }
  std::vector<std::vector<int>> rows;
  for (int v : w) {
    int x = v;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        x = -1;
        break;
      }
      std::swap(x, *it);
    }
    if (x != -1) rows.push_back({x});
  }
  std::vector<int> parts(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) parts[i] = static_cast<int>(rows[i].size());
  return Partition(std::move(parts));
}

// Plancherel sample via a uniform permutation (Fisher-Yates on the stream).
inline Partition rsk_sample(int n, SeededStream& rng) {
  if (n < 1) throw std::invalid_argument("rsk_sample: n must be >= 1");
  return rsk_shape(rng.next_permutation_of(n));
}

// Exact law of rsk_shape over all n! permutations. Exhaustive; n is capped
// to keep the enumeration in check.
inline ExactDist rsk_exhaustive_law(int n) {
  if (n < 1 || n > 9) throw ResourceLimit("rsk_exhaustive_law: supported for 1 <= n <= 9");
  PartitionIndex index(n);
  std::vector<Int> counts(index.size(), Int(0));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    ++counts[index.index_of(rsk_shape(w))];
  } while (std::next_permutation(w.begin(), w.end()));
  Int fact = factorial(n);
  RatVector probs(index.size());
  for (int i = 0; i < index.size(); ++i) probs(i) = Rational(counts[i], fact);
  return ExactDist(std::move(index), std::move(probs));
}

// ---------------------------------------------------------------------------

struct LisTailReport {
  int n = 0;
  long long samples = 0;
  double threshold = 0;  // 2e sqrt(n)
  double bound = 0;      // 2 exp(-2e sqrt(n))
  long long hits = 0;
  double frequency = 0;
  bool pass = false;
};

// Tail check for the longest row/column: P(lambda_1 >= 2e sqrt(n) or
// lambda_1' >= 2e sqrt(n)) against the bound 2 exp(-2e sqrt(n)). Samples are
// drawn through RSK with one substream per index.
inline LisTailReport lis_tail_probability_check(int n, long long samples, const SeededStream& rng) {
  LisTailReport report;
  report.n = n;
  report.samples = samples;
  report.threshold = 2.0 * std::exp(1.0) * std::sqrt(static_cast<double>(n));
  report.bound = 2.0 * std::exp(-report.threshold);
  for (long long i = 0; i < samples; ++i) {
    SeededStream sub = rng.substream(static_cast<std::uint64_t>(i));
    Partition shape = rsk_sample(n, sub);
    if (shape.first_row() >= report.threshold || shape.first_col() >= report.threshold)
      ++report.hits;
  }
  report.frequency = static_cast<double>(report.hits) / static_cast<double>(samples);
  double mean = static_cast<double>(samples) * report.bound;
  report.pass = static_cast<double>(report.hits) <= mean + 4.0 * std::sqrt(mean) + 1e-9;
  return report;
}

}  // namespace plancherel
