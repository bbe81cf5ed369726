#pragma once

#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plancherel/measure.hpp"

namespace plancherel {

// The reversible chains on partitions of n:
//   updown(k): k coherent up moves then k down moves (k = 1 is the chain
//              behind the exchangeable pair);
//   downup(k): k down moves then k up moves;
//   kingman:   one up/down sweep on the Kingman lattice (row-multiplicity
//              edge weights), stationary under the cycle-type law.
enum class ChainKind { updown, downup, kingman };

inline std::string to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::updown: return "updown";
    case ChainKind::downup: return "downup";
    case ChainKind::kingman: return "kingman";
  }
  return "?";
}

struct ChainSpec {
  ChainKind kind = ChainKind::updown;
  int n = 1;
  int k = 1;

  void validate() const {
    if (n < 1) throw std::invalid_argument("ChainSpec: n must be >= 1");
    if (k < 1) throw std::invalid_argument("ChainSpec: k must be >= 1");
    if (kind == ChainKind::downup && k > n)
      throw std::invalid_argument("ChainSpec: downup needs k <= n");
  }
};

inline ExactDist stationary_dist(const ChainSpec& spec) {
  return spec.kind == ChainKind::kingman ? cycle_type_dist(spec.n) : plancherel_dist(spec.n);
}

// ---------------------------------------------------------------------------
// Sampling steps. These compose exact single-box moves, so they exercise the
// coherent transition mechanism directly; the closed-form rows are used only
// when building matrices, which gives an independent cross-check.

inline Partition updown_step(const Partition& lambda, SeededStream& rng) {
  if (lambda.n() < 1) throw std::invalid_argument("updown_step: n must be >= 1");
  Partition up = detail::sample_move(up_step_weights(lambda), rng);
  return detail::sample_move(down_step_weights(up), rng);
}

inline Partition downup_step(const Partition& lambda, int k, SeededStream& rng) {
  if (k < 1 || k > lambda.n()) throw std::invalid_argument("downup_step: needs 1 <= k <= n");
  Partition cur = lambda;
  for (int i = 0; i < k; ++i) cur = detail::sample_move(down_step_weights(cur), rng);
  for (int i = 0; i < k; ++i) cur = detail::sample_move(up_step_weights(cur), rng);
  return cur;
}

// Kingman moves: add a box to a row of length r with chance r m_r / (n+1)
// (or open a new row with chance 1/(n+1)); remove from a row of length s
// with chance s m_s / |shape|.
inline std::vector<std::pair<Partition, Rational>> kingman_up_weights(const Partition& lambda) {
  int n = lambda.n();
  std::vector<std::pair<Partition, Rational>> out;
  Rational total(0);
  for (int i = 0; i < lambda.rows(); ++i) {
    int r = lambda.parts()[i];
    if (i > 0 && lambda.parts()[i - 1] == r) continue;  // first occurrence only
    std::vector<int> parts = lambda.parts();
    ++parts[i];
    Rational w(Int(r) * lambda.multiplicity(r), Int(n + 1));
    total += w;
    out.emplace_back(Partition(std::move(parts)), std::move(w));
  }
  std::vector<int> parts = lambda.parts();
  parts.push_back(1);
  Rational w(Int(1), Int(n + 1));
  total += w;
  out.emplace_back(Partition(std::move(parts)), std::move(w));
  if (total != Rational(1))
    throw InvariantViolation("kingman_up_weights: probabilities do not sum to 1");
  return out;
}

inline std::vector<std::pair<Partition, Rational>> kingman_down_weights(const Partition& lambda) {
  int m = lambda.n();
  if (m < 1) throw std::invalid_argument("kingman_down_weights: empty partition");
  std::vector<std::pair<Partition, Rational>> out;
  Rational total(0);
  for (int i = lambda.rows() - 1; i >= 0; --i) {
    int s = lambda.parts()[i];
    if (i < lambda.rows() - 1 && lambda.parts()[i + 1] == s) continue;  // last occurrence only
    std::vector<int> parts = lambda.parts();
    if (--parts[i] == 0) parts.pop_back();
    Rational w(Int(s) * lambda.multiplicity(s), Int(m));
    total += w;
    out.emplace_back(Partition(std::move(parts)), std::move(w));
  }
  if (total != Rational(1))
    throw InvariantViolation("kingman_down_weights: probabilities do not sum to 1");
  return out;
}

inline Partition kingman_step(const Partition& lambda, SeededStream& rng) {
  if (lambda.n() < 1) throw std::invalid_argument("kingman_step: n must be >= 1");
  Partition up = detail::sample_move(kingman_up_weights(lambda), rng);
  return detail::sample_move(kingman_down_weights(up), rng);
}

inline Partition chain_step(const ChainSpec& spec, const Partition& lambda, SeededStream& rng) {
  spec.validate();
  switch (spec.kind) {
    case ChainKind::updown: {
      Partition cur = lambda;
      for (int i = 0; i < spec.k; ++i) cur = detail::sample_move(up_step_weights(cur), rng);
      for (int i = 0; i < spec.k; ++i) cur = detail::sample_move(down_step_weights(cur), rng);
      return cur;
    }
    case ChainKind::downup:
      return downup_step(lambda, spec.k, rng);
    case ChainKind::kingman:
      return kingman_step(lambda, rng);
  }
  throw std::logic_error("chain_step: unreachable");
}

// ---------------------------------------------------------------------------
// Exact transition matrices.

struct TransitionMatrix {
  ChainSpec spec;
  PartitionIndex index;
  RatMatrix rows;  // rows(i, j) = P(index.at(i) -> index.at(j))

  const Rational& entry(const Partition& from, const Partition& to) const {
    return rows(index.index_of(from), index.index_of(to));
  }
};

namespace detail {

inline void check_stochastic_reversible(TransitionMatrix& tm) {
  const RatVector& pi = stationary_dist(tm.spec).probs;
  int size = tm.index.size();
  for (int i = 0; i < size; ++i) {
    Rational row_sum(0);
    for (int j = 0; j < size; ++j) {
      if (tm.rows(i, j).sign() < 0)
        throw InvariantViolation("transition_matrix: negative entry");
      row_sum += tm.rows(i, j);
    }
    if (row_sum != Rational(1)) throw InvariantViolation("transition_matrix: row sum != 1");
  }
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (pi(i) * tm.rows(i, j) != pi(j) * tm.rows(j, i))
        throw InvariantViolation("transition_matrix: reversibility fails at (" +
                                 tm.index.at(i).to_string() + "," + tm.index.at(j).to_string() +
                                 ")");
}

}  // namespace detail

// Exact rational matrix of the chain, with unit row sums and reversibility
// with respect to the stationary law asserted at build time.
//
// updown(k):  J(l,m) = dim(m) sum_{|tau|=n+k} pc(l,tau) pc(m,tau) / ((n+1)..(n+k) dim(l))
// downup(k):  J(l,m) = dim(m) sum_{|tau|=n-k} pc(tau,l) pc(tau,m) / (n(n-1)..(n-k+1) dim(l))
// kingman:    composition of the two exact stage distributions.
inline TransitionMatrix transition_matrix(const ChainSpec& spec) {
  spec.validate();
  if (spec.n > exact_cap())
    throw ResourceLimit("transition_matrix: n exceeds the exact enumeration cap");
  PartitionIndex index(spec.n);
  if (index.size() > 3000)
    throw ResourceLimit("transition_matrix: p(n) too large for a dense exact matrix");
  RatMatrix rows = RatMatrix::Constant(index.size(), index.size(), Rational(0));

  if (spec.kind == ChainKind::kingman) {
    for (int i = 0; i < index.size(); ++i)
      for (const auto& [up, w_up] : kingman_up_weights(index.at(i)))
        for (const auto& [down, w_down] : kingman_down_weights(up))
          rows(i, index.index_of(down)) += w_up * w_down;
  } else {
    bool up_first = spec.kind == ChainKind::updown;
    int mid_n = up_first ? spec.n + spec.k : spec.n - spec.k;
    Int denom_scale = up_first ? rising_factorial(spec.n, spec.k)
                               : falling_factorial(spec.n, spec.k);
    std::vector<Partition> mid = enumerate_partitions(mid_n);
    std::vector<Int> dims(index.size());
    for (int i = 0; i < index.size(); ++i) dims[i] = dimension(index.at(i));
    for (int i = 0; i < index.size(); ++i) {
      for (int j = 0; j < index.size(); ++j) {
        Int sum = 0;
        for (const Partition& tau : mid)
          sum += up_first ? path_count(index.at(i), tau) * path_count(index.at(j), tau)
                          : path_count(tau, index.at(i)) * path_count(tau, index.at(j));
        if (sum != 0) rows(i, j) = Rational(dims[j] * sum, denom_scale * dims[i]);
      }
    }
  }

  TransitionMatrix tm{spec, std::move(index), std::move(rows)};
  detail::check_stochastic_reversible(tm);
  return tm;
}

// ---------------------------------------------------------------------------
// Spectral certificate: the chain diagonalizes in the character-ratio basis
// psi_C(lambda) = |C|^{1/2} chi^lambda(C)/dim(lambda). The |C|^{1/2} factor
// is kept symbolic (the rational part and the class size are stored side by
// side) so the eigen-identities and orthonormality are checked in exact
// rational arithmetic.

struct SpectralCertificate {
  struct Entry {
    Partition class_type;
    Int class_size;
    Rational eigenvalue;
    RatVector ratio;  // chi^lambda(C)/dim(lambda) per partition; psi = sqrt(|C|) * ratio
  };

  ChainSpec spec;
  PartitionIndex index;
  std::vector<Entry> entries;
  bool valid = true;
  std::vector<std::string> failures;
};

inline Rational chain_eigenvalue(const ChainSpec& spec, const CycleType& c) {
  Int n1 = c.fixed_points();
  return spec.kind == ChainKind::updown
             ? Rational(rising_factorial(n1, spec.k), rising_factorial(spec.n, spec.k))
             : Rational(falling_factorial(n1, spec.k), falling_factorial(spec.n, spec.k));
}

inline SpectralCertificate spectral_certificate(const ChainSpec& spec) {
  spec.validate();
  if (spec.kind == ChainKind::kingman)
    throw std::invalid_argument("spectral_certificate: no closed-form spectrum for kingman");
  TransitionMatrix tm = transition_matrix(spec);
  const RatVector& pi = stationary_dist(spec).probs;
  int size = tm.index.size();

  SpectralCertificate cert{spec, tm.index, {}, true, {}};
  std::vector<Int> dims(size);
  for (int i = 0; i < size; ++i) dims[i] = dimension(tm.index.at(i));

  for (const CycleType& c : class_data(spec.n)) {
    SpectralCertificate::Entry entry;
    entry.class_type = c.cycles();
    entry.class_size = c.class_size();
    entry.eigenvalue = chain_eigenvalue(spec, c);
    entry.ratio = RatVector(size);
    for (int i = 0; i < size; ++i)
      entry.ratio(i) = Rational(character(tm.index.at(i), c), dims[i]);
    if (entry.eigenvalue < Rational(-1) || entry.eigenvalue > Rational(1)) {
      cert.valid = false;
      cert.failures.push_back("eigenvalue outside [-1,1] for class " +
                              entry.class_type.to_string());
    }
    for (int i = 0; i < size; ++i) {
      Rational lhs(0);
      for (int j = 0; j < size; ++j) lhs += tm.rows(i, j) * entry.ratio(j);
      if (lhs != entry.eigenvalue * entry.ratio(i)) {
        cert.valid = false;
        cert.failures.push_back("eigen-identity fails for class " + entry.class_type.to_string() +
                                " at " + tm.index.at(i).to_string());
        break;
      }
    }
    if (c.is_identity() &&
        (entry.eigenvalue != Rational(1) || entry.ratio(0) != Rational(1))) {
      cert.valid = false;
      cert.failures.push_back("identity class does not give eigenvalue 1 with psi = 1");
    }
    cert.entries.push_back(std::move(entry));
  }

  // Orthonormality under pi: sum_l pi psi_C psi_C' = [C = C'].
  for (std::size_t a = 0; a < cert.entries.size(); ++a) {
    for (std::size_t b = a; b < cert.entries.size(); ++b) {
      Rational inner(0);
      for (int i = 0; i < size; ++i)
        inner += pi(i) * cert.entries[a].ratio(i) * cert.entries[b].ratio(i);
      Rational normalized = a == b ? Rational(cert.entries[a].class_size) * inner : inner;
      Rational expected = a == b ? Rational(1) : Rational(0);
      if (normalized != expected) {
        cert.valid = false;
        cert.failures.push_back("orthonormality fails for classes " +
                                cert.entries[a].class_type.to_string() + ", " +
                                cert.entries[b].class_type.to_string());
      }
    }
  }

  // The eigenfunctions must be pairwise distinct (they form a basis, one per
  // class, as many as p(n)).
  std::set<std::vector<std::string>> distinct;
  for (const auto& entry : cert.entries) {
    std::vector<std::string> key;
    for (int i = 0; i < size; ++i) key.push_back(to_string(entry.ratio(i)));
    distinct.insert(std::move(key));
  }
  if (static_cast<int>(distinct.size()) != size) {
    cert.valid = false;
    cert.failures.push_back("eigenfunctions are not pairwise distinct");
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Distances. TV and the chi-square-type L2 norm, exact; the Jensen
// inequality 2 TV <= L2 is asserted whenever the reference has full support.

inline Rational tv_exact(const RatVector& p, const RatVector& q) {
  if (p.size() != q.size()) throw std::invalid_argument("tv_exact: size mismatch");
  Rational sum(0);
  for (int i = 0; i < p.size(); ++i) sum += abs(p(i) - q(i));
  return sum / Rational(2);
}

inline Rational l2_sq_exact(const RatVector& p, const RatVector& pi) {
  if (p.size() != pi.size()) throw std::invalid_argument("l2_sq_exact: size mismatch");
  Rational sum(0);
  for (int i = 0; i < p.size(); ++i) {
    if (pi(i).is_zero()) throw std::invalid_argument("l2_sq_exact: reference has a zero entry");
    Rational dev = p(i) / pi(i) - Rational(1);
    sum += dev * dev * pi(i);
  }
  return sum;
}

namespace detail {

inline void assert_tv_l2(const RatVector& p, const RatVector& q) {
  for (int i = 0; i < q.size(); ++i)
    if (q(i).is_zero()) return;  // L2 side undefined; nothing to check
  Rational tv = tv_exact(p, q);
  if (Rational(4) * tv * tv > l2_sq_exact(p, q))
    throw InvariantViolation("distance: 2 TV <= L2 violated");
}

}  // namespace detail

inline double tv_distance(const RatVector& p, const RatVector& q) {
  detail::assert_tv_l2(p, q);
  return to_double(tv_exact(p, q));
}

inline double l2_distance(const RatVector& p, const RatVector& pi) {
  detail::assert_tv_l2(p, pi);
  return std::sqrt(to_double(l2_sq_exact(p, pi)));
}

// ---------------------------------------------------------------------------
// Mixing of J(k)^r from the one-row start state.

struct MixingReport {
  struct Row {
    int r = 0;
    double tv = 0;
    double l2 = 0;
    double bound = 0;         // sqrt(n!) beta^r
    bool two_tv_le_l2 = true; // 4 TV^2 <= L2^2, exact
    bool l2_le_bound = true;  // L2^2 <= n! beta^{2r}, exact
    bool lemma_bound_ok = true;  // L2^2 <= (1-pi(x))/pi(x) beta^{2r}, exact
  };
  struct Threshold {
    double c = 0;
    double r_star = 0;   // (n log n + 2c) / (2 log(1/beta))
    int r_checked = 0;   // first integer beyond r_star
    double tv_at_r = 0;
    double guarantee = 0;  // (2 pi)^{1/4}/2 e^{-c}
    bool ok = true;
  };

  ChainSpec spec;
  Rational beta;
  std::vector<Row> rows;
  std::vector<Threshold> thresholds;
  int first_r_below_001 = -1;
  bool tv_monotone = true;
  bool pass = true;
};

// Spectral gap constant of Theorem-style bounds: the largest non-identity
// eigenvalue. For both chain directions no class has n-1 fixed points, so it
// is attained at n_1 = n-2.
inline Rational chain_beta(const ChainSpec& spec) {
  Rational best(-1);
  for (const CycleType& c : class_data(spec.n)) {
    if (c.is_identity()) continue;
    Rational ev = abs(chain_eigenvalue(spec, c));
    if (ev > best) best = ev;
  }
  return best;
}

inline MixingReport mixing_report(int n, int k, int r_max,
                                  ChainKind kind = ChainKind::downup,
                                  const std::vector<double>& c_values = {1.0, 2.0, 4.0}) {
  if (n < 2) throw std::invalid_argument("mixing_report: needs n >= 2");
  ChainSpec spec{kind, n, k};
  TransitionMatrix tm = transition_matrix(spec);
  const RatVector& pi = stationary_dist(spec).probs;
  int start = tm.index.index_of(Partition(std::vector<int>{n}));

  MixingReport report;
  report.spec = spec;
  report.beta = chain_beta(spec);
  if (kind == ChainKind::downup &&
      report.beta != Rational(Int(n - k) * (n - k - 1), Int(n) * (n - 1)))
    throw InvariantViolation("mixing_report: beta does not match the closed form");

  Int fact = factorial(n);
  Rational pix = pi(start);
  Rational lemma_scale = (Rational(1) - pix) / pix;

  RatRowVector row = RatRowVector::Constant(tm.index.size(), Rational(0));
  row(start) = Rational(1);
  Rational prev_tv(1);
  for (int r = 0; r <= r_max; ++r) {
    if (r > 0) row = (row * tm.rows).eval();
    Rational tv = tv_exact(row.transpose(), pi);
    Rational l2sq = l2_sq_exact(row.transpose(), pi);
    Rational beta_2r = rat_pow(report.beta, 2 * r);
    MixingReport::Row out;
    out.r = r;
    out.tv = to_double(tv);
    out.l2 = std::sqrt(to_double(l2sq));
    out.bound = std::sqrt(to_double(Rational(fact) * beta_2r));
    out.two_tv_le_l2 = Rational(4) * tv * tv <= l2sq;
    out.l2_le_bound = l2sq <= Rational(fact) * beta_2r;
    out.lemma_bound_ok = l2sq <= lemma_scale * beta_2r;
    if (!(out.two_tv_le_l2 && out.l2_le_bound && out.lemma_bound_ok)) report.pass = false;
    if (r > 0 && tv > prev_tv) {
      report.tv_monotone = false;
      report.pass = false;
    }
    prev_tv = tv;
    if (report.first_r_below_001 < 0 && tv < Rational(1, 100)) report.first_r_below_001 = r;
    report.rows.push_back(out);
  }

  double log_inv_beta = -std::log(to_double(report.beta));
  for (double c : c_values) {
    MixingReport::Threshold th;
    th.c = c;
    th.r_star = (n * std::log(static_cast<double>(n)) + 2.0 * c) / (2.0 * log_inv_beta);
    th.r_checked = static_cast<int>(std::floor(th.r_star)) + 1;
    th.guarantee = std::pow(2.0 * M_PI, 0.25) / 2.0 * std::exp(-c);
    if (th.r_checked <= r_max) {
      th.tv_at_r = report.rows[th.r_checked].tv;
      th.ok = th.tv_at_r <= th.guarantee;
    } else {
      th.tv_at_r = -1;
      th.ok = true;  // beyond the computed horizon; monotonicity covers it
    }
    if (!th.ok) report.pass = false;
    report.thresholds.push_back(th);
  }
  return report;
}

}  // namespace plancherel
