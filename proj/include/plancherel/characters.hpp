#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "plancherel/partition.hpp"

namespace plancherel {

// Partition of n read as a conjugacy-class label of S_n (the parts are the
// cycle lengths).
class CycleType {
 public:
  explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

  const Partition& cycles() const { return cycles_; }
  int n() const { return cycles_.n(); }
  int cycle_count() const { return cycles_.rows(); }
  int fixed_points() const { return cycles_.multiplicity(1); }

  // prod_j j^{m_j} m_j!  where m_j is the number of cycles of length j.
  Int centralizer_order() const {
    Int z = 1;
    int run = 0;
    for (int i = 0; i < cycles_.rows(); ++i) {
      int j = cycles_.parts()[i];
      run = (i > 0 && cycles_.parts()[i - 1] == j) ? run + 1 : 1;
      z *= Int(j) * run;  // folds in j^{m_j} and m_j! one part at a time
    }
    return z;
  }

  Int class_size() const {
    Int fact = factorial(n());
    Int z = centralizer_order();
    if (fact % z != 0) throw InternalError("CycleType: centralizer does not divide n!");
    return fact / z;
  }

  bool is_identity() const { return fixed_points() == n(); }
  // Sign of any permutation in the class: (-1)^(n - #cycles).
  int sign() const { return (n() - cycle_count()) % 2 == 0 ? 1 : -1; }

  friend bool operator==(const CycleType& a, const CycleType& b) {
    return a.cycles_ == b.cycles_;
  }

 private:
  Partition cycles_;
};

// Transposition class (2,1,...,1) of S_n.
inline CycleType transposition_class(int n) {
  if (n < 2) throw std::invalid_argument("transposition_class: n must be >= 2");
  std::vector<int> parts{2};
  parts.insert(parts.end(), n - 2, 1);
  return CycleType(Partition(std::move(parts)));
}

inline CycleType identity_class(int n) {
  return CycleType(Partition(std::vector<int>(n, 1)));
}

// One CycleType per partition of n, in canonical order.
inline std::vector<CycleType> class_data(int n) {
  if (n < 1) throw std::invalid_argument("class_data: n must be >= 1");
  std::vector<CycleType> classes;
  for (const Partition& p : enumerate_partitions(n)) classes.emplace_back(p);
  return classes;
}

namespace detail {

// Beta-set of lambda with `slots` rows: {lambda_i + slots - i}, i = 1..slots.
// Removing a border strip of length r corresponds to moving one bead from b
// to b - r (valid when b - r is unoccupied), and the strip height is the
// number of beads strictly between the two positions.
inline std::vector<int> beta_set(const Partition& lambda, int slots) {
  std::vector<int> beta(slots);
  for (int i = 0; i < slots; ++i) beta[i] = lambda.part(i) + (slots - 1 - i);
  return beta;
}

inline Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  int slots = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < slots; ++i) {
    int part = beta[i] - (slots - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

inline Int character_rec(const Partition& lambda, std::vector<int> cycles) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> cache;
  static std::mutex cache_mutex;

  if (cycles.empty()) return 1;  // lambda is empty too (sizes always match)

  std::sort(cycles.rbegin(), cycles.rend());
  auto key = std::make_pair(lambda.parts(), cycles);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  // Peel the largest cycle as a border strip in every possible way.
  int r = cycles.front();
  std::vector<int> rest(cycles.begin() + 1, cycles.end());
  std::vector<int> beta = beta_set(lambda, lambda.rows());
  Int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<int> moved = beta;
    moved[i] = target;
    Int term = character_rec(partition_from_beta(std::move(moved)), rest);
    total += (between % 2 == 0) ? term : -term;
  }

  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), total);
  }
  return total;
}

}  // namespace detail

// Exact irreducible character value chi^lambda(rho) by the border-strip
// (Murnaghan-Nakayama) recursion. Values are integers; the identity class
// gives dimension(lambda).
inline Int character(const Partition& lambda, const CycleType& rho) {
  if (lambda.n() != rho.n())
    throw std::invalid_argument("character: |lambda| != |rho|");
  return detail::character_rec(lambda, rho.cycles().parts());
}

// Frobenius' closed form for the transposition character ratio:
// chi^lambda(12)/dim(lambda) = binom(n,2)^-1 sum_i [binom(lambda_i,2) - binom(lambda_i',2)].
inline Rational frobenius_ratio(const Partition& lambda) {
  int n = lambda.n();
  if (n < 2) throw std::invalid_argument("frobenius_ratio: needs n >= 2");
  Partition conj = conjugate(lambda);
  Int num = 0;
  for (int p : lambda.parts()) num += binomial2(p);
  for (int p : conj.parts()) num -= binomial2(p);
  return Rational(num, binomial2(n));
}

// chi evaluated on the class of an m-cycle padded with fixed points,
// with the paper's small-n conventions (value 0 when the padded type
// does not fit, i.e. n < m).
inline Rational padded_cycle_ratio(const Partition& lambda, int m) {
  int n = lambda.n();
  if (n < m) return Rational(0);
  std::vector<int> parts{m};
  parts.insert(parts.end(), n - m, 1);
  return Rational(character(lambda, CycleType(Partition(std::move(parts)))), dimension(lambda));
}

// Same for the class (2,2,1,...,1); 0 when n < 4.
inline Rational double_transposition_ratio(const Partition& lambda) {
  int n = lambda.n();
  if (n < 4) return Rational(0);
  std::vector<int> parts{2, 2};
  parts.insert(parts.end(), n - 4, 1);
  return Rational(character(lambda, CycleType(Partition(std::move(parts)))), dimension(lambda));
}

// Restriction of the induction (direction up), or induction of the
// restriction (direction down), of chi^lambda by k levels, evaluated at a
// class: chi(g) times a rising/falling factorial in the fixed-point count.
enum class Direction { up, down };

inline Int induced_restricted_character(const Partition& lambda, int k, const CycleType& g,
                                        Direction direction) {
  if (k < 1) throw std::invalid_argument("induced_restricted_character: k must be >= 1");
  if (direction == Direction::down && k > lambda.n())
    throw std::invalid_argument("induced_restricted_character: k exceeds n for direction down");
  Int chi = character(lambda, g);
  Int n1 = g.fixed_points();
  return direction == Direction::up ? chi * rising_factorial(n1, k)
                                    : chi * falling_factorial(n1, k);
}

// Number of m-tuples (g_1,...,g_m) with g_j in the given classes whose
// product lies in the target class, via the column-orthogonality expansion.
// The expansion is rational a priori; integrality is asserted and doubles as
// a consistency check of the character engine.
inline Int count_solutions(int n, const std::vector<CycleType>& classes, const CycleType& target) {
  for (const CycleType& c : classes)
    if (c.n() != n) throw std::invalid_argument("count_solutions: class of wrong symmetric group");
  if (target.n() != n) throw std::invalid_argument("count_solutions: target of wrong size");

  int m = static_cast<int>(classes.size());
  Rational sum(0);
  for (const Partition& lambda : enumerate_partitions(n)) {
    Int prod = character(lambda, target);
    for (const CycleType& c : classes) prod *= character(lambda, c);
    sum += Rational(prod, int_pow(dimension(lambda), m - 1));
  }
  Int class_product = 1;
  for (const CycleType& c : classes) class_product *= c.class_size();
  Rational value = Rational(class_product, factorial(n)) * sum;
  if (!value.is_integer() || value.sign() < 0)
    throw InternalError("count_solutions: expansion is not a non-negative integer");
  return value.num();
}

// ---------------------------------------------------------------------------
// Executable identities (used by the verify CLI and the test suites).

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing
};

// First orthogonality relation across all class pairs:
// sum_chi chi(g) chi(h) = n!/|C(g)| [g ~ h].
inline CheckResult verify_orthogonality(int n) {
  CheckResult result{"characters/orthogonality(n=" + std::to_string(n) + ")", true, ""};
  auto classes = class_data(n);
  auto lambdas = enumerate_partitions(n);
  std::vector<std::vector<Int>> table(lambdas.size(), std::vector<Int>(classes.size()));
  for (std::size_t l = 0; l < lambdas.size(); ++l)
    for (std::size_t c = 0; c < classes.size(); ++c)
      table[l][c] = character(lambdas[l], classes[c]);
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      Int sum = 0;
      for (std::size_t l = 0; l < lambdas.size(); ++l) sum += table[l][a] * table[l][b];
      Int expected = (a == b) ? factorial(n) / classes[a].class_size() : Int(0);
      if (sum != expected) {
        result.pass = false;
        result.detail = "failed at classes " + classes[a].cycles().to_string() + ", " +
                        classes[b].cycles().to_string();
        return result;
      }
    }
  }
  return result;
}

// Both parts of the induction/restriction counting identity: path-count sums
// over level n+k (resp. n-k) against the character-side class sums.
inline CheckResult verify_branching_identity(int n, int k) {
  CheckResult result{
      "characters/branching_identity(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
      true, ""};
  auto classes = class_data(n);
  auto lambdas = enumerate_partitions(n);
  auto upper = enumerate_partitions(n + k);
  auto lower = enumerate_partitions(std::max(0, n - k));
  Int fact = factorial(n);

  for (const Partition& lambda : lambdas) {
    for (const Partition& mu : lambdas) {
      Int lattice_up = 0;
      for (const Partition& tau : upper) lattice_up += path_count(lambda, tau) * path_count(mu, tau);
      Int lattice_down = 0;
      if (n - k >= 0)
        for (const Partition& tau : lower)
          lattice_down += path_count(tau, lambda) * path_count(tau, mu);

      Int char_up = 0, char_down = 0;
      for (const CycleType& c : classes) {
        Int common = c.class_size() * character(mu, c) * character(lambda, c);
        char_up += common * rising_factorial(c.fixed_points(), k);
        char_down += common * falling_factorial(c.fixed_points(), k);
      }
      if (char_up % fact != 0 || char_down % fact != 0 || lattice_up != char_up / fact ||
          lattice_down != char_down / fact) {
        result.pass = false;
        result.detail = "failed at " + lambda.to_string() + ", " + mu.to_string();
        return result;
      }
    }
  }
  return result;
}

// Special case k=1 against a direct corner count: |parents(mu,lambda)| is the
// number of partitions covering both.
inline CheckResult verify_parents_identity(int n) {
  CheckResult result{"characters/parents_identity(n=" + std::to_string(n) + ")", true, ""};
  auto classes = class_data(n);
  auto lambdas = enumerate_partitions(n);
  Int fact = factorial(n);
  for (const Partition& lambda : lambdas) {
    auto lambda_up = up_neighbors(lambda);
    for (const Partition& mu : lambdas) {
      Int parents = 0;
      for (const Partition& tau : lambda_up)
        if (tau.contains(mu)) ++parents;
      Int char_sum = 0;
      for (const CycleType& c : classes)
        char_sum +=
            c.class_size() * character(mu, c) * character(lambda, c) * (c.fixed_points() + 1);
      if (char_sum % fact != 0 || parents != char_sum / fact) {
        result.pass = false;
        result.detail = "failed at " + lambda.to_string() + ", " + mu.to_string();
        return result;
      }
    }
  }
  return result;
}

// chi^{lambda'}(rho) = sign(rho) chi^lambda(rho).
inline CheckResult verify_conjugation_symmetry(int n) {
  CheckResult result{"characters/conjugation_symmetry(n=" + std::to_string(n) + ")", true, ""};
  auto classes = class_data(n);
  for (const Partition& lambda : enumerate_partitions(n)) {
    Partition conj = conjugate(lambda);
    for (const CycleType& c : classes) {
      if (character(conj, c) != c.sign() * character(lambda, c)) {
        result.pass = false;
        result.detail = "failed at " + lambda.to_string() + " on " + c.cycles().to_string();
        return result;
      }
    }
  }
  return result;
}

}  // namespace plancherel
