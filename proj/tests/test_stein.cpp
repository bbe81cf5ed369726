#include <doctest.h>

#include "plancherel/stein.hpp"
#include "plancherel/verify.hpp"

using namespace plancherel;

TEST_SUITE_BEGIN("stein");

TEST_CASE("w statistic") {
  WStat trivial = w_statistic(Partition({6}));
  CHECK(trivial.r == Rational(5));
  CHECK(trivial.value == doctest::Approx(5.0 / std::sqrt(2.0)));

  CHECK(w_statistic(Partition({1})).r == Rational(0));  // n = 1 convention
  CHECK(w_statistic(Partition()).r == Rational(0));
  CHECK(w_statistic(Partition({2, 1})).r == Rational(0));
  CHECK(w_statistic(Partition({1, 1, 1})).r == Rational(-2));
}

TEST_CASE("conditional first moment") {
  // lambda = (2): matrix row gives 2/3 * 1 + 1/3 * (-1) = 1/3 = (1 - 2/3) r.
  CHECK(conditional_first_moment(Partition({2})) == Rational(1, 3));
  CHECK(conditional_first_moment(Partition({2, 1})) == Rational(0));

  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      CHECK_NOTHROW(conditional_first_moment(lambda));
}

TEST_CASE("conditional second moment") {
  CHECK(conditional_second_moment(Partition({2})) == Rational(1, 2));
  CHECK(conditional_second_moment(Partition({1})) == Rational(0));

  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      CHECK_NOTHROW(conditional_second_moment(lambda));
}

TEST_CASE("mean and variance") {
  auto [mean2, var2] = mean_variance_check(2);
  CHECK(mean2 == Rational(0));
  CHECK(var2 == Rational(1, 2));
  auto [mean1, var1] = mean_variance_check(1);
  CHECK(var1 == Rational(0));
  for (int n = 1; n <= 6; ++n) CHECK_NOTHROW(mean_variance_check(n));
}

TEST_CASE("term1 closed form") {
  CHECK(term1_exact(2) == Rational(1, 4));
  CHECK(term1_exact(3) == Rational(1, 6));
  for (int n = 2; n <= 6; ++n) CHECK_NOTHROW(term1_exact(n));
}

TEST_CASE("term2 at n=2 by the two-state chain") {
  // Exact E|W*-W|^3 from the stationary law and matrix row: the pair flips
  // with probability 1/3, and a flip has |W*-W| = sqrt(2).
  const TransitionMatrix& tm = transition_matrix({ChainKind::updown, 2, 1});
  ExactDist pi = plancherel_dist(2);
  double exact = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double diff = std::abs(to_double(w_ratio(tm.index.at(j)) - w_ratio(tm.index.at(i)))) /
                    std::sqrt(2.0);
      exact += to_double(pi.probs(i)) * to_double(tm.rows(i, j)) * diff * diff * diff;
    }
  CHECK(exact == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0));
  CHECK(exact <= term2_bound(2));

  Term2Report report = term2_empirical(2, 20000, SeededStream(31));
  CHECK(report.pathwise_violations == 0);
  CHECK(report.pass);
  CHECK(report.empirical_third_moment == doctest::Approx(exact).epsilon(0.05));
}

TEST_CASE("pathwise bound on sampled transitions") {
  Term2Report report = term2_empirical(16, 5000, SeededStream(17));
  CHECK(report.pathwise_violations == 0);
  CHECK(report.pass);
  CHECK(report.max_abs_diff <= 2.0 * std::sqrt(2.0));
}

TEST_CASE("kolmogorov distance") {
  CHECK_THROWS_AS(kolmogorov_distance({}), std::invalid_argument);
  CHECK(kolmogorov_distance({0.0}) == doctest::Approx(0.5));
  CHECK(kolmogorov_distance({50.0}) == doctest::Approx(1.0));

  // Self-test on true normal draws (Box-Muller over the stream).
  SeededStream rng(99);
  std::vector<double> draws;
  for (int i = 0; i < 100000; ++i) {
    double u1 = 1.0 - rng.next_double();
    double u2 = rng.next_double();
    draws.push_back(std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2));
  }
  std::sort(draws.begin(), draws.end());
  CHECK(kolmogorov_distance(draws) < 0.01);
}

TEST_CASE("clt experiment (reduced size)") {
  CltReport report = clt_experiment(16, 20000, SeededStream(1));
  CHECK(report.bound == doctest::Approx(40.1 / 2.0));
  CHECK(report.bound_ok);
  CHECK(report.kolmogorov < 0.25);
  CHECK(std::abs(report.mean) < 0.05);
  CHECK(std::abs(report.variance - (1.0 - 1.0 / 16.0)) < 0.1);
  CHECK(report.third_abs_moment_diff <= term2_bound(16));
  CHECK_THROWS_AS(clt_experiment(1, 100, SeededStream(1)), std::invalid_argument);
}

TEST_CASE("stein bound constant grid") {
  SteinBoundReport report = stein_bound_constant_check(2, 1e6);
  CHECK(report.pass);
  CHECK(report.aux_pass);
  CHECK(report.max_ratio < 1.0);
  CHECK(report.points > 100);
}

TEST_CASE("exchangeability") {
  for (int n = 2; n <= 6; ++n) {
    CheckResult result = verify_exchangeability(n);
    INFO(result.detail);
    CHECK(result.pass);
  }
}

TEST_SUITE_END();
