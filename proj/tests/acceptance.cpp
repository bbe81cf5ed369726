// Acceptance suite: each criterion prints one PASS/FAIL line and the exit
// code is the number of failed criteria. Runtime limits are part of the
// criteria and are asserted.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "plancherel/cli.hpp"
#include "plancherel/verify.hpp"

using namespace plancherel;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::vector<std::string> failures;
  double seconds = 0;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

void run_criterion(Criterion& c, double time_limit_s, void (*body)(Criterion&)) {
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  c.require(c.seconds < time_limit_s,
            "runtime " + std::to_string(c.seconds) + "s exceeds " +
                std::to_string(time_limit_s) + "s");
}

// --------------------------------------------------------------------------

void criterion1(Criterion& c) {
  // Plancherel normalization, growth law, exhaustive RSK.
  for (int n = 0; n <= 8; ++n) {
    Int sum_sq = 0;
    for (const Partition& lambda : enumerate_partitions(n)) {
      Int d = dimension(lambda);
      sum_sq += d * d;
    }
    c.require(sum_sq == factorial(n), "sum dim^2 != n! at n=" + std::to_string(n));

    ExactDist growth = growth_law(n);
    ExactDist exact = plancherel_dist(n);
    for (int i = 0; i < exact.index.size(); ++i)
      c.require(growth.probs(i) == exact.probs(i),
                "growth law != plancherel at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 6; ++n) {
    ExactDist rsk = rsk_exhaustive_law(n);
    ExactDist exact = plancherel_dist(n);
    for (int i = 0; i < exact.index.size(); ++i)
      c.require(rsk.probs(i) == exact.probs(i),
                "RSK exhaustive law != plancherel at n=" + std::to_string(n));
  }

  // Character identities: orthogonality (n<=8), brute-force solution counts
  // (n<=5), branching identities (n<=7, k<=2).
  for (int n = 1; n <= 8; ++n) {
    CheckResult r = verify_orthogonality(n);
    c.require(r.pass, r.name + ": " + r.detail);
  }
  for (const CheckResult& r : verify::characters_suite(5))
    c.require(r.pass, r.name + ": " + r.detail);
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= 2; ++k) {
      CheckResult r = verify_branching_identity(n, k);
      c.require(r.pass, r.name + ": " + r.detail);
    }

  // Reversibility and row sums for every chain spec (asserted inside the
  // builder), plus Kingman stationarity against the cycle-type law.
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= 3; ++k) {
      try {
        transition_matrix({ChainKind::updown, n, k});
        if (k <= n) transition_matrix({ChainKind::downup, n, k});
      } catch (const std::exception& e) {
        c.require(false, std::string("transition matrix failed: ") + e.what());
      }
    }
  }
  for (int n = 1; n <= 7; ++n) {
    TransitionMatrix king = transition_matrix({ChainKind::kingman, n, 1});
    ExactDist pi = cycle_type_dist(n);
    for (int j = 0; j < king.index.size(); ++j) {
      Rational mass(0);
      for (int i = 0; i < king.index.size(); ++i) mass += pi.probs(i) * king.rows(i, j);
      c.require(mass == pi.probs(j), "kingman stationarity fails at n=" + std::to_string(n));
    }
  }

  // Conditional moment identities, the closed-form expectation, and the
  // mean/variance corollaries, all exact for n <= 8.
  for (int n = 1; n <= 8; ++n) {
    try {
      for (const Partition& lambda : enumerate_partitions(n)) {
        conditional_first_moment(lambda);
        conditional_second_moment(lambda);
      }
      mean_variance_check(n);
      if (n >= 2) term1_exact(n);
    } catch (const std::exception& e) {
      c.require(false, std::string("stein identity failed: ") + e.what());
    }
  }
  c.require(term1_exact(2) == Rational(1, 4), "term1(2) != 1/4");
  c.require(term1_exact(3) == Rational(1, 6), "term1(3) != 1/6");

  // Spectral certificates, both directions, k <= 2, n <= 8.
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= 2; ++k)
      for (ChainKind kind : {ChainKind::updown, ChainKind::downup}) {
        SpectralCertificate cert = spectral_certificate({kind, n, k});
        c.require(cert.valid, "spectral certificate invalid for " + to_string(kind) + " n=" +
                                  std::to_string(n) + " k=" + std::to_string(k) +
                                  (cert.failures.empty() ? "" : ": " + cert.failures.front()));
      }
}

void criterion2(Criterion& c) {
  MixingReport report = mixing_report(6, 1, 40);
  c.require(report.beta == Rational(2, 3), "beta != (n-k)(n-k-1)/(n(n-1))");
  for (const auto& row : report.rows) {
    c.require(row.two_tv_le_l2, "2TV <= L2 fails at r=" + std::to_string(row.r));
    c.require(row.l2_le_bound, "L2 <= sqrt(n!) beta^r fails at r=" + std::to_string(row.r));
  }
  for (const auto& th : report.thresholds)
    c.require(th.ok, "threshold guarantee fails at c=" + std::to_string(th.c));
  c.require(report.thresholds.size() == 3, "expected thresholds at c in {1,2,4}");
}

void criterion3(Criterion& c) {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int r = 1; r <= 20; ++r) {
        // Integrality and dimension conservation are asserted inside.
        DeviationReport report = deviation_report(n, k, r);
        c.require(report.bound_ok, "deviation > n! beta^{2r} at n=" + std::to_string(n) +
                                       " k=" + std::to_string(k) + " r=" + std::to_string(r));
      }
    }
    for (int r = 0; r <= 20; ++r) {
      c.require(tensor_multiplicities(n, 1, r).mult ==
                    tensor_multiplicities_by_recursion(n, 1, r).mult,
                "cross-oracle mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
}

void criterion4(Criterion& c) {
  SteinBoundReport grid = stein_bound_constant_check(2, 1e6);
  c.require(grid.pass, "closing inequality fails on the grid");
  c.require(grid.aux_pass, "exp(-2e sqrt(n)) <= n^{-3/2} fails on the grid");

  const long long samples = 200000;
  std::vector<int> ns{16, 64, 256};
  std::vector<double> distances;
  for (int n : ns) {
    CltReport report = clt_experiment(n, samples, SeededStream(1));
    c.require(report.bound_ok, "kolmogorov > 40.1 n^{-1/4} at n=" + std::to_string(n));
    distances.push_back(report.kolmogorov);
    std::printf("    clt n=%d: kolmogorov=%.4f bound=%.4f mean=%.4f var=%.4f\n", n,
                report.kolmogorov, report.bound, report.mean, report.variance);
  }
  // Non-increasing within twice the binomial noise of an empirical CDF.
  double noise = 0.5 / std::sqrt(static_cast<double>(samples));
  for (std::size_t i = 1; i < distances.size(); ++i)
    c.require(distances[i] <= distances[i - 1] + 2 * noise,
              "distances increase from n=" + std::to_string(ns[i - 1]) + " to n=" +
                  std::to_string(ns[i]));
  c.require(distances.back() < 0.05, "kolmogorov at n=256 is not below 0.05");
}

void criterion5(Criterion& c) {
  for (int n : {16, 64}) {
    Term2Report report = term2_empirical(n, 100000, SeededStream(2));
    c.require(report.pathwise_violations == 0,
              "pathwise violations at n=" + std::to_string(n));
    c.require(report.pass, "empirical third moment exceeds the bound at n=" + std::to_string(n));
    std::printf("    term2 n=%d: empirical=%.5f bound=%.5f max|W*-W|=%.4f\n", n,
                report.empirical_third_moment, report.bound, report.max_abs_diff);
  }
}

void criterion6(Criterion& c) {
  namespace fs = std::filesystem;
  auto tmp = fs::temp_directory_path();
  auto run_cli = [](std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"plancherel"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli::run(static_cast<int>(argv.size()), argv.data());
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  auto csv_a = tmp / "acceptance_sample_a.csv";
  auto csv_b = tmp / "acceptance_sample_b.csv";
  c.require(run_cli({"sample", "--method", "rsk", "--n", "24", "--count", "500", "--seed", "9",
                     "--out", csv_a.c_str()}) == 0,
            "sample command failed");
  c.require(run_cli({"sample", "--method", "rsk", "--n", "24", "--count", "500", "--seed", "9",
                     "--out", csv_b.c_str()}) == 0,
            "sample command failed");
  c.require(slurp(csv_a) == slurp(csv_b), "sample CSV is not byte-identical across runs");

  auto clt_a = tmp / "acceptance_clt_a.json";
  auto clt_b = tmp / "acceptance_clt_b.json";
  c.require(run_cli({"clt", "--n", "16", "--count", "5000", "--seed", "4", "--json",
                     clt_a.c_str()}) == 0,
            "clt command failed");
  c.require(run_cli({"clt", "--n", "16", "--count", "5000", "--seed", "4", "--json",
                     clt_b.c_str()}) == 0,
            "clt command failed");
  Json a = Json::parse(slurp(clt_a));
  Json b = Json::parse(slurp(clt_b));
  a.erase("timestamp");
  b.erase("timestamp");
  c.require(a.dump() == b.dump(), "clt payload differs across identical seeded runs");

  auto tensor_a = tmp / "acceptance_tensor_a.json";
  auto tensor_b = tmp / "acceptance_tensor_b.json";
  run_cli({"tensor", "--n", "6", "--k", "1", "--r", "8", "--json", tensor_a.c_str()});
  run_cli({"tensor", "--n", "6", "--k", "1", "--r", "8", "--json", tensor_b.c_str()});
  Json ta = Json::parse(slurp(tensor_a));
  Json tb = Json::parse(slurp(tensor_b));
  ta.erase("timestamp");
  tb.erase("timestamp");
  c.require(ta.dump() == tb.dump(), "tensor payload differs across identical runs");
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    double limit;
    void (*body)(Criterion&);
  };
  std::vector<Entry> entries{
      {"1: exact identity suite (n <= 8, zero tolerance)", 120, criterion1},
      {"2: mixing bounds, n=6, k=1, r=0..40", 10, criterion2},
      {"3: tensor deviation bounds, n=3..8, k<=2, r<=20", 60, criterion3},
      {"4: CLT bound, grid inequality, seeded Monte Carlo", 300, criterion4},
      {"5: pathwise |W*-W| bound on sampled transitions", 120, criterion5},
      {"6: determinism of seeded command payloads", 60, criterion6},
  };

  int failures = 0;
  for (auto& entry : entries) {
    Criterion criterion;
    criterion.name = entry.name;
    run_criterion(criterion, entry.limit, entry.body);
    std::printf("criterion %s: %s (%.1fs)\n", entry.name, criterion.pass ? "PASS" : "FAIL",
                criterion.seconds);
    for (const std::string& failure : criterion.failures)
      std::printf("    failure: %s\n", failure.c_str());
    if (!criterion.pass) ++failures;
  }
  return failures;
}
