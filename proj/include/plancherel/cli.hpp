#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "plancherel/report.hpp"

namespace plancherel::cli {

inline void emit(const Json& payload, const std::string& json_path) {
  std::string text = payload.dump(2);
  if (json_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot open " + json_path);
    out << text << "\n";
  }
}

inline int exit_code_for(const ExperimentReport& report) { return report.pass() ? 0 : 1; }

// sample --method growth|rsk --n N --count K --seed S [--out file.csv]
inline int run_sample(const std::string& method, int n, long long count, std::uint64_t seed,
                      const std::string& out_path) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path);
    os = &file;
  }
  *os << "index,partition,lambda1,lambda1_prime,w\n";
  SeededStream base(seed);
  const double root2 = std::sqrt(2.0);
  for (long long i = 0; i < count; ++i) {
    SeededStream sub = base.substream(static_cast<std::uint64_t>(i));
    Partition shape = method == "growth" ? growth_sample(n, sub) : rsk_sample(n, sub);
    double w = to_double(w_ratio(shape)) / root2;
    char wbuf[40];
    std::snprintf(wbuf, sizeof(wbuf), "%.17g", w);
    *os << i << ",\"" << shape.to_string() << "\"," << shape.first_row() << ","
        << shape.first_col() << "," << wbuf << "\n";
  }
  return 0;
}

inline int run_chain(ChainKind kind, int n, int k, const std::string& matrix_path, bool spectrum,
                     int mix_rmax, const std::string& json_path) {
  ExperimentReport report;
  report.command = "chain";
  report.params["kind"] = to_string(kind);
  report.params["n"] = n;
  report.params["k"] = k;

  ChainSpec spec{kind, n, k};
  TransitionMatrix tm = transition_matrix(spec);  // asserts rows/reversibility
  report.checks.emplace_back("rows_sum_to_one_and_reversible", true);
  report.results["states"] = tm.index.size();
  if (!matrix_path.empty()) {
    std::ofstream out(matrix_path);
    if (!out) throw std::runtime_error("cannot open " + matrix_path);
    out << to_json(tm).dump(2) << "\n";
    report.results["matrix_file"] = matrix_path;
  }
  if (spectrum) {
    SpectralCertificate cert = spectral_certificate(spec);
    report.results["spectrum"] = to_json(cert);
    report.checks.emplace_back("spectral_certificate_valid", cert.valid);
  }
  if (mix_rmax >= 0) {
    if (kind == ChainKind::kingman)
      throw CLI::ValidationError("--mix", "no spectral mixing bound for the kingman chain");
    MixingReport mix = mixing_report(n, k, mix_rmax, kind);
    report.results["mixing"] = to_json(mix);
    report.checks.emplace_back("mixing_bounds", mix.pass);
  }
  emit(report.to_json(), json_path);
  return exit_code_for(report);
}

inline int run_clt(int n, long long count, std::uint64_t seed, const std::string& json_path) {
  ExperimentReport report;
  report.command = "clt";
  report.params["n"] = n;
  report.params["count"] = count;
  report.params["seed"] = seed;
  CltReport clt = clt_experiment(n, count, SeededStream(seed));
  report.results = to_json(clt);
  report.checks.emplace_back("kolmogorov_le_bound", clt.bound_ok);
  emit(report.to_json(), json_path);
  return exit_code_for(report);
}

inline int run_tensor(int n, int k, int r, const std::string& json_path) {
  ExperimentReport report;
  report.command = "tensor";
  report.params["n"] = n;
  report.params["k"] = k;
  report.params["r"] = r;
  MultiplicityVector mv = tensor_multiplicities(n, k, r);
  DeviationReport dev = deviation_report(n, k, r);
  report.results = to_json(mv, dev);
  report.checks.emplace_back("deviation_le_bound", dev.bound_ok);
  report.checks.emplace_back("threshold_guarantee", dev.c_guarantee_ok);
  emit(report.to_json(), json_path);
  return exit_code_for(report);
}

inline int run_verify(const std::string& suite, int nmax, std::uint64_t seed, long long count,
                      const std::string& json_path) {
  ExperimentReport report;
  report.command = "verify";
  report.params["suite"] = suite;
  report.params["nmax"] = nmax;
  report.params["seed"] = seed;
  report.params["count"] = count;
  verify::SuiteOptions opt;
  opt.nmax = nmax;
  opt.seed = seed;
  opt.mc_samples = count;
  auto checks = verify::run_suite(suite, opt);
  report.results["checks"] = to_json(checks);
  for (const CheckResult& check : checks) report.checks.emplace_back(check.name, check.pass);
  emit(report.to_json(), json_path);
  return exit_code_for(report);
}

inline int run(int argc, const char* const* argv) {
  CLI::App app{"Plancherel measure, Young-lattice chains, and the character-ratio CLT"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "draw seeded Plancherel samples to CSV");
  std::string method = "rsk";
  int s_n = 10;
  long long s_count = 10;
  std::uint64_t s_seed = 1;
  std::string s_out;
  sample->add_option("--method", method)->check(CLI::IsMember({"growth", "rsk"}));
  sample->add_option("--n", s_n)->check(CLI::PositiveNumber);
  sample->add_option("--count", s_count)->check(CLI::PositiveNumber);
  sample->add_option("--seed", s_seed);
  sample->add_option("--out", s_out);

  // chain
  auto* chain = app.add_subcommand("chain", "exact chain matrices, spectra, mixing");
  std::string kind_name = "updown";
  int c_n = 5, c_k = 1, c_mix = -1;
  std::string c_matrix, c_json;
  bool c_spectrum = false;
  chain->add_option("--kind", kind_name)->check(CLI::IsMember({"updown", "downup", "kingman"}));
  chain->add_option("--n", c_n)->check(CLI::PositiveNumber);
  chain->add_option("--k", c_k)->check(CLI::PositiveNumber);
  chain->add_option("--matrix", c_matrix);
  chain->add_flag("--spectrum", c_spectrum);
  chain->add_option("--mix", c_mix);
  chain->add_option("--json", c_json);

  // clt
  auto* clt = app.add_subcommand("clt", "seeded Monte Carlo CLT experiment");
  int t_n = 64;
  long long t_count = 10000;
  std::uint64_t t_seed = 1;
  std::string t_json;
  clt->add_option("--n", t_n)->check(CLI::Range(2, 1 << 20));
  clt->add_option("--count", t_count)->check(CLI::PositiveNumber);
  clt->add_option("--seed", t_seed);
  clt->add_option("--json", t_json);

  // tensor
  auto* tensor = app.add_subcommand("tensor", "exact tensor-power multiplicities");
  int x_n = 5, x_k = 1, x_r = 5;
  std::string x_json;
  tensor->add_option("--n", x_n)->check(CLI::PositiveNumber);
  tensor->add_option("--k", x_k)->check(CLI::PositiveNumber);
  tensor->add_option("--r", x_r)->check(CLI::NonNegativeNumber);
  tensor->add_option("--json", x_json);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the exact identity suites");
  std::string suite = "all";
  int v_nmax = 7;
  std::uint64_t v_seed = 1;
  long long v_count = 100000;
  std::string v_json;
  verify_cmd->add_option("suite", suite)
      ->check(CLI::IsMember({"all", "partitions", "characters", "plancherel", "chains", "stein",
                             "tensor"}));
  verify_cmd->add_option("--nmax", v_nmax)->check(CLI::Range(1, 12));
  verify_cmd->add_option("--n", v_nmax);  // alias used by `verify characters --n 7`
  verify_cmd->add_option("--seed", v_seed);
  verify_cmd->add_option("--count", v_count)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--json", v_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit with 2; --help exits with 0
  }

  try {
    if (sample->parsed()) return run_sample(method, s_n, s_count, s_seed, s_out);
    if (chain->parsed()) {
      ChainKind kind = kind_name == "updown"   ? ChainKind::updown
                       : kind_name == "downup" ? ChainKind::downup
                                               : ChainKind::kingman;
      return run_chain(kind, c_n, c_k, c_matrix, c_spectrum, c_mix, c_json);
    }
    if (clt->parsed()) return run_clt(t_n, t_count, t_seed, t_json);
    if (tensor->parsed()) return run_tensor(x_n, x_k, x_r, x_json);
    if (verify_cmd->parsed()) return run_verify(suite, v_nmax, v_seed, v_count, v_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace plancherel::cli
