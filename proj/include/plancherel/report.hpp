#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "plancherel/chains.hpp"
#include "plancherel/stein.hpp"
#include "plancherel/tensor.hpp"
#include "plancherel/verify.hpp"

namespace plancherel {

// Key order is preserved so seeded reports serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "plancherel/0.1.0";

inline std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Serialized record of one command run. The timestamp is isolated in a single
// header field so golden-file comparisons can mask it; everything else is a
// pure function of the parameters and seed.
struct ExperimentReport {
  std::string command;
  Json params = Json::object();
  Json results = Json::object();
  std::vector<std::pair<std::string, bool>> checks;

  bool pass() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["version"] = kArtifactVersion;
    j["command"] = command;
    j["timestamp"] = timestamp_utc();
    j["params"] = params;
    j["results"] = results;
    Json checks_json = Json::object();
    for (const auto& [name, ok] : checks) checks_json[name] = ok;
    j["checks"] = checks_json;
    j["pass"] = pass();
    return j;
  }
};

// --- serialization helpers -------------------------------------------------

inline Json to_json(const Rational& r) { return to_string(r); }
inline Json to_json(const Partition& p) { return p.to_string(); }

inline Json to_json(const ExactDist& dist) {
  Json j = Json::object();
  for (int i = 0; i < dist.index.size(); ++i)
    j[dist.index.at(i).to_string()] = to_string(dist.probs(i));
  return j;
}

inline Json to_json(const TransitionMatrix& tm) {
  Json j;
  j["kind"] = to_string(tm.spec.kind);
  j["n"] = tm.spec.n;
  j["k"] = tm.spec.k;
  Json index = Json::array();
  for (int i = 0; i < tm.index.size(); ++i) index.push_back(tm.index.at(i).to_string());
  j["index"] = index;
  Json entries = Json::array();
  for (int i = 0; i < tm.index.size(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < tm.index.size(); ++c) row.push_back(to_string(tm.rows(i, c)));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

inline Json to_json(const SpectralCertificate& cert) {
  Json j;
  j["kind"] = to_string(cert.spec.kind);
  j["n"] = cert.spec.n;
  j["k"] = cert.spec.k;
  j["valid"] = cert.valid;
  Json entries = Json::array();
  for (const auto& entry : cert.entries) {
    Json e;
    e["class"] = entry.class_type.to_string();
    e["class_size"] = entry.class_size.str();
    e["eigenvalue"] = to_string(entry.eigenvalue);
    Json ratios = Json::array();
    for (int i = 0; i < entry.ratio.size(); ++i) ratios.push_back(to_string(entry.ratio(i)));
    e["ratio"] = ratios;  // psi = sqrt(class_size) * ratio
    entries.push_back(e);
  }
  j["eigen"] = entries;
  if (!cert.failures.empty()) j["failures"] = cert.failures;
  return j;
}

inline Json to_json(const MixingReport& report) {
  Json j;
  j["kind"] = to_string(report.spec.kind);
  j["n"] = report.spec.n;
  j["k"] = report.spec.k;
  j["beta"] = to_string(report.beta);
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["r"] = row.r;
    r["tv"] = row.tv;
    r["l2"] = row.l2;
    r["bound"] = row.bound;
    r["two_tv_le_l2"] = row.two_tv_le_l2;
    r["l2_le_bound"] = row.l2_le_bound;
    r["lemma_bound_ok"] = row.lemma_bound_ok;
    rows.push_back(r);
  }
  j["rows"] = rows;
  Json thresholds = Json::array();
  for (const auto& th : report.thresholds) {
    Json t;
    t["c"] = th.c;
    t["r_star"] = th.r_star;
    t["r_checked"] = th.r_checked;
    t["tv_at_r"] = th.tv_at_r;
    t["guarantee"] = th.guarantee;
    t["ok"] = th.ok;
    thresholds.push_back(t);
  }
  j["thresholds"] = thresholds;
  j["first_r_tv_below_0.01"] = report.first_r_below_001;
  j["tv_monotone"] = report.tv_monotone;
  j["pass"] = report.pass;
  return j;
}

inline Json to_json(const CltReport& report) {
  Json j;
  j["n"] = report.n;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["stream"] = report.stream;
  j["kolmogorov_distance"] = report.kolmogorov;
  j["bound"] = report.bound;
  j["mean"] = report.mean;
  j["variance"] = report.variance;
  j["third_abs_moment_diff"] = report.third_abs_moment_diff;
  j["bound_ok"] = report.bound_ok;
  return j;
}

inline Json to_json(const Term2Report& report) {
  Json j;
  j["n"] = report.n;
  j["samples"] = report.samples;
  j["empirical_third_moment"] = report.empirical_third_moment;
  j["bound"] = report.bound;
  j["max_abs_diff"] = report.max_abs_diff;
  j["pathwise_violations"] = report.pathwise_violations;
  j["pass"] = report.pass;
  return j;
}

inline Json to_json(const DeviationReport& report) {
  Json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["r"] = report.r;
  j["beta"] = to_string(report.beta);
  j["deviation"] = to_string(report.deviation);
  j["deviation_value"] = to_double(report.deviation);
  j["bound"] = to_string(report.bound);
  j["bound_ok"] = report.bound_ok;
  j["implied_c"] = report.implied_c;
  j["c_guarantee"] = report.c_guarantee;
  j["c_guarantee_ok"] = report.c_guarantee_ok;
  return j;
}

inline Json to_json(const MultiplicityVector& mv, const DeviationReport& dev) {
  Json j;
  j["n"] = mv.n;
  j["k"] = mv.k;
  j["r"] = mv.r;
  Json per_lambda = Json::array();
  for (int i = 0; i < mv.index.size(); ++i) {
    Json e;
    e["partition"] = mv.index.at(i).to_string();
    e["multiplicity"] = mv.mult[i].str();
    e["normalized_ratio"] = to_string(dev.normalized[i].second);
    per_lambda.push_back(e);
  }
  j["multiplicities"] = per_lambda;
  j["deviation"] = to_json(dev);
  return j;
}

inline Json to_json(const LisTailReport& report) {
  Json j;
  j["n"] = report.n;
  j["samples"] = report.samples;
  j["threshold"] = report.threshold;
  j["bound"] = report.bound;
  j["hits"] = report.hits;
  j["frequency"] = report.frequency;
  j["pass"] = report.pass;
  return j;
}

inline Json to_json(const std::vector<CheckResult>& checks) {
  Json rows = Json::array();
  for (const CheckResult& check : checks) {
    Json row;
    row["name"] = check.name;
    row["pass"] = check.pass;
    if (!check.detail.empty()) row["detail"] = check.detail;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace plancherel
