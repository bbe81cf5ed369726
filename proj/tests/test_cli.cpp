#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "plancherel/cli.hpp"

using namespace plancherel;

namespace {

int run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"plancherel"};
  argv.insert(argv.end(), args.begin(), args.end());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

Json masked(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timestamp");
  return j;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({"sample", "--bogus-flag"}) == 2);
  CHECK(run_cli({"verify", "nonsense-suite"}) == 2);
  CHECK(run_cli({}) == 2);
}

TEST_CASE("sample csv is seeded and reproducible") {
  auto a = temp_file("plancherel_sample_a.csv");
  auto b = temp_file("plancherel_sample_b.csv");
  CHECK(run_cli({"sample", "--method", "rsk", "--n", "10", "--count", "3", "--seed", "7",
                 "--out", a.c_str()}) == 0);
  CHECK(run_cli({"sample", "--method", "rsk", "--n", "10", "--count", "3", "--seed", "7",
                 "--out", b.c_str()}) == 0);
  std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.substr(0, text.find('\n')) == "index,partition,lambda1,lambda1_prime,w");
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 rows

  auto c = temp_file("plancherel_sample_c.csv");
  CHECK(run_cli({"sample", "--method", "growth", "--n", "6", "--count", "5", "--seed", "3",
                 "--out", c.c_str()}) == 0);
  std::string growth_text = slurp(c);
  CHECK(std::count(growth_text.begin(), growth_text.end(), '\n') == 6);
}

TEST_CASE("chain command writes matrix and spectrum") {
  auto matrix_path = temp_file("plancherel_matrix.json");
  auto report_path = temp_file("plancherel_chain.json");
  CHECK(run_cli({"chain", "--kind", "updown", "--n", "2", "--k", "1", "--matrix",
                 matrix_path.c_str(), "--spectrum", "--json", report_path.c_str()}) == 0);

  Json matrix = Json::parse(slurp(matrix_path));
  CHECK(matrix["index"] == Json::array({"[2]", "[1,1]"}));
  CHECK(matrix["entries"][0][0] == "2/3");
  CHECK(matrix["entries"][0][1] == "1/3");

  Json report = Json::parse(slurp(report_path));
  CHECK(report["pass"] == true);
  CHECK(report["checks"]["spectral_certificate_valid"] == true);
  CHECK(report["results"]["spectrum"]["valid"] == true);

  // Mixing is not defined for the kingman chain.
  CHECK(run_cli({"chain", "--kind", "kingman", "--n", "4", "--mix", "5"}) == 2);
}

TEST_CASE("clt report round trip and determinism") {
  auto a = temp_file("plancherel_clt_a.json");
  auto b = temp_file("plancherel_clt_b.json");
  CHECK(run_cli({"clt", "--n", "8", "--count", "2000", "--seed", "1", "--json", a.c_str()}) == 0);
  CHECK(run_cli({"clt", "--n", "8", "--count", "2000", "--seed", "1", "--json", b.c_str()}) == 0);
  CHECK(masked(slurp(a)) == masked(slurp(b)));

  Json report = Json::parse(slurp(a));
  CHECK(report["command"] == "clt");
  CHECK(report["version"] == kArtifactVersion);
  CHECK(report["results"]["n"] == 8);
  CHECK(report["results"]["bound_ok"] == true);
  CHECK(report["results"].contains("kolmogorov_distance"));
  CHECK(report["results"].contains("third_abs_moment_diff"));
}

TEST_CASE("tensor report") {
  auto path = temp_file("plancherel_tensor.json");
  CHECK(run_cli({"tensor", "--n", "4", "--k", "1", "--r", "3", "--json", path.c_str()}) == 0);
  Json report = Json::parse(slurp(path));
  CHECK(report["pass"] == true);
  CHECK(report["results"]["deviation"]["bound_ok"] == true);
  CHECK(report["results"]["multiplicities"].size() == 5);
}

TEST_CASE("verify command") {
  auto path = temp_file("plancherel_verify.json");
  CHECK(run_cli({"verify", "partitions", "--nmax", "5", "--json", path.c_str()}) == 0);
  Json report = Json::parse(slurp(path));
  CHECK(report["pass"] == true);
  CHECK(report["results"]["checks"].is_array());
  for (const auto& check : report["results"]["checks"]) CHECK(check["pass"] == true);

  CHECK(run_cli({"verify", "characters", "--n", "4"}) == 0);
}

TEST_SUITE_END();
