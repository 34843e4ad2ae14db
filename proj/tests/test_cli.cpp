#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  std::string out_path = "/tmp/mzl_cli_out.txt", err_path = "/tmp/mzl_cli_err.txt";
  std::string cmd = std::string(MZL_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

TEST_CASE("cli: basis json output with exact coefficients") {
  CliResult r = run_cli("basis -k 12 -m 0 --terms 3 --format json");
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d["schema"] == 1);
  CHECK(d["ell"] == 1);
  CHECK(d["kprime"] == 0);
  REQUIRE(d["coefficients"].size() == 4);
  CHECK(d["coefficients"][0]["c"] == "1");
  CHECK(d["coefficients"][1]["c"] == "0");
  CHECK(d["coefficients"][2]["c"] == "196560");
  CHECK(d["coefficients"][3]["c"] == "16773120");
  REQUIRE(d["F"].size() == 2);
  CHECK(d["F"][0] == "-720");
  CHECK(d["F"][1] == "1");
  CHECK(d["metadata"].contains("prec_bits"));
  CHECK(d["metadata"].contains("wall_ms"));

  // round trip: parse, re-serialize, parse again identically
  CHECK(json::parse(d.dump()) == d);
}

TEST_CASE("cli: basis E4 text output") {
  CliResult r = run_cli("basis -k 4 -m 0 --terms 2");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("q^0: 1") != std::string::npos);
  CHECK(r.out.find("q^1: 240") != std::string::npos);
  CHECK(r.out.find("q^2: 2160") != std::string::npos);
}

TEST_CASE("cli: basis rejects m below -l") {
  CliResult r = run_cli("basis -k 12 -m -2");
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("cli: zeros of f_{4,0} and f_{12,0}") {
  CliResult r4 = run_cli("zeros -k 4 -m 0");
  REQUIRE(r4.code == 0);
  json d4 = json::parse(r4.out);
  CHECK(d4["zeros_theta"].empty());
  CHECK(d4["endpoint_rho"] == "1/3");
  CHECK(d4["method"] == "poly-isolation");

  CliResult r12 = run_cli("zeros -k 12 -m 0");
  REQUIRE(r12.code == 0);
  json d12 = json::parse(r12.out);
  REQUIRE(d12["zeros_theta"].size() == 1);
  CHECK(d12["radii"][0].get<double>() < 1e-9);
}

TEST_CASE("cli: zeros of the cusp form f_{132,-9} warn about the hypothesis") {
  CliResult r = run_cli("zeros -k 132 -m -9");
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d["zeros_theta"].size() < 2);
  CHECK(d.contains("warning"));
  CHECK(d["hypothesis_m_ge_abs_ell_minus_ell"] == false);
}

TEST_CASE("cli: interlace commands") {
  CliResult r = run_cli("interlace --mode weight -m 0 -k 4..4 --format json");
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d["all_pass"] == true);
  CHECK(d["pairs"].size() == 1);
  CHECK(d["pairs"][0]["a"]["count"] == 0);
  CHECK(d["pairs"][0]["b"]["count"] == 1);

  // odd endpoints are a usage error, not silently rounded
  CliResult odd = run_cli("interlace --mode weight -m 0 -k 5..9");
  CHECK(odd.code == 2);
}

TEST_CASE("cli: verify thresholds suite") {
  CliResult r = run_cli("verify --suite thresholds --format json");
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d["all_pass"] == true);
  bool saw_interval1 = false;
  for (const auto& rep : d["reports"]) {
    CHECK(rep["holds"] == true);
    if (rep["name"] == "interval1_threshold") saw_interval1 = true;
  }
  CHECK(saw_interval1);
}

TEST_CASE("cli: usage errors take exit code 2") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("zeros -k 7 -m 0").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli: plot CSV contract") {
  std::string path = "/tmp/mzl_plot_test.csv";
  CliResult r = run_cli("plot -k 12 -m 0 --samples 64 --out " + path);
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "theta,g,cos_model,h_model,rhs_bound_interval1,rhs_bound_interval2");

  // g changes sign across the single zero of f_{12,0}, and |g - cos_model|
  // respects the interval-one bound wherever that column is present
  CliResult rz = run_cli("zeros -k 12 -m 0");
  json dz = json::parse(rz.out);
  double theta_star = dz["zeros_theta"][0].get<double>();

  std::string line;
  double prev_theta = 0, prev_g = 0;
  bool seen_sign_change_at_zero = false;
  bool first = true;
  while (std::getline(in, line)) {
    auto cells = split_csv_line(line);
    REQUIRE(cells.size() == 6);
    double theta = std::stod(cells[0]);
    double g = std::stod(cells[1]);
    double cosm = std::stod(cells[2]);
    if (!cells[4].empty()) {
      double rhs1 = std::stod(cells[4]);
      CHECK(std::fabs(g - cosm) <= rhs1 * (1 + 1e-9));
      CHECK(theta <= 1.9 + 1e-12);
    }
    if (!first && prev_g * g < 0 && prev_theta < theta_star && theta_star < theta)
      seen_sign_change_at_zero = true;
    prev_theta = theta;
    prev_g = g;
    first = false;
  }
  CHECK(seen_sign_change_at_zero);

  CliResult bad = run_cli("plot -k 12 -m 0 --samples 4 --out /nonexistent-dir/x.csv");
  CHECK(bad.code == 2);
}

TEST_CASE("cli: MZL_PREC_BITS environment override") {
  CliResult r = run_cli("zeros -k 4 -m 0");
  json d = json::parse(r.out);
  CHECK(d["metadata"]["prec_bits"] == 256);
  std::string out_path = "/tmp/mzl_cli_out.txt";
  std::string cmd = std::string("MZL_PREC_BITS=320 ") + MZL_CLI_PATH +
                    " zeros -k 4 -m 0 >" + out_path + " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  json d2 = json::parse(slurp(out_path));
  CHECK(d2["metadata"]["prec_bits"] == 320);
}
