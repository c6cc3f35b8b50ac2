#include "doctest.h"
#include "json.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
  const std::string cmd = env + " " + std::string(M1J_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string &s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    v.push_back(l);
  return v;
}

} // namespace

TEST_CASE("eval") {
  const auto uni = run("eval --family uni --n 1 --a 0 --b 0 --c 0 --coeffs");
  CHECK(uni.status == 0);
  CHECK(uni.out == "-1, 2\n");

  const auto biv = run("eval --family biv --n 0 --k 0 --format json");
  CHECK(biv.status == 0);
  const auto j = json::parse(biv.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["coefficient"] == "1");
  CHECK(j[0]["x_degree"] == 0);

  const auto value = run("eval --n 2 --k 1 --x 1 --y 1 --format json");
  CHECK(value.status == 0);
  CHECK(std::isfinite(json::parse(value.out)[0]["value"].get<double>()));

  CHECK(run("eval --n 1 --k 2").status != 0);
  CHECK(run("eval --n 1 --alpha nonsense").status != 0);
  CHECK(run("frobnicate").status != 0);
}

TEST_CASE("verify reports and exit status") {
  const auto r = run("verify --suite uni-recurrence --n-max 8 --format json");
  CHECK(r.status == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 1);
  std::set<std::string> keys;
  for (const auto &[k, v] : j[0].items())
    keys.insert(k);
  CHECK(keys == std::set<std::string>{"check_name", "max_residual", "witness", "pass", "elapsed_ms"});
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["max_residual"] == 0.0);

  const auto gram = json::parse(run("verify --suite biv-gram --n-max 4 --delta 1/5 --format json").out);
  CHECK(gram[0]["pass"] == true);
  CHECK(gram[0]["max_residual"].get<double>() <= 1e-6);

  const auto pe = json::parse(run("verify --suite pearson --grid 10 --format json").out);
  CHECK(pe[0]["pass"] == true);
  CHECK(pe[0]["max_residual"].get<double>() <= 1e-10);

  // Reports come back sorted by name.
  const auto two = json::parse(run("verify --suite uni-eigen --suite biv-eigen --format json").out);
  REQUIRE(two.size() == 2);
  CHECK(two[0]["check_name"] == "biv-eigen");

  // A suite that cannot run is reported as a failure, not a crash.
  const auto bad = run("verify --suite appendix-routes --c 3");
  CHECK(bad.status == 1);
  CHECK(run("verify --suite no-such-suite").status != 0);
}

TEST_CASE("decimal parameters skip exact suites") {
  const auto r = run("verify --alpha 0.5 --suite biv-eigen --suite biv-weight --format json");
  CHECK(r.status == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["check_name"] == "biv-weight");
}

TEST_CASE("published formulas and the deviations report") {
  const std::string path = "cli_deviations.json";
  const auto r = run("verify --use-paper-formulas --suite biv-recurrence --deviations " + path);
  CHECK(r.status == 0);
  std::ifstream in(path);
  const auto j = json::parse(in);
  CHECK(j["mismatches"].is_array());
  CHECK(j["max_corrected_error"].get<double>() <= 1e-7);
  std::remove(path.c_str());
}

TEST_CASE("gram csv") {
  const auto r = run("gram --family uni --n-max 3");
  CHECK(r.status == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 17);
  CHECK(ls[0] == "n1,k1,n2,k2,value,expected,abs_err");
  const auto b = run("gram --family biv --n-max 2 --format json");
  CHECK(b.status == 0);
  const auto j = json::parse(b.out);
  CHECK(j.size() == 36);
  for (const auto &row : j)
    CHECK(row["abs_err"].get<double>() <= 1e-6 * (1.0 + std::abs(row["expected"].get<double>())));
}

TEST_CASE("limit table") {
  const auto zero = json::parse(run("limit --n 0 --k 0 --format json").out);
  REQUIRE(zero.size() == 3);
  for (const auto &row : zero)
    CHECK(row["deviation"] == 0.0);

  const auto j = json::parse(run("limit --n 2 --k 1 --format json").out);
  REQUIRE(j.size() == 3);
  const double d0 = j[0]["deviation"], d1 = j[1]["deviation"], d2 = j[2]["deviation"];
  CHECK(d0 > d1);
  CHECK(d1 > d2);
  CHECK(d1 / d2 >= 5.0);
  CHECK(d1 / d2 <= 20.0);
}

TEST_CASE("pearson table") {
  const auto r = run("pearson --grid 4 --format json");
  CHECK(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.size() == 16);
  CHECK(run("pearson --delta 3").status != 0);
}

TEST_CASE("domain geometry") {
  const auto in = json::parse(run("domain --delta 1/5 --format json").out);
  REQUIRE(in["triangles"].size() == 4);
  bool found = false;
  for (const auto &t : in["triangles"]) {
    std::set<std::pair<double, double>> v;
    for (const auto &c : t)
      v.insert({c[0].get<double>(), c[1].get<double>()});
    found = found || v == std::set<std::pair<double, double>>{{0.2, 0.2}, {1.0, 1.0}, {0.2, 1.0}};
  }
  CHECK(found);
  const auto out = json::parse(run("domain --delta 3 --format json").out);
  CHECK(out["regime"] == "outside");
  CHECK(out["triangles"].size() == 4);
  for (const auto &t : out["triangles"])
    for (const auto &c : t) {
      CHECK(std::abs(c[1].get<double>()) >= 1.0);
      CHECK(std::abs(c[1].get<double>()) <= std::abs(c[0].get<double>()));
      CHECK(std::abs(c[0].get<double>()) <= 3.0);
    }
  CHECK(lines(run("domain --delta 0").out).size() == 1 + 2 * 3);
  CHECK(run("domain --delta 1").status != 0);
}

TEST_CASE("output file") {
  const std::string path = "cli_out.csv";
  CHECK(run("domain --delta 0 --out " + path).out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "triangle,vertex,x,y");
  std::remove(path.c_str());
}

TEST_CASE("quadrature tolerance from the environment") {
  CHECK(run("gram --family uni --n-max 2", "M1J_QUAD_TOL=1e-10").status == 0);
  CHECK(run("gram --family uni --n-max 2", "M1J_QUAD_TOL=abc").status != 0);
  CHECK(run("gram --family uni --n-max 2", "M1J_QUAD_TOL=-1").status != 0);
}
