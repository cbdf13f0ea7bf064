/*
 * This source file is part of the skin project.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = skin::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(SKIN_TEST_TMPDIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("field command writes the documented table") {
  const Run r = run({"field", "--alpha", "100", "--omega", "333", "--x-max", "30"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2 + 201);
  CHECK(l[0].rfind("# skin ", 0) == 0);
  CHECK(l[0].find("alpha=100 Omega=333") != std::string::npos);
  CHECK(l[1] == "x,Re_e_d,Im_e_d,Re_e_c,Im_e_c,Re_e,Im_e,abs_e");
  CHECK(l[2].rfind("0,", 0) == 0);
  CHECK(l.back().rfind("30,", 0) == 0);
}

TEST_CASE("output is reproducible") {
  const std::vector<std::string> args{"distribution", "--alpha", "1",  "--omega",
                                      "333",          "--x",     "0.5", "--mu-points", "21"};
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("zeros as JSON") {
  const Run r = run({"zeros", "--alpha", "5", "--omega", "1666", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["classification"] == "two_zeros");
  CHECK(j["pairs"] == 1);
  REQUIRE(j["zeros"].size() == 1);
  CHECK(j["zeros"][0][0].get<double>() > 0.0);
  CHECK(j["residuals"][0].get<double>() < 1e-10);

  const Run plus = run({"zeros", "--alpha", "0.5", "--omega", "0.6"});
  REQUIRE(plus.code == 0);
  CHECK(lines(plus.out).size() == 4);
  CHECK(lines(plus.out)[0].find("four_zeros") != std::string::npos);
}

TEST_CASE("frequency parameterization") {
  const Run r = run({"impedance", "--omega1", "0.5", "--nu1", "0.25", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["params"]["alpha"].get<double>() == doctest::Approx(32.0));
  CHECK(j["consistency"].get<double>() < 1e-6);
  CHECK(j["z_physical"].is_null());
}

TEST_CASE("domain polyline") {
  const Run r = run({"domain", "--plane", "alpha-omega", "--mu-min", "-4", "--mu-max", "4",
                     "--points", "200"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  CHECK(l[1] == "mu,alpha,Omega,residual");
  CHECK(l.size() >= 2 + 199);
  const Run f = run({"domain", "--plane", "omega1-nu1", "--points", "5"});
  REQUIRE(f.code == 0);
  CHECK(lines(f.out)[1] == "mu,omega1,nu1,residual");
}

TEST_CASE("lambda command") {
  const Run t = run({"lambda", "--alpha", "1", "--omega", "1", "--tau-points", "3"});
  REQUIRE(t.code == 0);
  CHECK(lines(t.out).size() == 5);
  const Run z = run({"lambda", "--alpha", "1", "--omega", "1", "--z", "1,2", "--z", "-1,-2"});
  REQUIRE(z.code == 0);
  const auto l = lines(z.out);
  REQUIRE(l.size() == 4);
  // lambda is even: the value columns agree for z and -z.
  auto values = [](const std::string& row) {
    return row.substr(row.find(',', row.find(',') + 1));
  };
  CHECK(values(l[2]).substr(0, values(l[2]).rfind(',', values(l[2]).rfind(',') - 1)) ==
        values(l[3]).substr(0, values(l[3]).rfind(',', values(l[3]).rfind(',') - 1)));
}

TEST_CASE("sweep") {
  const Run r = run({"sweep", "--alpha-min", "1", "--alpha-max", "100", "--alpha-points", "2",
                     "--omega-min", "0.6", "--omega-max", "333", "--omega-points", "2"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 6);
  for (std::size_t i = 2; i < l.size(); ++i) CHECK(l[i].find(",ok,") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"field"}).code == 1);
  CHECK(run({"field", "--alpha", "1"}).code == 1);
  CHECK(run({"field", "--alpha", "1", "--omega", "1", "--omega1", "1", "--nu1", "1"}).code == 1);
  CHECK(run({"field", "--alpha", "-1", "--omega", "1"}).code == 1);
  CHECK(run({"field", "--alpha", "1", "--omega", "1", "--x-points", "0"}).code == 1);
  CHECK(run({"zeros", "--alpha", "1", "--omega", "1", "--format", "xml"}).code == 1);
  CHECK(run({"lambda", "--alpha", "1", "--omega", "1", "--z", "abc"}).code == 1);
  CHECK(run({"lambda", "--alpha", "1", "--omega", "1", "--z", "1,0"}).code == 1);
  CHECK(run({"figure", "--fig", "9"}).code == 1);
  const Run e = run({"zeros", "--alpha", "1"});
  CHECK(e.err.find("--omega") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("numeric failures exit with 2") {
  // A single-iteration quadrature cannot resolve the normalization integral.
  const Run r = run({"impedance", "--alpha", "100", "--omega", "333", "--max-depth", "1",
                     "--rel-tol", "1e-15"});
  CHECK(r.code == 2);
  CHECK(r.err.find("quadrature") != std::string::npos);
}

TEST_CASE("config file with flag overrides") {
  const fs::path dir = scratch("config");
  {
    std::ofstream f(dir / "run.cfg");
    f << "# defaults\nalpha=100\nomega=333\nx-max=2\nx-points=4\n";
  }
  const Run r = run({"field", "--config", (dir / "run.cfg").string(), "--x-points", "2"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2 + 3);
  CHECK(l.back().rfind("2,", 0) == 0);
}

TEST_CASE("output file") {
  const fs::path dir = scratch("output");
  const Run r = run({"impedance", "--alpha", "1", "--omega", "333", "--output",
                     (dir / "z.csv").string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(lines(slurp(dir / "z.csv")).size() == 3);
  CHECK_FALSE(fs::exists(dir / "z.csv.tmp"));
}

TEST_CASE("figure bundles") {
  const fs::path dir = scratch("figures");
  const Run r3 = run({"figure", "--fig", "3", "--out-dir", dir.string(), "--x-points", "20"});
  REQUIRE(r3.code == 0);
  const json m3 = json::parse(slurp(dir / "fig3_manifest.json"));
  CHECK(m3["status"] == "complete");
  CHECK(m3["curves"].size() == 12);
  CHECK(m3["tolerances"].contains("rel_tol"));
  CHECK(m3["tolerances"].contains("pv_excision"));
  for (const auto& c : m3["curves"]) CHECK(fs::exists(dir / c["file"].get<std::string>()));

  const Run r2 = run({"figure", "--fig", "2", "--out-dir", dir.string(), "--mu-points", "11"});
  REQUIRE(r2.code == 0);
  const json m2 = json::parse(slurp(dir / "fig2_manifest.json"));
  CHECK(m2["curves"].size() == 2);
  const auto re = lines(slurp(dir / "fig2_re_h.csv"));
  CHECK(re[1] == "mu,Re_h");
  CHECK(re.size() == 13);

  REQUIRE(run({"figure", "--fig", "4", "--out-dir", dir.string(), "--x-points", "10"}).code == 0);
  CHECK(json::parse(slurp(dir / "fig4_manifest.json"))["curves"].size() == 2);
  REQUIRE(run({"figure", "--fig", "1a", "--out-dir", dir.string(), "--points", "20"}).code == 0);
  REQUIRE(run({"figure", "--fig", "1b", "--out-dir", dir.string(), "--points", "20"}).code == 0);
  CHECK(fs::exists(dir / "fig1b_boundary.csv"));
}
