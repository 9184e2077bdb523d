#include "brieskorn/brieskorn.hpp"
#include "brieskorn/commands.hpp"

#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>

using namespace brieskorn;
using namespace brieskorn::commands;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

/// Runs the CLI with a shell command line; stderr is discarded.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + BRIESKORN_CLI_PATH + "' " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string without_timestamp(const std::string& s) {
  return std::regex_replace(s, std::regex(R"("timestamp": "[^"]*")"), R"("timestamp": "")");
}

Json parse_ok(const RunResult& r) {
  const Json j = Json::parse(r.out);
  INFO(r.out);
  REQUIRE(validate_report(j).empty());
  return j;
}

const Json& row(const Json& report, const std::string& tag) {
  for (const auto& v : report.at("verdicts"))
    if (v.at("paper_ref") == tag) return v;
  FAIL("no verdict tagged " << tag);
  return report;
}

}  // namespace

TEST_CASE("reports round-trip through JSON", "[cli_reporting]") {
  for (const auto& e : {ExponentData({2, 3}, {0, 0}), ExponentData({0, 1}, {1, 1}), ExponentData({1, 2, 2}, {1, 0, 3})}) {
    Report r = cmd_classify(e);
    r.timestamp = "2026-01-01T00:00:00Z";
    const Json j = Json::parse(serialize(r));
    CHECK(validate_report(j).empty());
    CHECK(report_from_json(j) == r);
    CHECK(serialize(report_from_json(j)) == serialize(r));
  }
}

TEST_CASE("pass flags only accompany two-sided rows", "[cli_reporting]") {
  Report r;
  r.add("symbolic only", "etsu", 3);
  r.add("both", "l17", 1.5, 1.49, 0.05, true);
  r.add("pass dropped", "l17", nullptr, 1.0, 0.05, false);
  CHECK_FALSE(r.verdicts[0].pass.has_value());
  CHECK(r.verdicts[1].pass == std::optional<bool>(true));
  CHECK_FALSE(r.verdicts[2].pass.has_value());
  CHECK(r.all_pass());
  CHECK_THROWS_AS(r.add("missing pass", "l17", 1, 2), std::logic_error);

  Json j = to_json(r);
  CHECK(validate_report(j).empty());
  j["verdicts"][0]["pass"] = true;
  CHECK(validate_report(j).size() == 1);
  j["verdicts"][0].erase("pass");
  j["verdicts"][1].erase("pass");
  CHECK(validate_report(j).size() == 1);
  j["verdicts"][1]["pass"] = true;
  j["verdicts"][1]["paper_ref"] = "";
  CHECK(validate_report(j).size() == 1);
  j.erase("seed");
  CHECK(validate_report(j).size() == 2);
}

TEST_CASE("exponent fits round-trip", "[cli_reporting]") {
  numeric::ExponentFit f;
  f.slope = 1.4999999999999998;
  f.intercept = -0.25;
  f.r_squared = 0.9999;
  f.rational_snap = make_rational(3, 2);
  const auto back = exponent_fit_from_json(Json::parse(to_json(f).dump()));
  CHECK(back == f);
  f.rational_snap.reset();
  CHECK(to_json(f).at("rational_snap").is_null());
}

TEST_CASE("exponent parsing", "[cli_reporting]") {
  CHECK(parse_exponents("2,3") == std::vector<int>{2, 3});
  CHECK(parse_exponents(" 0, 4 ,1") == std::vector<int>{0, 4, 1});
  for (const char* bad : {"", "2,", "-1,2", "x", "2;3", "1,,2"}) CHECK_THROWS_AS(parse_exponents(bad), InputError);
  CHECK_THROWS_AS(make_exponents({0, 0}, {1, 1}), InputError);
  CHECK_THROWS_AS(make_exponents({1, 2}, {1}), InputError);
}

TEST_CASE("classify examples", "[cli_reporting]") {
  const auto cusp = parse_ok(run_cli("classify -a 2,3 -b 0,0"));
  CHECK(row(cusp, "tgcsup").at("symbolic") == "T1");
  CHECK(cusp.at("details").at("surface").at("cone").at("plane") == "{z1=0}");
  CHECK(row(cusp, "multiplicity").at("symbolic") == 2);
  CHECK(cusp.dump().find("{z1=0}") != std::string::npos);

  const auto sub = parse_ok(run_cli("classify -a 1,2 -b 1,1"));
  CHECK(row(sub, "submfam").at("symbolic") == true);
  CHECK(row(sub, "l1").at("symbolic").at("notation") == "(4,3;12,12)");

  CHECK(run_cli("classify -a 0,0 -b 1,1").status == 2);
  CHECK(run_cli("classify -a 2,x -b 1,1").status == 2);
  CHECK(run_cli("classify -a 2,3").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
}

TEST_CASE("compare examples", "[cli_reporting]") {
  const auto r = run_cli("compare -a 2,2 -b 1,3 -c 2,2 -d 3,1 --mode bilip");
  REQUIRE(r.status == 0);
  const auto j = parse_ok(r);
  const auto& v = j.at("verdicts").at(0).at("symbolic");
  CHECK(v.at("status") == "Equivalent");
  CHECK(v.at("witness").get<std::string>().find("(1 2)") != std::string::npos);

  const auto top = parse_ok(run_cli("compare -a 1,2 -b 0,0 -c 2,2 -d 0,0 --mode top"));
  CHECK(top.at("verdicts").at(0).at("symbolic").at("status") == "NotEquivalent");
  CHECK(top.at("verdicts").at(0).at("paper_ref") == "submfam");

  const auto outer = parse_ok(run_cli("compare -a 0,1 -b 1,1 -c 2,3 -d 0,0 --mode outer"));
  CHECK(outer.at("verdicts").at(0).at("symbolic").at("status") == "NotEquivalent");
  CHECK(outer.at("verdicts").at(0).at("paper_ref") == "tsam");

  CHECK(run_cli("compare -a 2,2 -b 1,3 -c 2,2,2 -d 3,1,1").status == 2);
  CHECK(run_cli("compare -a 2,2 -b 1,3 -c 2,2 -d 3,1 --mode sideways").status == 2);
}

TEST_CASE("verify examples and exit codes", "[cli_reporting]") {
  const auto beta = run_cli("verify -a 0,1 -b 1,1 --checks beta");
  CHECK(beta.status == 0);
  const auto bj = parse_ok(beta);
  const auto& b = row(bj, "l17");
  CHECK(b.at("symbolic") == "3/2");
  CHECK(b.at("pass") == true);

  const auto cusp = run_cli("verify -a 2,3 -b 0,0 --checks cone,ne");
  const auto j = parse_ok(cusp);
  CHECK(row(j, "tgcsup").at("pass") == true);
  const auto& ne = row(j, "l17");
  CHECK(ne.at("pass") == true);
  CHECK(cusp.status == 0);

  CHECK(run_cli("verify -a 2,3,4 -b 0,0,0 --checks cone").status == 2);
  CHECK(run_cli("verify -a 2,3 -b 0,0 --checks bogus").status == 2);
  CHECK(run_cli("verify -a 1,2 -b 0,0 --checks ne").status == 2);
}

TEST_CASE("a failed tolerance exits with 1", "[cli_reporting]") {
  // The single beta-horn has inner/outer ratio pi/2 for all t, so the
  // stated non-normal-embedding claim for T3 fails numerically.
  const auto r = run_cli("verify -a 0,1 -b 1,1 --checks ne");
  CHECK(r.status == 1);
  const auto j = parse_ok(r);
  CHECK(row(j, "l17").at("pass") == false);
}

TEST_CASE("identical runs produce identical reports", "[cli_reporting]") {
  for (const char* args : {"verify -a 0,2 -b 1,1 --checks beta,conj --seed 5", "classify -a 1,2 -b 1,1",
                           "sample -a 2,3 -b 1,0 --count 50 --seed 3", "enumerate -a 2,2 --b-bound 2"}) {
    const auto x = run_cli(args);
    const auto y = run_cli(args);
    CHECK(x.status == y.status);
    CHECK(without_timestamp(x.out) == without_timestamp(y.out));
  }
}

TEST_CASE("BRIESKORN_SEED overrides --seed", "[cli_reporting]") {
  const auto via_env = run_cli("sample -a 2,3 -b 0,0 --count 20 --seed 1", "BRIESKORN_SEED=77");
  const auto via_flag = run_cli("sample -a 2,3 -b 0,0 --count 20 --seed 77");
  const auto other = run_cli("sample -a 2,3 -b 0,0 --count 20 --seed 1");
  CHECK(parse_ok(via_env).at("seed") == 77);
  CHECK(without_timestamp(via_env.out) == without_timestamp(via_flag.out));
  CHECK(parse_ok(other).at("seed") == 1);
  CHECK(run_cli("sample -a 2,3 -b 0,0 --count 20", "BRIESKORN_SEED=abc").status == 2);
}

TEST_CASE("enumerate examples and CSV", "[cli_reporting]") {
  const auto tmp = std::filesystem::temp_directory_path() / "brieskorn_enum_test.csv";
  std::filesystem::remove(tmp);
  const auto r = run_cli("enumerate -a 2,2 --b-bound 2 --out '" + tmp.string() + "'");
  REQUIRE(r.status == 0);
  const auto j = parse_ok(r);
  CHECK(row(j, "corfam").at("symbolic") == 6);
  std::ifstream in(tmp);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "class,representative_b,members,multiplicities,topologically_trivial,undetermined_partner");
  for (std::size_t k = 1; k < lines.size(); ++k) CHECK(lines[k].find(",true,") != std::string::npos);
  std::filesystem::remove(tmp);

  const auto four = parse_ok(run_cli("enumerate -a 2,3 --b-bound 1"));
  CHECK(row(four, "corfam").at("symbolic") == 4);
  const auto one = parse_ok(run_cli("enumerate -a 2,2 --b-bound 0"));
  CHECK(row(one, "corfam").at("symbolic") == 1);
  CHECK(run_cli("enumerate -a 0,0").status == 2);
  CHECK(run_cli("enumerate -a 2,2 --b-bound -1").status == 2);
}

TEST_CASE("sample writes the point cloud", "[cli_reporting]") {
  const auto tmp = std::filesystem::temp_directory_path() / "brieskorn_sample_test.csv";
  std::filesystem::remove(tmp);
  const auto r = run_cli("sample -a 2,3 -b 0,0 --count 30 --out '" + tmp.string() + "'");
  REQUIRE(r.status == 0);
  std::ifstream in(tmp);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x1,y1,x2,y2,radius");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    double x1, y1, x2, y2, rad;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &x1, &y1, &x2, &y2, &rad) == 5);
    const Complex z1(x1, y1), z2(x2, y2);
    CHECK(std::abs(z1 * z1 + z2 * z2 * z2) <= 1e-10);
  }
  CHECK(rows == 30);
  std::filesystem::remove(tmp);
  CHECK(run_cli("sample -a 2,3,4 -b 0,0,0").status == 2);
  CHECK(run_cli("sample -a 2,3 -b 0,0 --r-min 1 --r-max 0.5").status == 2);
}
