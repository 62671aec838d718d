#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lppqs/cli.hpp"

namespace fs = std::filesystem;
using lppqs::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome lppqs_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name, const std::string& content = {}) {
  const fs::path dir = fs::temp_directory_path() / "lppqs_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  if (!content.empty()) std::ofstream(p, std::ios::binary) << content;
  return p;
}

// Compares with tests/golden/<name>; LPPQS_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path p = fs::path(LPPQS_GOLDEN_DIR) / name;
  if (std::getenv("LPPQS_UPDATE_GOLDEN")) std::ofstream(p, std::ios::binary) << actual;
  INFO("golden file " << p.string());
  REQUIRE(fs::exists(p));
  CHECK(slurp(p) == actual);
}

std::string without_timings(const std::string& s) {
  return std::regex_replace(s, std::regex(R"( \(\d+\.\d+s\))"), "");
}

}  // namespace

TEST_CASE("verify theorem prints both polynomials") {
  const auto r = lppqs_cli({"verify", "--scope", "theorem", "--n", "1", "--u", "2"});
  CHECK(r.code == 0);
  check_golden("verify_theorem_n1_u2.txt", without_timings(r.out));
}

TEST_CASE("verify okada at u = 0") {
  const auto r = lppqs_cli({"verify", "--scope", "okada", "--n", "1", "--u", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS okada n=1 u=0") != std::string::npos);
  CHECK(r.out.find("lhs: 1 * x1^0\n") != std::string::npos);
  CHECK(r.out.find("rhs: 1 * x1^0\n") != std::string::npos);
}

TEST_CASE("verify greene and roundtrips") {
  CHECK(lppqs_cli({"verify", "--scope", "greene", "--trials", "200", "--max-dim", "5"}).code == 0);
  CHECK(lppqs_cli({"verify", "--scope", "roundtrips", "--trials", "100"}).code == 0);
  CHECK(lppqs_cli({"verify", "--scope", "stembridge", "--n", "2"}).code == 0);
}

TEST_CASE("verify json report") {
  const auto r = lppqs_cli({"verify", "--scope", "step4", "--n", "1", "--u", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["suite"] == "step4");
  CHECK(j["checks"][0]["details"]["p2pr"] == "1 * x1^0 + 1 * x1^1 + 1 * x1^2");
}

TEST_CASE("verify exit codes") {
  CHECK(lppqs_cli({"verify", "--scope", "theorem", "--n", "2", "--u", "4", "--budget", "10"}).code == 2);
  CHECK(lppqs_cli({"verify", "--scope", "theorem", "--n", "1", "--u", "3"}).code == 2);
  CHECK(lppqs_cli({"verify", "--scope", "nonsense"}).code == 2);
  CHECK(lppqs_cli({"verify", "--scope", "theorem", "--n", "7"}).code == 2);
}

TEST_CASE("rsk on the zero p2hlr filling") {
  const auto in = scratch("zero_hlr.txt", "0 -\n0 0\n0 0\n0 -\n");
  const auto r = lppqs_cli({"rsk", "--input", in.string(), "--geometry", "p2hlr", "--u", "2"});
  CHECK(r.code == 0);
  check_golden("rsk_zero_p2hlr_u2.txt", r.out);
}

TEST_CASE("rsk p2l single square") {
  const auto in = scratch("l1.txt", "3\n");
  const auto r = lppqs_cli({"rsk", "--input", in.string(), "--geometry", "p2l"});
  CHECK(r.code == 0);
  CHECK(r.out == "(6)\n");
}

TEST_CASE("rsk forward, inverse and round trips") {
  const auto hlr = scratch("w_hlr.txt", "1 -\n0 2\n1 0\n0 -\n");
  const auto pattern = scratch("w_hlr.pat");
  auto r = lppqs_cli({"rsk", "--input", hlr.string(), "--geometry", "p2hlr", "--u", "4", "--output", pattern.string()});
  CHECK(r.code == 0);
  check_golden("rsk_p2hlr_u4.txt", slurp(pattern));
  r = lppqs_cli({"rsk", "--input", pattern.string(), "--geometry", "p2hlr", "--u", "4", "--direction", "inverse"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(hlr));
  CHECK(lppqs_cli({"rsk", "--input", hlr.string(), "--geometry", "p2hlr", "--u", "4", "--roundtrip"}).code == 0);
  CHECK(lppqs_cli({"rsk", "--input", pattern.string(), "--geometry", "p2hlr", "--u", "4", "--direction", "inverse",
                   "--roundtrip"})
            .code == 0);

  const auto l = scratch("w_l.txt", "2 - -\n1 0 -\n0 3 1\n");
  r = lppqs_cli({"rsk", "--input", l.string(), "--geometry", "p2l"});
  CHECK(r.code == 0);
  check_golden("rsk_p2l.txt", r.out);
  CHECK(lppqs_cli({"rsk", "--input", l.string(), "--geometry", "p2l", "--roundtrip"}).code == 0);

  const auto m = scratch("m.txt", "1 0 2\n0 3 1\n");
  for (const std::string rule : {"row", "col"}) {
    r = lppqs_cli({"rsk", "--input", m.string(), "--geometry", "matrix", "--rule", rule});
    CHECK(r.code == 0);
    check_golden("rsk_matrix_" + rule + ".txt", r.out);
    CHECK(lppqs_cli({"rsk", "--input", m.string(), "--geometry", "matrix", "--rule", rule, "--roundtrip"}).code == 0);
  }
}

TEST_CASE("rsk exit codes") {
  const auto bad = scratch("bad.txt", "1 -\n2 x\n");
  CHECK(lppqs_cli({"rsk", "--input", bad.string(), "--geometry", "p2l"}).code == 2);
  const auto heavy = scratch("heavy.txt", "3\n4\n");
  CHECK(lppqs_cli({"rsk", "--input", heavy.string(), "--geometry", "p2hlr", "--u", "2"}).code == 1);
  CHECK(lppqs_cli({"rsk", "--input", heavy.string(), "--geometry", "p2hlr"}).code == 2);
  const auto odd = scratch("odd.pat", "(3)\n");
  CHECK(lppqs_cli({"rsk", "--input", odd.string(), "--geometry", "p2l", "--direction", "inverse"}).code == 1);
  CHECK(lppqs_cli({"rsk", "--input", "/nonexistent/file", "--geometry", "p2l"}).code == 2);
  CHECK(lppqs_cli({"rsk", "--geometry", "p2l"}).code == 2);
}

TEST_CASE("cdf tables") {
  auto r = lppqs_cli({"cdf", "--geometry", "p2pr", "--n", "1", "--y", "1/2", "--u-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n3 15/16\n") != std::string::npos);
  check_golden("cdf_p2pr_n1.txt", r.out);
  r = lppqs_cli({"cdf", "--geometry", "p2hlr", "--n", "2", "--y", "1/3", "--u-max", "4", "--format", "json"});
  CHECK(r.code == 0);
  check_golden("cdf_p2hlr_n2.json", r.out);
  r = lppqs_cli({"cdf", "--geometry", "p2l", "--n", "2", "--y", "1/2", "--u-max", "3", "--format", "csv"});
  CHECK(r.code == 0);
  check_golden("cdf_p2l_n2.csv", r.out);
  const auto by_q = lppqs_cli({"cdf", "--geometry", "p2pr", "--n", "1", "--q", "0.25", "--u-max", "3"});
  CHECK(by_q.out == lppqs_cli({"cdf", "--geometry", "p2pr", "--n", "1", "--y", "1/2", "--u-max", "3"}).out);
}

TEST_CASE("cdf exit codes") {
  CHECK(lppqs_cli({"cdf", "--n", "1", "--y", "1"}).code == 2);
  CHECK(lppqs_cli({"cdf", "--n", "1", "--y", "-1/2"}).code == 2);
  CHECK(lppqs_cli({"cdf", "--n", "1", "--q", "0.3"}).code == 2);
  CHECK(lppqs_cli({"cdf", "--n", "1"}).code == 2);
  CHECK(lppqs_cli({"cdf", "--n", "1", "--y", "1/2", "--q", "1/4"}).code == 2);
  CHECK(lppqs_cli({"cdf", "--n", "3", "--y", "1/2", "--u-max", "9", "--budget", "1000"}).code == 2);
}

TEST_CASE("simulate is byte-for-byte reproducible") {
  const std::vector<std::string> args{"simulate", "--geometry", "p2hlr", "--n", "5", "--q", "0.49",
                                      "--samples", "500", "--seed", "7"};
  const auto a = lppqs_cli(args), b = lppqs_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  check_golden("simulate_p2hlr_n5.json", a.out);
  const auto j = nlohmann::json::parse(a.out);
  for (const char* key : {"geometry", "n", "q", "seed", "samples", "cdf", "mean", "variance", "normalized"})
    CHECK(j.contains(key));
  CHECK(j["normalized"].contains("c1"));
  CHECK(j["normalized"].contains("c2"));
  CHECK(j["normalized"].contains("histogram"));
  CHECK(j["q"] == 0.49);
  CHECK(j["y"] == "7/10");

  auto csv = args;
  csv.insert(csv.end(), {"--format", "csv"});
  check_golden("simulate_p2hlr_n5.csv", lppqs_cli(csv).out);
}

TEST_CASE("simulate output is independent of the thread cap") {
  const std::vector<std::string> args{"simulate", "--n", "6", "--y", "1/2", "--samples", "800", "--seed", "3"};
  auto one = args, four = args;
  one.insert(one.begin(), {"--threads", "1"});
  four.insert(four.begin(), {"--threads", "4"});
  CHECK(lppqs_cli(one).out == lppqs_cli(four).out);
}

TEST_CASE("simulate factorisation report") {
  const auto r = lppqs_cli({"simulate", "--factorization", "--n", "4", "--y", "1/2", "--samples", "4000", "--seed", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sup_distance"].get<double>() <= 0.1);
  CHECK(j.contains("p2hlr"));
  CHECK(j.contains("p2pr"));
  CHECK(j.contains("p2l"));
  const auto text = lppqs_cli({"simulate", "--factorization", "--n", "4", "--y", "1/2", "--samples", "400", "--format", "text"});
  CHECK(text.out.find("sup_distance ") != std::string::npos);
}

TEST_CASE("simulate exit codes") {
  CHECK(lppqs_cli({"simulate", "--n", "3", "--q", "1.5"}).code == 2);
  CHECK(lppqs_cli({"simulate", "--n", "3", "--q", "0"}).code == 2);
  CHECK(lppqs_cli({"simulate", "--q", "0.5"}).code == 2);
  CHECK(lppqs_cli({"simulate", "--n", "3", "--q", "0.5", "--samples", "0"}).code == 2);
  CHECK(lppqs_cli({"simulate", "--n", "3", "--q", "0.5", "--format", "xml"}).code == 2);
}

TEST_CASE("environment fallback, overridden by flags") {
  setenv("LPPQS_N", "1", 1);
  setenv("LPPQS_Y", "1/2", 1);
  auto r = lppqs_cli({"cdf", "--geometry", "p2pr", "--u-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n3 15/16\n") != std::string::npos);
  r = lppqs_cli({"cdf", "--geometry", "p2pr", "--u-max", "3", "--y", "1/3"});
  CHECK(r.out.find("\n3 80/81\n") != std::string::npos);
  unsetenv("LPPQS_N");
  unsetenv("LPPQS_Y");
}

TEST_CASE("output files, help and usage errors") {
  const auto path = scratch("cdf_out.txt");
  fs::remove(path);
  CHECK(lppqs_cli({"cdf", "--n", "1", "--y", "1/2", "--u-max", "1", "--output", path.string()}).code == 0);
  CHECK(slurp(path).find("1/2") != std::string::npos);
  const auto help = lppqs_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("simulate") != std::string::npos);
  CHECK(lppqs_cli({"simulate", "--help"}).out.find("--samples") != std::string::npos);
  CHECK(lppqs_cli({}).code == 2);
  CHECK(lppqs_cli({"bogus"}).code == 2);
}
