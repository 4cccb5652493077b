#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "excentric/cli.hpp"
#include "golden_cases.hpp"

using excentric::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("golden outputs") {
  for (const auto& g : golden_cases()) {
    CAPTURE(g.file);
    const auto r = invoke(g.args);
    CHECK(r.code == g.exit_code);
    CHECK(r.out == read_file(std::string(EXCENTRIC_GOLDEN_DIR) + "/" + g.file));
    CHECK(r.err.empty());
  }
}

TEST_CASE("repeated invocations are byte-identical") {
  for (const auto& g : golden_cases()) {
    CHECK(invoke(g.args).out == invoke(g.args).out);
  }
}

TEST_CASE("eval rex at k = 1, Secondary, is -2 cos theta") {
  const auto r = invoke({"eval", "rex", "--k", "1", "--eps", "0", "--det", "2", "--from", "0",
                         "--to", "6.2832", "--steps", "5"});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "theta,rex");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    double theta = 0.0;
    double value = 0.0;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%lf", &theta, &value) == 2);
    CHECK(value == doctest::Approx(-2.0 * std::cos(theta)).epsilon(1e-12));
  }
}

TEST_CASE("eval Rex at k = 0 is constant 1") {
  const auto r = invoke({"eval", "Rex", "--k", "0", "--from", "-1", "--to", "1", "--steps", "4"});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 5);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].substr(lines[i].find(',')) == ",1");
  }
}

TEST_CASE("eval leaves domain-excluded cells empty") {
  const auto r = invoke({"eval", "rex", "--k", "2", "--eps", "0", "--det", "1", "--from", "0",
                         "--to", "3.14", "--steps", "7"});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    CHECK(lines[i].back() == ',');
  }
  CHECK(lines.back().back() != ',');
}

TEST_CASE("integrate closed on the circle is a principal value") {
  const auto r = invoke({"integrate", "poisson", "--k", "1", "--method", "closed"});
  CHECK(r.code == 0);
  CHECK(r.out.find("closed: 0 principal-value\n") != std::string::npos);
}

TEST_CASE("sweep i1 trichotomy") {
  const auto r = invoke({"sweep", "i1", "--k-list", "0.5,1,2"});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 4);
  const double expected[] = {2.0 * M_PI, M_PI, 0.0};
  for (int i = 0; i < 3; ++i) {
    double k = 0.0;
    double eps = 0.0;
    double closed = 0.0;
    REQUIRE(std::sscanf(lines[i + 1].c_str(), "%lf,%lf,%lf", &k, &eps, &closed) == 3);
    CHECK(closed == doctest::Approx(expected[i]).scale(1.0));
  }
}

TEST_CASE("exit codes") {
  // usage
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"eval", "nosuch", "--k", "0", "--from", "0", "--to", "1"}).code == 2);
  CHECK(invoke({"eval", "rex", "--k", "0", "--from", "0", "--to", "1", "--steps", "1"}).code == 2);
  CHECK(invoke({"eval", "rex,Rex", "--k", "0", "--from", "0", "--to", "1"}).code == 2);
  CHECK(invoke({"eval", "rex", "--k", "0", "--det", "3", "--from", "0", "--to", "1"}).code == 2);
  CHECK(invoke({"eval", "rex", "--k", "nan", "--from", "0", "--to", "1"}).code == 2);
  CHECK(invoke({"integrate", "poisson"}).code == 2);
  CHECK(invoke({"integrate", "i3", "--k", "0"}).code == 2);
  CHECK(invoke({"integrate", "i1", "--k", "0", "--tol", "0"}).code == 2);
  CHECK(invoke({"sweep", "i1", "--k-list", ""}).code == 2);
  CHECK(invoke({"sweep", "i1"}).code == 2);
  CHECK(invoke({"check", "--samples", "0"}).code == 2);

  // domain: nothing in range exists for |k| > 1
  const auto d = invoke({"eval", "rex", "--k", "2", "--from", "0", "--to", "1", "--steps", "3"});
  CHECK(d.code == 3);
  CHECK_FALSE(d.err.empty());

  // mismatch: the Poisson integral has no principal value at |k| = 1
  CHECK(invoke({"integrate", "poisson", "--k", "1", "--method", "both"}).code == 1);
  const auto m = invoke({"sweep", "poisson", "--k-list", "0.5,1"});
  CHECK(m.code == 1);
  CHECK(m.out.find(",fail\n") != std::string::npos);

  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("--out writes the same bytes as standard output") {
  const auto path = std::filesystem::temp_directory_path() / "excentric_cli_out_test.csv";
  std::filesystem::remove(path);
  const auto r = invoke({"sweep", "i1", "--k-list", "0.5,1,2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(read_file(path.string()) == r.out);
  std::filesystem::remove(path);
}
