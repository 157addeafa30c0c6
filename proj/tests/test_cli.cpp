#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(MLC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

long count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
}

}  // namespace

TEST_CASE("construct") {
  const Run omega = run("construct --family omega --n 5 --format dot");
  CHECK(omega.exit_code == 0);
  CHECK(count_matches(omega.out, R"(v\d+ \[label=)") == 11);

  const Run fence = run("construct --family lfence --n 4 --format json");
  CHECK(fence.exit_code == 0);
  const auto j = nlohmann::json::parse(fence.out);
  CHECK(j.at("n") == 4);
  CHECK(j.at("labels").size() == 4);

  const Run chain = run("construct --family lucasene --n 6 --format json");
  CHECK(chain.exit_code == 0);
  CHECK(nlohmann::json::parse(chain.out).at("n") == 26);

  CHECK(run("construct --family omega --n 4").exit_code == 0);
  CHECK(run("construct --family gamma --n 4 --format dot").exit_code == 0);
  CHECK(run("construct --family lambda --n 4 --format json").exit_code == 0);
  CHECK(run("construct --family fence --n 3").exit_code == 0);
}

TEST_CASE("construct writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "mlc_cli_test.json";
  std::filesystem::remove(path);
  const Run r = run("construct --family omega --n 3 --out " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(nlohmann::json::parse(ss.str()).at("n") == 4);
  std::filesystem::remove(path);
}

TEST_CASE("poly") {
  CHECK(run("poly --kind cube --n 5 --method recurrence").out == "11 15 5\n");
  CHECK(run("poly --kind indegree --n 4").out == "1 4 2\n");
  CHECK(run("poly --kind rank --n 0").out == "1\n");
  const Run j = run("poly --kind cube --n 5 --format json");
  CHECK(j.exit_code == 0);
  CHECK(nlohmann::json::parse(j.out).at("coeffs") == nlohmann::json::parse(R"(["11","15","5"])"));
  CHECK(run("poly --kind cube --n 5 --format csv").out == "k,coefficient\n0,11\n1,15\n2,5\n");
}

TEST_CASE("table") {
  CHECK(run("table --kind lucas_triangle --rows 6").out ==
        "n,k0,k1,k2,k3,k4,k5\n0,2\n1,1,2\n2,1,3,2\n3,1,4,5,2\n4,1,5,9,7,2\n5,1,6,14,16,9,2\n");
  const Run seq = run("table --kind sequences --rows 10");
  CHECK(seq.exit_code == 0);
  CHECK(seq.out.rfind("n,F,L,J,p'\n0,0,2,2,1\n1,1,1,1,2\n", 0) == 0);
  const Run grid = run("table --kind spectrum_grid --rows 8 --kind-inner cube --format json");
  CHECK(grid.exit_code == 0);
  CHECK(nlohmann::json::parse(grid.out).at("rows").size() == 8);
}

TEST_CASE("verify") {
  const Run ids = run("verify --suite identities --max-n 12 --format json");
  CHECK(ids.exit_code == 0);
  const auto j = nlohmann::json::parse(ids.out);
  CHECK(j.at("failed") == 0);
  CHECK(run("verify --suite resonance --max-n 8").exit_code == 0);
  const Run oracle = run("verify --suite oracle_crosscheck --max-n 8 --format json");
  CHECK(oracle.exit_code == 0);
  CHECK(nlohmann::json::parse(oracle.out).at("discrepancies") == 2);
  // Past n = 8 the packing counts exceed the stated recurrence.
  CHECK(run("verify --suite oracle_crosscheck --max-n 10").exit_code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("poly --kind cube --n 5 --method nope").exit_code == 2);
  CHECK(run("poly --kind nope --n 5").exit_code == 2);
  CHECK(run("poly --kind cube --n -1").exit_code == 2);
  CHECK(run("poly --kind cube --n 5 --format xml").exit_code == 2);
  CHECK(run("construct --family nope --n 3").exit_code == 2);
  CHECK(run("construct --family omega").exit_code == 2);
  CHECK(run("table --kind lucas_triangle --rows 0").exit_code == 2);
  CHECK(run("verify --suite bogus").exit_code == 2);
  CHECK(run("verify --suite oracle_crosscheck --max-n 99").exit_code == 2);
}

TEST_CASE("output is deterministic") {
  CHECK(run("construct --family omega --n 6 --format dot").out ==
        run("construct --family omega --n 6 --format dot").out);
  CHECK(run("construct --family lucasene --n 5").out == run("construct --family lucasene --n 5").out);
}
