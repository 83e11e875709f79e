#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tguard::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(TGUARD_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("valley is optimal with two guards") {
  const Run r = run({"--input", data("valley.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("status optimal\nguards 2\n"));
  CHECK(r.err.empty());
}

TEST_CASE("single step is infeasible") {
  const Run r = run({"--input", data("step.txt")});
  CHECK(r.code == 2);
  CHECK(r.out.starts_with("status infeasible\n"));
  const Run p = run({"--input", data("step.txt"), "--allow-partial"});
  CHECK(p.code == 0);
  CHECK(p.out.starts_with("status partial\n"));
}

TEST_CASE("oracle cross-check") {
  const Run r = run({"--input", data("valley.txt"), "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle: match (2 = 2)\n") != std::string::npos);
  const Run c = run({"--input", data("comb3.txt"), "--oracle", "--quiet"});
  CHECK(c.code == 0);
  CHECK(c.out.starts_with("oracle: match ("));
  const Run big = run({"--random", "5:40", "--oracle", "--allow-partial", "--quiet"});
  CHECK(big.code == 0);
  CHECK(big.err.find("oracle: skipped") != std::string::npos);
}

TEST_CASE("random input, matrix dump, svg") {
  const auto svg = std::filesystem::temp_directory_path() / "tguard_cli_test.svg";
  const Run r = run({"--random", "3:6", "--matrix", "--allow-partial", "--svg", svg.string()});
  CHECK((r.code == 0));
  CHECK(r.out.find("matrix 6 6\ncols ") != std::string::npos);
  std::ifstream in(svg);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().starts_with("<?xml"));
  std::filesystem::remove(svg);

  const Run again = run({"--random", "3:6", "--matrix", "--allow-partial"});
  CHECK(again.out == run({"--random", "3:6", "--matrix", "--allow-partial"}).out);
}

TEST_CASE("input errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"--input", data("missing.txt")}).code == 1);
  CHECK(run({"--random", "nonsense"}).code == 1);
  CHECK(run({"--random", "1:0"}).code == 1);
  CHECK(run({"--input", data("valley.txt"), "--random", "1:2"}).code == 1);
  CHECK(run({"--bogus"}).code == 1);
}
