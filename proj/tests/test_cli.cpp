#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "reductlab/bounds.hpp"
#include "reductlab/table.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(REDUCTLAB_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() / fs::path("reductlab-test-" + std::to_string(::getpid()) +
                                                 "-" + std::to_string(counter()++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path file(const std::string& name) const { return path_ / name; }

private:
  static int& counter() {
    static int value = 0;
    return value;
  }
  fs::path path_;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("analyze prints the one-line summary for two crossing lines") {
  TempDir dir;
  write_file(dir.file("cross.lines"), "v 1 0 0\nh 0 1 0\n");
  auto gen = run_cli("gen lines " + dir.file("cross.lines").string() +
                     " --decisions distinct -o " + dir.file("cross.dtab").string());
  REQUIRE(gen.exit_code == 0);

  auto analyze = run_cli("analyze " + dir.file("cross.dtab").string());
  CHECK(analyze.exit_code == 0);
  CHECK(analyze.output.find("N=4 cl=4 dim=2 R=2 I=2") == 0);
  CHECK(analyze.output.find("reduct: v h") != std::string::npos);
}

TEST_CASE("analyze reports R=0 for a constant-decision table") {
  TempDir dir;
  write_file(dir.file("c.dtab"),
             "alphabet: 0 1\nattributes: f g\n0 0 -> 5\n0 1 -> 5\n1 0 -> 5\n");
  auto analyze = run_cli("analyze " + dir.file("c.dtab").string());
  CHECK(analyze.exit_code == 0);
  CHECK(analyze.output.find("R=0") != std::string::npos);
}

TEST_CASE("analyze rejects malformed input with a position and nonzero exit") {
  TempDir dir;
  write_file(dir.file("bad.dtab"), "alphabet: 0 1\nattributes: f g\n0 2 -> 0\n");
  auto analyze = run_cli("analyze " + dir.file("bad.dtab").string());
  CHECK(analyze.exit_code != 0);
  CHECK(analyze.output.find("line 3") != std::string::npos);
}

TEST_CASE("analyze emits machine-readable JSON") {
  TempDir dir;
  write_file(dir.file("sq.dtab"),
             "alphabet: 0 1\nattributes: f g\n0 0 -> 0\n0 1 -> 1\n1 0 -> 2\n1 1 -> 3\n");
  auto analyze = run_cli("analyze " + dir.file("sq.dtab").string() +
                         " --format json --all-reducts 5");
  REQUIRE(analyze.exit_code == 0);
  const auto j = nlohmann::json::parse(analyze.output);
  CHECK(j.at("N") == 4);
  CHECK(j.at("cl") == 4);
  CHECK(j.at("R") == 2);
  CHECK(j.at("I") == 2);
  CHECK(j.at("reduct").size() == 2);
  CHECK(j.at("reducts").size() == 1);
  CHECK(j.at("reducts_truncated") == false);
}

TEST_CASE("gen output is deterministic and re-parses cleanly") {
  TempDir dir;
  write_file(dir.file("three.lines"), "a 2 -1 -1\nb 4 -1 -4\nc 6 -1 -9\n");
  const std::string base = "gen lines " + dir.file("three.lines").string() +
                           " --decisions random:3 --seed 11 -o ";
  REQUIRE(run_cli(base + dir.file("one.dtab").string()).exit_code == 0);
  REQUIRE(run_cli(base + dir.file("two.dtab").string()).exit_code == 0);
  CHECK(read_file(dir.file("one.dtab")) == read_file(dir.file("two.dtab")));

  const auto table = reductlab::parse_table(read_file(dir.file("one.dtab")));
  CHECK(table.row_count() == 7);
}

TEST_CASE("gen requires a seed for randomized decisions") {
  TempDir dir;
  write_file(dir.file("one.lines"), "v 1 0 0\n");
  auto gen = run_cli("gen lines " + dir.file("one.lines").string() + " --decisions random:2");
  CHECK(gen.exit_code != 0);
  CHECK(gen.output.find("--seed") != std::string::npos);
}

TEST_CASE("gen cube and gen shatter produce the documented tables") {
  TempDir dir;
  REQUIRE(run_cli("gen cube 3 -o " + dir.file("cube.dtab").string()).exit_code == 0);
  const auto cube = reductlab::parse_table(read_file(dir.file("cube.dtab")));
  CHECK(cube.row_count() == 8);
  CHECK(cube.class_count() == 8);
  CHECK(cube.dim() == 3);

  REQUIRE(run_cli("gen shatter 2 -o " + dir.file("sh.dtab").string()).exit_code == 0);
  auto analyze = run_cli("analyze " + dir.file("sh.dtab").string());
  CHECK(analyze.output.find("I=2") != std::string::npos);
}

TEST_CASE("gen polys reproduces the five-cell example") {
  TempDir dir;
  write_file(dir.file("xs.poly"), "x 0 1\ny -1 1\n");
  auto gen = run_cli("gen polys " + dir.file("xs.poly").string());
  REQUIRE(gen.exit_code == 0);
  CHECK(gen.output.find("alphabet: -1 0 +1") != std::string::npos);
  const auto parsed = reductlab::parse_table(gen.output);
  CHECK(parsed.row_count() == 5);
}

TEST_CASE("verify runs a small config, writes a report and exits by verdict") {
  TempDir dir;
  write_file(dir.file("config.json"), R"({
    "random_tables": {"count": 20, "seed": 4, "max_dim": 6, "max_rows": 16},
    "cubes": {"min_n": 2, "max_n": 4},
    "shatter": {"min_p": 1, "max_p": 2}
  })");
  auto verify = run_cli("verify " + dir.file("config.json").string() + " -o " +
                        dir.file("report.json").string());
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("fail=0") != std::string::npos);
  const auto report = nlohmann::json::parse(read_file(dir.file("report.json")));
  REQUIRE(report.is_array());
  CHECK(report.size() > 0);
  for (const auto& entry : report) {
    CHECK(entry.contains("check"));
    CHECK(entry.contains("instance"));
    CHECK(entry.contains("lhs"));
    CHECK(entry.contains("rhs"));
    CHECK(entry.contains("holds"));
    CHECK(entry.contains("skipped"));
    CHECK(entry.contains("seed"));
  }
}

TEST_CASE("verify fails on a corrupted golden table and passes on the true one") {
  TempDir dir;
  write_file(dir.file("golden.dtab"),
             "alphabet: 0 1\nattributes: f g\n0 0 -> 0\n0 1 -> 1\n1 0 -> 2\n1 1 -> 3\n");
  const std::string config_tail =
      R"(", "expect": {"N": 4, "cl": 4, "dim": 2, "R": 2, "I": 2}}]})";

  write_file(dir.file("good.json"),
             R"({"golden_tables": [{"path": ")" + dir.file("golden.dtab").string() +
                 config_tail);
  CHECK(run_cli("verify " + dir.file("good.json").string()).exit_code == 0);

  // Corrupt the table: drop a row, so N, cl and I all change.
  write_file(dir.file("golden.dtab"),
             "alphabet: 0 1\nattributes: f g\n0 0 -> 0\n0 1 -> 1\n1 0 -> 2\n");
  auto verify = run_cli("verify " + dir.file("good.json").string());
  CHECK(verify.exit_code != 0);
  CHECK(verify.output.find("fail=1") != std::string::npos);
}

TEST_CASE("verify accepts an empty config") {
  TempDir dir;
  write_file(dir.file("empty.json"), "{}");
  auto verify = run_cli("verify " + dir.file("empty.json").string());
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("[]") != std::string::npos);
}

TEST_CASE("verify names malformed config fields") {
  TempDir dir;
  write_file(dir.file("bad.json"), R"({"random_tables": {"count": "many"}})");
  auto verify = run_cli("verify " + dir.file("bad.json").string());
  CHECK(verify.exit_code != 0);
  CHECK(verify.output.find("random_tables.count") != std::string::npos);
}

TEST_CASE("nc prints the growth rows for each family") {
  auto lines = run_cli("nc --family lines --n 3 --budget 2 --seed 1");
  CHECK(lines.exit_code == 0);
  CHECK(lines.output.find("n=1 max_rows=2 exact=2") != std::string::npos);
  CHECK(lines.output.find("n=2 max_rows=4 exact=4") != std::string::npos);
  CHECK(lines.output.find("n=3 max_rows=7 exact=7") != std::string::npos);

  auto cubes = run_cli("nc --family cubes --n 3");
  CHECK(cubes.exit_code == 0);
  CHECK(cubes.output.find("n=3 max_rows=8 exact=8") != std::string::npos);

  auto polys = run_cli("nc --family polys --n 2 --budget 2 --seed 1 --format json");
  CHECK(polys.exit_code == 0);
  const auto j = nlohmann::json::parse(polys.output);
  REQUIRE(j.is_array());
  CHECK(j.at(1).at("max_rows").get<std::uint64_t>() >= 5);

  auto unknown = run_cli("nc --family circles --n 2");
  CHECK(unknown.exit_code != 0);
}

TEST_CASE("the shipped default verify config parses to the built-in defaults") {
  const auto text = read_file(fs::path(REDUCTLAB_SOURCE_DIR) / "configs" / "default.json");
  const auto parsed = reductlab::parse_suite_config(text);
  CHECK(parsed.random_tables.has_value());
  CHECK(parsed.random_tables->count == 1200);
  CHECK(parsed.lines.has_value());
  CHECK(parsed.polys.has_value());
  CHECK(parsed.cubes.has_value());
  CHECK(parsed.shatter.has_value());
}
