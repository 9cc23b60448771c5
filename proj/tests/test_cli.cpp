#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "wqo/text.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wqo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wqo_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"cnf", "compare", "--spec", "omega", "--height", "1", "[2,1]", "[2,0,0]"});
  CHECK(r.code == 0);
  CHECK(r.out == "GT\n");

  r = run({"barrier", "pairs", "--k", "1", "--window", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0,|1\n0,|2\n1,|2\n");

  r = run({"cnf", "compare", "--spec", "omega", "--height", "1", "[1,3]"});
  CHECK(r.code == 1);
  CHECK(r.err.find("violation at index 1") != std::string::npos);
}

TEST_CASE("order, cnf, higman and barrier commands") {
  CHECK(run({"order", "compare", "--spec", "omega+(fin:2)", "w.5", "y.w.0"}).out == "LT\n");
  CHECK(run({"order", "compare", "--spec", "omega", "3", "w.3"}).out == "EQ\n");
  CHECK(run({"order", "zero", "--spec", "omega"}).out == "w.0\n");
  CHECK(run({"order", "zero", "--spec", "fin:2"}).code == 1);
  CHECK(run({"order", "one-plus", "--spec", "omega", "w.4"}).out == "w.5\n");
  CHECK(run({"cnf", "c", "--spec", "omega", "--height", "1", "[2,1]", "[2,0]"}).out == "w.2\n");
  CHECK(run({"cnf", "j", "--spec", "omega", "--height", "1", "[2,1]", "[2,0]"}).out == "1\n");
  CHECK(run({"cnf", "one-plus", "--spec", "omega", "--height", "1", "[0]"}).out == "[w.0,w.0]\n");
  CHECK(run({"cnf", "validate", "--spec", "omega", "--height", "2", "[[1],[2]]"}).code == 1);
  CHECK(run({"higman", "embed", "--q", "omega", "[1,2]", "[0,1,3,2]"}).out == "true\n");
  CHECK(run({"higman", "embed", "--q", "omega", "[2,2]", "[2,1,1]"}).out == "false\n");
  CHECK(run({"barrier", "union", "0,1", "1,3"}).out == "0,1,3\n");
  CHECK(run({"barrier", "split", "0,1,3"}).out == "0,1,|1,3\n");
  CHECK(run({"barrier", "union", "0,2", "1,3"}).code == 1);
  const auto nodes = run({"barrier", "nodes", "--k", "2", "--window", "4"});
  CHECK(nodes.out == "0,1\n0,2\n0,3\n1,2\n1,3\n2,3\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"cnf", "compare", "--spec", "omega", "--height", "1", "[1]"}).code == 2);
  CHECK(run({"barrier", "pairs", "--k", "1", "--window", "3", "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"order", "compare", "--spec", "omega", "1"}).code == 2);
}

TEST_CASE("domain errors name the error") {
  auto r = run({"order", "compare", "--spec", "omegaa", "1", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.starts_with("error: ParseError"));
  r = run({"transform", "run", "--spec", "omega", "--height", "1", "--start", "[1]", "--fuel", "2",
           "--steps", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("WindowTooSmall") != std::string::npos);
  r = run({"transform", "run", "--spec", "omega", "--height", "3", "--start", "[[[1]]]", "--fuel",
           "2", "--steps", "100000"});
  CHECK(r.code == 1);
  CHECK(r.err.find("WindowTooLarge") != std::string::npos);
}

TEST_CASE("random terms depend only on the seed") {
  const std::vector<std::string> base{"cnf", "random", "--spec", "omega", "--height", "2",
                                      "--count", "5"};
  auto with_seed = [&](const char* seed) {
    auto args = base;
    args.insert(args.end(), {"--seed", seed});
    return run(args).out;
  };
  CHECK(with_seed("7") == with_seed("7"));
  CHECK(with_seed("7") != with_seed("8"));
  CHECK(run(base).out == with_seed("1"));
  auto file = wqo::parse_sequence_file(with_seed("7"));
  CHECK(file.terms.size() == 5);
  CHECK(file.height == 2);
}

TEST_CASE("transform run reports") {
  const std::vector<std::string> args{"transform", "run",  "--spec",  "omega", "--height", "2",
                                      "--start",   "[[2]]", "--fuel", "2",     "--steps",  "10"};
  auto structured = [&](const char* jobs) {
    auto a = args;
    a.insert(a.end(), {"--format", "structured", "--jobs", jobs});
    return run(a);
  };
  auto one = structured("1");
  REQUIRE(one.code == 0);
  CHECK(one.out == structured("4").out);
  CHECK(one.out.find("k=0 verdict=bad witness=-\n") != std::string::npos);
  CHECK(one.out.find("k=2 verdict=bad witness=-\n") != std::string::npos);
  CHECK(one.out.find("proposition=ok\n") != std::string::npos);

  const auto json_path = temp_file("report.json");
  const auto tables_path = temp_file("tables.txt");
  auto a = args;
  a.insert(a.end(), {"--report", json_path.string(), "--tables", tables_path.string()});
  REQUIRE(run(a).code == 0);
  const std::string json = slurp(json_path);
  CHECK(json.starts_with("{"));
  CHECK(json.find("\"verdict\"") != std::string::npos);
  CHECK(slurp(tables_path).find(" -> ") != std::string::npos);
  std::filesystem::remove(json_path);
  std::filesystem::remove(tables_path);
}

TEST_CASE("transform verify reads sequence files") {
  const auto path = temp_file("seq.txt");
  {
    std::ofstream f(path);
    f << "spec=omega height=1\n[3]\n[2,2]\n[2]\n[1]\n";
  }
  auto r = run({"transform", "verify", "--input", path.string(), "--format", "structured"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k=1 verdict=bad") != std::string::npos);
  {
    std::ofstream f(path);
    f << "spec=omega height=1\n[3]\n[2]\n[2,1]\n";
  }
  r = run({"transform", "verify", "--input", path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotDescending") != std::string::npos);
  {
    std::ofstream f(path);
    f << "spec=omega height=1\n[3]\n[2\n";
  }
  r = run({"transform", "verify", "--input", path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(run({"transform", "verify", "--input", temp_file("missing").string()}).code != 0);
  std::filesystem::remove(path);
}
