#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "treelab/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "treelab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = treelab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("fibtree build --method grow --format json") {
  const auto r = run({"fibtree", "build", "--height", "4", "--method", "grow", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["nodes"] == 12);
  CHECK(j["summary"]["leaves"] == 5);
  std::vector<int> added;
  for (const auto& g : j["generations"]) added.push_back(g["leaves_added"]);
  CHECK(added == std::vector<int>{1, 1, 2, 3, 5});
  CHECK(j.contains("config"));
}

TEST_CASE("fibtree build --format dot") {
  const auto r = run({"fibtree", "build", "--height", "2", "--method", "grow", "--format", "dot"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2 + 4 + 3 + 1);
  CHECK(l.front() == "digraph avl {");
  CHECK(l[2] == "  n0 [label=\"3\", fillcolor=\"/set312/1\"];");
  CHECK(r.out.find("n0 -> n1;") != std::string::npos);
  CHECK(l.back() == "}");

  const auto plain = run({"fibtree", "build", "--height", "1", "--format", "dot"});
  CHECK(plain.out.find("fillcolor=\"/set") == std::string::npos);
}

TEST_CASE("fibtree build --out writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "treelab_cli_build.json";
  const auto r = run({"fibtree", "build", "--height", "3", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["summary"]["nodes"] == 7);
  std::filesystem::remove(path);
}

TEST_CASE("heap trace csv") {
  const auto r = run({"heap", "trace", "--size", "7", "--input", "ascending", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "step,root_index,left_level,right_level,case,actual_cost,phi_before,phi_after,amortized");
  CHECK(l[1] == "1,3,1,1,same,1,7,6,0");
  CHECK(l[2] == "2,2,1,1,same,1,6,5,0");
  CHECK(l[3] == "3,1,2,2,same,2,5,3,0");
}

TEST_CASE("heap trace json mirrors the csv fields") {
  const auto r = run({"heap", "trace", "--size", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["summary"]["total_actual"] == 3);
  CHECK(j["summary"]["phi_initial"] == 4);
  CHECK(j["summary"]["phi_final"] == 3);
  REQUIRE(j["events"].size() == 2);
  std::string keys;
  for (const auto& [k, v] : j["events"][0].items()) keys += (keys.empty() ? "" : ",") + k;
  CHECK(keys == "step,root_index,left_level,right_level,case,actual_cost,phi_before,phi_after,amortized");
  CHECK(j["events"][0]["case"] == "diff");
}

TEST_CASE("heap trace is deterministic for random input") {
  const std::vector<std::string> args{"heap", "trace", "--size", "64", "--input", "random", "--seed", "7", "--format", "csv"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(lines(a.out).size() == 33);
  const auto other = run({"heap", "trace", "--size", "64", "--input", "random", "--seed", "8"});
  CHECK(other.out != a.out);
}

TEST_CASE("heap trace from a file") {
  const auto path = std::filesystem::temp_directory_path() / "treelab_cli_input.txt";
  {
    std::ofstream f(path);
    f << "1\n2\n3\n4\n";
  }
  const auto r = run({"heap", "trace", "--input", "file", "--file", path.string()});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 3);

  {
    std::ofstream f(path);
    f << "1\nx\n";
  }
  CHECK(run({"heap", "trace", "--input", "file", "--file", path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"heap", "trace", "--input", "file", "--file", path.string()}).code == 2);
  CHECK(run({"heap", "trace", "--input", "file"}).code == 2);
}

TEST_CASE("heap trace n = 0") {
  const auto r = run({"heap", "trace", "--size", "0"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 1);
}

TEST_CASE("verification subcommands") {
  CHECK(run({"fibtree", "verify", "--max-height", "12"}).code == 0);
  CHECK(run({"heap", "verify", "--max-size", "128", "--seeds", "2"}).code == 0);
  CHECK(run({"oracle", "avl", "--max-height", "4"}).code == 0);
  const auto heap = run({"oracle", "heap", "--max-size", "8"});
  CHECK(heap.code == 0);
  CHECK(lines(heap.out).back() == "8,7,6,7,ok,no,yes");
  const auto avl = run({"avl", "experiment", "--n", "1000", "--input", "random", "--seed", "3", "--format", "csv"});
  CHECK(avl.code == 0);
  CHECK(lines(avl.out).front() == "n,height,bound,pass");
  CHECK(lines(avl.out).back().rfind("1000,", 0) == 0);
  CHECK(run({"avl", "experiment", "--n", "100", "--input", "ascending"}).code == 0);
}

TEST_CASE("verify all") {
  const auto r = run({"verify", "all", "--max-height", "12", "--max-size", "256"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "verify all: pass");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"heap", "trace", "--size", "abc"}).code == 2);
  CHECK(run({"heap", "trace", "--bogus"}).code == 2);
  CHECK(run({"heap", "trace", "--input", "sideways"}).code == 2);
  CHECK(run({"fibtree", "build"}).code == 2);
  CHECK(run({"fibtree", "build", "--height", "-1"}).code == 2);
  CHECK(run({"oracle", "avl", "--max-height", "9"}).code == 2);
  CHECK(run({"oracle", "heap", "--max-size", "12"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("installed binary exit codes") {
  const std::string tool = TREELAB_TOOL_PATH;
  CHECK(std::system((tool + " heap trace --size 7 > /dev/null").c_str()) == 0);
  CHECK(WEXITSTATUS(std::system((tool + " heap trace --nope 2> /dev/null").c_str())) == 2);
}
