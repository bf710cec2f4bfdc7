#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "treebal/builders.hpp"
#include "treebal/counts.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = treebal::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  for (const auto& l : lines(text)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("index on text, stdin and builders") {
  auto r = invoke({"index", "--newick", "((,),);"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "colless: 1"));

  r = invoke({"index", "--stdin"}, "((a,b),c);\n");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "colless: 1"));

  r = invoke({"index", "--build", "cat", "--n", "7"});
  CHECK(has_line(r.out, "colless: 15"));

  r = invoke({"index", "--build", "gfb", "--n", "6"});
  CHECK(has_line(r.out, "colless: 2"));
  CHECK(has_line(r.out, "colless_minimal: true"));

  r = invoke({"index", "--build", "fb", "--k", "3"});
  CHECK(has_line(r.out, "n: 8"));
  CHECK(has_line(r.out, "colless: 0"));
}

TEST_CASE("json output round-trips numbers") {
  for (const char* kind : {"cat", "mb", "gfb"}) {
    const auto r = invoke({"--json", "index", "--build", kind, "--n", "37"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto tree = treebal::build(*treebal::parse_builder_kind(kind), 37);
    CHECK(j.at("n").get<std::uint64_t>() == 37);
    CHECK(j.at("colless").get<std::uint64_t>() == oracle::colless(tree));
    CHECK(j.at("sackin").get<std::uint64_t>() == oracle::sackin(tree));
    CHECK(j.at("root_partition").size() == 2);
    CHECK(j.dump() + "\n" == r.out);
  }
  const auto counts = invoke({"--json", "count", "--kind", "sackin", "--max", "200"});
  REQUIRE(counts.code == 0);
  const auto arr = nlohmann::json::parse(counts.out);
  REQUIRE(arr.size() == 200);
  CHECK(treebal::BigCount(arr[199].get<std::string>()) == treebal::count_sackin_minimal(200));
}

TEST_CASE("invalid input exits 1") {
  CHECK(invoke({"index", "--newick", "((,,),);"}).code == treebal::cli::kInvalidInput);
  CHECK(invoke({"index", "--newick", "(,)"}).err.find("offset 3") != std::string::npos);
  CHECK(invoke({"index"}).code == 1);
  CHECK(invoke({"index", "--build", "fb", "--n", "6"}).code == 1);
  CHECK(invoke({"index", "--build", "xyz", "--n", "6"}).code == 1);
  CHECK(invoke({"min", "--n", "0"}).code == 1);
  CHECK(invoke({"min", "--n", "abc"}).code == 1);
  CHECK(invoke({"qb", "--n", "1"}).code == 1);
  CHECK(invoke({"count", "--kind", "other", "--max", "3"}).code == 1);
  CHECK(invoke({"nonsense"}).code == 1);
  CHECK(invoke({}).code == 1);
}

TEST_CASE("help exits 0") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("min") {
  CHECK(invoke({"min", "--n", "24", "--method", "both"}).out == "8, 8\n");
  CHECK(invoke({"min", "--n", "1"}).out == "0\n");
  CHECK(invoke({"min", "--n", "23"}).out == "10\n");
  CHECK(invoke({"min", "--n", "23", "--method", "explicit"}).out == "10\n");
}

TEST_CASE("build and qb") {
  CHECK(invoke({"build", "--kind", "gfb", "--n", "6"}).out == "(((,),(,)),(,));\n");
  CHECK(invoke({"build", "--kind", "cat", "--n", "1"}).out == ";\n");
  CHECK(invoke({"qb", "--n", "12"}).out == "8,4\n6,6\n");
}

TEST_CASE("enumerate and the size guard") {
  auto r = invoke({"enumerate", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 3);

  r = invoke({"enumerate", "--n", "12", "--summary"});
  CHECK(has_line(r.out, "colless_min_value: 4"));
  CHECK(has_line(r.out, "sackin_min_value: 44"));

  CHECK(invoke({"enumerate", "--n", "30"}).code == treebal::cli::kGuardExceeded);
  CHECK(invoke({"--limit", "8", "enumerate", "--n", "9"}).code == 3);
  CHECK(invoke({"enumerate", "--n", "9", "--limit", "8"}).code == 3);
  CHECK(invoke({"--limit", "8", "verify", "--enum", "9"}).code == 3);
}

TEST_CASE("count prints one value per line") {
  const auto r = invoke({"count", "--kind", "colless", "--max", "12"});
  CHECK(r.out == "1\n1\n1\n1\n1\n2\n1\n1\n1\n3\n3\n4\n");
  CHECK(lines(invoke({"count", "--kind", "bound-b", "--max", "32"}).out).size() == 32);
}

TEST_CASE("curve csv") {
  const auto path = std::filesystem::temp_directory_path() / "treebal_curve_test.csv";
  const auto r = invoke({"curve", "--max", "128", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream file(path);
  std::stringstream buf;
  buf << file.rdbuf();
  const auto rows = lines(buf.str());
  REQUIRE(rows.size() == 129);
  CHECK(rows[0] == "n,c_n,g_n");
  CHECK(rows[1] == "1,0,");
  CHECK(rows[6] == "6,2,4");
  for (std::uint64_t n = 3; n <= 128; ++n) {
    int parsed_n = 0;
    unsigned long c = 0, g = 0;
    REQUIRE(std::sscanf(rows[n].c_str(), "%d,%lu,%lu", &parsed_n, &c, &g) == 3);
    CHECK(c < g);
  }
  std::filesystem::remove(path);

  const auto bad = invoke({"curve", "--max", "4", "--out", "/nonexistent-dir/x.csv"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("/nonexistent-dir/x.csv") != std::string::npos);
}

TEST_CASE("verify defaults pass") {
  const auto r = invoke({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(has_line(r.out, "PASS Colless-minimal counts n=1..32"));
  CHECK(has_line(r.out, "PASS improved bound n=1..32"));
}
