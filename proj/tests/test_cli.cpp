#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {
struct Run {
  int code;
  std::string out, err;
};
Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = thinlie::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(THINLIE_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}
}  // namespace

TEST_CASE("free-dims") {
  const Run r = run({"free-dims", "-p", "3", "--max-degree", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dims: 2 1 2 3 6 9 18 30 56 99") != std::string::npos);
}

TEST_CASE("compute") {
  const Run r = run({"compute", "--preset", "theorem41", "-p", "3", "-n", "1", "-s", "1", "--max-degree", "25",
                     "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dims"][4] == 2);  // degree 5
  const std::string rel = temp_file("custom.rel", "p=3\n[y,x,y]\n");
  const Run c = run({"compute", "--relators", rel, "--max-degree", "6"});
  CHECK(c.code == 0);
  CHECK(c.out.find("dims: 2 1 1") != std::string::npos);
}

TEST_CASE("analyze") {
  const Run ok = run({"analyze", "--preset", "theorem41", "-p", "3", "-n", "1", "-s", "1", "--max-degree", "25"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("genuine-finite") != std::string::npos);
  const Run free = run({"analyze", "--preset", "free", "-p", "3", "--max-degree", "8"});
  CHECK(free.code == 3);
  const Run dead = run({"analyze", "--preset", "minus1", "-p", "5", "-n", "1", "-a", "4", "--max-degree", "28",
                        "--format", "json"});
  CHECK(dead.code == 0);
  CHECK(nlohmann::json::parse(dead.out)["collapse_degree"] <= 23);
}

TEST_CASE("saved algebras can be analyzed") {
  const std::string path = std::string(THINLIE_TEST_TMP) + "/alg.json";
  CHECK(run({"compute", "--preset", "theorem41", "-p", "3", "-n", "1", "-s", "1", "--max-degree", "16",
             "--save-algebra", path})
            .code == 0);
  const Run r = run({"analyze", "--algebra", path, "-n", "1", "--format", "json"});
  CHECK(r.code == 0);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "theorem41", "-p", "3", "-n", "1", "-s", "1", "--max-degree", "25"}).code == 0);
  const Run l = run({"verify", "ldies", "-p", "5", "-n", "1", "-a", "4", "--max-degree", "28"});
  CHECK(l.code == 0);
  CHECK(l.out.find("observed 23") != std::string::npos);
  const std::string m = temp_file("bad.json", R"({"schema":"thinlie.manifest/1","experiments":[{"name":"theorem41","p":3,"n":1,"s":1,"max_degree":25}]})");
  CHECK(run({"verify", "all", "--manifest", m, "--format", "json"}).code == 0);
}

TEST_CASE("binom") {
  const Run r = run({"binom", "-p", "3", "7", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"compute", "--bogus"}).code == 2);
  CHECK(run({"compute", "--preset", "theorem41", "-p", "4", "-n", "1", "-s", "1", "--max-degree", "12"}).code == 2);
  CHECK(run({"compute", "--preset", "theorem41", "-p", "3", "--max-degree", "12"}).code == 2);
  CHECK(run({"compute", "--preset", "theorem41", "-p", "3", "-n", "1", "-s", "1", "--max-degree", "9"}).code == 2);
  const std::string bad = temp_file("bad.rel", "p=3\n[x^0]\n");
  const Run r = run({"compute", "--relators", bad, "--max-degree", "6"});
  CHECK(r.code == 2);
  CHECK(r.err.find("empty word") != std::string::npos);
  CHECK(run({"verify", "theorem41", "-p", "3"}).code == 2);
  CHECK(run({"verify", "nope"}).code == 2);
}

TEST_CASE("verification failures exit 1") {
  const std::string m = temp_file(
      "fail.json",
      R"({"schema":"thinlie.manifest/1","experiments":[{"name":"second-diamond","p":3,"n":1,"s":1,"max_degree":25,"expected":7}]})");
  const Run r = run({"verify", "all", "--manifest", m});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL second-diamond") != std::string::npos);
}
