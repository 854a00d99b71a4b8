#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nearprime");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nearprime::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string &key) {
  return (std::filesystem::path(NEARPRIME_FIXTURE_DIR) / (key + ".json")).string();
}

std::filesystem::path scratch(const std::string &name, const std::string &text) {
  const auto p = std::filesystem::temp_directory_path() / ("nearprime-cli-" + name);
  std::ofstream(p) << text;
  return p;
}

nlohmann::json parse(const std::string &text) { return nlohmann::json::parse(text); }

} // namespace

TEST_CASE("classify a fixture") {
  auto r = run({"classify", fixture("klein4"), "--ideal", "0", "--variant", "0", "--notion",
                "classical"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  auto j = run({"classify", fixture("klein4"), "--ideal", "0", "--variant", "2", "--notion",
                "classical", "--json"});
  CHECK(j.code == 0);
  auto doc = parse(j.out);
  CHECK(doc["verdict"] == "false");
  CHECK(doc.contains("witness"));
}

TEST_CASE("witnesses printed by classify replay") {
  auto j = run({"classify", "klein4", "--ideal", "0", "--variant", "c", "--notion",
                "classical", "--json"});
  REQUIRE(j.code == 0);
  const std::string replay = parse(j.out)["witness"]["replay"];
  auto r = run({"classify", "klein4", "--ideal", "0", "--variant", "c", "--notion",
                "classical", "--check-witness", replay});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("replays", 0) == 0);
  auto bad = run({"classify", "klein4", "--ideal", "0", "--variant", "c", "--notion",
                  "classical", "--check-witness", "a=3;b=3;N=0,1,2,3"});
  CHECK(bad.code == 1);
}

TEST_CASE("validation errors exit 1 with a witness") {
  const auto p = scratch("garbage.json", R"({"elements":["0","1"],"add":[[0,1],[1,1]],"mul":[[0,0],[0,0]]})");
  auto r = run({"validate", p.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotAGroup") != std::string::npos);
  auto j = run({"validate", p.string(), "--json"});
  CHECK(j.code == 1);
  std::filesystem::remove(p);

  auto strict = run({"validate", "z6", "--strict"});
  CHECK(strict.code == 1);
  CHECK(strict.err.find("NotZeroSymmetric") != std::string::npos);
  CHECK(run({"validate", "z6"}).code == 0);
  CHECK(run({"validate", "z4-cyclic"}).code == 1);
  auto recorded = run({"validate", "z4-cyclic", "--record"});
  CHECK(recorded.code == 1);
  CHECK(recorded.out.find("NotAssociativeMul") != std::string::npos);
  CHECK(recorded.out.find("kept under --record") != std::string::npos);
}

TEST_CASE("usage errors exit 3") {
  CHECK(run({}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"classify", "klein4", "--variant", "7", "--ideal", "0", "--notion", "prime"}).code == 3);
  CHECK(run({"catalog", "show", "nope"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate, msystem, ann") {
  auto e = run({"enumerate", "klein4", "--kind", "r-submodule", "--json"});
  REQUIRE(e.code == 0);
  auto doc = parse(e.out);
  CHECK(doc["sets"].size() == 4);
  auto m = run({"msystem", "klein4", "--set", "1,2,3", "--variant", "0"});
  CHECK(m.code == 0);
  CHECK(m.out.find("m_0-system: true") != std::string::npos);
  auto a = run({"ann", "klein4", "--set", "0,3", "--ring"});
  CHECK(a.code == 0);
  CHECK(a.out.find("left-ideal: holds") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "klein4", "--theorem", "chain"}).code == 0);
  CHECK(run({"verify", "z6", "--theorem", "chain"}).code == 2);
  CHECK(run({"verify", "klein4", "--theorem", "nope"}).code == 3);
}

TEST_CASE("near-field and power commands") {
  auto n = run({"nearfield", "dn32"});
  CHECK(n.code == 0);
  CHECK(n.out.find("81/81") != std::string::npos);
  auto emitted = run({"nearfield", "dn32", "--emit-json"});
  REQUIRE(emitted.code == 0);
  const auto p = scratch("dn32.json", emitted.out);
  auto v = run({"power", p.string(), "-n", "2", "--json"});
  CHECK(v.code == 0);
  auto doc = parse(v.out);
  CHECK(doc["size"] == 81);
  CHECK(doc["r_ideals"] == 4);
  std::filesystem::remove(p);
}

TEST_CASE("catalog commands") {
  auto l = run({"catalog", "list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("dn32") != std::string::npos);
  auto r = run({"catalog", "run", "--json"});
  CHECK(r.code == 0);
  auto again = run({"catalog", "run", "--json"});
  CHECK(r.out == again.out);
  auto doc = parse(r.out);
  CHECK(doc.contains("entries"));
  auto e = run({"catalog", "run", "klein4"});
  CHECK(e.code == 0);
}

TEST_CASE("module files may name their ring") {
  const auto dir = std::filesystem::temp_directory_path() / "nearprime-cli-mod";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "ring.json")
      << R"({"elements":["0","1"],"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]})";
  std::ofstream(dir / "mod.json") << R"({"ring":"ring","elements":["0","1","2","3"],
    "add":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],
    "action":[[0,0,0,0],[0,1,2,3]]})";
  auto r = run({"enumerate", (dir / "mod.json").string(), "--kind", "r-submodule"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5 r-submodule") != std::string::npos);
  auto k = run({"validate", (dir / "mod.json").string()});
  CHECK(k.code == 0);
  std::filesystem::remove_all(dir);
}
