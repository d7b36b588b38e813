#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "coinweigh/cache.hpp"
#include "coinweigh/cli.hpp"

using namespace coinweigh;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "coinweigh-cli-tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> grundy_column(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    out.push_back(cells.at(9));
  }
  return out;
}

}  // namespace

TEST_CASE("solve") {
  auto r = run({"solve", "--l", "3", "--h", "2", "--e", "1", "--fake", "light-destined", "--fake-weight", "light",
                "--goal", "find", "--play", "normal"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "grundy: 4"));
  CHECK(contains(r.out, "outcome: N"));

  r = run({"solve", "--u", "6", "--e", "0", "--fake", "unknown", "--fake-weight", "light", "--goal", "find", "--play",
           "normal", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["grundy"] == 0);
  CHECK(doc["outcome"] == "P");
  CHECK(doc["dead"] == false);
  CHECK(doc["position"]["u"] == 6);
  CHECK(doc["ruleset"]["variant"] == "none");

  r = run({"solve", "--l", "1", "--h", "1", "--e", "0", "--fake", "light-destined", "--play", "normal"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "grundy: 0"));
  CHECK(contains(r.out, "dead: true"));
}

TEST_CASE("bad input exits 2 naming the violation") {
  auto r = run({"solve", "--l", "1", "--u", "1", "--fake", "unknown"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "u>0 with destined coins"));
  CHECK(run({"solve", "--e", "3", "--fake", "unknown"}).code == 2);
  CHECK(run({"solve", "--u", "3", "--goal", "lose"}).code == 2);
  CHECK(run({"solve", "--u", "3", "--bogus"}).code == 2);
  CHECK(run({"solve", "--u", "100"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("moves") {
  auto r = run({"moves", "--u", "5", "--e", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "* left[fake] vs right[1X] -> (l=1,h=0,u=0,e=5,fake=light-destined,light) terminal, 0"));

  r = run({"moves", "--l", "2", "--h", "2", "--e", "0", "--format", "json"});
  CHECK(r.code == 0);
  std::set<int> totals;
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& m : doc["moves"]) {
    totals.insert(m["successor"]["l"].get<int>() + m["successor"]["h"].get<int>());
  }
  CHECK(totals == std::set<int>{1, 2});

  CHECK(run({"moves", "--l", "1", "--h", "0", "--e", "0"}).code == 3);
  CHECK(run({"moves", "--l", "1", "--h", "1"}).code == 3);
}

TEST_CASE("sweep") {
  auto r = run({"sweep", "--family", "destined-all-light", "--max-n", "4", "--goal", "find", "--play", "normal"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,l,h,u,e,fake,goal,play,variant,grundy,outcome,dead\n", 0) == 0);
  CHECK(grundy_column(r.out) == std::vector<std::string>{"0", "1", "1", "2"});

  r = run({"sweep", "--family", "unknown-plus", "--max-n", "5", "--goal", "find", "--play", "normal"});
  CHECK(grundy_column(r.out) == std::vector<std::string>{"0", "2", "3", "4", "5"});

  r = run({"sweep", "--family", "destined-plus", "--max-n", "3", "--play", "normal"});
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const int n = std::stoi(line.substr(0, line.find(',')));
    CHECK(grundy_column("h\n" + line) == std::vector<std::string>{std::to_string(n - 1)});
  }

  CHECK(run({"sweep", "--family", "nope", "--max-n", "3"}).code == 2);
  CHECK(run({"sweep", "--family", "unknown"}).code == 2);
}

TEST_CASE("sweep rows round-trip through solve") {
  const auto r = run({"sweep", "--family", "destined-split", "--max-n", "5", "--play", "misere", "--misere-variant",
                      "reveal-forbidden"});
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> c;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) c.push_back(cell);
    const auto s = run({"solve", "--l", c[1], "--h", c[2], "--u", c[3], "--e", c[4], "--fake", c[5], "--goal", c[6],
                        "--play", c[7], "--misere-variant", c[8], "--format", "json"});
    REQUIRE(s.code == 0);
    const auto doc = nlohmann::json::parse(s.out);
    CHECK(std::to_string(doc["grundy"].get<int>()) == c[9]);
    CHECK(doc["outcome"].get<std::string>() == c[10]);
    CHECK((doc["dead"].get<bool>() ? "true" : "false") == c[11]);
    ++rows;
  }
  CHECK(rows > 10);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--max-n", "3"}).code == 2);
  CHECK(run({"verify", "--max-n", "10", "--claims", "C1"}).code == 0);
  CHECK(run({"verify", "--max-n", "6", "--claims", "C1,C77"}).code == 2);

  const fs::path out = scratch("report.json");
  auto r = run({"verify", "--max-n", "6", "--claims", "all", "--out", out.string()});
  CHECK(r.code == 1);  // corollary failures at small N are Required
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["claims"].size() >= 22);

  CHECK(run({"verify", "--max-n", "6", "--claims", "C1", "--out", "/nonexistent-dir/x.json"}).code == 4);

  r = run({"verify", "--max-n", "5", "--claims", "C1", "--stamp"});
  CHECK(nlohmann::json::parse(r.out).contains("stamp"));
}

TEST_CASE("oracle-check") {
  auto r = run({"oracle-check", "--max-coins", "6"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "all positions match"));
  CHECK(run({"oracle-check", "--max-coins", "9"}).code == 2);
  r = run({"oracle-check", "--max-coins", "2", "--rulesets", "normal/find"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "positions: 14"));
  CHECK(run({"oracle-check", "--max-coins", "2", "--rulesets", "weird"}).code == 2);
}

TEST_CASE("cache records") {
  const cache::Record rec{Position{0, 0, 5, 1, CoinClass::Unknown, Weight::Light},
                          RuleSet{Goal::Find, Play::Misere, MisereVariant::RevealForbidden}, 4};
  const std::string line = cache::encode(rec);
  CHECK(line ==
        R"({"g":4,"pos":{"e":1,"fake":"unknown","fw":"light","h":0,"l":0,"u":5},)"
        R"("rs":{"goal":"find","play":"misere","variant":"reveal-forbidden"},"v":1})");
  CHECK(cache::decode(line) == rec);
  bool foreign = false;
  CHECK_FALSE(cache::decode(R"({"v":2})", &foreign).has_value());
  CHECK(foreign);
  CHECK_FALSE(cache::decode("not json").has_value());
  CHECK_FALSE(cache::decode(R"({"g":1,"pos":{"e":3,"fake":"unknown","fw":"light","h":0,"l":0,"u":0},)"
                            R"("rs":{"goal":"find","play":"normal","variant":"none"},"v":1})")
                  .has_value());
}

TEST_CASE("sweep with cache") {
  const fs::path path = scratch("values.jsonl");
  const std::vector<std::string> args = {"sweep", "--family", "unknown", "--max-n", "7", "--cache", path.string()};
  const auto first = run(args);
  CHECK(first.code == 0);
  CHECK(fs::file_size(path) > 0);
  const std::string stored = slurp(path);
  const auto second = run(args);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  CHECK(second.err.empty());
  CHECK(slurp(path) == stored);
  CHECK(run({"sweep", "--family", "unknown", "--max-n", "7"}).out == first.out);
}

TEST_CASE("cache with another version is rebuilt") {
  const fs::path path = scratch("old.jsonl");
  std::ofstream(path) << R"({"v":0,"anything":true})" << "\n";
  const auto r = run({"sweep", "--family", "unknown", "--max-n", "4", "--cache", path.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "version mismatch"));
  CHECK(contains(slurp(path), R"("v":1)"));

  std::ofstream(path) << "garbage\n";
  const auto g = run({"sweep", "--family", "unknown", "--max-n", "4", "--cache", path.string()});
  CHECK(g.code == 0);
  CHECK(contains(g.err, "corrupt"));
}

TEST_CASE("conflicting cache record is an integrity error") {
  const fs::path path = scratch("bad.jsonl");
  std::ofstream(path) << cache::encode({Position{0, 0, 4, 1, CoinClass::Unknown, Weight::Light},
                                        RuleSet{Goal::Find, Play::Normal}, 3})
                      << "\n";
  const auto r = run({"solve", "--u", "4", "--e", "1", "--cache", path.string()});
  CHECK(r.code == 5);
  CHECK(contains(r.err, "recomputed 4"));
}
