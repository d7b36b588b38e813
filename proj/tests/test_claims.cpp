#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "coinweigh/claims.hpp"

using namespace coinweigh;
using namespace coinweigh::claims;

namespace {

const ClaimResult& find(const std::vector<ClaimResult>& rs, const std::string& convention,
                        const std::string& reading = "-") {
  auto it = std::find_if(rs.begin(), rs.end(),
                         [&](const ClaimResult& r) { return r.convention == convention && r.reading == reading; });
  REQUIRE(it != rs.end());
  return *it;
}

}  // namespace

TEST_CASE("registry") {
  const auto& reg = list_claims();
  REQUIRE(reg.size() == 22);
  std::set<std::string> ids;
  for (const Claim& c : reg) {
    ids.insert(c.id);
    CHECK_FALSE(c.paper_ref.empty());
    CHECK_FALSE(c.domain.empty());
  }
  CHECK(ids.size() == reg.size());
  CHECK(reg.front().id == "C1");
  CHECK(reg.front().severity == Severity::Required);
  CHECK(reg[1].severity == Severity::Informational);
  CHECK(reg[20].id == "C21");
  CHECK(reg[20].severity == Severity::Informational);
  Solver s;
  CHECK_THROWS_AS(check_claim("C99", 6, s), std::invalid_argument);
}

TEST_CASE("status follows mismatches and instances") {
  Solver s;
  for (const Claim& c : list_claims()) {
    for (const ClaimResult& r : check_claim(c.id, 6, s)) {
      if (r.instances == 0) {
        CHECK(r.status == Status::NotApplicable);
      } else {
        CHECK((r.status == Status::Pass) == r.mismatches.empty());
      }
    }
  }
}

TEST_CASE("destined extra coin, normal play") {
  Solver s;
  const auto rs = check_claim("C1", 12, s);
  REQUIRE(rs.size() == 2);
  int splits = 0;
  for (int n = 2; n <= 12; ++n) splits += 2 * n;  // every split, both fake sides
  for (const auto& r : rs) {
    CHECK(r.status == Status::Pass);
    CHECK(r.instances == splits * 3);
  }
}

TEST_CASE("reachable sets: fake-aware passes, as-stated does not") {
  Solver s;
  const auto rs = check_claim("C3", 10, s);
  CHECK(find(rs, "move-set", "fake-aware").status == Status::Pass);
  const auto& as = find(rs, "move-set", "as-stated");
  CHECK(as.status == Status::Fail);
  CHECK(std::any_of(as.mismatches.begin(), as.mismatches.end(),
                    [](const Mismatch& m) { return m.params == "l=1,h=3,u=0,e=0,fake=H"; }));
}

TEST_CASE("all-light table: normal column only disagrees at N = 2") {
  Solver s;
  const auto rs = check_claim("C8", 20, s);
  const auto& normal = find(rs, "normal/find");
  CHECK(normal.instances == 19);
  REQUIRE(normal.mismatches.size() == 1);
  CHECK(normal.mismatches[0].params == "l=2,h=0,u=0,e=0,fake=L");
  CHECK(normal.mismatches[0].expected == "2");
  CHECK(normal.mismatches[0].computed == "1");
}

TEST_CASE("full report") {
  Solver s;
  const Report rep = check_all(10, s, 4);
  auto pass = [&](const std::string& id, const std::string& conv, const std::string& reading = "-") {
    const auto it = std::find_if(rep.results.begin(), rep.results.end(), [&](const ClaimResult& r) {
      return r.id == id && r.convention == conv && r.reading == reading;
    });
    REQUIRE(it != rep.results.end());
    return it->status == Status::Pass;
  };
  CHECK(pass("C1", "normal/find"));
  CHECK(pass("C14", "normal/find"));
  CHECK(pass("C14", "normal/find-identify"));
  CHECK(pass("C15", "normal/find"));
  CHECK(pass("C15", "normal/find-identify"));
  CHECK(pass("C6", "misere/revealer-loses/find:outcome", "fake-aware"));
  CHECK(pass("C6", "misere/reveal-forbidden/find:outcome", "fake-aware"));
  CHECK(pass("C19", "normal/find"));
  CHECK(pass("C19", "normal/find-identify"));

  // contested misère values are reported with their mismatch tables
  for (const std::string id : {"C2", "C13", "C21"}) {
    const bool listed = std::any_of(rep.results.begin(), rep.results.end(), [&](const ClaimResult& r) {
      return r.id == id && r.status == Status::Fail && !r.mismatches.empty() && r.severity == Severity::Informational;
    });
    CHECK_MESSAGE(listed, id);
  }

  // text lists C5 once per reading
  const std::string text = render_text(rep);
  CHECK(text.find("normal/find:outcome                       as-stated") != std::string::npos);
  CHECK(text.find("normal/find:outcome                       fake-aware") != std::string::npos);

  // the smallest-unreachable corollary and the all-light table disagree
  // with exhaustive search at small N
  CHECK_FALSE(rep.passed);
  CHECK(rep.failing_required == std::vector<std::string>{"C4", "C8"});
}

TEST_CASE("json report is deterministic and schema-shaped") {
  Solver a;
  Solver b;
  const std::string one = render_json(check_all(6, a, 1));
  const std::string many = render_json(check_all(6, b, 8));
  CHECK(one == many);
  const auto doc = nlohmann::json::parse(one);
  CHECK(doc["version"] == 1);
  CHECK(doc["max_n"] == 6);
  std::set<std::string> ids;
  for (const auto& c : doc["claims"]) {
    ids.insert(c["id"].get<std::string>());
    const std::string st = c["status"];
    CHECK((st == "PASS" || st == "FAIL" || st == "NOT-APPLICABLE"));
    for (const char* key : {"paper_ref", "severity", "convention", "reading", "instances", "mismatches"}) {
      CHECK(c.contains(key));
    }
  }
  CHECK(ids.size() == 22);
  CHECK_THROWS_AS(check_all(3, a), std::invalid_argument);
}
