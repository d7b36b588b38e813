#include <doctest.h>

#include <algorithm>

#include "coinweigh/oracle.hpp"
#include "coinweigh/solver.hpp"
#include "support.hpp"

using namespace coinweigh;
using namespace coinweigh::test;

namespace {
constexpr RuleSet NF{Goal::Find, Play::Normal, MisereVariant::RevealerLoses};
constexpr RuleSet NFI{Goal::FindIdentify, Play::Normal, MisereVariant::RevealerLoses};
constexpr RuleSet RLF{Goal::Find, Play::Misere, MisereVariant::RevealerLoses};
constexpr RuleSet RFF{Goal::Find, Play::Misere, MisereVariant::RevealForbidden};
}  // namespace

TEST_CASE("mex") {
  CHECK(mex(std::set<int>{}) == 0);
  CHECK(mex(std::set<int>{0, 1, 3}) == 2);
  CHECK(mex(std::set<int>{1, 2}) == 0);
  CHECK(mex(std::vector<int>{3, 0, 0, 1}) == 2);
}

TEST_CASE("grundy values") {
  Solver s;
  CHECK(s.grundy(D(3, 2, 1), NF) == 4);
  CHECK(s.grundy(D(4, 0, 0), NF) == 2);
  CHECK(s.grundy(U(2, 1), NF) == 2);
  CHECK(s.grundy(U(6, 0), NF) == 0);
  CHECK(s.grundy(U(3, 0), NF) == 2);
  // game over
  CHECK(s.grundy(D(1, 0, 0), NF) == 0);
  CHECK(s.grundy(D(1, 0, 0), RLF) == 1);
  CHECK(s.grundy(D(1, 1, 0), NF) == 0);
  CHECK(s.grundy(D(1, 1, 0), RFF) == 1);
  // reveal-forbidden: every informative weighing reveals, so the mover loses
  CHECK(s.grundy(D(2, 0, 1), RFF) == 0);
}

TEST_CASE("outcome classes") {
  Solver s;
  CHECK(s.outcome_class(D(1, 0, 0), NF) == OutcomeClass::P);
  CHECK(s.outcome_class(D(3, 0, 0), RLF) == OutcomeClass::P);
  CHECK(s.outcome_class(D(2, 0, 0), NF) == OutcomeClass::N);
}

TEST_CASE("unknown coins with an extra coin, misère revealer-loses") {
  Solver s;
  Oracle o;
  CHECK(s.grundy(U(1, 1), RLF) == 1);
  const ExplicitPosition two{{CoinStatus::Unknown, CoinStatus::Unknown, CoinStatus::Excluded}, 0, Weight::Light};
  CHECK(s.grundy(U(2, 1), RLF) == o.grundy(two, RLF));
  CHECK(s.grundy(U(2, 1), RLF) == 2);
}

TEST_CASE("best moves") {
  Solver s;
  const auto best = s.best_moves(U(5, 1), NF);
  REQUIRE_FALSE(best.empty());
  for (const BestMove& m : best) CHECK(m.value.grundy == 0);
  CHECK(std::any_of(best.begin(), best.end(), [](const BestMove& m) {
    return m.weighing == Weighing{pan(0, 0, 1, 0), pan(0, 0, 0, 1), FakePlacement::LeftPan};
  }));

  // misère: the fake against another unknown coin leaves a P-position
  const auto misere = s.best_moves(U(5, 1), RLF);
  CHECK(std::any_of(misere.begin(), misere.end(), [](const BestMove& m) {
    return m.weighing == Weighing{pan(0, 0, 1, 0), pan(0, 0, 1, 0), FakePlacement::LeftPan} &&
           m.value.outcome == OutcomeClass::P;
  }));

  // with no winning move every move is listed, each reaching the goal
  const auto all = s.best_moves(D(1, 1, 1), NF);
  CHECK(all.size() == successors(D(1, 1, 1), NF).size());
  for (const BestMove& m : all) {
    CHECK(goal_reached(m.successor, Goal::Find));
    CHECK(m.value.grundy == 0);
  }

  CHECK_THROWS_AS(s.best_moves(D(1, 0, 0), NF), std::invalid_argument);
}

TEST_CASE("bounds and seeding") {
  Solver s(SolverOptions{8, false});
  CHECK_THROWS_AS(s.grundy(U(9, 0), NF), std::out_of_range);
  CHECK_THROWS_AS(s.grundy(Position{0, 0, 0, 3, CoinClass::Unknown, Weight::Light}, NF), InvalidPosition);

  Solver fresh;
  const int g = fresh.grundy(U(4, 1), NFI);
  Solver seeded;
  seeded.seed(U(4, 1), NFI, g + 1);
  CHECK(seeded.grundy(U(4, 1), NFI) == g + 1);  // seeded values are trusted...
  CHECK(seeded.recompute_local(U(4, 1), NFI) == g);  // ...until re-derived
}

TEST_CASE("memo keys round-trip") {
  for (const Position& p : all_positions(5)) {
    const Position c = canonicalize(p);
    for (const RuleSet& r : all_rulesets()) {
      const auto [q, rr] = unpack_memo_key(memo_key(c, r));
      CHECK(q == c);
      CHECK(rr == r.normalized());
    }
  }
  CHECK(memo_key(D(2, 0, 0), NF) ==
        memo_key(D(2, 0, 0), RuleSet{Goal::Find, Play::Normal, MisereVariant::RevealForbidden}));
}

TEST_CASE("sweep") {
  Solver s;
  const auto rows = sweep(s, Family::DestinedAllLight, 4, NF);
  REQUIRE(rows.size() == 4);
  std::vector<int> g;
  for (const auto& r : rows) g.push_back(r.value.grundy);
  CHECK(g == std::vector<int>{0, 1, 1, 2});

  for (const auto& r : sweep(s, Family::DestinedPlus, 3, NF)) CHECK(r.value.grundy == r.n - 1);
  for (const auto& r : sweep(s, Family::UnknownPlus, 5, NF)) {
    if (r.n >= 2) CHECK(r.value.grundy == r.n);
  }

  Solver a;
  Solver b;
  const auto one = sweep(a, Family::DestinedSplit, 9, RLF, 1);
  const auto many = sweep(b, Family::DestinedSplit, 9, RLF, 6);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].position == many[i].position);
    CHECK(one[i].value == many[i].value);
  }
  CHECK(parse_family("unknown-plus") == Family::UnknownPlus);
  CHECK_FALSE(parse_family("bogus").has_value());
}

TEST_CASE("concurrent queries agree with a sequential solve") {
  Solver shared;
  const auto positions = all_positions(9);
  std::vector<int> parallel(positions.size());
  parallel_for(positions.size(), 8, [&](std::size_t i) { parallel[i] = shared.grundy(positions[i], RFF); });
  Solver sequential;
  for (std::size_t i = 0; i < positions.size(); ++i) CHECK(parallel[i] == sequential.grundy(positions[i], RFF));
}

TEST_CASE("parallel_for propagates exceptions") {
  CHECK_THROWS_AS(parallel_for(10, 4,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
