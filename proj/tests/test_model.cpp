#include <doctest.h>

#include <algorithm>

#include "coinweigh/model.hpp"
#include "support.hpp"

using namespace coinweigh;
using namespace coinweigh::test;

namespace {
bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}
}  // namespace

TEST_CASE("validate accepts and names violations") {
  CHECK(validate(D(2, 0, 0)).empty());
  CHECK(has(validate(Position{1, 0, 1, 0, CoinClass::Unknown, Weight::Light}), "u>0 with destined coins"));
  CHECK(has(validate(Position{0, 0, 0, 3, CoinClass::Unknown, Weight::Light}), "fake excluded"));
  CHECK(has(validate(Position{-1, 0, 0, 0, CoinClass::LightDestined, Weight::Light}), "negative count"));
  CHECK(has(validate(Position{2, 0, 0, 0, CoinClass::LightDestined, Weight::Heavy}),
            "light-destined fake must be light"));
  CHECK_THROWS_AS(require_valid(Position{0, 0, 0, 3, CoinClass::Unknown, Weight::Light}), InvalidPosition);
}

TEST_CASE("weighing validation") {
  const Position p = D(4, 0, 0);
  // unequal pans
  CHECK_FALSE(validate(p, Weighing{pan(2, 0, 0, 0), pan(1, 0, 0, 0), FakePlacement::OffScale}).empty());
  // more coins than exist
  CHECK_FALSE(validate(p, Weighing{pan(3, 0, 0, 0), pan(3, 0, 0, 0), FakePlacement::LeftPan}).empty());
  // fake on a pan holding no coin of its class
  CHECK_FALSE(validate(p, Weighing{pan(0, 0, 0, 0), pan(0, 0, 0, 0), FakePlacement::LeftPan}).empty());
  CHECK_THROWS_AS(apply_outcome(p, Weighing{pan(2, 0, 0, 0), pan(1, 0, 0, 0), FakePlacement::OffScale}),
                  InvalidWeighing);
}

TEST_CASE("outcome of a weighing") {
  const Position p = D(4, 0, 0);
  CHECK(outcome_of(p, Weighing{pan(1, 0, 0, 0), pan(1, 0, 0, 0), FakePlacement::OffScale}) == Outcome::Balance);
  CHECK(outcome_of(p, Weighing{pan(1, 0, 0, 0), pan(1, 0, 0, 0), FakePlacement::LeftPan}) ==
        Outcome::LeftLighter);
  const Position q = U(2, 1, Weight::Heavy);
  CHECK(outcome_of(q, Weighing{pan(0, 0, 1, 0), pan(0, 0, 0, 1), FakePlacement::LeftPan}) ==
        Outcome::RightLighter);
}

TEST_CASE("status update") {
  CHECK(apply_outcome(D(4, 0, 0), Weighing{pan(1, 0, 0, 0), pan(1, 0, 0, 0), FakePlacement::OffScale}) ==
        D(2, 0, 2));
  // heavier-pan light-destined coin and every off-scale coin are excluded
  CHECK(apply_outcome(D(2, 2, 0), Weighing{pan(1, 0, 0, 0), pan(1, 0, 0, 0), FakePlacement::LeftPan}) ==
        D(1, 0, 3));
  // unknown coins on the scale acquire destinies
  CHECK(apply_outcome(U(5, 0), Weighing{pan(0, 0, 2, 0), pan(0, 0, 2, 0), FakePlacement::LeftPan}) ==
        D(2, 2, 1));
  // a heavy unknown fake becomes heavy-destined
  CHECK(apply_outcome(U(3, 0, Weight::Heavy), Weighing{pan(0, 0, 1, 0), pan(0, 0, 1, 0), FakePlacement::LeftPan}) ==
        Position{1, 1, 0, 1, CoinClass::HeavyDestined, Weight::Heavy});
}

TEST_CASE("informativeness") {
  CHECK_FALSE(is_informative(D(1, 1, 0), Weighing{pan(1, 0, 0, 0), pan(0, 1, 0, 0), FakePlacement::LeftPan}));
  CHECK(is_informative(D(2, 0, 0), Weighing{pan(1, 0, 0, 0), pan(1, 0, 0, 0), FakePlacement::LeftPan}));
  for (const Position& p : {D(2, 0, 2), U(3, 4), D(1, 2, 2, CoinClass::HeavyDestined)}) {
    CHECK_FALSE(is_informative(p, Weighing{pan(0, 0, 0, 1), pan(0, 0, 0, 1), FakePlacement::OffScale}));
  }
}

TEST_CASE("goal status") {
  CHECK(goal_status(D(1, 0, 3)) == GoalStatus::FoundAndIdentified);
  CHECK(goal_status(U(1, 2)) == GoalStatus::FoundOnly);
  CHECK(goal_status(D(1, 1, 1)) == GoalStatus::NotReached);
}

TEST_CASE("mirror") {
  CHECK(mirror(D(0, 3, 1, CoinClass::HeavyDestined)) == D(3, 0, 1));
  CHECK(mirror(mirror(D(3, 0, 1))) == D(3, 0, 1));
  CHECK(mirror(U(4, 0, Weight::Heavy)) == U(4, 0, Weight::Light));
}

TEST_CASE("pack is injective on small positions") {
  const auto all = all_positions(8);
  std::vector<std::uint64_t> keys;
  for (const Position& p : all) keys.push_back(pack(p));
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  CHECK_THROWS_AS(pack(D(1024, 0, 0)), std::out_of_range);
}
