#include <doctest.h>

#include <set>

#include "coinweigh/movegen.hpp"
#include "coinweigh/solver.hpp"
#include "support.hpp"

using namespace coinweigh;
using namespace coinweigh::test;

namespace {

Weighing mirror(const Weighing& w) {
  Weighing m = w;
  std::swap(m.left.light, m.left.heavy);
  std::swap(m.right.light, m.right.heavy);
  return m;
}

}  // namespace

TEST_CASE("mirror commutes with the status update") {
  for (const Position& p : all_positions(8)) {
    for (const Weighing& w : informative_weighings(p, PanOrder::Unordered)) {
      CHECK(mirror(apply_outcome(p, w)) == apply_outcome(mirror(p), ::mirror(w)));
    }
  }
}

TEST_CASE("mirror images have the same successors and value") {
  Solver s;
  for (const Position& p : all_positions(9)) {
    for (const RuleSet& r : all_rulesets()) {
      std::set<Position> a;
      std::set<Position> b;
      for (const Weighing& w : legal_weighings(p, r)) a.insert(canonicalize(apply_outcome(p, w)));
      for (const Weighing& w : legal_weighings(mirror(p), r)) b.insert(canonicalize(apply_outcome(mirror(p), w)));
      CHECK(a == b);
      CHECK(s.grundy(p, r) == s.grundy(mirror(p), r));
    }
  }
}

TEST_CASE("hypothesis count strictly decreases") {
  for (const Position& p : all_positions(9)) {
    for (const Weighing& w : informative_weighings(p, PanOrder::Unordered)) {
      CHECK(hypothesis_count(apply_outcome(p, w)) < hypothesis_count(p));
    }
  }
}

TEST_CASE("reveal-forbidden moves are revealer-loses moves") {
  for (const Position& p : all_positions(8)) {
    for (Goal g : {Goal::Find, Goal::FindIdentify}) {
      const auto rl = legal_weighings(p, RuleSet{g, Play::Misere, MisereVariant::RevealerLoses});
      const auto rf = legal_weighings(p, RuleSet{g, Play::Misere, MisereVariant::RevealForbidden});
      const std::set<Weighing> rl_set(rl.begin(), rl.end());
      for (const Weighing& w : rf) CHECK(rl_set.count(w) == 1);
    }
  }
}

TEST_CASE("one extra coin saturates") {
  Solver exact;
  Solver saturated(SolverOptions{64, true});
  for (const Position& p : all_positions(10)) {
    if (p.e != 1) continue;
    for (const RuleSet& r : all_rulesets()) {
      Position more = p;
      for (int e = 2; e <= 3; ++e) {
        more.e = e;
        CHECK(exact.grundy(more, r) == exact.grundy(p, r));
      }
      CHECK(saturated.grundy(p, r) == exact.grundy(p, r));
    }
  }
}
