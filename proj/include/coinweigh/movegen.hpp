#pragma once

#include <string>
#include <vector>

#include "coinweigh/model.hpp"
#include "coinweigh/rules.hpp"

namespace coinweigh {

/// Representative of the mirror class: the larger destined group is light,
/// a tie puts the fake in the light group, and an unknown fake is light.
Position canonicalize(const Position& p);

// Canonical: each weighing once, fake's pan on the left (see pan_less).
// Unordered: both pan orders, used to check that nothing is lost.
enum class PanOrder { Canonical, Unordered };

/// Every informative weighing, regardless of rules.
///
/// Excluded coins carry no information, so they only appear as the minimal
/// filler that equalizes the pans. Any weighing with extra excluded coins on
/// both pans has the same outcome and successor as its representative here.
std::vector<Weighing> informative_weighings(const Position& p,
                                            PanOrder order = PanOrder::Canonical);

/// Legal moves under `r`: empty once the goal is reached; under misère
/// reveal-forbidden, goal-reaching weighings are dropped.
std::vector<Weighing> legal_weighings(const Position& p, const RuleSet& r);

struct Move {
  Weighing weighing;   // first witness in enumeration order
  Position successor;  // canonical
};

/// One move per distinct canonical successor, sorted by successor.
std::vector<Move> moves(const Position& p, const RuleSet& r);

std::vector<Position> successors(const Position& p, const RuleSet& r);

/// Destined totals l'+h' reachable in one move. Requires u = 0.
std::vector<int> reachable_destined_totals(const Position& p);

/// Smallest positive destined total not reachable in one move.
int smallest_unreachable_total(const Position& p);

/// Goal not reached and no informative weighing exists.
bool is_dead(const Position& p, Goal g);

/// Goal not reached, informative weighings exist, and every one of them
/// completes the goal.
bool forced_to_reveal(const Position& p, Goal g);

/// Some sequence of informative weighings reaches the goal.
bool goal_reachable(const Position& p, Goal g);

/// Fixed textual form, e.g. `left[2L+1X] vs right[1L+1H+fake]`. The fake is
/// listed separately from the class counts of its pan.
std::string describe(const Position& p, const Weighing& w);

}  // namespace coinweigh
