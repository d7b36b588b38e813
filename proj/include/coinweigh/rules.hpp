#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "coinweigh/model.hpp"

namespace coinweigh {

enum class Goal : std::uint8_t { Find, FindIdentify };
enum class Play : std::uint8_t { Normal, Misere };

// How misère play treats the move that completes the Observer's goal.
//   RevealerLoses:   the move is legal and ends the game; its maker loses.
//   RevealForbidden: the move is never made; a player left with only such
//                    moves has lost.
enum class MisereVariant : std::uint8_t { RevealerLoses, RevealForbidden };

struct RuleSet {
  Goal goal = Goal::Find;
  Play play = Play::Normal;
  MisereVariant variant = MisereVariant::RevealerLoses;  // ignored for normal play

  /// Variant folded to RevealerLoses under normal play, so equal games compare equal.
  RuleSet normalized() const {
    RuleSet r = *this;
    if (r.play == Play::Normal) r.variant = MisereVariant::RevealerLoses;
    return r;
  }

  friend auto operator<=>(const RuleSet&, const RuleSet&) = default;
};

/// The six distinct rule sets: {normal, misère/revealer-loses,
/// misère/reveal-forbidden} x {find, find-identify}.
std::array<RuleSet, 6> all_rulesets();

inline bool goal_reached(GoalStatus s, Goal g) {
  if (s == GoalStatus::NotReached) return false;
  return g == Goal::Find || s == GoalStatus::FoundAndIdentified;
}

inline bool goal_reached(const Position& p, Goal g) { return goal_reached(goal_status(p), g); }

std::string to_string(Goal g);
std::string to_string(Play p);
std::string to_string(MisereVariant v);
/// "normal/find", "misere/reveal-forbidden/find-identify", ...
std::string to_string(const RuleSet& r);
/// Variant column for tables: "none" under normal play.
std::string variant_label(const RuleSet& r);

std::optional<Goal> parse_goal(std::string_view s);
std::optional<Play> parse_play(std::string_view s);
std::optional<MisereVariant> parse_variant(std::string_view s);
std::optional<CoinClass> parse_coin_class(std::string_view s);
std::optional<Weight> parse_weight(std::string_view s);

}  // namespace coinweigh
