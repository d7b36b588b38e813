#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinweigh {

/// Observer-status class a counterfeit coin can belong to.
enum class CoinClass : std::uint8_t { LightDestined, HeavyDestined, Unknown };

enum class Weight : std::uint8_t { Light, Heavy };

/// Count-abstracted game state.
///
/// Coins are interchangeable within a status class, so a position is the
/// four class counts plus where the counterfeit sits. `e` counts every coin
/// the Observer knows to be real, including any extra coin supplied at the
/// start of the game.
struct Position {
  int l = 0;  // light-destined
  int h = 0;  // heavy-destined
  int u = 0;  // unknown
  int e = 0;  // excluded (known real)
  CoinClass fake_class = CoinClass::Unknown;
  Weight fake_weight = Weight::Light;

  int candidates() const { return l + h + u; }
  int total() const { return l + h + u + e; }
  int count(CoinClass c) const;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Coins of each class placed on one pan. Counts include the counterfeit
/// when it sits on this pan.
struct PanLoad {
  int light = 0;
  int heavy = 0;
  int unknown = 0;
  int excluded = 0;

  int total() const { return light + heavy + unknown + excluded; }
  int count(CoinClass c) const;

  friend auto operator<=>(const PanLoad&, const PanLoad&) = default;
};

enum class FakePlacement : std::uint8_t { LeftPan, RightPan, OffScale };

struct Weighing {
  PanLoad left;
  PanLoad right;
  FakePlacement fake = FakePlacement::OffScale;

  friend auto operator<=>(const Weighing&, const Weighing&) = default;
};

enum class Outcome : std::uint8_t { Balance, LeftLighter, RightLighter };

enum class GoalStatus : std::uint8_t { NotReached, FoundOnly, FoundAndIdentified };

class InvalidPosition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidWeighing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Returns the violated invariants; empty means valid.
std::vector<std::string> validate(const Position& p);
std::vector<std::string> validate(const Position& p, const Weighing& w);

// Throws InvalidPosition naming the first violation.
void require_valid(const Position& p);

Outcome outcome_of(const Position& p, const Weighing& w);

/// Observer-status update after the weighing's (determined) outcome.
///
/// Balance: every coin on the scale is proven real. Imbalance: coins off the
/// scale are real, destined coins on the pan contradicting their destiny are
/// real, and unknown coins acquire the destiny of the pan they sat on.
Position apply_outcome(const Position& p, const Weighing& w);

bool is_informative(const Position& p, const Weighing& w);

GoalStatus goal_status(const Position& p);

/// Number of (coin, weight) hypotheses the Observer still entertains.
/// Strictly decreases along every informative weighing.
inline int hypothesis_count(const Position& p) { return 2 * p.u + p.l + p.h; }

/// Light/heavy mirror image: swaps destinies and the counterfeit's weight.
Position mirror(const Position& p);

/// Dense 43-bit key (10 bits per count). Counts must be below 1024.
std::uint64_t pack(const Position& p);

namespace detail {
// apply_outcome without validation; callers guarantee a valid (p, w).
Position apply_unchecked(const Position& p, const Weighing& w);
}  // namespace detail

std::string to_string(CoinClass c);
std::string to_string(Weight w);
std::string to_string(Outcome o);
std::string to_string(GoalStatus g);
std::string to_string(const Position& p);

}  // namespace coinweigh
