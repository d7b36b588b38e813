#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coinweigh/model.hpp"
#include "coinweigh/rules.hpp"

// Coin-level reference engine. It tracks every coin individually, tries every
// pair of disjoint equal-size pans, and memoizes on the raw status sequence.
// It shares no move generation or memoization with movegen/solver; only the
// value types and the terminal conventions are common.

namespace coinweigh {

class Solver;

enum class CoinStatus : std::uint8_t { Unknown, LightDestined, HeavyDestined, Excluded };

struct ExplicitPosition {
  std::vector<CoinStatus> statuses;
  int fake_index = 0;
  Weight fake_weight = Weight::Light;

  friend bool operator==(const ExplicitPosition&, const ExplicitPosition&) = default;
};

std::vector<std::string> validate(const ExplicitPosition& x);
Position abstract_of(const ExplicitPosition& x);
std::string to_string(const ExplicitPosition& x);  // e.g. "[L,X,H] fake=0 light"

inline constexpr int kOracleDefaultBound = 7;
inline constexpr int kOracleHardBound = 8;

class Oracle {
 public:
  /// `max_coins` above the default prints a runtime warning; above the hard
  /// bound it throws.
  explicit Oracle(int max_coins = kOracleDefaultBound);

  int grundy(const ExplicitPosition& x, const RuleSet& r);

  int max_coins() const { return max_coins_; }

 private:
  int solve(std::vector<CoinStatus>& s, int fake, Weight w, const RuleSet& r);

  int max_coins_;
  std::unordered_map<std::uint64_t, int> memo_;
};

/// One explicit position per coin-permutation class, 1..max_coins coins.
std::vector<ExplicitPosition> explicit_positions(int max_coins);

struct CrossCheckEntry {
  ExplicitPosition position;
  RuleSet rules;
  int oracle_value = 0;
  int solver_value = 0;
  bool match = false;
};

/// Oracle vs solver on every explicit position up to `max_coins` coins under
/// each rule set. Order is deterministic (rule set, then position).
std::vector<CrossCheckEntry> cross_check(int max_coins, std::span<const RuleSet> rulesets,
                                         Solver& solver, int workers = 1);

}  // namespace coinweigh
