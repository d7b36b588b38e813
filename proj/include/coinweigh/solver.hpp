#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coinweigh/model.hpp"
#include "coinweigh/movegen.hpp"
#include "coinweigh/rules.hpp"

namespace coinweigh {

/// Least non-negative integer not in `values`.
int mex(const std::set<int>& values);
int mex(std::vector<int> values);

enum class OutcomeClass : std::uint8_t { P, N };

std::string to_string(OutcomeClass c);

struct GameValue {
  int grundy = 0;
  OutcomeClass outcome = OutcomeClass::P;

  friend bool operator==(const GameValue&, const GameValue&) = default;
};

struct SolverOptions {
  int max_count = 64;              // per-count bound on queried positions
  bool saturate_excluded = false;  // memoize every e >= 1 as e = 1
};

/// Memo key: canonical position plus normalized rule set.
std::uint64_t memo_key(const Position& canonical, const RuleSet& r);

/// Hash map sharded by key with one reader/writer lock per shard. A key's
/// value is unique, so racing inserts of the same key are harmless.
class ConcurrentMemo {
 public:
  std::optional<int> find(std::uint64_t key) const;
  void insert(std::uint64_t key, int value);
  std::size_t size() const;
  /// Snapshot sorted by key.
  std::vector<std::pair<std::uint64_t, int>> entries() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::shared_mutex mu;
    std::unordered_map<std::uint64_t, int> map;
  };
  std::array<Shard, kShards> shards_;
};

struct BestMove {
  Weighing weighing;
  Position successor;
  GameValue value;
};

/// Memoized mex recursion over the canonical state space.
///
/// Terminal positions: a finished game (goal reached or dead) is worth 0 in
/// normal play and 1 in misère play. Under misère reveal-forbidden, a
/// position whose every informative weighing completes the goal has no
/// legal move but the player to move has lost, so it is worth 0.
///
/// Thread-safe; one Solver may serve any number of workers.
class Solver {
 public:
  explicit Solver(SolverOptions options = {});

  int grundy(const Position& p, const RuleSet& r);
  GameValue value(const Position& p, const RuleSet& r);
  OutcomeClass outcome_class(const Position& p, const RuleSet& r);

  /// Winning moves if any exist, otherwise every move. Throws on terminal positions.
  std::vector<BestMove> best_moves(const Position& p, const RuleSet& r);

  /// Seeds the memo with a previously computed value.
  void seed(const Position& p, const RuleSet& r, int grundy);
  /// Recomputes the value one level down (mex over successors) without
  /// reading `p`'s own memo entry.
  int recompute_local(const Position& p, const RuleSet& r);

  const ConcurrentMemo& memo() const { return memo_; }
  const SolverOptions& options() const { return options_; }

 private:
  void check_bounds(const Position& p) const;
  int solve(const Position& canonical, const RuleSet& r);
  int evaluate(const Position& canonical, const RuleSet& r);
  Position memo_form(const Position& canonical) const;

  SolverOptions options_;
  ConcurrentMemo memo_;
};

/// Inverse of memo_key.
std::pair<Position, RuleSet> unpack_memo_key(std::uint64_t key);

enum class Family { DestinedAllLight, DestinedSplit, DestinedPlus, Unknown, UnknownPlus };

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& s);

struct SweepRow {
  int n = 0;  // non-excluded coins at the start
  Position position;
  RuleSet rules;
  GameValue value;
  bool dead = false;
};

/// Root positions of a family with 1..max_n candidate coins, sorted.
std::vector<Position> family_positions(Family family, int max_n);

/// One row per family position; rows are independent of `workers`.
std::vector<SweepRow> sweep(Solver& solver, Family family, int max_n, const RuleSet& r,
                            int workers = 1);

/// Runs fn(i) for i in [0, count) on `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace coinweigh
