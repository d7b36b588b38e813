#include "coinweigh/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace coinweigh {

int mex(const std::set<int>& values) {
  int m = 0;
  for (int v : values) {
    if (v == m) {
      ++m;
    } else if (v > m) {
      break;
    }
  }
  return m;
}

int mex(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  int m = 0;
  for (int v : values) {
    if (v == m) {
      ++m;
    } else if (v > m) {
      break;
    }
  }
  return m;
}

std::string to_string(OutcomeClass c) { return c == OutcomeClass::P ? "P" : "N"; }

std::uint64_t memo_key(const Position& canonical, const RuleSet& r) {
  const RuleSet n = r.normalized();
  return pack(canonical) | static_cast<std::uint64_t>(n.goal) << 43 |
         static_cast<std::uint64_t>(n.play) << 44 | static_cast<std::uint64_t>(n.variant) << 45;
}

std::pair<Position, RuleSet> unpack_memo_key(std::uint64_t key) {
  constexpr std::uint64_t kMask = (1u << 10) - 1;
  Position p;
  p.l = static_cast<int>(key & kMask);
  p.h = static_cast<int>(key >> 10 & kMask);
  p.u = static_cast<int>(key >> 20 & kMask);
  p.e = static_cast<int>(key >> 30 & kMask);
  p.fake_class = static_cast<CoinClass>(key >> 40 & 3);
  p.fake_weight = static_cast<Weight>(key >> 42 & 1);
  RuleSet r;
  r.goal = static_cast<Goal>(key >> 43 & 1);
  r.play = static_cast<Play>(key >> 44 & 1);
  r.variant = static_cast<MisereVariant>(key >> 45 & 1);
  return {p, r};
}

std::optional<int> ConcurrentMemo::find(std::uint64_t key) const {
  const Shard& s = shards_[std::hash<std::uint64_t>{}(key) % kShards];
  std::shared_lock lock(s.mu);
  if (auto it = s.map.find(key); it != s.map.end()) return it->second;
  return std::nullopt;
}

void ConcurrentMemo::insert(std::uint64_t key, int value) {
  Shard& s = shards_[std::hash<std::uint64_t>{}(key) % kShards];
  std::unique_lock lock(s.mu);
  s.map.insert_or_assign(key, value);
}

std::size_t ConcurrentMemo::size() const {
  std::size_t n = 0;
  for (const Shard& s : shards_) {
    std::shared_lock lock(s.mu);
    n += s.map.size();
  }
  return n;
}

std::vector<std::pair<std::uint64_t, int>> ConcurrentMemo::entries() const {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (const Shard& s : shards_) {
    std::shared_lock lock(s.mu);
    out.insert(out.end(), s.map.begin(), s.map.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Solver::Solver(SolverOptions options) : options_(options) {}

void Solver::check_bounds(const Position& p) const {
  const int m = options_.max_count;
  if (p.l > m || p.h > m || p.u > m || p.e > m) {
    throw std::out_of_range("count exceeds configured maximum " + std::to_string(m) + ": " +
                            to_string(p));
  }
}

Position Solver::memo_form(const Position& canonical) const {
  Position p = canonical;
  if (options_.saturate_excluded && p.e > 1) p.e = 1;
  return p;
}

int Solver::grundy(const Position& p, const RuleSet& r) {
  require_valid(p);
  check_bounds(p);
  return solve(canonicalize(p), r);
}

GameValue Solver::value(const Position& p, const RuleSet& r) {
  const int g = grundy(p, r);
  return GameValue{g, g == 0 ? OutcomeClass::P : OutcomeClass::N};
}

OutcomeClass Solver::outcome_class(const Position& p, const RuleSet& r) { return value(p, r).outcome; }

int Solver::solve(const Position& canonical, const RuleSet& r) {
  const Position p = memo_form(canonical);
  const std::uint64_t key = memo_key(p, r);
  if (auto hit = memo_.find(key)) return *hit;
  const int g = evaluate(p, r);
  memo_.insert(key, g);
  return g;
}

int Solver::evaluate(const Position& p, const RuleSet& r) {
  const int finished = r.play == Play::Normal ? 0 : 1;
  if (goal_reached(p, r.goal)) return finished;
  const std::vector<Position> next = successors(p, r);
  if (next.empty()) {
    // Reveal-forbidden: if informative weighings exist they all reveal,
    // and the player to move is the one forced to reveal.
    if (r.play == Play::Misere && r.variant == MisereVariant::RevealForbidden && !is_dead(p, r.goal)) {
      return 0;
    }
    return finished;
  }
  std::vector<int> values;
  values.reserve(next.size());
  for (const Position& s : next) values.push_back(solve(s, r));
  return mex(std::move(values));
}

std::vector<BestMove> Solver::best_moves(const Position& p, const RuleSet& r) {
  require_valid(p);
  check_bounds(p);
  const std::vector<Move> all = moves(p, r);
  if (all.empty()) throw std::invalid_argument("terminal position " + to_string(p));
  std::vector<BestMove> out;
  std::vector<BestMove> winning;
  for (const Move& m : all) {
    BestMove b{m.weighing, m.successor, value(m.successor, r)};
    if (b.value.grundy == 0) winning.push_back(b);
    out.push_back(std::move(b));
  }
  return winning.empty() ? out : winning;
}

void Solver::seed(const Position& p, const RuleSet& r, int grundy) {
  require_valid(p);
  memo_.insert(memo_key(memo_form(canonicalize(p)), r), grundy);
}

int Solver::recompute_local(const Position& p, const RuleSet& r) {
  require_valid(p);
  check_bounds(p);
  return evaluate(memo_form(canonicalize(p)), r);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::DestinedAllLight: return "destined-all-light";
    case Family::DestinedSplit: return "destined-split";
    case Family::DestinedPlus: return "destined-plus";
    case Family::Unknown: return "unknown";
    case Family::UnknownPlus: return "unknown-plus";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::DestinedAllLight, Family::DestinedSplit, Family::DestinedPlus,
                   Family::Unknown, Family::UnknownPlus}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::vector<Position> family_positions(Family family, int max_n) {
  std::vector<Position> out;
  for (int n = 1; n <= max_n; ++n) {
    switch (family) {
      case Family::DestinedAllLight:
        out.push_back(Position{n, 0, 0, 0, CoinClass::LightDestined, Weight::Light});
        break;
      case Family::DestinedSplit:
      case Family::DestinedPlus: {
        const int e = family == Family::DestinedPlus ? 1 : 0;
        for (int l = 0; l <= n; ++l) {
          const int h = n - l;
          if (l > 0) out.push_back(Position{l, h, 0, e, CoinClass::LightDestined, Weight::Light});
          if (h > 0) out.push_back(Position{l, h, 0, e, CoinClass::HeavyDestined, Weight::Heavy});
        }
        break;
      }
      case Family::Unknown:
      case Family::UnknownPlus: {
        const int e = family == Family::UnknownPlus ? 1 : 0;
        out.push_back(Position{0, 0, n, e, CoinClass::Unknown, Weight::Light});
        break;
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Position& a, const Position& b) {
    return a.candidates() < b.candidates() || (a.candidates() == b.candidates() && a < b);
  });
  return out;
}

std::vector<SweepRow> sweep(Solver& solver, Family family, int max_n, const RuleSet& r, int workers) {
  if (max_n < 1) throw std::invalid_argument("sweep needs max_n >= 1");
  const std::vector<Position> roots = family_positions(family, max_n);
  std::vector<SweepRow> rows(roots.size());
  parallel_for(roots.size(), workers, [&](std::size_t i) {
    const Position& p = roots[i];
    rows[i] = SweepRow{p.candidates(), p, r.normalized(), solver.value(p, r), is_dead(p, r.goal)};
  });
  return rows;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  const auto n = static_cast<std::size_t>(workers) < count ? static_cast<std::size_t>(workers) : count;
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace coinweigh
