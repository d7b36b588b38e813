#include "coinweigh/movegen.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

namespace coinweigh {

Position canonicalize(const Position& p) {
  bool flip = false;
  if (p.h != p.l) {
    flip = p.h > p.l;
  } else if (p.u > 0) {
    flip = p.fake_weight == Weight::Heavy;
  } else {
    flip = p.fake_class == CoinClass::HeavyDestined;
  }
  return flip ? mirror(p) : p;
}

namespace {

// Pan encoding: (fake absent, L, H, U, X). The fake's pan always sorts first.
auto pan_key(const PanLoad& pan, bool has_fake) {
  return std::make_tuple(has_fake ? 0 : 1, pan.light, pan.heavy, pan.unknown, pan.excluded);
}

bool pan_less(const Weighing& w) {
  return pan_key(w.right, w.fake == FakePlacement::RightPan) <
         pan_key(w.left, w.fake == FakePlacement::LeftPan);
}

template <class Visit>
void for_each_informative(const Position& p, PanOrder order, Visit&& visit) {
  const CoinClass fc = p.fake_class;
  const int in_class = p.count(fc);
  for (int al = 0; al <= p.l; ++al)
    for (int bl = 0; bl + al <= p.l; ++bl)
      for (int ah = 0; ah <= p.h; ++ah)
        for (int bh = 0; bh + ah <= p.h; ++bh)
          for (int au = 0; au <= p.u; ++au)
            for (int bu = 0; bu + au <= p.u; ++bu) {
              const int sa = al + ah + au;
              const int sb = bl + bh + bu;
              if (sa + sb == 0) continue;  // only excluded coins: never informative
              const int diff = sa - sb;
              if (diff > p.e || -diff > p.e) continue;
              Weighing w;
              w.left = PanLoad{al, ah, au, std::max(0, -diff)};
              w.right = PanLoad{bl, bh, bu, std::max(0, diff)};
              const int on_left = w.left.count(fc);
              const int on_right = w.right.count(fc);
              for (FakePlacement f :
                   {FakePlacement::LeftPan, FakePlacement::RightPan, FakePlacement::OffScale}) {
                if (f == FakePlacement::LeftPan && on_left < 1) continue;
                if (f == FakePlacement::RightPan && on_right < 1) continue;
                if (f == FakePlacement::OffScale && in_class - on_left - on_right < 1) continue;
                w.fake = f;
                if (order == PanOrder::Canonical && pan_less(w)) continue;
                Position next = detail::apply_unchecked(p, w);
                if (next == p) continue;
                visit(w, next);
              }
            }
}

}  // namespace

std::vector<Weighing> informative_weighings(const Position& p, PanOrder order) {
  require_valid(p);
  std::vector<Weighing> out;
  for_each_informative(p, order, [&](const Weighing& w, const Position&) { out.push_back(w); });
  return out;
}

std::vector<Weighing> legal_weighings(const Position& p, const RuleSet& r) {
  require_valid(p);
  std::vector<Weighing> out;
  if (goal_reached(p, r.goal)) return out;
  const bool drop_reveals = r.play == Play::Misere && r.variant == MisereVariant::RevealForbidden;
  for_each_informative(p, PanOrder::Canonical, [&](const Weighing& w, const Position& next) {
    if (drop_reveals && goal_reached(next, r.goal)) return;
    out.push_back(w);
  });
  return out;
}

std::vector<Move> moves(const Position& p, const RuleSet& r) {
  std::map<Position, Weighing> first;
  for (const Weighing& w : legal_weighings(p, r)) {
    first.try_emplace(canonicalize(detail::apply_unchecked(p, w)), w);
  }
  std::vector<Move> out;
  out.reserve(first.size());
  for (const auto& [succ, w] : first) out.push_back(Move{w, succ});
  return out;
}

std::vector<Position> successors(const Position& p, const RuleSet& r) {
  std::vector<Position> out;
  for (const Weighing& w : legal_weighings(p, r)) {
    out.push_back(canonicalize(detail::apply_unchecked(p, w)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> reachable_destined_totals(const Position& p) {
  require_valid(p);
  if (p.u != 0) throw InvalidPosition("reachable_destined_totals needs a destined position");
  std::vector<int> out;
  for (const Position& s : successors(p, RuleSet{Goal::Find, Play::Normal})) {
    out.push_back(s.l + s.h);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int smallest_unreachable_total(const Position& p) {
  const auto totals = reachable_destined_totals(p);
  int m = 1;
  for (int t : totals) {
    if (t == m) ++m;
  }
  return m;
}

bool is_dead(const Position& p, Goal g) {
  require_valid(p);
  if (goal_reached(p, g)) return false;
  bool any = false;
  for_each_informative(p, PanOrder::Canonical, [&](const Weighing&, const Position&) { any = true; });
  return !any;
}

bool forced_to_reveal(const Position& p, Goal g) {
  require_valid(p);
  if (goal_reached(p, g)) return false;
  bool any = false;
  bool all_reveal = true;
  for_each_informative(p, PanOrder::Canonical, [&](const Weighing&, const Position& next) {
    any = true;
    if (!goal_reached(next, g)) all_reveal = false;
  });
  return any && all_reveal;
}

namespace {

bool reachable_rec(const Position& p, Goal g, std::unordered_map<std::uint64_t, bool>& memo) {
  if (goal_reached(p, g)) return true;
  const std::uint64_t key = pack(p);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool found = false;
  for (const Position& s : successors(p, RuleSet{g, Play::Normal})) {
    if (reachable_rec(s, g, memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(key, found);
  return found;
}

}  // namespace

bool goal_reachable(const Position& p, Goal g) {
  require_valid(p);
  std::unordered_map<std::uint64_t, bool> memo;
  return reachable_rec(canonicalize(p), g, memo);
}

namespace {

std::string pan_text(const PanLoad& pan, bool has_fake, CoinClass fc) {
  PanLoad shown = pan;
  if (has_fake) {
    switch (fc) {
      case CoinClass::LightDestined: --shown.light; break;
      case CoinClass::HeavyDestined: --shown.heavy; break;
      case CoinClass::Unknown: --shown.unknown; break;
    }
  }
  std::string out;
  auto add = [&out](const std::string& token) {
    if (!out.empty()) out += '+';
    out += token;
  };
  if (shown.light > 0) add(std::to_string(shown.light) + "L");
  if (shown.heavy > 0) add(std::to_string(shown.heavy) + "H");
  if (shown.unknown > 0) add(std::to_string(shown.unknown) + "U");
  if (shown.excluded > 0) add(std::to_string(shown.excluded) + "X");
  if (has_fake) add("fake");
  return out;
}

}  // namespace

std::string describe(const Position& p, const Weighing& w) {
  return "left[" + pan_text(w.left, w.fake == FakePlacement::LeftPan, p.fake_class) + "] vs right[" +
         pan_text(w.right, w.fake == FakePlacement::RightPan, p.fake_class) + "]";
}

}  // namespace coinweigh
