#include "coinweigh/model.hpp"

#include <sstream>

namespace coinweigh {

int Position::count(CoinClass c) const {
  switch (c) {
    case CoinClass::LightDestined: return l;
    case CoinClass::HeavyDestined: return h;
    case CoinClass::Unknown: return u;
  }
  return 0;
}

int PanLoad::count(CoinClass c) const {
  switch (c) {
    case CoinClass::LightDestined: return light;
    case CoinClass::HeavyDestined: return heavy;
    case CoinClass::Unknown: return unknown;
  }
  return 0;
}

std::vector<std::string> validate(const Position& p) {
  std::vector<std::string> bad;
  if (p.l < 0 || p.h < 0 || p.u < 0 || p.e < 0) {
    bad.emplace_back("negative count");
  }
  if (p.candidates() < 1) {
    bad.emplace_back("fake excluded");
  }
  if (p.u > 0 && (p.l > 0 || p.h > 0)) {
    bad.emplace_back("u>0 with destined coins");
  }
  switch (p.fake_class) {
    case CoinClass::LightDestined:
      if (p.l < 1) bad.emplace_back("fake class LightDestined with l=0");
      if (p.fake_weight != Weight::Light) bad.emplace_back("light-destined fake must be light");
      break;
    case CoinClass::HeavyDestined:
      if (p.h < 1) bad.emplace_back("fake class HeavyDestined with h=0");
      if (p.fake_weight != Weight::Heavy) bad.emplace_back("heavy-destined fake must be heavy");
      break;
    case CoinClass::Unknown:
      if (p.u < 1) bad.emplace_back("fake class Unknown with u=0");
      break;
  }
  return bad;
}

std::vector<std::string> validate(const Position& p, const Weighing& w) {
  std::vector<std::string> bad;
  const PanLoad& a = w.left;
  const PanLoad& b = w.right;
  if (a.light < 0 || a.heavy < 0 || a.unknown < 0 || a.excluded < 0 || b.light < 0 ||
      b.heavy < 0 || b.unknown < 0 || b.excluded < 0) {
    bad.emplace_back("negative pan count");
  }
  if (a.total() != b.total()) bad.emplace_back("pans hold different numbers of coins");
  if (a.total() < 1) bad.emplace_back("empty pans");
  if (a.light + b.light > p.l) bad.emplace_back("more light-destined coins than available");
  if (a.heavy + b.heavy > p.h) bad.emplace_back("more heavy-destined coins than available");
  if (a.unknown + b.unknown > p.u) bad.emplace_back("more unknown coins than available");
  if (a.excluded + b.excluded > p.e) bad.emplace_back("more excluded coins than available");

  const CoinClass fc = p.fake_class;
  switch (w.fake) {
    case FakePlacement::LeftPan:
      if (a.count(fc) < 1) bad.emplace_back("fake on left pan without a coin of its class there");
      break;
    case FakePlacement::RightPan:
      if (b.count(fc) < 1) bad.emplace_back("fake on right pan without a coin of its class there");
      break;
    case FakePlacement::OffScale:
      if (p.count(fc) - a.count(fc) - b.count(fc) < 1) {
        bad.emplace_back("fake off scale but every coin of its class is on the scale");
      }
      break;
  }
  return bad;
}

void require_valid(const Position& p) {
  auto bad = validate(p);
  if (!bad.empty()) throw InvalidPosition("invalid position " + to_string(p) + ": " + bad.front());
}

namespace {

void require_valid(const Position& p, const Weighing& w) {
  require_valid(p);
  auto bad = validate(p, w);
  if (!bad.empty()) throw InvalidWeighing("invalid weighing: " + bad.front());
}

}  // namespace

Outcome outcome_of(const Position& p, const Weighing& w) {
  require_valid(p, w);
  if (w.fake == FakePlacement::OffScale) return Outcome::Balance;
  const bool fake_left = w.fake == FakePlacement::LeftPan;
  const bool light = p.fake_weight == Weight::Light;
  return fake_left == light ? Outcome::LeftLighter : Outcome::RightLighter;
}

Position apply_outcome(const Position& p, const Weighing& w) {
  require_valid(p, w);
  return detail::apply_unchecked(p, w);
}

Position detail::apply_unchecked(const Position& p, const Weighing& w) {
  Outcome o = Outcome::Balance;
  if (w.fake != FakePlacement::OffScale) {
    const bool fake_left = w.fake == FakePlacement::LeftPan;
    o = fake_left == (p.fake_weight == Weight::Light) ? Outcome::LeftLighter : Outcome::RightLighter;
  }
  Position q = p;
  if (o == Outcome::Balance) {
    q.l = p.l - w.left.light - w.right.light;
    q.h = p.h - w.left.heavy - w.right.heavy;
    q.u = p.u - w.left.unknown - w.right.unknown;
    q.e = p.total() - q.candidates();
    return q;
  }
  const PanLoad& lighter = o == Outcome::LeftLighter ? w.left : w.right;
  const PanLoad& heavier = o == Outcome::LeftLighter ? w.right : w.left;
  q.l = lighter.light + lighter.unknown;
  q.h = heavier.heavy + heavier.unknown;
  q.u = 0;
  q.e = p.total() - q.l - q.h;
  // The fake sits on the lighter pan iff it is light.
  q.fake_class = p.fake_weight == Weight::Light ? CoinClass::LightDestined : CoinClass::HeavyDestined;
  return q;
}

bool is_informative(const Position& p, const Weighing& w) { return apply_outcome(p, w) != p; }

GoalStatus goal_status(const Position& p) {
  if (p.candidates() != 1) return GoalStatus::NotReached;
  return p.u == 0 ? GoalStatus::FoundAndIdentified : GoalStatus::FoundOnly;
}

Position mirror(const Position& p) {
  Position q = p;
  q.l = p.h;
  q.h = p.l;
  q.fake_weight = p.fake_weight == Weight::Light ? Weight::Heavy : Weight::Light;
  if (p.fake_class == CoinClass::LightDestined) q.fake_class = CoinClass::HeavyDestined;
  if (p.fake_class == CoinClass::HeavyDestined) q.fake_class = CoinClass::LightDestined;
  return q;
}

std::uint64_t pack(const Position& p) {
  constexpr int kMax = 1 << 10;
  if (p.l >= kMax || p.h >= kMax || p.u >= kMax || p.e >= kMax) {
    throw std::out_of_range("position counts exceed packing range: " + to_string(p));
  }
  return static_cast<std::uint64_t>(p.l) | static_cast<std::uint64_t>(p.h) << 10 |
         static_cast<std::uint64_t>(p.u) << 20 | static_cast<std::uint64_t>(p.e) << 30 |
         static_cast<std::uint64_t>(p.fake_class) << 40 |
         static_cast<std::uint64_t>(p.fake_weight) << 42;
}

std::string to_string(CoinClass c) {
  switch (c) {
    case CoinClass::LightDestined: return "light-destined";
    case CoinClass::HeavyDestined: return "heavy-destined";
    case CoinClass::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Weight w) { return w == Weight::Light ? "light" : "heavy"; }

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Balance: return "balance";
    case Outcome::LeftLighter: return "left-lighter";
    case Outcome::RightLighter: return "right-lighter";
  }
  return "?";
}

std::string to_string(GoalStatus g) {
  switch (g) {
    case GoalStatus::NotReached: return "not-reached";
    case GoalStatus::FoundOnly: return "found";
    case GoalStatus::FoundAndIdentified: return "found-identified";
  }
  return "?";
}

std::string to_string(const Position& p) {
  std::ostringstream os;
  os << "(l=" << p.l << ",h=" << p.h << ",u=" << p.u << ",e=" << p.e
     << ",fake=" << to_string(p.fake_class) << "," << to_string(p.fake_weight) << ")";
  return os.str();
}

}  // namespace coinweigh
