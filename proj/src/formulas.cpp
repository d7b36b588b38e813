#include "coinweigh/formulas.hpp"

#include <algorithm>
#include <set>

namespace coinweigh::formulas {

std::string to_string(LemmaReading r) {
  return r == LemmaReading::AsStated ? "as-stated" : "fake-aware";
}

namespace {

void require_split(int l, int h, Weight fake_side) {
  if (l < 0 || h < 0 || l + h < 2) throw DomainError("destined formulas need l, h >= 0 and l+h >= 2");
  const int group = fake_side == Weight::Light ? l : h;
  if (group < 1) throw DomainError("fake's destiny group is empty");
}

// Even N with a destiny group of size one: the single destined coin left
// after one weighing cannot be the fake's lone partner.
bool cant_reach_one(int l, int h, Weight fake_side, LemmaReading reading) {
  const int n = l + h;
  if (n % 2 != 0) return false;
  if (reading == LemmaReading::AsStated) return std::min(l, h) == 1;
  return (fake_side == Weight::Light ? l : h) == 1;
}

}  // namespace

int grundy_destined_plus(int n, Play play) {
  if (n < 2) throw DomainError("destined extra-coin formula needs n >= 2");
  return play == Play::Normal ? n - 1 : n - 2;
}

std::vector<int> reachable_formula(int l, int h, Weight fake_side, LemmaReading reading) {
  require_split(l, h, fake_side);
  const int n = l + h;
  std::set<int> out;
  // Balancing an even number (>= 2) of real coins keeps the parity of N.
  for (int v = n - 2; v >= 1; v -= 2) out.insert(v);
  if (n == 2 * l) {
    for (int v = 1; v <= n - 2; ++v) out.insert(v);
  } else {
    const int cap = n / 2 + std::min(l, h);
    for (int v = 1; v < n && v <= cap; ++v) out.insert(v);
  }
  if (cant_reach_one(l, h, fake_side, reading)) out.erase(1);
  return {out.begin(), out.end()};
}

int smallest_unreachable(int l, int h, Weight fake_side, LemmaReading reading) {
  require_split(l, h, fake_side);
  const int n = l + h;
  if (cant_reach_one(l, h, fake_side, reading)) return 1;
  if (n == 2 * l) return n - 1;
  const int base = n / 2 + std::min(l, h);
  return (base + 1) % 2 != n % 2 ? base + 1 : base + 2;
}

int grundy_destined(int l, int h, Weight fake_side, Play play, LemmaReading reading) {
  if (l == 1 && h == 1) throw DomainError("l = h = 1 without extra coin is unplayable");
  const int m = smallest_unreachable(l, h, fake_side, reading);
  const int g = play == Play::Normal ? m - 1 : m - 2;
  if (g < 0) throw DomainError("formula gives a negative value");
  return g;
}

std::optional<int> grundy_unknown(int n, bool extra, Goal goal, Play play) {
  if (n < 1) throw DomainError("unknown-coin formulas need n >= 1");
  if (extra) {
    if (n == 1) {
      if (play == Play::Normal) return goal == Goal::Find ? 0 : 1;
      if (goal == Goal::Find) return std::nullopt;
      return 1;
    }
    return play == Play::Normal ? n : n - 1;
  }
  if (n % 2 == 0) return play == Play::Normal ? 0 : n - 2;
  if (n == 1) throw DomainError("no tabulated value for one unknown coin without extra coin");
  if (play == Play::Misere) return 1;
  return goal == Goal::Find ? 1 : 0;
}

bool p_position_destined(int l, int h, Weight fake_side, Play play, LemmaReading reading) {
  if (l < 0 || h < 0 || l + h < 1) throw DomainError("destined formulas need l+h >= 1");
  if ((fake_side == Weight::Light ? l : h) < 1) throw DomainError("fake's destiny group is empty");
  if (l == 1 && h == 1) throw DomainError("l = h = 1 without extra coin is unplayable");
  const int n = l + h;
  if (play == Play::Normal) {
    if (n == 1) return true;
    if (n % 2 != 0) return false;
    if (reading == LemmaReading::AsStated) return l == 1 || h == 1;
    return (fake_side == Weight::Light ? l : h) == 1;
  }
  const bool small = n == 2 || n == 3;
  if (reading == LemmaReading::AsStated) return small;
  return small && (l == 0 || h == 0);
}

AllLightRow table_all_light(int n) {
  if (n < 1) throw DomainError("table needs N >= 1");
  const int k = n / 4;
  switch (n % 4) {
    case 0: return {2 * k + 1, 2 * k, 2 * k - 1};
    case 1: return {2 * k + 2, 2 * k + 1, 2 * k};
    case 2: return {2 * k + 3, 2 * k + 2, 2 * k + 1};
    default: return {2 * k + 2, 2 * k + 1, 2 * k};
  }
}

BalancedRow table_balanced(int l) {
  if (l < 2) throw DomainError("balanced table needs l >= 2");
  return {2 * l - 1, 2 * l - 2, 2 * l - 3};
}

}  // namespace coinweigh::formulas
