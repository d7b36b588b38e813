#include "coinweigh/oracle.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

namespace coinweigh {

std::vector<std::string> validate(const ExplicitPosition& x) {
  std::vector<std::string> bad;
  const int n = static_cast<int>(x.statuses.size());
  if (x.fake_index < 0 || x.fake_index >= n) {
    bad.emplace_back("fake index out of range");
    return bad;
  }
  const CoinStatus f = x.statuses[x.fake_index];
  if (f == CoinStatus::Excluded) bad.emplace_back("fake excluded");
  if (f == CoinStatus::LightDestined && x.fake_weight != Weight::Light) {
    bad.emplace_back("light-destined fake must be light");
  }
  if (f == CoinStatus::HeavyDestined && x.fake_weight != Weight::Heavy) {
    bad.emplace_back("heavy-destined fake must be heavy");
  }
  const bool any_unknown = std::ranges::count(x.statuses, CoinStatus::Unknown) > 0;
  const bool any_destined = std::ranges::count(x.statuses, CoinStatus::LightDestined) > 0 ||
                            std::ranges::count(x.statuses, CoinStatus::HeavyDestined) > 0;
  if (any_unknown && any_destined) bad.emplace_back("u>0 with destined coins");
  return bad;
}

Position abstract_of(const ExplicitPosition& x) {
  if (auto bad = validate(x); !bad.empty()) {
    throw InvalidPosition("invalid explicit position " + to_string(x) + ": " + bad.front());
  }
  Position p;
  for (CoinStatus s : x.statuses) {
    switch (s) {
      case CoinStatus::Unknown: ++p.u; break;
      case CoinStatus::LightDestined: ++p.l; break;
      case CoinStatus::HeavyDestined: ++p.h; break;
      case CoinStatus::Excluded: ++p.e; break;
    }
  }
  switch (x.statuses[x.fake_index]) {
    case CoinStatus::LightDestined: p.fake_class = CoinClass::LightDestined; break;
    case CoinStatus::HeavyDestined: p.fake_class = CoinClass::HeavyDestined; break;
    default: p.fake_class = CoinClass::Unknown; break;
  }
  p.fake_weight = x.fake_weight;
  return p;
}

std::string to_string(const ExplicitPosition& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.statuses.size(); ++i) {
    if (i) out += ',';
    switch (x.statuses[i]) {
      case CoinStatus::Unknown: out += 'U'; break;
      case CoinStatus::LightDestined: out += 'L'; break;
      case CoinStatus::HeavyDestined: out += 'H'; break;
      case CoinStatus::Excluded: out += 'X'; break;
    }
  }
  out += "] fake=" + std::to_string(x.fake_index) + " " + to_string(x.fake_weight);
  return out;
}

Oracle::Oracle(int max_coins) : max_coins_(max_coins) {
  if (max_coins < 1 || max_coins > kOracleHardBound) {
    throw std::out_of_range("oracle bound must be in 1.." + std::to_string(kOracleHardBound));
  }
  if (max_coins > kOracleDefaultBound) {
    std::cerr << "warning: oracle bound " << max_coins << " exceeds the default "
              << kOracleDefaultBound << "; expect a long run\n";
  }
}

int Oracle::grundy(const ExplicitPosition& x, const RuleSet& r) {
  if (auto bad = validate(x); !bad.empty()) {
    throw InvalidPosition("invalid explicit position " + to_string(x) + ": " + bad.front());
  }
  if (static_cast<int>(x.statuses.size()) > max_coins_) {
    throw std::out_of_range("explicit position exceeds oracle bound " + std::to_string(max_coins_));
  }
  std::vector<CoinStatus> s = x.statuses;
  return solve(s, x.fake_index, x.fake_weight, r);
}

namespace {

bool finished(const std::vector<CoinStatus>& s, Goal goal) {
  int live = 0;
  CoinStatus last = CoinStatus::Excluded;
  for (CoinStatus c : s) {
    if (c != CoinStatus::Excluded) {
      ++live;
      last = c;
    }
  }
  if (live != 1) return false;
  return goal == Goal::Find || last != CoinStatus::Unknown;
}

std::uint64_t key_of(const std::vector<CoinStatus>& s, int fake, Weight w, const RuleSet& r) {
  std::uint64_t k = 0;
  for (CoinStatus c : s) k = k << 2 | static_cast<std::uint64_t>(c);
  k = k << 4 | s.size();
  k = k << 4 | static_cast<std::uint64_t>(fake);
  k = k << 1 | static_cast<std::uint64_t>(w);
  k = k << 1 | static_cast<std::uint64_t>(r.goal);
  k = k << 1 | static_cast<std::uint64_t>(r.play);
  k = k << 1 | (r.play == Play::Misere ? static_cast<std::uint64_t>(r.variant) : 0);
  return k;
}

}  // namespace

int Oracle::solve(std::vector<CoinStatus>& s, int fake, Weight w, const RuleSet& r) {
  const int over = r.play == Play::Normal ? 0 : 1;
  if (finished(s, r.goal)) return over;
  const std::uint64_t key = key_of(s, fake, w, r);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int n = static_cast<int>(s.size());
  int assignments = 1;
  for (int i = 0; i < n; ++i) assignments *= 3;

  // side[i]: 0 off the scale, 1 left pan, 2 right pan
  std::vector<int> side(n, 0);
  std::vector<CoinStatus> next(n);
  std::vector<bool> seen_values;
  bool any_informative = false;
  bool any_legal = false;

  for (int code = 1; code < assignments; ++code) {
    int c = code;
    int left = 0;
    int right = 0;
    for (int i = 0; i < n; ++i) {
      side[i] = c % 3;
      c /= 3;
      left += side[i] == 1;
      right += side[i] == 2;
    }
    if (left != right) continue;

    // 0 balance, 1 left pan lighter, 2 right pan lighter
    int result = 0;
    if (side[fake] != 0) {
      const bool fake_left = side[fake] == 1;
      result = (fake_left == (w == Weight::Light)) ? 1 : 2;
    }
    for (int i = 0; i < n; ++i) {
      const CoinStatus st = s[i];
      if (st == CoinStatus::Excluded) {
        next[i] = st;
        continue;
      }
      if (result == 0) {
        next[i] = side[i] == 0 ? st : CoinStatus::Excluded;
        continue;
      }
      if (side[i] == 0) {
        next[i] = CoinStatus::Excluded;
        continue;
      }
      const bool on_lighter = side[i] == result;
      if (st == CoinStatus::Unknown) {
        next[i] = on_lighter ? CoinStatus::LightDestined : CoinStatus::HeavyDestined;
      } else if (st == CoinStatus::LightDestined) {
        next[i] = on_lighter ? st : CoinStatus::Excluded;
      } else {
        next[i] = on_lighter ? CoinStatus::Excluded : st;
      }
    }
    if (next == s) continue;
    any_informative = true;
    if (r.play == Play::Misere && r.variant == MisereVariant::RevealForbidden && finished(next, r.goal)) {
      continue;
    }
    any_legal = true;
    std::vector<CoinStatus> child = next;
    const int v = solve(child, fake, w, r);
    if (static_cast<std::size_t>(v) >= seen_values.size()) seen_values.resize(v + 1, false);
    seen_values[v] = true;
  }

  int value = 0;
  if (!any_legal) {
    // A misère reveal-forbidden player with only revealing weighings has lost.
    const bool forced = r.play == Play::Misere && r.variant == MisereVariant::RevealForbidden &&
                        any_informative;
    value = forced ? 0 : over;
  } else {
    while (static_cast<std::size_t>(value) < seen_values.size() && seen_values[value]) ++value;
  }
  memo_.emplace(key, value);
  return value;
}

std::vector<ExplicitPosition> explicit_positions(int max_coins) {
  std::vector<ExplicitPosition> out;
  auto build = [&](int l, int h, int u, int e, CoinStatus fake_status, Weight w) {
    ExplicitPosition x;
    x.statuses.insert(x.statuses.end(), l, CoinStatus::LightDestined);
    x.statuses.insert(x.statuses.end(), h, CoinStatus::HeavyDestined);
    x.statuses.insert(x.statuses.end(), u, CoinStatus::Unknown);
    x.statuses.insert(x.statuses.end(), e, CoinStatus::Excluded);
    x.fake_index = static_cast<int>(std::ranges::find(x.statuses, fake_status) - x.statuses.begin());
    x.fake_weight = w;
    out.push_back(std::move(x));
  };
  for (int n = 1; n <= max_coins; ++n) {
    for (int e = 0; e < n; ++e) {
      const int live = n - e;
      build(0, 0, live, e, CoinStatus::Unknown, Weight::Light);
      build(0, 0, live, e, CoinStatus::Unknown, Weight::Heavy);
      for (int l = 0; l <= live; ++l) {
        const int h = live - l;
        if (l > 0) build(l, h, 0, e, CoinStatus::LightDestined, Weight::Light);
        if (h > 0) build(l, h, 0, e, CoinStatus::HeavyDestined, Weight::Heavy);
      }
    }
  }
  return out;
}

}  // namespace coinweigh
