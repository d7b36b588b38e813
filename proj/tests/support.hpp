#pragma once

#include <vector>

#include "coinweigh/model.hpp"

namespace coinweigh::test {

inline Position D(int l, int h, int e, CoinClass fake = CoinClass::LightDestined) {
  return Position{l, h, 0, e, fake, fake == CoinClass::HeavyDestined ? Weight::Heavy : Weight::Light};
}

inline Position U(int u, int e, Weight w = Weight::Light) {
  return Position{0, 0, u, e, CoinClass::Unknown, w};
}

inline PanLoad pan(int light, int heavy, int unknown, int excluded) {
  return PanLoad{light, heavy, unknown, excluded};
}

/// Every valid position with at most `max_total` coins (all coins counted)
/// and at most `max_candidates` non-excluded coins.
inline std::vector<Position> all_positions(int max_total, int max_candidates = 1 << 20) {
  std::vector<Position> out;
  for (int l = 0; l <= max_total; ++l)
    for (int h = 0; l + h <= max_total; ++h)
      for (int u = 0; l + h + u <= max_total; ++u)
        for (int e = 0; l + h + u + e <= max_total; ++e) {
          if (l + h + u > max_candidates) continue;
          for (CoinClass c : {CoinClass::LightDestined, CoinClass::HeavyDestined, CoinClass::Unknown})
            for (Weight w : {Weight::Light, Weight::Heavy}) {
              Position p{l, h, u, e, c, w};
              if (validate(p).empty()) out.push_back(p);
            }
        }
  return out;
}

}  // namespace coinweigh::test
