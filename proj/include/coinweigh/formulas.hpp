#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coinweigh/model.hpp"
#include "coinweigh/rules.hpp"

// Closed forms exactly as published, including values the solver disputes.
// Nothing here is corrected against the solver; the claims module does the
// comparing.

namespace coinweigh::formulas {

/// The reachable-count lemma quantifies over min{l,h} but its proof depends
/// on whether the fake shares its destiny with another coin.
///   AsStated:  the "can't reach 1" exception applies whenever min{l,h} = 1.
///   FakeAware: it applies only when the fake is alone in its destiny group.
enum class LemmaReading { AsStated, FakeAware };

std::string to_string(LemmaReading r);

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Destined coins with an extra real coin: Nim pile of size n-1.
/// Normal n-1, misère n-2 (as published). Requires n >= 2.
int grundy_destined_plus(int n, Play play);

/// Destined totals reachable in one weighing from (l, h), no extra coin.
std::vector<int> reachable_formula(int l, int h, Weight fake_side, LemmaReading reading);

/// Smallest destined total unreachable in one weighing, via the corollary:
/// N = 2l gives N-1; otherwise floor(N/2)+min{l,h} plus 1 or 2, whichever has
/// parity different from N; 1 when the even-N exception applies.
int smallest_unreachable(int l, int h, Weight fake_side, LemmaReading reading);

/// Destined game without extra coin: the extra-coin value at the smallest
/// unreachable count m (normal m-1, misère m-2).
int grundy_destined(int l, int h, Weight fake_side, Play play, LemmaReading reading);

/// Unknown-coin games as tabulated. nullopt marks the published N/A cell
/// (find, misère, one unknown, extra coin). Throws DomainError outside the
/// tabulated range.
std::optional<int> grundy_unknown(int n, bool extra, Goal goal, Play play);

/// Published P-position characterization of destined games without extra coin.
///   Normal:  N = 1, or N even with l = 1 or h = 1 (FakeAware: the fake is the lone coin of its destiny).
///   Misère:  N in {2, 3} (FakeAware: and all coins share one destiny).
bool p_position_destined(int l, int h, Weight fake_side, Play play, LemmaReading reading);

/// Table of destined games with every coin light-destined, no extra coin.
struct AllLightRow {
  int cant_reach;
  int normal;
  int misere;
};
AllLightRow table_all_light(int n);

/// Table of balanced destined games (l = h), no extra coin.
struct BalancedRow {
  int cant_reach;
  int normal;
  int misere;
};
BalancedRow table_balanced(int l);

}  // namespace coinweigh::formulas
