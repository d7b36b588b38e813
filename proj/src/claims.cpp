#include "coinweigh/claims.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "coinweigh/formulas.hpp"

namespace coinweigh::claims {

std::string to_string(Severity s) { return s == Severity::Required ? "Required" : "Informational"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "NOT-APPLICABLE";
  }
  return "?";
}

namespace {

using formulas::LemmaReading;

constexpr RuleSet kNormalFind{Goal::Find, Play::Normal, MisereVariant::RevealerLoses};
constexpr RuleSet kNormalFindId{Goal::FindIdentify, Play::Normal, MisereVariant::RevealerLoses};
constexpr RuleSet kRevealerLosesFind{Goal::Find, Play::Misere, MisereVariant::RevealerLoses};
constexpr RuleSet kForbiddenFind{Goal::Find, Play::Misere, MisereVariant::RevealForbidden};

constexpr LemmaReading kReadings[] = {LemmaReading::AsStated, LemmaReading::FakeAware};

std::string reading_label(LemmaReading r) { return formulas::to_string(r); }

Severity severity_for(const RuleSet& r) {
  return r.play == Play::Normal ? Severity::Required : Severity::Informational;
}

// Accumulates instances of one check.
class Check {
 public:
  Check(std::string id, std::string convention, std::string reading, Severity severity) {
    result_.id = std::move(id);
    result_.convention = std::move(convention);
    result_.reading = std::move(reading);
    result_.severity = severity;
  }

  void expect(const std::string& params, const std::string& expected, const std::string& computed) {
    ++result_.instances;
    if (expected != computed) result_.mismatches.push_back({params, expected, computed});
  }

  void expect(const std::string& params, int expected, int computed) {
    expect(params, std::to_string(expected), std::to_string(computed));
  }

  ClaimResult finish() {
    if (result_.instances == 0) {
      result_.status = Status::NotApplicable;
    } else {
      result_.status = result_.mismatches.empty() ? Status::Pass : Status::Fail;
    }
    return std::move(result_);
  }

 private:
  ClaimResult result_;
};

struct Context {
  Solver& solver;
  int max_n;
};

using Evaluator = std::function<std::vector<ClaimResult>(Context&)>;

struct Entry {
  Claim claim;
  Evaluator evaluate;
};

std::string params(const Position& p) {
  std::ostringstream os;
  os << "l=" << p.l << ",h=" << p.h << ",u=" << p.u << ",e=" << p.e << ",fake=";
  switch (p.fake_class) {
    case CoinClass::LightDestined: os << "L"; break;
    case CoinClass::HeavyDestined: os << "H"; break;
    case CoinClass::Unknown: os << "U-" << (p.fake_weight == Weight::Light ? "light" : "heavy"); break;
  }
  return os.str();
}

std::string set_text(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

Position destined(int l, int h, int e, Weight side) {
  return Position{l, h, 0, e, side == Weight::Light ? CoinClass::LightDestined : CoinClass::HeavyDestined,
                  side};
}

Position unknown(int u, int e) { return Position{0, 0, u, e, CoinClass::Unknown, Weight::Light}; }

// Every (l, h, fake side) with l + h = n and a non-empty fake group.
template <class Fn>
void for_each_split(int n, Fn&& fn) {
  for (int l = n; l >= 0; --l) {
    const int h = n - l;
    if (l > 0) fn(l, h, Weight::Light);
    if (h > 0) fn(l, h, Weight::Heavy);
  }
}

// Membership up to pan order: legal_weighings lists each weighing once.
bool offers(const std::vector<Weighing>& legal, const Weighing& w) {
  Weighing swapped{w.right, w.left, w.fake};
  if (w.fake == FakePlacement::LeftPan) swapped.fake = FakePlacement::RightPan;
  if (w.fake == FakePlacement::RightPan) swapped.fake = FakePlacement::LeftPan;
  return std::ranges::find(legal, w) != legal.end() || std::ranges::find(legal, swapped) != legal.end();
}

bool playable(const Position& p, Goal g) { return goal_reachable(p, g); }

std::string outcome_text(OutcomeClass c) { return to_string(c); }

std::string outcome_label(const RuleSet& r) { return to_string(r) + ":outcome"; }

std::vector<RuleSet> misere_sets(Goal g) {
  return {RuleSet{g, Play::Misere, MisereVariant::RevealerLoses},
          RuleSet{g, Play::Misere, MisereVariant::RevealForbidden}};
}

// Value of `succ` if it is a legal successor of `start` under `r`, else "N/A".
std::string successor_value(Context& ctx, const Position& start, const Position& succ, const RuleSet& r) {
  const auto next = successors(start, r);
  const Position target = canonicalize(succ);
  if (!std::ranges::binary_search(next, target)) return "N/A";
  return std::to_string(ctx.solver.grundy(target, r));
}

// The player to move can end the game in their favour with one weighing:
// normal play reaches the goal; misère play leaves the opponent forced to reveal.
bool wins_in_one_move(Context& ctx, const Position& p, const RuleSet& r) {
  if (ctx.solver.outcome_class(p, r) != OutcomeClass::N) return false;
  for (const Position& s : successors(p, r)) {
    if (r.play == Play::Normal) {
      if (goal_reached(s, r.goal)) return true;
    } else if (forced_to_reveal(s, r.goal) && ctx.solver.outcome_class(s, r) == OutcomeClass::P) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Destined coins

std::vector<ClaimResult> eval_c1(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : {kNormalFind, kNormalFindId}) {
    Check c("C1", to_string(r), "-", Severity::Required);
    for (int n = 2; n <= ctx.max_n; ++n) {
      for_each_split(n, [&](int l, int h, Weight side) {
        for (int e = 1; e <= 3; ++e) {
          const Position p = destined(l, h, e, side);
          c.expect(params(p), formulas::grundy_destined_plus(n, Play::Normal), ctx.solver.grundy(p, r));
        }
      });
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c2(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : misere_sets(Goal::Find)) {
    Check c("C2", to_string(r), "-", Severity::Informational);
    for (int n = 2; n <= ctx.max_n; ++n) {
      for_each_split(n, [&](int l, int h, Weight side) {
        const Position p = destined(l, h, 1, side);
        c.expect(params(p), formulas::grundy_destined_plus(n, Play::Misere), ctx.solver.grundy(p, r));
      });
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c3(Context& ctx) {
  std::vector<ClaimResult> out;
  for (LemmaReading reading : kReadings) {
    Check c("C3", "move-set", reading_label(reading), Severity::Required);
    for (int n = 2; n <= ctx.max_n; ++n) {
      for_each_split(n, [&](int l, int h, Weight side) {
        if (l == 1 && h == 1) return;
        const Position p = destined(l, h, 0, side);
        c.expect(params(p), set_text(formulas::reachable_formula(l, h, side, reading)),
                 set_text(reachable_destined_totals(p)));
      });
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c4(Context& ctx) {
  std::vector<ClaimResult> out;
  for (LemmaReading reading : kReadings) {
    Check counts("C4", "move-set", reading_label(reading), Severity::Required);
    Check values("C4", to_string(kNormalFind), reading_label(reading), Severity::Required);
    for (int n = 2; n <= ctx.max_n; ++n) {
      for_each_split(n, [&](int l, int h, Weight side) {
        if (l == 1 && h == 1) return;
        const Position p = destined(l, h, 0, side);
        counts.expect(params(p), formulas::smallest_unreachable(l, h, side, reading),
                      smallest_unreachable_total(p));
        values.expect(params(p), formulas::grundy_destined(l, h, side, Play::Normal, reading),
                      ctx.solver.grundy(p, kNormalFind));
      });
    }
    out.push_back(counts.finish());
    out.push_back(values.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c5(Context& ctx) {
  std::vector<ClaimResult> out;
  for (LemmaReading reading : kReadings) {
    Check c("C5", outcome_label(kNormalFind), reading_label(reading), Severity::Required);
    for (int n = 1; n <= ctx.max_n; ++n) {
      for_each_split(n, [&](int l, int h, Weight side) {
        const Position p = destined(l, h, 0, side);
        if (!playable(p, Goal::Find)) return;
        const bool p_pos = formulas::p_position_destined(l, h, side, Play::Normal, reading);
        c.expect(params(p), p_pos ? "P" : "N", outcome_text(ctx.solver.outcome_class(p, kNormalFind)));
      });
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c6(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : misere_sets(Goal::Find)) {
    for (LemmaReading reading : kReadings) {
      Check c("C6", outcome_label(r), reading_label(reading), Severity::Required);
      for (int n = 1; n <= ctx.max_n; ++n) {
        for_each_split(n, [&](int l, int h, Weight side) {
          const Position p = destined(l, h, 0, side);
          if (!playable(p, Goal::Find)) return;
          const bool p_pos = formulas::p_position_destined(l, h, side, Play::Misere, reading);
          c.expect(params(p), p_pos ? "P" : "N", outcome_text(ctx.solver.outcome_class(p, r)));
        });
      }
      out.push_back(c.finish());
    }
  }
  return out;
}

std::vector<ClaimResult> eval_c7(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : {kNormalFind, kRevealerLosesFind, kForbiddenFind}) {
    Check c("C7", to_string(r), "-", severity_for(r));
    for (int n = 2; n <= ctx.max_n; ++n) {
      for_each_split(n, [&](int l, int h, Weight side) {
        const Position p = destined(l, h, 0, side);
        if (!playable(p, Goal::Find)) return;
        const int m = smallest_unreachable_total(p);
        int expected = 0;
        if (m >= 2) {
          expected = formulas::grundy_destined_plus(m, r.play);
        } else if (r.play == Play::Misere) {
          return;  // no published misère value for a single destined coin
        }
        c.expect(params(p) + ",m=" + std::to_string(m), expected, ctx.solver.grundy(p, r));
      });
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c8(Context& ctx) {
  Check reach("C8", "cant-reach", "-", Severity::Required);
  Check normal("C8", to_string(kNormalFind), "-", Severity::Required);
  Check rl("C8", to_string(kRevealerLosesFind), "-", Severity::Informational);
  Check rf("C8", to_string(kForbiddenFind), "-", Severity::Informational);
  for (int n = 2; n <= ctx.max_n; ++n) {
    const Position p = destined(n, 0, 0, Weight::Light);
    const auto row = formulas::table_all_light(n);
    reach.expect(params(p), row.cant_reach, smallest_unreachable_total(p));
    normal.expect(params(p), row.normal, ctx.solver.grundy(p, kNormalFind));
    rl.expect(params(p), row.misere, ctx.solver.grundy(p, kRevealerLosesFind));
    rf.expect(params(p), row.misere, ctx.solver.grundy(p, kForbiddenFind));
  }
  return {reach.finish(), normal.finish(), rl.finish(), rf.finish()};
}

std::vector<ClaimResult> eval_c9(Context& ctx) {
  Check reach("C9", "cant-reach", "-", Severity::Required);
  Check normal("C9", to_string(kNormalFind), "-", Severity::Required);
  Check rl("C9", to_string(kRevealerLosesFind), "-", Severity::Informational);
  Check rf("C9", to_string(kForbiddenFind), "-", Severity::Informational);
  for (int l = 2; 2 * l <= ctx.max_n; ++l) {
    const auto row = formulas::table_balanced(l);
    for (Weight side : {Weight::Light, Weight::Heavy}) {
      const Position p = destined(l, l, 0, side);
      reach.expect(params(p), row.cant_reach, smallest_unreachable_total(p));
      normal.expect(params(p), row.normal, ctx.solver.grundy(p, kNormalFind));
      rl.expect(params(p), row.misere, ctx.solver.grundy(p, kRevealerLosesFind));
      rf.expect(params(p), row.misere, ctx.solver.grundy(p, kForbiddenFind));
    }
  }
  return {reach.finish(), normal.finish(), rl.finish(), rf.finish()};
}

// ---------------------------------------------------------------------------
// Unknown coins

// Successor families of a fresh unknown start: how many coins a balance
// excluded, and how many coins an imbalance left destined.
std::string first_move_signature(const std::vector<Position>& next, int start_e) {
  std::set<int> excluded;
  std::set<int> destined_totals;
  for (const Position& s : next) {
    if (s.u > 0) {
      excluded.insert(s.e - start_e);
    } else {
      destined_totals.insert(s.l + s.h);
    }
  }
  return "excluded" + set_text({excluded.begin(), excluded.end()}) + " destined" +
         set_text({destined_totals.begin(), destined_totals.end()});
}

std::string signature_text(const std::vector<int>& excluded, const std::vector<int>& destined_totals) {
  return "excluded" + set_text(excluded) + " destined" + set_text(destined_totals);
}

std::vector<ClaimResult> eval_c10(Context& ctx) {
  Check c("C10", "move-set", "-", Severity::Required);
  for (int n = 2; n <= ctx.max_n; ++n) {
    const Position p = unknown(n, 1);
    std::vector<int> excluded;
    std::vector<int> totals;
    for (int k = 1; k <= n - 1; ++k) excluded.push_back(k);
    for (int d = 1; d <= n; ++d) totals.push_back(d);
    c.expect(params(p), signature_text(excluded, totals),
             first_move_signature(successors(p, kNormalFind), p.e));
  }
  return {c.finish()};
}

// Each rule set once against a (possibly undefined) published value.
std::vector<ClaimResult> eval_unknown_values(Context& ctx, const std::string& id, const Position& p, int n,
                                             bool extra, bool all_informational) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    Check c(id, to_string(r), "-", all_informational ? Severity::Informational : severity_for(r));
    const auto expected = formulas::grundy_unknown(n, extra, r.goal, r.play);
    if (expected && playable(p, r.goal)) c.expect(params(p), *expected, ctx.solver.grundy(p, r));
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c11(Context& ctx) {
  return eval_unknown_values(ctx, "C11", unknown(1, 1), 1, true, false);
}

std::vector<ClaimResult> eval_c12(Context& ctx) {
  const Position p = unknown(2, 1);
  struct Row {
    const char* name;
    Weighing w;
    // find, find-identify, find misère, find-identify misère
    const char* expected[4];
  };
  const Row rows[] = {
      {"fake vs extra", Weighing{PanLoad{0, 0, 1, 0}, PanLoad{0, 0, 0, 1}, FakePlacement::LeftPan},
       {"0", "0", "N/A", "N/A"}},
      {"real unknown vs extra", Weighing{PanLoad{0, 0, 1, 0}, PanLoad{0, 0, 0, 1}, FakePlacement::OffScale},
       {"0", "1", "N/A", "1"}},
      {"unknown vs unknown", Weighing{PanLoad{0, 0, 1, 0}, PanLoad{0, 0, 1, 0}, FakePlacement::LeftPan},
       {"1", "1", "1", "1"}},
  };
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    Check c("C12", to_string(r), "-", severity_for(r));
    const int column = (r.play == Play::Misere ? 2 : 0) + (r.goal == Goal::FindIdentify ? 1 : 0);
    const auto legal = legal_weighings(p, r);
    for (const Row& row : rows) {
      std::string computed = "N/A";
      if (offers(legal, row.w)) {
        computed = std::to_string(ctx.solver.grundy(apply_outcome(p, row.w), r));
      }
      c.expect(params(p) + ",move=" + row.name, row.expected[column], computed);
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c13(Context& ctx) {
  const Position p = unknown(2, 1);
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    Check c("C13", to_string(r), "-", severity_for(r));
    const int expected = r.play == Play::Normal ? 2 : 1;
    c.expect(params(p), expected, ctx.solver.grundy(p, r));
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c14(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    const bool normal = r.play == Play::Normal;
    Check c("C14", normal ? to_string(r) : outcome_label(r), "-", Severity::Required);
    for (int n = 2; n <= ctx.max_n; ++n) {
      const Position p = unknown(n, 1);
      if (normal) {
        c.expect(params(p), n, ctx.solver.grundy(p, r));
      } else {
        // A single misère Nim pile of size >= 2 is a next-player win.
        c.expect(params(p), "N", outcome_text(ctx.solver.outcome_class(p, r)));
      }
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c15(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    Check c("C15", to_string(r), "-", severity_for(r));
    for (int n = 2; n <= ctx.max_n; ++n) {
      const Position p = unknown(n, 1);
      c.expect(params(p), *formulas::grundy_unknown(n, true, r.goal, r.play), ctx.solver.grundy(p, r));
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c16(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    Check c("C16", outcome_label(r), "-", Severity::Required);
    for (int n = 2; n <= ctx.max_n; ++n) {
      const Position p = unknown(n, 1);
      c.expect(params(p), "won in one move", wins_in_one_move(ctx, p, r) ? "won in one move" : "not");
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c17(Context& ctx) {
  Check c("C17", "move-set", "-", Severity::Required);
  for (int n = 2; n <= ctx.max_n; ++n) {
    const Position p = unknown(n, 0);
    std::vector<int> excluded;
    std::vector<int> totals;
    for (int k = 2; k <= n - 1; k += 2) excluded.push_back(k);
    for (int d = 2; d <= n; d += 2) totals.push_back(d);
    c.expect(params(p), signature_text(excluded, totals),
             first_move_signature(successors(p, kNormalFind), p.e));
  }
  return {c.finish()};
}

std::vector<ClaimResult> eval_c18(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    const bool normal = r.play == Play::Normal;
    Check c("C18", to_string(r), "-", severity_for(r));
    for (int n = 2; n <= ctx.max_n; n += 2) {
      const Position start = unknown(n, 0);
      if (!playable(start, r.goal)) continue;
      const int k = n / 2;
      for (int i = 1; 2 * i < n; ++i) {
        const Position a = unknown(2 * i, n - 2 * i);
        c.expect(params(start) + " -> " + params(a), std::to_string(normal ? 2 * i : 2 * i - 1),
                 successor_value(ctx, start, a, r));
        const Position b = destined(i, i, n - 2 * i, Weight::Light);
        c.expect(params(start) + " -> " + params(b), std::to_string(normal ? 2 * i - 1 : 2 * i - 2),
                 successor_value(ctx, start, b, r));
      }
      const int all_on_scale = normal ? 2 * k - 2 : 2 * k - 3;
      if (all_on_scale >= 0) {
        const Position b = destined(k, k, 0, Weight::Light);
        c.expect(params(start) + " -> " + params(b), std::to_string(all_on_scale),
                 successor_value(ctx, start, b, r));
      }
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c19(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    Check c("C19", to_string(r), "-", severity_for(r));
    for (int n = 2; n <= ctx.max_n; n += 2) {
      const Position p = unknown(n, 0);
      if (!playable(p, r.goal)) continue;
      c.expect(params(p), *formulas::grundy_unknown(n, false, r.goal, r.play), ctx.solver.grundy(p, r));
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c20(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    const bool normal = r.play == Play::Normal;
    const bool identify = r.goal == Goal::FindIdentify;
    Check c("C20", to_string(r), "-", severity_for(r));
    for (int n = 3; n <= ctx.max_n; n += 2) {
      const Position start = unknown(n, 0);
      if (!playable(start, r.goal)) continue;
      for (int i = 1; 2 * i + 1 < n; ++i) {
        const Position a = unknown(2 * i + 1, n - 2 * i - 1);
        c.expect(params(start) + " -> " + params(a), std::to_string(normal ? 2 * i + 1 : 2 * i),
                 successor_value(ctx, start, a, r));
      }
      const Position one = unknown(1, n - 1);
      std::string one_expected;
      if (normal) {
        one_expected = identify ? "1" : "0";
      } else {
        one_expected = identify ? "1" : "N/A";
      }
      c.expect(params(start) + " -> " + params(one), one_expected, successor_value(ctx, start, one, r));
      for (int i = 1; 2 * i < n; ++i) {
        const Position b = destined(i, i, n - 2 * i, Weight::Light);
        c.expect(params(start) + " -> " + params(b), std::to_string(normal ? 2 * i - 1 : 2 * i - 2),
                 successor_value(ctx, start, b, r));
      }
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c21(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    Check c("C21", to_string(r), "-", Severity::Informational);
    for (int n = 3; n <= ctx.max_n; n += 2) {
      const Position p = unknown(n, 0);
      c.expect(params(p), *formulas::grundy_unknown(n, false, r.goal, r.play), ctx.solver.grundy(p, r));
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<ClaimResult> eval_c22(Context& ctx) {
  std::vector<ClaimResult> out;
  for (const RuleSet& r : all_rulesets()) {
    const bool normal = r.play == Play::Normal;
    const Severity sev =
        normal && r.goal == Goal::FindIdentify ? Severity::Informational : Severity::Required;
    Check c("C22", outcome_label(r), "-", sev);
    for (int n = 3; n <= ctx.max_n; n += 2) {
      const Position p = unknown(n, 0);
      bool wins = false;
      if (normal) {
        wins = wins_in_one_move(ctx, p, r);
      } else {
        // The counterfeit against one real unknown coin leaves two coins of
        // opposite destinies, every further weighing of which reveals.
        const Weighing w{PanLoad{0, 0, 1, 0}, PanLoad{0, 0, 1, 0}, FakePlacement::LeftPan};
        const auto legal = legal_weighings(p, r);
        if (offers(legal, w) &&
            ctx.solver.outcome_class(p, r) == OutcomeClass::N) {
          const Position s = apply_outcome(p, w);
          wins = forced_to_reveal(s, r.goal) && ctx.solver.outcome_class(s, r) == OutcomeClass::P;
        }
      }
      c.expect(params(p), "won in one move", wins ? "won in one move" : "not");
    }
    out.push_back(c.finish());
  }
  return out;
}

Claim make(std::string id, std::string ref, Severity sev, std::string domain,
           std::vector<std::string> conventions) {
  return Claim{std::move(id), std::move(ref), sev, std::move(domain), std::move(conventions)};
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    const auto R = Severity::Required;
    const auto I = Severity::Informational;
    const std::vector<std::string> six = {"normal/find", "misere/revealer-loses/find",
                                          "misere/reveal-forbidden/find", "normal/find-identify",
                                          "misere/revealer-loses/find-identify",
                                          "misere/reveal-forbidden/find-identify"};
    std::vector<Entry> v;
    v.push_back({make("C1", "Lemma 1 (destined, extra coin), normal play: G(D+_{l,h}) = l+h-1", R,
                      "2<=l+h<=max_n, every split and fake side, e in {1,2,3}",
                      {"normal/find", "normal/find-identify"}),
                 eval_c1});
    v.push_back({make("C2", "Lemma 1 (destined, extra coin), misere display: G(DM+_{l,h}) = l+h-2", I,
                      "2<=l+h<=max_n, every split and fake side, e=1",
                      {"misere/revealer-loses/find", "misere/reveal-forbidden/find"}),
                 eval_c2});
    v.push_back({make("C3", "Lemma 2: destined totals reachable by the first weighing", R,
                      "2<=l+h<=max_n, e=0, every split and fake side except l=h=1",
                      {"move-set x {as-stated, fake-aware}"}),
                 eval_c3});
    v.push_back({make("C4", "Corollary: smallest unreachable destined total, and G = m-1", R,
                      "2<=l+h<=max_n, e=0, every split and fake side except l=h=1",
                      {"move-set x readings", "normal/find x readings"}),
                 eval_c4});
    v.push_back({make("C5", "Corollary (P-positions, normal): N=1, or N even with l=1 or h=1", R,
                      "1<=l+h<=max_n, e=0, playable starts",
                      {"normal/find:outcome x readings"}),
                 eval_c5});
    v.push_back({make("C6", "Corollary (P-positions, misere): N=2 or N=3", R,
                      "1<=l+h<=max_n, e=0, playable starts",
                      {"misere/revealer-loses/find:outcome x readings",
                       "misere/reveal-forbidden/find:outcome x readings"}),
                 eval_c6});
    v.push_back({make("C7",
                      "Destined recursion: G(D_{l,h}) = G(D+ with m destined), m = smallest unreachable",
                      R, "2<=l+h<=max_n, e=0, playable starts; m measured by move generation",
                      {"normal/find", "misere/revealer-loses/find", "misere/reveal-forbidden/find"}),
                 eval_c7});
    v.push_back({make("C8", "Table 1: destined coins all lighter (N mod 4 rows)", R,
                      "2<=N<=max_n, l=N, h=0, e=0",
                      {"cant-reach", "normal/find", "misere/revealer-loses/find",
                       "misere/reveal-forbidden/find"}),
                 eval_c8});
    v.push_back({make("C9", "Table 2: destined coins with l = h", R, "2<=l, 2l<=max_n, both fake sides, e=0",
                      {"cant-reach", "normal/find", "misere/revealer-loses/find",
                       "misere/reveal-forbidden/find"}),
                 eval_c9});
    v.push_back({make("C10", "Lemma (unknown, extra coin): first weighing excludes 1..N-1 or destines 1..N", R,
                      "2<=N<=max_n, u=N, e=1", {"move-set"}),
                 eval_c10});
    v.push_back({make("C11", "Initial values: G(F1+)=0, G(FI1+)=1, G(FIM1+)=1, FM1+ impossible", R,
                      "u=1, e=1", six),
                 eval_c11});
    v.push_back({make("C12", "Table 3: moves from two unknown coins with extra coin", R, "u=2, e=1", six),
                 eval_c12});
    v.push_back({make("C13", "Two unknown coins, extra coin: G(F2+)=2, G(FI2+)=2, G(FM2+)=1, G(FIM2+)=1", R,
                      "u=2, e=1", six),
                 eval_c13});
    v.push_back({make("C14", "Lemma (unknown, extra coin): Nim pile of size N (normal and misere)", R,
                      "2<=N<=max_n, u=N, e=1; misere checked at outcome level",
                      {"normal/find", "normal/find-identify", "misere/*:outcome"}),
                 eval_c14});
    v.push_back({make("C15", "Table 4: unknown coins with extra coin (N, N, N-1, N-1)", R,
                      "2<=N<=max_n, u=N, e=1", six),
                 eval_c15});
    v.push_back({make("C16", "Corollary (unknown, extra coin): won in one move for N > 1", R,
                      "2<=N<=max_n, u=N, e=1", {"*:outcome"}),
                 eval_c16});
    v.push_back({make("C17", "Lemma (unknown, no extra coin): first weighing excludes or destines an even count",
                      R, "2<=N<=max_n, u=N, e=0", {"move-set"}),
                 eval_c17});
    v.push_back({make("C18", "Move table for N = 2k unknown coins, no extra coin", R,
                      "even 2<=N<=max_n with reachable goal", six),
                 eval_c18});
    v.push_back({make("C19", "Even-N values, no extra coin: F=0, FI=0, FM=N-2, FIM=N-2", R,
                      "even 2<=N<=max_n with reachable goal", six),
                 eval_c19});
    v.push_back({make("C20", "Move table for N = 2k+1 unknown coins (one unknown coin separate)", R,
                      "odd 3<=N<=max_n", six),
                 eval_c20});
    v.push_back({make("C21", "Odd-N values, no extra coin: F=1, FI=0, FM=1, FIM=1", I, "odd 3<=N<=max_n", six),
                 eval_c21});
    v.push_back({make("C22", "Closing remark: won in one move by weighing the fake against a real coin", R,
                      "odd 3<=N<=max_n, u=N, e=0", {"*:outcome"}),
                 eval_c22});
    return v;
  }();
  return entries;
}

const Entry& find_entry(const std::string& id) {
  for (const Entry& e : registry()) {
    if (e.claim.id == id) return e;
  }
  throw std::invalid_argument("unknown claim id: " + id);
}

}  // namespace

const std::vector<Claim>& list_claims() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> out;
    for (const Entry& e : registry()) out.push_back(e.claim);
    return out;
  }();
  return claims;
}

std::vector<ClaimResult> check_claim(const std::string& id, int max_n, Solver& solver) {
  const Entry& entry = find_entry(id);
  Context ctx{solver, max_n};
  return entry.evaluate(ctx);
}

Report check_all(int max_n, Solver& solver, int workers, const std::vector<std::string>& ids) {
  if (max_n < 4) throw std::invalid_argument("claims need max_n >= 4");
  std::vector<std::string> selected = ids;
  if (selected.empty()) {
    for (const Claim& c : list_claims()) selected.push_back(c.id);
  }
  for (const std::string& id : selected) find_entry(id);

  std::vector<std::vector<ClaimResult>> per_claim(selected.size());
  parallel_for(selected.size(), workers,
               [&](std::size_t i) { per_claim[i] = check_claim(selected[i], max_n, solver); });

  Report report;
  report.max_n = max_n;
  report.passed = true;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    // convention -> (has a Required check, some reading passed, some failed)
    std::map<std::string, std::array<bool, 3>> groups;
    for (const ClaimResult& r : per_claim[i]) {
      if (r.severity != Severity::Required) continue;
      auto& g = groups[r.convention];
      g[0] = true;
      g[1] = g[1] || r.status == Status::Pass;
      g[2] = g[2] || r.status == Status::Fail;
    }
    const bool ok = std::ranges::all_of(groups, [](const auto& kv) {
      return kv.second[1] || !kv.second[2];
    });
    if (!ok) {
      report.passed = false;
      report.failing_required.push_back(selected[i]);
    }
    for (ClaimResult& r : per_claim[i]) report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace coinweigh::claims
