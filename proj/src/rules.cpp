#include "coinweigh/rules.hpp"

namespace coinweigh {

std::array<RuleSet, 6> all_rulesets() {
  std::array<RuleSet, 6> out{};
  std::size_t i = 0;
  for (Goal g : {Goal::Find, Goal::FindIdentify}) {
    out[i++] = RuleSet{g, Play::Normal, MisereVariant::RevealerLoses};
    out[i++] = RuleSet{g, Play::Misere, MisereVariant::RevealerLoses};
    out[i++] = RuleSet{g, Play::Misere, MisereVariant::RevealForbidden};
  }
  return out;
}

std::string to_string(Goal g) { return g == Goal::Find ? "find" : "find-identify"; }

std::string to_string(Play p) { return p == Play::Normal ? "normal" : "misere"; }

std::string to_string(MisereVariant v) {
  return v == MisereVariant::RevealerLoses ? "revealer-loses" : "reveal-forbidden";
}

std::string to_string(const RuleSet& r) {
  if (r.play == Play::Normal) return "normal/" + to_string(r.goal);
  return "misere/" + to_string(r.variant) + "/" + to_string(r.goal);
}

std::string variant_label(const RuleSet& r) {
  return r.play == Play::Normal ? "none" : to_string(r.variant);
}

std::optional<Goal> parse_goal(std::string_view s) {
  if (s == "find") return Goal::Find;
  if (s == "find-identify") return Goal::FindIdentify;
  return std::nullopt;
}

std::optional<Play> parse_play(std::string_view s) {
  if (s == "normal") return Play::Normal;
  if (s == "misere") return Play::Misere;
  return std::nullopt;
}

std::optional<MisereVariant> parse_variant(std::string_view s) {
  if (s == "revealer-loses") return MisereVariant::RevealerLoses;
  if (s == "reveal-forbidden") return MisereVariant::RevealForbidden;
  return std::nullopt;
}

std::optional<CoinClass> parse_coin_class(std::string_view s) {
  if (s == "light-destined") return CoinClass::LightDestined;
  if (s == "heavy-destined") return CoinClass::HeavyDestined;
  if (s == "unknown") return CoinClass::Unknown;
  return std::nullopt;
}

std::optional<Weight> parse_weight(std::string_view s) {
  if (s == "light") return Weight::Light;
  if (s == "heavy") return Weight::Heavy;
  return std::nullopt;
}

}  // namespace coinweigh
