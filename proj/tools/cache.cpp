#include "coinweigh/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace coinweigh::cache {

using nlohmann::json;

std::string encode(const Record& r) {
  const json doc = {
      {"v", kVersion},
      {"pos",
       {{"l", r.position.l},
        {"h", r.position.h},
        {"u", r.position.u},
        {"e", r.position.e},
        {"fake", to_string(r.position.fake_class)},
        {"fw", to_string(r.position.fake_weight)}}},
      {"rs", {{"goal", to_string(r.rules.goal)}, {"play", to_string(r.rules.play)}, {"variant", variant_label(r.rules)}}},
      {"g", r.grundy}};
  return doc.dump();
}

std::optional<Record> decode(const std::string& line, bool* version_mismatch) {
  if (version_mismatch) *version_mismatch = false;
  const json doc = json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  try {
    if (doc.at("v").get<int>() != kVersion) {
      if (version_mismatch) *version_mismatch = true;
      return std::nullopt;
    }
    const json& pos = doc.at("pos");
    const json& rs = doc.at("rs");
    Record r;
    r.position.l = pos.at("l").get<int>();
    r.position.h = pos.at("h").get<int>();
    r.position.u = pos.at("u").get<int>();
    r.position.e = pos.at("e").get<int>();
    const auto fake = parse_coin_class(pos.at("fake").get<std::string>());
    const auto fw = parse_weight(pos.at("fw").get<std::string>());
    const auto goal = parse_goal(rs.at("goal").get<std::string>());
    const auto play = parse_play(rs.at("play").get<std::string>());
    if (!fake || !fw || !goal || !play) return std::nullopt;
    r.position.fake_class = *fake;
    r.position.fake_weight = *fw;
    r.rules.goal = *goal;
    r.rules.play = *play;
    const std::string variant = rs.at("variant").get<std::string>();
    if (*play == Play::Normal) {
      if (variant != "none") return std::nullopt;
    } else {
      const auto v = parse_variant(variant);
      if (!v) return std::nullopt;
      r.rules.variant = *v;
    }
    r.grundy = doc.at("g").get<int>();
    if (r.grundy < 0 || !validate(r.position).empty()) return std::nullopt;
    return r;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

LoadResult load(const std::string& path) {
  LoadResult out;
  std::ifstream in(path);
  if (!in) {
    if (std::filesystem::exists(path)) out.warnings.push_back("cache " + path + " unreadable; rebuilding");
    return out;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    bool foreign = false;
    auto rec = decode(line, &foreign);
    if (!rec) {
      out.records.clear();
      out.warnings.push_back("cache " + path + (foreign ? ": version mismatch" : ": corrupt record") +
                             " at line " + std::to_string(lineno) + "; rebuilding");
      return out;
    }
    out.records.push_back(*rec);
  }
  return out;
}

void seed_and_verify(Solver& solver, const std::vector<Record>& records) {
  const int bound = solver.options().max_count;
  std::vector<const Record*> usable;
  for (const Record& r : records) {
    const Position& p = r.position;
    if (p.l > bound || p.h > bound || p.u > bound || p.e > bound) continue;
    solver.seed(p, r.rules, r.grundy);
    usable.push_back(&r);
  }
  for (const Record* r : usable) {
    const int fresh = solver.recompute_local(r->position, r->rules);
    if (fresh != r->grundy) {
      throw IntegrityError("cache record " + to_string(r->position) + " " + to_string(r->rules) + " holds " +
                           std::to_string(r->grundy) + ", recomputed " + std::to_string(fresh));
    }
  }
}

void store(const std::string& path, const Solver& solver) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache " + tmp);
    for (const auto& [key, g] : solver.memo().entries()) {
      const auto [p, r] = unpack_memo_key(key);
      out << encode(Record{p, r, g}) << '\n';
    }
    if (!out.flush()) throw std::runtime_error("cannot write cache " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot replace cache " + path + ": " + ec.message());
  }
}

}  // namespace coinweigh::cache
