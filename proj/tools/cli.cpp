#include "coinweigh/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coinweigh/cache.hpp"
#include "coinweigh/claims.hpp"
#include "coinweigh/movegen.hpp"
#include "coinweigh/oracle.hpp"
#include "coinweigh/solver.hpp"

namespace coinweigh::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kClasses = {"light-destined", "heavy-destined", "unknown"};
const std::vector<std::string> kWeights = {"light", "heavy"};
const std::vector<std::string> kGoals = {"find", "find-identify"};
const std::vector<std::string> kPlays = {"normal", "misere"};
const std::vector<std::string> kVariants = {"revealer-loses", "reveal-forbidden"};

struct RuleFlags {
  std::string goal = "find";
  std::string play = "normal";
  std::string variant = "revealer-loses";

  RuleSet resolve() const {
    return RuleSet{*parse_goal(goal), *parse_play(play), *parse_variant(variant)}.normalized();
  }
};

struct PositionFlags {
  int l = 0, h = 0, u = 0, e = 0;
  std::string fake;
  std::string fake_weight;

  Position resolve() const {
    Position p{l, h, u, e};
    if (fake.empty()) {
      p.fake_class = u > 0 ? CoinClass::Unknown : l > 0 ? CoinClass::LightDestined : CoinClass::HeavyDestined;
    } else {
      p.fake_class = *parse_coin_class(fake);
    }
    if (fake_weight.empty()) {
      p.fake_weight = p.fake_class == CoinClass::HeavyDestined ? Weight::Heavy : Weight::Light;
    } else {
      p.fake_weight = *parse_weight(fake_weight);
    }
    const auto violations = validate(p);
    if (!violations.empty()) {
      std::string msg = "invalid position " + to_string(p) + ":";
      for (const auto& v : violations) msg += " [" + v + "]";
      throw UsageError(msg);
    }
    return p;
  }
};

void add_rule_flags(CLI::App* cmd, RuleFlags& f) {
  cmd->add_option("--goal", f.goal, "find | find-identify")->check(CLI::IsMember(kGoals))->capture_default_str();
  cmd->add_option("--play", f.play, "normal | misere")->check(CLI::IsMember(kPlays))->capture_default_str();
  cmd->add_option("--misere-variant", f.variant,
                  "revealer-loses (the completing weighing is legal and loses) | "
                  "reveal-forbidden (it is never legal); ignored under normal play")
      ->check(CLI::IsMember(kVariants))
      ->capture_default_str();
}

void add_position_flags(CLI::App* cmd, PositionFlags& f) {
  cmd->add_option("--l", f.l, "light-destined coins")->capture_default_str();
  cmd->add_option("--h", f.h, "heavy-destined coins")->capture_default_str();
  cmd->add_option("--u", f.u, "unknown coins")->capture_default_str();
  cmd->add_option("--e", f.e, "excluded (known real) coins, including any extra coin")->capture_default_str();
  cmd->add_option("--fake", f.fake,
                  "class of the counterfeit: light-destined | heavy-destined | unknown "
                  "(default: unknown if u>0, else light-destined if l>0, else heavy-destined)")
      ->check(CLI::IsMember(kClasses));
  cmd->add_option("--fake-weight", f.fake_weight,
                  "light | heavy (default: light, or heavy for a heavy-destined fake)")
      ->check(CLI::IsMember(kWeights));
}

void add_format(CLI::App* cmd, std::string& format, const std::vector<std::string>& allowed) {
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember(allowed))->capture_default_str();
}

json position_json(const Position& p) {
  return {{"l", p.l}, {"h", p.h}, {"u", p.u}, {"e", p.e}, {"fake", to_string(p.fake_class)},
          {"fake_weight", to_string(p.fake_weight)}};
}

json rules_json(const RuleSet& r) {
  return {{"goal", to_string(r.goal)}, {"play", to_string(r.play)}, {"variant", variant_label(r)}};
}

std::string utc_stamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Loads and verifies the cache before computing, stores it afterwards.
class CacheSession {
 public:
  CacheSession(std::string path, Solver& solver, std::ostream& err) : path_(std::move(path)), solver_(solver) {
    if (path_.empty()) return;
    const cache::LoadResult loaded = cache::load(path_);
    for (const auto& w : loaded.warnings) err << "warning: " << w << "\n";
    cache::seed_and_verify(solver_, loaded.records);
  }

  void store() {
    if (path_.empty()) return;
    try {
      cache::store(path_, solver_);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
  }

 private:
  std::string path_;
  Solver& solver_;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw IoError("cannot write " + path);
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  PositionFlags pos;
  RuleFlags rules;
  std::string format = "text";
  std::string cache;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Position p = a.pos.resolve();
  const RuleSet r = a.rules.resolve();
  Solver solver;
  CacheSession session(a.cache, solver, err);
  const GameValue v = solver.value(p, r);
  const bool dead = is_dead(p, r.goal);
  const bool reached = goal_reached(p, r.goal);
  session.store();
  if (a.format == "json") {
    const json doc = {{"position", position_json(p)}, {"ruleset", rules_json(r)}, {"grundy", v.grundy},
                      {"outcome", to_string(v.outcome)}, {"dead", dead}, {"goal_reached", reached}};
    out << doc.dump(2) << "\n";
  } else {
    out << "position: " << to_string(p) << "\n"
        << "rules: " << to_string(r) << "\n"
        << "grundy: " << v.grundy << "\n"
        << "outcome: " << to_string(v.outcome) << "\n"
        << "dead: " << (dead ? "true" : "false") << "\n"
        << "goal_reached: " << (reached ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_moves(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Position p = a.pos.resolve();
  const RuleSet r = a.rules.resolve();
  Solver solver;
  CacheSession session(a.cache, solver, err);
  const std::vector<Move> all = moves(p, r);
  if (all.empty()) {
    err << "terminal position " << to_string(p) << " under " << to_string(r) << "\n";
    return kTerminal;
  }
  json list = json::array();
  std::ostringstream text;
  text << "position: " << to_string(p) << "\nrules: " << to_string(r) << "\n";
  for (const Move& m : all) {
    const GameValue v = solver.value(m.successor, r);
    const bool terminal = successors(m.successor, r).empty();
    const bool winning = v.grundy == 0;
    const std::string w = describe(p, m.weighing);
    list.push_back({{"weighing", w}, {"successor", position_json(m.successor)}, {"grundy", v.grundy},
                    {"outcome", to_string(v.outcome)}, {"terminal", terminal}, {"winning", winning}});
    text << (winning ? "* " : "  ") << w << " -> " << to_string(m.successor) << (terminal ? " terminal" : "")
         << ", " << v.grundy << "\n";
  }
  session.store();
  if (a.format == "json") {
    const json doc = {{"position", position_json(p)}, {"ruleset", rules_json(r)}, {"moves", std::move(list)}};
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kOk;
}

struct SweepArgs {
  std::string family;
  int max_n = 0;
  RuleFlags rules;
  std::string format = "csv";
  std::string cache;
  int workers = 1;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const Family family = *parse_family(a.family);
  const RuleSet r = a.rules.resolve();
  Solver solver;
  CacheSession session(a.cache, solver, err);
  const std::vector<SweepRow> rows = sweep(solver, family, a.max_n, r, a.workers);
  session.store();
  if (a.format == "json") {
    json list = json::array();
    for (const SweepRow& row : rows) {
      list.push_back({{"n", row.n}, {"position", position_json(row.position)}, {"ruleset", rules_json(row.rules)},
                      {"grundy", row.value.grundy}, {"outcome", to_string(row.value.outcome)}, {"dead", row.dead}});
    }
    out << json{{"family", a.family}, {"max_n", a.max_n}, {"rows", std::move(list)}}.dump(2) << "\n";
    return kOk;
  }
  out << "n,l,h,u,e,fake,goal,play,variant,grundy,outcome,dead\n";
  for (const SweepRow& row : rows) {
    const Position& p = row.position;
    out << row.n << ',' << p.l << ',' << p.h << ',' << p.u << ',' << p.e << ',' << to_string(p.fake_class) << ','
        << to_string(row.rules.goal) << ',' << to_string(row.rules.play) << ',' << variant_label(row.rules) << ','
        << row.value.grundy << ',' << to_string(row.value.outcome) << ',' << (row.dead ? "true" : "false") << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  int max_n = 10;
  std::string claims = "all";
  std::string out_path;
  std::string format = "json";
  std::string cache;
  int workers = 1;
  bool stamp = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_n < 4) throw UsageError("--max-n must be at least 4");
  std::vector<std::string> ids;
  if (a.claims != "all") {
    ids = split_list(a.claims);
    if (ids.empty()) throw UsageError("--claims: empty list");
    for (const std::string& id : ids) {
      const auto& reg = claims::list_claims();
      if (std::ranges::none_of(reg, [&](const claims::Claim& c) { return c.id == id; })) {
        throw UsageError("--claims: unknown claim id " + id);
      }
    }
  }
  Solver solver;
  CacheSession session(a.cache, solver, err);
  const claims::Report report = claims::check_all(a.max_n, solver, a.workers, ids);
  session.store();

  std::string doc;
  if (a.format == "json") {
    doc = claims::render_json(report);
    if (a.stamp) {
      json j = json::parse(doc);
      j["stamp"] = utc_stamp();
      doc = j.dump(2) + "\n";
    }
  } else {
    doc = claims::render_text(report);
    if (a.stamp) doc = "generated " + utc_stamp() + "\n" + doc;
  }
  write_output(a.out_path, doc, out);
  if (!a.out_path.empty()) {
    out << "verdict: " << (report.passed ? "PASS" : "FAIL") << " (" << report.results.size() << " checks, "
        << claims::list_claims().size() << " claims in registry)\n";
  }
  for (const std::string& id : report.failing_required) err << "required claim failed: " << id << "\n";
  return report.passed ? kOk : kFailed;
}

struct OracleArgs {
  int max_coins = kOracleDefaultBound;
  std::string rulesets = "all";
  int workers = 1;
  std::string format = "text";
};

int cmd_oracle_check(const OracleArgs& a, std::ostream& out, std::ostream&) {
  if (a.max_coins < 1) throw UsageError("--max-coins must be positive");
  if (a.max_coins > kOracleHardBound) {
    throw UsageError("--max-coins " + std::to_string(a.max_coins) + " exceeds the oracle bound " +
                     std::to_string(kOracleHardBound));
  }
  std::vector<RuleSet> selected;
  const auto all = all_rulesets();
  if (a.rulesets == "all") {
    selected.assign(all.begin(), all.end());
  } else {
    for (const std::string& name : split_list(a.rulesets)) {
      auto it = std::ranges::find_if(all, [&](const RuleSet& r) { return to_string(r) == name; });
      if (it == all.end()) throw UsageError("--rulesets: unknown rule set " + name);
      selected.push_back(*it);
    }
  }
  Solver solver;
  const auto entries = cross_check(a.max_coins, selected, solver, a.workers);
  std::vector<const CrossCheckEntry*> bad;
  for (const auto& e : entries) {
    if (!e.match) bad.push_back(&e);
  }
  const std::size_t positions = selected.empty() ? 0 : entries.size() / selected.size();
  if (a.format == "json") {
    json list = json::array();
    for (const auto* e : bad) {
      list.push_back({{"position", to_string(e->position)}, {"ruleset", to_string(e->rules)},
                      {"oracle", e->oracle_value}, {"solver", e->solver_value}});
    }
    out << json{{"max_coins", a.max_coins}, {"positions", positions}, {"rulesets", selected.size()},
                {"checks", entries.size()}, {"mismatches", std::move(list)}}
               .dump(2)
        << "\n";
  } else {
    out << "positions: " << positions << ", rulesets: " << selected.size() << ", checks: " << entries.size()
        << ", mismatches: " << bad.size() << "\n";
    for (const auto* e : bad) {
      out << "  " << to_string(e->position) << " " << to_string(e->rules) << ": oracle " << e->oracle_value
          << ", solver " << e->solver_value << "\n";
    }
    if (bad.empty()) out << "all positions match\n";
  }
  return bad.empty() ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counterfeit-coin weighing games: exact Grundy values and claim checks", "coinweigh"};
  app.require_subcommand(1);
  // -h would shadow --h (heavy-destined count); subcommands inherit this.
  app.set_help_flag("--help", "Print this help message and exit");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Grundy value and outcome class of one position");
  add_position_flags(solve, solve_args.pos);
  add_rule_flags(solve, solve_args.rules);
  add_format(solve, solve_args.format, {"text", "json"});
  solve->add_option("--cache", solve_args.cache, "JSON-lines value cache");

  SolveArgs moves_args;
  auto* moves_cmd = app.add_subcommand("moves", "Legal weighings with successor values; winning moves marked *");
  add_position_flags(moves_cmd, moves_args.pos);
  add_rule_flags(moves_cmd, moves_args.rules);
  add_format(moves_cmd, moves_args.format, {"text", "json"});
  moves_cmd->add_option("--cache", moves_args.cache, "JSON-lines value cache");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Values over a position family, 1..max-n candidate coins");
  sweep_cmd->add_option("--family", sweep_args.family, "destined-all-light | destined-split | destined-plus | unknown | unknown-plus")
      ->required()
      ->check(CLI::IsMember({"destined-all-light", "destined-split", "destined-plus", "unknown", "unknown-plus"}));
  sweep_cmd->add_option("--max-n", sweep_args.max_n, "largest number of candidate coins")
      ->required()
      ->check(CLI::Range(1, 64));
  add_rule_flags(sweep_cmd, sweep_args.rules);
  add_format(sweep_cmd, sweep_args.format, {"csv", "json"});
  sweep_cmd->add_option("--cache", sweep_args.cache, "JSON-lines value cache");
  sweep_cmd->add_option("--workers", sweep_args.workers, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the claim registry against the solver");
  verify->add_option("--max-n", verify_args.max_n, "largest N swept (>= 4)")->capture_default_str();
  verify->add_option("--claims", verify_args.claims, "comma-separated claim ids, or all")->capture_default_str();
  verify->add_option("--out", verify_args.out_path, "report file (default: stdout)");
  add_format(verify, verify_args.format, {"json", "text"});
  verify->add_option("--cache", verify_args.cache, "JSON-lines value cache");
  verify->add_option("--workers", verify_args.workers, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  verify->add_flag("--stamp", verify_args.stamp, "add a generation timestamp (breaks byte reproducibility)");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle-check", "Coin-level oracle against the solver on every small position");
  oracle->add_option("--max-coins", oracle_args.max_coins, "largest coin count (oracle bound 8)")->capture_default_str();
  oracle->add_option("--rulesets", oracle_args.rulesets, "comma-separated rule sets (e.g. normal/find), or all")
      ->capture_default_str();
  oracle->add_option("--workers", oracle_args.workers, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  add_format(oracle, oracle_args.format, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args, out, err);
    if (moves_cmd->parsed()) return cmd_moves(moves_args, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, out, err);
    if (oracle->parsed()) return cmd_oracle_check(oracle_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidPosition& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const cache::IntegrityError& e) {
    err << "error: " << e.what() << "\n";
    return kIntegrity;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kBadInput;
}

}  // namespace coinweigh::cli
