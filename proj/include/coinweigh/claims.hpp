#pragma once

#include <string>
#include <vector>

#include "coinweigh/solver.hpp"

namespace coinweigh::claims {

enum class Severity { Required, Informational };
enum class Status { Pass, Fail, NotApplicable };

std::string to_string(Severity s);
std::string to_string(Status s);

struct Claim {
  std::string id;         // C1..C22
  std::string paper_ref;  // result locator plus formula anchor
  Severity severity;      // Required if any of its checks is
  std::string domain;
  std::vector<std::string> conventions;
};

struct Mismatch {
  std::string params;
  std::string expected;
  std::string computed;
};

/// One check of a claim: a convention (rule set, or "move-set" /
/// "cant-reach") under one lemma reading ("-" when readings do not apply).
struct ClaimResult {
  std::string id;
  std::string convention;
  std::string reading;
  Severity severity = Severity::Required;
  int instances = 0;
  std::vector<Mismatch> mismatches;
  Status status = Status::NotApplicable;
};

struct Report {
  int max_n = 0;
  std::vector<ClaimResult> results;  // registry order, then declaration order
  bool passed = false;
  std::vector<std::string> failing_required;  // claim ids
};

/// Full registry in stable order.
const std::vector<Claim>& list_claims();

/// Evaluates one claim over its domain up to max_n. Throws
/// std::invalid_argument for an unknown id.
std::vector<ClaimResult> check_claim(const std::string& id, int max_n, Solver& solver);

/// Evaluates `ids` (all claims when empty); requires max_n >= 4. The verdict
/// passes iff, for every claim, each convention that has Required checks
/// has at least one passing reading (or is entirely not applicable).
Report check_all(int max_n, Solver& solver, int workers = 1, const std::vector<std::string>& ids = {});

std::string render_text(const Report& report);
/// Keys sorted, no timestamps; identical input gives identical bytes.
std::string render_json(const Report& report);

}  // namespace coinweigh::claims
