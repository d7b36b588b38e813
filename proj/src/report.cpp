#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "coinweigh/claims.hpp"

namespace coinweigh::claims {

namespace {

const Claim* find_claim(const std::string& id) {
  for (const Claim& c : list_claims()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "claims report, max_n = " << report.max_n << "\n\n";
  std::string current;
  for (const ClaimResult& r : report.results) {
    if (r.id != current) {
      current = r.id;
      const Claim* c = find_claim(r.id);
      os << r.id << "  " << (c ? c->paper_ref : "") << "\n";
    }
    os << "  " << std::left << std::setw(15) << to_string(r.status) << std::setw(14) << to_string(r.severity)
       << std::setw(42) << r.convention << std::setw(12) << r.reading << "instances=" << r.instances
       << " mismatches=" << r.mismatches.size() << "\n";
    for (const Mismatch& m : r.mismatches) {
      os << "      " << m.params << ": expected " << m.expected << ", computed " << m.computed << "\n";
    }
  }
  os << "\nverdict: " << (report.passed ? "PASS" : "FAIL");
  if (!report.failing_required.empty()) {
    os << " (required failures:";
    for (const std::string& id : report.failing_required) os << ' ' << id;
    os << ')';
  }
  os << "\n";
  return os.str();
}

std::string render_json(const Report& report) {
  // nlohmann::json objects are std::map-backed, so keys come out sorted.
  nlohmann::json claims = nlohmann::json::array();
  for (const ClaimResult& r : report.results) {
    const Claim* c = find_claim(r.id);
    nlohmann::json mismatches = nlohmann::json::array();
    for (const Mismatch& m : r.mismatches) {
      mismatches.push_back({{"params", m.params}, {"expected", m.expected}, {"computed", m.computed}});
    }
    claims.push_back({{"id", r.id},
                      {"paper_ref", c ? c->paper_ref : ""},
                      {"severity", to_string(r.severity)},
                      {"convention", r.convention},
                      {"reading", r.reading},
                      {"instances", r.instances},
                      {"status", to_string(r.status)},
                      {"mismatches", std::move(mismatches)}});
  }
  nlohmann::json doc = {{"version", 1},
                        {"max_n", report.max_n},
                        {"verdict", report.passed ? "PASS" : "FAIL"},
                        {"failing_required", report.failing_required},
                        {"claims", std::move(claims)}};
  return doc.dump(2) + "\n";
}

}  // namespace coinweigh::claims
