#include "coinweigh/oracle.hpp"
#include "coinweigh/solver.hpp"

namespace coinweigh {

std::vector<CrossCheckEntry> cross_check(int max_coins, std::span<const RuleSet> rulesets,
                                         Solver& solver, int workers) {
  if (max_coins > kOracleHardBound) {
    throw std::out_of_range("max_coins exceeds oracle bound " + std::to_string(kOracleHardBound));
  }
  const std::vector<ExplicitPosition> positions = explicit_positions(max_coins);
  std::vector<CrossCheckEntry> out(positions.size() * rulesets.size());
  // One private oracle per rule set; its memo never crosses threads.
  parallel_for(rulesets.size(), workers, [&](std::size_t ri) {
    Oracle oracle(max_coins);
    const RuleSet& r = rulesets[ri];
    for (std::size_t pi = 0; pi < positions.size(); ++pi) {
      CrossCheckEntry& entry = out[ri * positions.size() + pi];
      entry.position = positions[pi];
      entry.rules = r;
      entry.oracle_value = oracle.grundy(positions[pi], r);
      entry.solver_value = solver.grundy(abstract_of(positions[pi]), r);
      entry.match = entry.oracle_value == entry.solver_value;
    }
  });
  return out;
}

}  // namespace coinweigh
