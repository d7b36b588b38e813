#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coinweigh/solver.hpp"

// Solved-value cache: JSON lines, one record per memo entry,
//   {"g":3,"pos":{"e":0,"fake":"unknown","fw":"light","h":0,"l":0,"u":5},
//    "rs":{"goal":"find","play":"normal","variant":"none"},"v":1}

namespace coinweigh::cache {

inline constexpr int kVersion = 1;

struct Record {
  Position position;
  RuleSet rules;
  int grundy = 0;

  friend bool operator==(const Record&, const Record&) = default;
};

std::string encode(const Record& r);

/// nullopt for malformed lines; `version_mismatch` is set when the line is
/// well-formed JSON carrying another version.
std::optional<Record> decode(const std::string& line, bool* version_mismatch = nullptr);

struct LoadResult {
  std::vector<Record> records;
  std::vector<std::string> warnings;  // non-empty means the file was ignored
};

/// Missing, corrupt or foreign-version files yield no records and a warning.
LoadResult load(const std::string& path);

class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeds `solver` with `records`, then re-derives each one from its
/// successors. Every record agreeing with its own mex over successor values
/// makes the whole table correct by induction from the terminal positions;
/// the first disagreement throws IntegrityError.
void seed_and_verify(Solver& solver, const std::vector<Record>& records);

/// Writes every memo entry, sorted by key. Throws std::runtime_error on I/O failure.
void store(const std::string& path, const Solver& solver);

}  // namespace coinweigh::cache
