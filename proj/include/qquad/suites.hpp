#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qquad/parse.hpp"
#include "qquad/permtest.hpp"

namespace qquad::suites {

enum class SuiteId {
  Gauss,
  Charsum,
  Kind1Odd,
  Kind1AnyChar,
  Kind2,
  ThmOdd,
  ThmEven,
  PropNormOne,
  PropKind2,
  Reduction,
  Williams,
};

const char* suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(const std::string& name);
std::vector<SuiteId> all_suites();

struct SuiteOptions {
  bool exhaustive = true;
  uint64_t samples = 2000;
  uint64_t seed = 1;
  double tol_scale = 1e-6;  // numeric comparisons scale with the summand count
};

// Stored mismatch records are capped; mismatch_count keeps the true total.
inline constexpr size_t kMismatchCap = 100;

struct SuiteQReport {
  std::string suite;
  std::string field;  // "p^m"
  bool exhaustive = true;
  uint64_t samples = 0;
  uint64_t seed = 0;
  uint64_t instances = 0;
  uint64_t mismatch_count = 0;
  std::vector<nlohmann::ordered_json> mismatches;
  double wall_ms = 0;  // deliberately absent from report_record output

  bool pass() const { return mismatch_count == 0; }
};

/// Runs one suite against one field. Single-threaded, canonical iteration
/// order; reports are byte-stable for fixed (suite, field, mode, seed).
SuiteQReport run_suite(SuiteId id, const FieldCtx& F, const SuiteOptions& opts);

/// JSON-lines record for a suite x field run (no timing fields).
nlohmann::ordered_json report_record(const SuiteQReport& r);

struct SuiteRun {
  FieldSpec field;
  SuiteOptions opts;
};

/// Per-suite default field lists and modes used by `verify` when no fields
/// are given explicitly.
std::vector<SuiteRun> default_runs(SuiteId id);

/// Odd prime powers q <= bound, ascending.
std::vector<FieldSpec> odd_prime_powers_upto(uint64_t bound);

}  // namespace qquad::suites
