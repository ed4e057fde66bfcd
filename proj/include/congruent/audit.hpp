#pragma once

// Claim registry: every numbered statement is bound to a bounded, exact,
// deterministic check that yields a ClaimReport.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "congruent/bigint.hpp"

namespace congruent {

enum class ClaimStatus {
  VerifiedInBounds,      // exhaustive check inside the bounds found no violation
  Counterexample,        // an exact record refutes the checked predicate
  ConsistentUpToBound,   // semi-decision ran out of budget without refuting
  Mismatch,              // printed numbers disagree with exact recomputation
};

std::string_view to_string(ClaimStatus s);

using Bounds = std::map<std::string, std::uint64_t>;

struct ClaimReport {
  std::string claim_id;
  std::string paper_location;
  std::string predicate;  // what exactly was checked, in one sentence
  Bounds bounds;
  ClaimStatus status = ClaimStatus::VerifiedInBounds;
  std::uint64_t checked_count = 0;
  std::vector<nlohmann::json> witnesses;
  std::vector<std::string> notes;
  nlohmann::json summary;  // optional structured tabulation; null when unused
  std::optional<std::int64_t> elapsed_ms;

  // Appends a witness after it re-checked against the claim predicate.
  // Throws ContractError when recheck is false.
  void add_witness(nlohmann::json record, bool recheck);
};

// Keys are emitted in sorted order; elapsed_ms only when it was measured,
// so untimed reports are byte-identical across runs.
nlohmann::json to_json(const ClaimReport& r);

/// Unknown claim id; what() lists every registered id.
class RegistryError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct ClaimEntry {
  std::string id;
  std::string paper_location;
  Bounds default_bounds;
  std::function<ClaimReport(const Bounds&, unsigned jobs)> run;
};

struct OutOfScopeEntry {
  std::string paper_location;
  std::string reason;
};

const std::vector<ClaimEntry>& claim_registry();
const std::vector<OutOfScopeEntry>& out_of_scope_entries();
std::vector<std::string> claim_ids();

/// Runs one claim. Missing bounds take the registry defaults; unknown bound
/// names and zero bounds are rejected with ParameterError.
ClaimReport run_claim(std::string_view claim_id, const Bounds& bounds = {}, unsigned jobs = 1,
                      bool timed = false);

/// Runs every registered claim with its defaults, overridden per claim id.
std::vector<ClaimReport> run_all(const std::map<std::string, Bounds>& overrides = {}, unsigned jobs = 1,
                                 bool timed = false);

/// One printed row of the congruent-number table: value = (a/b)(c/d)/2,
/// each factor stored as its printed prime factorization.
struct TableRow {
  std::string printed_value;
  std::vector<std::pair<unsigned, unsigned>> a, b, c, d;
};

const std::vector<TableRow>& table31_rows();

/// Recomputes each row exactly and compares with the printed value.
ClaimReport audit_table31(const std::vector<TableRow>& rows = table31_rows());

struct SeedCondition {
  BigInt gcd;
  int indicator_minus = 0;  // mobius_indicator(m - n)
  int indicator_plus = 0;   // mobius_indicator(m + n)
  bool holds_minus = false;  // indicator_minus + 1 == gcd
  bool holds_plus = false;
  bool has_non_improper_witness = false;
};

SeedCondition abstract_condition_for_seed(const BigInt& m, const BigInt& n);

/// Contingency table over valid seeds with m <= max_m of "indicator(m -+ n) + 1
/// == gcd(m, n)" against "the seed yields a non-improper witness".
ClaimReport audit_abstract_condition(std::uint64_t max_m);

}  // namespace congruent
