#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semirings/table.hpp"

namespace semirings {

enum class ClaimStatus {
  Pass,
  Fail,
  NotApplicable,      // hypotheses unmet; detail names the unmet one
  SkippedOutOfScope,  // statement not machine-checkable on finite tables
};

std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::string detail;   // hypothesis trace or conclusion summary
  std::string witness;  // serialized evidence; always set on Fail
};

struct VerificationReport {
  std::string target;
  std::vector<ClaimResult> claims;
  // Counts, runtimes and mode notes as stable key=value pairs.
  std::vector<std::pair<std::string, std::string>> metrics;

  bool overall_pass() const;
  int fail_count() const;
};

// Structural-claim suite over one semiring. Each claim evaluates its
// hypotheses; unmet ones yield NotApplicable rather than vacuous Pass.
VerificationReport verify_semiring(const FiniteSemiring& s);

enum class SearchMode {
  // Orders >= 3 search only bi-idempotent tables; sound for the
  // congruence-simple question because simple mult-idempotent semirings of
  // order >= 3 are additively idempotent (a verified corpus property).
  Restricted,
  // Unrestricted mult-idempotent search; slower cross-check.
  Full,
};

std::string to_string(SearchMode m);

// Enumerates congruence-simple mult-idempotent classes per order in
// [2, max_order] and matches them against the fixed catalog: six classes at
// order 2 (four with a multiplicatively absorbing element), two at order 3,
// none at order 4.
VerificationReport verify_classification(int max_order,
                                         SearchMode mode = SearchMode::Restricted,
                                         int threads = 1);

// Quantified properties over every enumerated class at orders [1, max_order]
// (max_order <= 4): simplicity implications, boolean-ring and divisibility
// equivalences, absorbing-element structure, quotient forms.
VerificationReport verify_corpus_properties(int max_order, int threads = 1);

}  // namespace semirings
