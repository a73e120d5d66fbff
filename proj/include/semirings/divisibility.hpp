#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semirings/table.hpp"

namespace semirings {

struct PowerProfile {
  ElementId element = 0;
  // a^1, a^2, ... up to the first repeat.
  std::vector<ElementId> powers;
  int pre_period = 0;  // steps before the cycle starts (0 when a^1 is in it)
  int period = 1;
};

std::vector<PowerProfile> power_profiles(const FiniteSemiring& s);

struct DivisibilityResult {
  bool divisible = false;
  // Set iff not divisible: least n, then least a, with no b satisfying
  // b^n = a.
  std::optional<std::pair<int, ElementId>> witness;

  explicit operator bool() const { return divisible; }
};

// Every a is an n-th power for every n >= 1. Decided by iterating the
// n-th-power map p_n(b) = b^n, which is eventually periodic; the repeat is
// detected by comparing whole maps, and all n are covered once a full cycle
// has been seen.
DivisibilityResult is_mult_divisible(const FiniteSemiring& s);

// Checks p_n surjective for all n in [1, limit] directly; test oracle for the
// cycle-detection decision.
DivisibilityResult is_mult_divisible_upto(const FiniteSemiring& s, int limit);

// Divisible implies mult-idempotent; a theorem for finite semirings, so false
// signals an internal inconsistency.
bool finite_band_check(const FiniteSemiring& s);

}  // namespace semirings
