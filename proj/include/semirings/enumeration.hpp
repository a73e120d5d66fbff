#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semirings/construction.hpp"
#include "semirings/morphism.hpp"
#include "semirings/table.hpp"

namespace semirings {

struct ConstraintSet {
  // Structural flags, enforced during generation.
  bool mult_idempotent = false;
  bool add_idempotent = false;
  bool commutative_mul = false;
  // Filters, applied to canonical representatives after generation.
  bool congruence_simple_filter = false;
  bool ideal_simple_filter = false;
  bool bi_ideal_simple_filter = false;
  bool has_mult_absorbing = false;
  bool mult_divisible_filter = false;

  std::string to_string() const;  // comma-separated active flag names
};

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t prunes = 0;
  std::uint64_t semirings_emitted = 0;  // labeled, pre-dedup
  double wall_ms = 0.0;
};

struct EnumerationCounts {
  std::uint64_t classes_before_filters = 0;
  std::uint64_t classes_after_filters = 0;
};

struct EnumerationResult {
  int order = 0;
  ConstraintSet constraints;
  // Distinct canonical forms satisfying all flags and filters, sorted.
  std::vector<CanonicalForm> classes;
  EnumerationCounts counts;
  SearchStats stats;
};

// Exhaustive backtracking search over multiplication then addition tables,
// with incremental axiom checks and canonical-form dedup. Bounds: order <= 4
// unconstrained, order <= 5 when both idempotency flags are set; throws
// OrderTooLarge otherwise. threads > 1 partitions the search tree.
EnumerationResult enumerate_semirings(int order, const ConstraintSet& constraints,
                                      int threads = 1);

// All semilattices of the given order up to isomorphism, sorted by canonical
// table. order <= 6; throws OrderTooLarge.
std::vector<SemilatticeTable> enumerate_semilattices(int order);

}  // namespace semirings
