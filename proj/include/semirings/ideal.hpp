#pragma once

#include <optional>
#include <vector>

#include "semirings/partition.hpp"
#include "semirings/table.hpp"

namespace semirings {

enum class IdealKind {
  Ideal,    // I+I, SI, IS all inside I
  BiIdeal,  // S+I, SI, IS all inside I
};

struct SubsetClosure {
  std::vector<bool> members;
  IdealKind kind = IdealKind::Ideal;

  int size() const;
  bool contains(ElementId x) const { return members[x]; }
  std::vector<ElementId> elements() const;
};

// Least superset of seed closed under the kind's rules; worklist fixpoint.
// Seed must be non-empty.
SubsetClosure ideal_generated(const FiniteSemiring& s,
                              const std::vector<ElementId>& seed,
                              IdealKind kind);

struct SimplicityResult {
  bool simple = false;
  // On failure at order >= 2: a proper closure with >= 2 elements, generated
  // by the lexicographically first failing pair.
  std::optional<std::vector<ElementId>> witness;

  explicit operator bool() const { return simple; }
};

// Order >= 2 and every pair generates the whole semiring as an ideal.
SimplicityResult is_ideal_simple(const FiniteSemiring& s);
SimplicityResult is_bi_ideal_simple(const FiniteSemiring& s);

struct ABDecomposition {
  ElementId absorbing = 0;           // the element w
  std::vector<ElementId> a;          // SaS + S = {w}
  std::vector<ElementId> b;          // SaS + S = S
  std::vector<ElementId> neither;    // empty under the dichotomy hypotheses
};

// Splits elements by whether SaS+S collapses to {w} or covers S; tolerates
// inputs where neither holds and reports those elements separately.
// Throws NoAbsorbingElement without a multiplicatively absorbing element.
ABDecomposition ab_decomposition(const FiniteSemiring& s);

// Two-block partition {S \ {w}, {w}} for the multiplicatively absorbing w.
// Whether it is a congruence is the caller's question. Requires order >= 2;
// throws NoAbsorbingElement without w.
Partition rho_partition(const FiniteSemiring& s);

}  // namespace semirings
