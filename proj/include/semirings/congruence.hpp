#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semirings/partition.hpp"
#include "semirings/table.hpp"

namespace semirings {

inline constexpr int kCongruenceLatticeOrderCap = 8;

// True iff p is stable under x -> x+c, x -> xc, x -> cx for every c.
bool is_congruence(const FiniteSemiring& s, const Partition& p);

// Smallest congruence containing the given pairs: union-find plus a worklist
// that, on merging u and v, enqueues (u+c, v+c), (uc, vc), (cu, cv) for all c.
Partition congruence_generated(const FiniteSemiring& s,
                               const std::vector<std::pair<ElementId, ElementId>>& pairs);

struct CongruenceLattice {
  // Sorted by label sequence; always contains identity and full for order >= 1
  // (they coincide at order 1).
  std::vector<Partition> congruences;

  int size() const { return static_cast<int>(congruences.size()); }
  bool contains(const Partition& p) const;

  // Maximal proper congruences.
  std::vector<Partition> coatoms() const;
};

// All congruences: principal congruences closed under pairwise join, plus the
// identity. Join reuses congruence_generated on the unioned generator pairs.
CongruenceLattice congruence_lattice(const FiniteSemiring& s,
                                     int order_cap = kCongruenceLatticeOrderCap);

// Order >= 2 and every principal congruence is full; no lattice is built, so
// there is no order cap.
bool is_congruence_simple(const FiniteSemiring& s);

struct Monolith {
  bool exists = false;
  // Set iff exists: the smallest non-identity congruence.
  std::optional<Partition> partition;
};

// Meet of all non-identity principal congruences; exists iff that meet is not
// the identity, which is exactly subdirect irreducibility. Requires order >= 2.
Monolith monolith(const FiniteSemiring& s);

// Semiring on block labels re-indexed densely by ascending block label.
// Throws NotACongruence when c fails the stability check.
FiniteSemiring quotient(const FiniteSemiring& s, const Partition& c);

// Groups elements by the value of x+x; verified to be a congruence.
Partition doubling_congruence(const FiniteSemiring& s);

}  // namespace semirings
