#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "semirings/error.hpp"

namespace semirings {

// Cayley table of a binary operation on {0, ..., order-1}, row-major:
// at(i, j) is the result of i applied to j.
struct OpTable {
  int order = 0;
  std::vector<ElementId> entries;

  OpTable() = default;
  OpTable(int n, ElementId fill) : order(n), entries(n * n, fill) {}
  explicit OpTable(const std::vector<std::vector<ElementId>>& rows);

  ElementId at(int i, int j) const { return entries[i * order + j]; }
  ElementId& at(int i, int j) { return entries[i * order + j]; }

  bool in_range() const;
  OpTable transposed() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;
  friend auto operator<=>(const OpTable& a, const OpTable& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.entries <=> b.entries;
  }
};

struct FiniteSemiring {
  int order = 0;
  OpTable add;
  OpTable mul;

  friend bool operator==(const FiniteSemiring&, const FiniteSemiring&) = default;
  friend auto operator<=>(const FiniteSemiring& a, const FiniteSemiring& b) {
    if (auto c = a.add <=> b.add; c != 0) return c;
    return a.mul <=> b.mul;
  }
};

struct AxiomViolation {
  ErrorCode axiom;
  std::array<ElementId, 3> witness;
};

// Scans all triples in lexicographic order; axioms are checked in the order
// add-associativity, add-commutativity, mul-associativity, left
// distributivity, right distributivity, and the first violation is reported.
std::optional<AxiomViolation> find_axiom_violation(const OpTable& add,
                                                   const OpTable& mul);

// Validates the two tables and returns the semiring; throws SemiringError
// carrying the first violated axiom and its witness triple.
FiniteSemiring check_axioms(OpTable add, OpTable mul);

struct PredicateFlag {
  bool value = true;
  // Lexicographically first counterexample, when one is expressible as a
  // triple of elements; meaning depends on the predicate.
  std::optional<std::array<ElementId, 3>> counterexample;

  explicit operator bool() const { return value; }
};

struct PredicateReport {
  PredicateFlag mult_idempotent;
  PredicateFlag add_idempotent;
  PredicateFlag bi_idempotent;
  PredicateFlag commutative_mul;
  PredicateFlag add_cancellative;
  PredicateFlag boolean_ring;
};

PredicateReport predicates(const FiniteSemiring& s);

struct ElementProfile {
  ElementId element = 0;
  bool is_left_mult_absorbing = false;
  bool is_right_mult_absorbing = false;
  bool is_mult_absorbing = false;
  bool is_add_absorbing = false;
  bool is_bi_absorbing = false;
  bool is_zero = false;
  bool is_mult_neutral = false;
  bool is_add_neutral = false;
};

std::vector<ElementProfile> classify_elements(const FiniteSemiring& s);

// The unique multiplicatively absorbing element, if any.
std::optional<ElementId> mult_absorbing_element(const FiniteSemiring& s);
std::optional<ElementId> zero_element(const FiniteSemiring& s);
std::optional<ElementId> bi_absorbing_element(const FiniteSemiring& s);
std::optional<ElementId> add_neutral_element(const FiniteSemiring& s);

// Same addition, multiplication reversed: a*b = b.a.
FiniteSemiring opposite(const FiniteSemiring& s);

// Componentwise operations on pairs (i, j) indexed as i*|t| + j.
FiniteSemiring direct_product(const FiniteSemiring& s, const FiniteSemiring& t);

struct BandLawResult {
  bool holds = true;
  // Violating (a, b) pair with b in BaB but b.a.b != b.
  std::optional<std::pair<ElementId, ElementId>> witness;
};

// For a band (associative idempotent table): b in BaB implies b = b.a.b.
// Throws NotABand when the precondition fails.
BandLawResult band_law_check(const OpTable& mul);

}  // namespace semirings
