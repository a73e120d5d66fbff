#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semirings/table.hpp"

namespace semirings {

// Commutative idempotent associative join table; x <= y iff join(x,y) = y.
struct SemilatticeTable {
  int order = 0;
  OpTable join;

  bool leq(ElementId x, ElementId y) const { return join.at(x, y) == y; }

  friend bool operator==(const SemilatticeTable&, const SemilatticeTable&) = default;
  friend auto operator<=>(const SemilatticeTable& a, const SemilatticeTable& b) {
    return a.join <=> b.join;
  }
};

// Validates commutativity, idempotency, associativity; throws NotABand or
// NotCommutativeAdd style errors via check (InvalidArgument on failure).
SemilatticeTable make_semilattice(OpTable join);

std::optional<ElementId> greatest_element(const SemilatticeTable& l);
std::optional<ElementId> least_element(const SemilatticeTable& l);

// Chain 0 < 1 < ... < n-1 under max as join.
SemilatticeTable chain_semilattice(int n);

// Join-preserving self-map of a semilattice.
struct Endomorphism {
  std::vector<ElementId> image;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
  friend auto operator<=>(const Endomorphism& a, const Endomorphism& b) {
    return a.image <=> b.image;
  }
};

bool is_endomorphism(const SemilatticeTable& l, const Endomorphism& e);

enum class CatalogKind { Semiring, Semilattice };

struct CatalogEntry {
  std::string name;
  CatalogKind kind = CatalogKind::Semiring;
  FiniteSemiring semiring;  // for L2/Lk: join as both operations
  std::optional<SemilatticeTable> semilattice;
  std::vector<std::string> element_names;  // index -> display name
};

// Fixed named entries: S1..S8, P, L2 (and Lk chains, k <= 8).
// Throws UnknownName.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

struct EndSemiring {
  FiniteSemiring semiring;
  // Index -> endomorphism, in lexicographic image order.
  std::vector<Endomorphism> maps;
};

// All join-preserving self-maps under pointwise join and composition
// (x -> f(g(x)) for f.g).
EndSemiring end_semiring(const SemilatticeTable& l);

// Submonoid of maps fixing the least element. Throws NoLeastElement.
EndSemiring end0_semiring(const SemilatticeTable& l);

// x -> least element if x <= a, else b. Throws NoLeastElement, or
// NotAnEndomorphism when the map fails the join law on l.
Endomorphism step_endomorphism(const SemilatticeTable& l, ElementId a, ElementId b);

// New element z at index n, additively neutral and multiplicatively
// absorbing. Requires a bi-absorbing element; throws NoBiAbsorbing.
FiniteSemiring adjoin_zero(const FiniteSemiring& s);

// New element z at index n, additively and multiplicatively absorbing.
// Requires a zero; throws NoZero.
FiniteSemiring adjoin_biabsorber(const FiniteSemiring& s);

enum class ProjectionSide { Left, Right };

// Addition = join, multiplication = projection (Left: x.y = x).
// Requires order >= 2.
FiniteSemiring projection_semiring(const SemilatticeTable& l, ProjectionSide side);

}  // namespace semirings
