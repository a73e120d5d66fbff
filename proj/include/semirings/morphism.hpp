#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semirings/table.hpp"

namespace semirings {

inline constexpr int kCanonicalFormOrderCap = 8;

struct CanonicalForm {
  int order = 0;
  OpTable add;
  OpTable mul;
  // Maps original indices to canonical indices; the first permutation in
  // lexicographic order achieving the minimum.
  std::vector<ElementId> witness_permutation;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.add == b.add && a.mul == b.mul;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.add <=> b.add; c != 0) return c;
    return a.mul <=> b.mul;
  }
};

// Tables under the relabeling perm (original -> new indices):
// new(i, j) = perm[old(perm^-1(i), perm^-1(j))].
OpTable relabel(const OpTable& t, const std::vector<ElementId>& perm);
FiniteSemiring relabel(const FiniteSemiring& s, const std::vector<ElementId>& perm);

// Lexicographically smallest (add, mul) pair over all relabelings, addition
// table compared first. Throws OrderTooLarge above the cap.
CanonicalForm canonical_form(const FiniteSemiring& s,
                             int order_cap = kCanonicalFormOrderCap);

// Same for a single table (semilattices, bare semigroups).
OpTable canonical_table(const OpTable& t, int order_cap = kCanonicalFormOrderCap);

struct IsoResult {
  bool isomorphic = false;
  // Set iff isomorphic: a bijection p with p(x+y)=p(x)+p(y), p(xy)=p(x)p(y).
  std::optional<std::vector<ElementId>> witness;

  explicit operator bool() const { return isomorphic; }
};

IsoResult is_isomorphic(const FiniteSemiring& s, const FiniteSemiring& t);

// is_isomorphic(opposite(s), t).
IsoResult is_anti_isomorphic(const FiniteSemiring& s, const FiniteSemiring& t);

// FNV-1a 64-bit digest of the text serialization; keys dedup maps and
// enumeration output filenames.
std::uint64_t fnv1a64(const std::string& bytes);
std::uint64_t digest(const FiniteSemiring& s);

}  // namespace semirings
