#include "semirings/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "semirings/io.hpp"

namespace semirings {

OpTable relabel(const OpTable& t, const std::vector<ElementId>& perm) {
  const int n = t.order;
  std::vector<ElementId> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  OpTable out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = perm[t.at(inv[i], inv[j])];
  return out;
}

FiniteSemiring relabel(const FiniteSemiring& s, const std::vector<ElementId>& perm) {
  return FiniteSemiring{s.order, relabel(s.add, perm), relabel(s.mul, perm)};
}

namespace {

// Relabels t under perm and compares row-major against best; returns <0 / 0 /
// >0 like a three-way compare, stopping at the first difference.
int compare_relabeled(const OpTable& t, const std::vector<ElementId>& perm,
                      const std::vector<ElementId>& inv, const OpTable& best) {
  const int n = t.order;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ElementId v = perm[t.at(inv[i], inv[j])];
      ElementId b = best.at(i, j);
      if (v != b) return v < b ? -1 : 1;
    }
  return 0;
}

void check_order_cap(int order, int cap) {
  if (order > cap)
    throw SemiringError(ErrorCode::OrderTooLarge,
                        "canonical form capped at order " + std::to_string(cap));
  if (order < 1)
    throw SemiringError(ErrorCode::InvalidArgument, "order must be at least 1");
}

}  // namespace

CanonicalForm canonical_form(const FiniteSemiring& s, int order_cap) {
  check_order_cap(s.order, order_cap);
  const int n = s.order;
  std::vector<ElementId> perm(n), inv(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{n, s.add, s.mul, perm};
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    int c = compare_relabeled(s.add, perm, inv, best.add);
    if (c > 0) continue;
    if (c == 0) {
      c = compare_relabeled(s.mul, perm, inv, best.mul);
      if (c >= 0) continue;
    }
    best.add = relabel(s.add, perm);
    best.mul = relabel(s.mul, perm);
    best.witness_permutation = perm;
  }
  return best;
}

OpTable canonical_table(const OpTable& t, int order_cap) {
  check_order_cap(t.order, order_cap);
  const int n = t.order;
  std::vector<ElementId> perm(n), inv(n);
  std::iota(perm.begin(), perm.end(), 0);
  OpTable best = t;
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    if (compare_relabeled(t, perm, inv, best) < 0) best = relabel(t, perm);
  }
  return best;
}

IsoResult is_isomorphic(const FiniteSemiring& s, const FiniteSemiring& t) {
  IsoResult r;
  if (s.order != t.order) return r;
  CanonicalForm cs = canonical_form(s);
  CanonicalForm ct = canonical_form(t);
  if (!(cs == ct)) return r;
  r.isomorphic = true;
  // p maps s to the canonical form, q maps t there; q^-1 . p maps s to t.
  std::vector<ElementId> q_inv(t.order);
  for (int i = 0; i < t.order; ++i) q_inv[ct.witness_permutation[i]] = i;
  std::vector<ElementId> witness(s.order);
  for (int i = 0; i < s.order; ++i)
    witness[i] = q_inv[cs.witness_permutation[i]];
  r.witness = std::move(witness);
  return r;
}

IsoResult is_anti_isomorphic(const FiniteSemiring& s, const FiniteSemiring& t) {
  return is_isomorphic(opposite(s), t);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::uint64_t digest(const FiniteSemiring& s) {
  return fnv1a64(format_semiring(s));
}

}  // namespace semirings
