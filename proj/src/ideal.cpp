#include "semirings/ideal.hpp"

#include <algorithm>
#include <deque>

namespace semirings {

int SubsetClosure::size() const {
  return static_cast<int>(std::count(members.begin(), members.end(), true));
}

std::vector<ElementId> SubsetClosure::elements() const {
  std::vector<ElementId> out;
  for (int i = 0; i < static_cast<int>(members.size()); ++i)
    if (members[i]) out.push_back(i);
  return out;
}

SubsetClosure ideal_generated(const FiniteSemiring& s,
                              const std::vector<ElementId>& seed,
                              IdealKind kind) {
  if (seed.empty())
    throw SemiringError(ErrorCode::InvalidArgument, "seed must be non-empty");
  const int n = s.order;
  SubsetClosure closure{std::vector<bool>(n, false), kind};
  std::deque<ElementId> work;
  auto absorb = [&](ElementId x) {
    if (!closure.members[x]) {
      closure.members[x] = true;
      work.push_back(x);
    }
  };
  for (ElementId x : seed) absorb(x);
  while (!work.empty()) {
    ElementId x = work.front();
    work.pop_front();
    for (int c = 0; c < n; ++c) {
      absorb(s.mul.at(x, c));
      absorb(s.mul.at(c, x));
      if (kind == IdealKind::BiIdeal) {
        absorb(s.add.at(c, x));  // S + I
      } else if (closure.members[c]) {
        absorb(s.add.at(c, x));  // I + I
      }
    }
    // Sums with members absorbed after x may be missed above; rescan of x is
    // triggered by the other operand's own worklist visit, which covers the
    // symmetric case since addition is commutative.
  }
  return closure;
}

namespace {

SimplicityResult simplicity_scan(const FiniteSemiring& s, IdealKind kind) {
  SimplicityResult result;
  if (s.order < 2) return result;
  for (int i = 0; i < s.order; ++i)
    for (int j = i + 1; j < s.order; ++j) {
      SubsetClosure c = ideal_generated(s, {i, j}, kind);
      if (c.size() != s.order) {
        result.simple = false;
        result.witness = c.elements();
        return result;
      }
    }
  result.simple = true;
  return result;
}

}  // namespace

SimplicityResult is_ideal_simple(const FiniteSemiring& s) {
  return simplicity_scan(s, IdealKind::Ideal);
}

SimplicityResult is_bi_ideal_simple(const FiniteSemiring& s) {
  return simplicity_scan(s, IdealKind::BiIdeal);
}

ABDecomposition ab_decomposition(const FiniteSemiring& s) {
  auto w = mult_absorbing_element(s);
  if (!w)
    throw SemiringError(ErrorCode::NoAbsorbingElement,
                        "no multiplicatively absorbing element");
  const int n = s.order;
  ABDecomposition d;
  d.absorbing = *w;
  for (int a = 0; a < n; ++a) {
    std::vector<bool> sas(n, false);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) sas[s.mul.at(s.mul.at(x, a), y)] = true;
    std::vector<bool> sum(n, false);
    for (int c = 0; c < n; ++c)
      if (sas[c])
        for (int z = 0; z < n; ++z) sum[s.add.at(c, z)] = true;
    int count = static_cast<int>(std::count(sum.begin(), sum.end(), true));
    if (count == 1 && sum[*w])
      d.a.push_back(a);
    else if (count == n)
      d.b.push_back(a);
    else
      d.neither.push_back(a);
  }
  return d;
}

Partition rho_partition(const FiniteSemiring& s) {
  if (s.order < 2)
    throw SemiringError(ErrorCode::InvalidArgument,
                        "rho needs order >= 2");
  auto w = mult_absorbing_element(s);
  if (!w)
    throw SemiringError(ErrorCode::NoAbsorbingElement,
                        "no multiplicatively absorbing element");
  std::vector<ElementId> raw(s.order, 0);
  raw[*w] = 1;
  return Partition(raw);
}

}  // namespace semirings
