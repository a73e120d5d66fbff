#include "semirings/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace semirings {

namespace {

struct UnionFind {
  std::vector<ElementId> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  ElementId find(ElementId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Smaller root wins, so roots are block minima throughout.
  bool unite(ElementId x, ElementId y) {
    ElementId rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;
    return true;
  }
};

std::vector<std::pair<ElementId, ElementId>> generator_pairs(const Partition& p) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (int i = 0; i < p.order(); ++i)
    if (p.labels[i] != i) pairs.emplace_back(p.labels[i], i);
  return pairs;
}

}  // namespace

bool is_congruence(const FiniteSemiring& s, const Partition& p) {
  const int n = s.order;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!p.same_block(x, y)) continue;
      for (int c = 0; c < n; ++c) {
        if (!p.same_block(s.add.at(x, c), s.add.at(y, c))) return false;
        if (!p.same_block(s.mul.at(x, c), s.mul.at(y, c))) return false;
        if (!p.same_block(s.mul.at(c, x), s.mul.at(c, y))) return false;
      }
    }
  return true;
}

Partition congruence_generated(
    const FiniteSemiring& s,
    const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  const int n = s.order;
  UnionFind uf(n);
  std::deque<std::pair<ElementId, ElementId>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    if (!uf.unite(u, v)) continue;
    for (int c = 0; c < n; ++c) {
      work.emplace_back(s.add.at(u, c), s.add.at(v, c));
      work.emplace_back(s.mul.at(u, c), s.mul.at(v, c));
      work.emplace_back(s.mul.at(c, u), s.mul.at(c, v));
    }
  }
  std::vector<ElementId> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = uf.find(i);
  Partition p;
  p.labels = std::move(labels);  // roots are block minima
  return p;
}

bool CongruenceLattice::contains(const Partition& p) const {
  return std::binary_search(congruences.begin(), congruences.end(), p);
}

std::vector<Partition> CongruenceLattice::coatoms() const {
  std::vector<Partition> result;
  for (const auto& p : congruences) {
    if (p.is_full()) continue;
    bool maximal = true;
    for (const auto& q : congruences) {
      if (q.is_full() || q == p) continue;
      if (p.refines(q)) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.push_back(p);
  }
  return result;
}

CongruenceLattice congruence_lattice(const FiniteSemiring& s, int order_cap) {
  if (s.order > order_cap)
    throw SemiringError(ErrorCode::OrderTooLarge,
                        "congruence lattice capped at order " +
                            std::to_string(order_cap));
  const int n = s.order;
  std::set<Partition> found;
  found.insert(Partition::identity(n));
  std::deque<Partition> fresh;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Partition p = congruence_generated(s, {{i, j}});
      if (found.insert(p).second) fresh.push_back(std::move(p));
    }
  // Close under pairwise join; join = closure of the unioned generators.
  while (!fresh.empty()) {
    Partition p = std::move(fresh.front());
    fresh.pop_front();
    std::vector<Partition> snapshot(found.begin(), found.end());
    for (const auto& q : snapshot) {
      if (p.refines(q) || q.refines(p)) continue;
      auto pairs = generator_pairs(p);
      auto qp = generator_pairs(q);
      pairs.insert(pairs.end(), qp.begin(), qp.end());
      Partition j = congruence_generated(s, pairs);
      if (found.insert(j).second) fresh.push_back(std::move(j));
    }
  }
  CongruenceLattice lattice;
  lattice.congruences.assign(found.begin(), found.end());
  return lattice;
}

bool is_congruence_simple(const FiniteSemiring& s) {
  if (s.order < 2) return false;
  for (int i = 0; i < s.order; ++i)
    for (int j = i + 1; j < s.order; ++j)
      if (!congruence_generated(s, {{i, j}}).is_full()) return false;
  return true;
}

Monolith monolith(const FiniteSemiring& s) {
  if (s.order < 2)
    throw SemiringError(ErrorCode::InvalidArgument,
                        "monolith needs order >= 2");
  Partition acc = Partition::full(s.order);
  for (int i = 0; i < s.order; ++i)
    for (int j = i + 1; j < s.order; ++j)
      acc = acc.meet(congruence_generated(s, {{i, j}}));
  Monolith m;
  m.exists = !acc.is_identity();
  if (m.exists) m.partition = std::move(acc);
  return m;
}

FiniteSemiring quotient(const FiniteSemiring& s, const Partition& c) {
  if (c.order() != s.order)
    throw SemiringError(ErrorCode::DimensionMismatch,
                        "partition order differs from semiring order");
  if (!is_congruence(s, c))
    throw SemiringError(ErrorCode::NotACongruence,
                        "partition is not stable under translations");
  const int n = s.order;
  std::vector<int> dense(n, -1);
  std::vector<ElementId> rep;
  for (int i = 0; i < n; ++i)
    if (c.labels[i] == i) {
      dense[i] = static_cast<int>(rep.size());
      rep.push_back(i);
    }
  const int k = static_cast<int>(rep.size());
  OpTable add(k, 0), mul(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      add.at(i, j) = dense[c.labels[s.add.at(rep[i], rep[j])]];
      mul.at(i, j) = dense[c.labels[s.mul.at(rep[i], rep[j])]];
    }
  return check_axioms(std::move(add), std::move(mul));
}

Partition doubling_congruence(const FiniteSemiring& s) {
  const int n = s.order;
  std::vector<ElementId> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = s.add.at(i, i);
  Partition p(raw);
  if (!is_congruence(s, p))
    throw SemiringError(ErrorCode::NotACongruence,
                        "doubling relation failed the stability scan");
  return p;
}

}  // namespace semirings
