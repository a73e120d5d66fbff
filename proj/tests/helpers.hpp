#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "semirings/congruence.hpp"
#include "semirings/construction.hpp"
#include "semirings/divisibility.hpp"
#include "semirings/enumeration.hpp"
#include "semirings/error.hpp"
#include "semirings/ideal.hpp"
#include "semirings/io.hpp"
#include "semirings/morphism.hpp"
#include "semirings/partition.hpp"
#include "semirings/table.hpp"
#include "semirings/verifier.hpp"

namespace th {

using namespace semirings;

inline FiniteSemiring cat(const std::string& name) {
  return catalog(name).semiring;
}

// Enumeration results are cached per (order, constraints); several suites
// walk the same corpora.
inline const EnumerationResult& corpus(int order,
                                       const ConstraintSet& cs = {}) {
  static std::map<std::string, EnumerationResult> cache;
  const std::string k = std::to_string(order) + "|" + cs.to_string();
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, enumerate_semirings(order, cs)).first;
  return it->second;
}

inline FiniteSemiring from_canonical(const CanonicalForm& c) {
  return FiniteSemiring{c.order, c.add, c.mul};
}

inline std::vector<FiniteSemiring> corpus_semirings(int order) {
  std::vector<FiniteSemiring> out;
  for (const CanonicalForm& c : corpus(order).classes)
    out.push_back(from_canonical(c));
  return out;
}

inline oracle::Table rows_of(const OpTable& t) {
  oracle::Table rows(t.order, std::vector<int>(t.order, 0));
  for (int i = 0; i < t.order; ++i)
    for (int j = 0; j < t.order; ++j) rows[i][j] = t.at(i, j);
  return rows;
}

inline OpTable table_of(const oracle::Table& rows) {
  std::vector<std::vector<ElementId>> r(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    r[i].assign(rows[i].begin(), rows[i].end());
  return OpTable(r);
}

inline std::string oracle_key(const FiniteSemiring& s) {
  return oracle::canonical_key(rows_of(s.add), rows_of(s.mul));
}

// Deterministic across standard libraries: permutations come from raw engine
// outputs, not from distribution classes.
inline std::vector<ElementId> random_perm(std::mt19937& gen, int n) {
  std::vector<ElementId> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[gen() % static_cast<unsigned>(i + 1)]);
  return p;
}

inline const ClaimResult* find_claim(const VerificationReport& r,
                                     const std::string& id) {
  for (const ClaimResult& c : r.claims)
    if (c.claim_id == id) return &c;
  return nullptr;
}

}  // namespace th
