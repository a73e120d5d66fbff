#include "semirings/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <thread>

#include "semirings/congruence.hpp"
#include "semirings/divisibility.hpp"
#include "semirings/ideal.hpp"

namespace semirings {

std::string ConstraintSet::to_string() const {
  std::string out;
  auto append = [&](bool flag, const char* name) {
    if (!flag) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  append(mult_idempotent, "mult_idempotent");
  append(add_idempotent, "add_idempotent");
  append(commutative_mul, "commutative_mul");
  append(congruence_simple_filter, "congruence_simple");
  append(ideal_simple_filter, "ideal_simple");
  append(bi_ideal_simple_filter, "bi_ideal_simple");
  append(has_mult_absorbing, "has_mult_absorbing");
  append(mult_divisible_filter, "mult_divisible");
  if (out.empty()) out = "none";
  return out;
}

namespace {

constexpr ElementId kUndef = -1;

// Checks every fully determined instance of the associativity law; partial
// tables pass vacuously on triples with missing entries.
bool assoc_consistent(const OpTable& t) {
  const int n = t.order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const ElementId xy = t.at(x, y);
      for (int z = 0; z < n; ++z) {
        const ElementId yz = t.at(y, z);
        if (xy == kUndef || yz == kUndef) continue;
        const ElementId left = t.at(xy, z);
        const ElementId right = t.at(x, yz);
        if (left == kUndef || right == kUndef) continue;
        if (left != right) return false;
      }
    }
  return true;
}

// Both distributive laws on a complete mul table and a partial add table.
bool dist_consistent(const OpTable& add, const OpTable& mul) {
  const int n = add.order;
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      const ElementId yz = add.at(y, z);
      if (yz == kUndef) continue;
      for (int x = 0; x < n; ++x) {
        const ElementId lhs = mul.at(x, yz);
        const ElementId rhs = add.at(mul.at(x, y), mul.at(x, z));
        if (rhs != kUndef && lhs != rhs) return false;
        const ElementId lhs2 = mul.at(yz, x);
        const ElementId rhs2 = add.at(mul.at(y, x), mul.at(z, x));
        if (rhs2 != kUndef && lhs2 != rhs2) return false;
      }
    }
  return true;
}

// True when table is lexicographically minimal in its relabeling orbit, so
// exactly one representative per isomorphism class of complete tables
// survives into the addition phase.
bool orbit_minimal(const OpTable& table) {
  const int n = table.order;
  std::vector<ElementId> perm(n), inv(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const ElementId v = perm[table.at(inv[i], inv[j])];
        const ElementId b = table.at(i, j);
        if (v != b) {
          if (v < b) return false;
          goto next_perm;
        }
      }
    }
  next_perm:;
  }
  return true;
}

struct MulPhase {
  int n;
  const ConstraintSet* constraints;
  OpTable mul;
  std::vector<std::pair<int, int>> free_cells;
  std::vector<OpTable> complete;
  SearchStats* stats;

  MulPhase(int order, const ConstraintSet& cs, SearchStats* st)
      : n(order), constraints(&cs), mul(order, kUndef), stats(st) {
    if (cs.mult_idempotent)
      for (int i = 0; i < n; ++i) mul.at(i, i) = i;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (mul.at(i, j) != kUndef) continue;
        if (cs.commutative_mul && j < i) continue;  // mirrored below
        free_cells.emplace_back(i, j);
      }
  }

  void assign(int i, int j, ElementId v) {
    mul.at(i, j) = v;
    if (constraints->commutative_mul) mul.at(j, i) = v;
  }

  void search(std::size_t k) {
    if (k == free_cells.size()) {
      if (orbit_minimal(mul)) complete.push_back(mul);
      return;
    }
    auto [i, j] = free_cells[k];
    for (ElementId v = 0; v < n; ++v) {
      ++stats->nodes_visited;
      assign(i, j, v);
      if (assoc_consistent(mul)) {
        search(k + 1);
      } else {
        ++stats->prunes;
      }
    }
    assign(i, j, kUndef);
  }
};

struct AddPhase {
  int n;
  bool add_idempotent;
  OpTable mul;  // complete
  OpTable add;
  std::vector<std::pair<int, int>> free_cells;
  std::set<CanonicalForm>* classes;
  SearchStats* stats;

  AddPhase(const OpTable& mul_table, bool add_idem,
           std::set<CanonicalForm>* out, SearchStats* st)
      : n(mul_table.order),
        add_idempotent(add_idem),
        mul(mul_table),
        add(mul_table.order, kUndef),
        classes(out),
        stats(st) {
    if (add_idempotent)
      for (int i = 0; i < n; ++i) add.at(i, i) = i;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (add.at(i, j) == kUndef) free_cells.emplace_back(i, j);
  }

  void assign(int i, int j, ElementId v) {
    add.at(i, j) = v;
    add.at(j, i) = v;
  }

  void search(std::size_t k) {
    if (k == free_cells.size()) {
      ++stats->semirings_emitted;
      classes->insert(canonical_form(FiniteSemiring{n, add, mul}));
      return;
    }
    auto [i, j] = free_cells[k];
    for (ElementId v = 0; v < n; ++v) {
      ++stats->nodes_visited;
      assign(i, j, v);
      if (assoc_consistent(add) && dist_consistent(add, mul)) {
        search(k + 1);
      } else {
        ++stats->prunes;
      }
    }
    assign(i, j, kUndef);
  }
};

bool passes_filters(const FiniteSemiring& s, const ConstraintSet& cs) {
  if (cs.congruence_simple_filter && !is_congruence_simple(s)) return false;
  if (cs.ideal_simple_filter && !is_ideal_simple(s).simple) return false;
  if (cs.bi_ideal_simple_filter && !is_bi_ideal_simple(s).simple) return false;
  if (cs.has_mult_absorbing && !mult_absorbing_element(s)) return false;
  if (cs.mult_divisible_filter && !is_mult_divisible(s).divisible) return false;
  return true;
}

}  // namespace

EnumerationResult enumerate_semirings(int order, const ConstraintSet& constraints,
                                      int threads) {
  if (order < 1)
    throw SemiringError(ErrorCode::InvalidArgument, "order must be at least 1");
  const bool bi_idem =
      constraints.mult_idempotent && constraints.add_idempotent;
  if (order > 5 || (order == 5 && !bi_idem))
    throw SemiringError(
        ErrorCode::OrderTooLarge,
        "enumeration is bounded at order 4, or 5 with both idempotency "
        "constraints");
  const auto start = std::chrono::steady_clock::now();
  EnumerationResult result;
  result.order = order;
  result.constraints = constraints;

  MulPhase mul_phase(order, constraints, &result.stats);
  mul_phase.search(0);

  std::set<CanonicalForm> classes;
  if (threads <= 1 || mul_phase.complete.size() <= 1) {
    for (const OpTable& m : mul_phase.complete) {
      AddPhase add_phase(m, constraints.add_idempotent, &classes, &result.stats);
      add_phase.search(0);
    }
  } else {
    const int worker_count =
        std::min<int>(threads, static_cast<int>(mul_phase.complete.size()));
    std::vector<std::set<CanonicalForm>> partial(worker_count);
    std::vector<SearchStats> partial_stats(worker_count);
    std::vector<std::thread> workers;
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t t = w; t < mul_phase.complete.size();
             t += worker_count) {
          AddPhase add_phase(mul_phase.complete[t], constraints.add_idempotent,
                             &partial[w], &partial_stats[w]);
          add_phase.search(0);
        }
      });
    }
    for (auto& t : workers) t.join();
    for (int w = 0; w < worker_count; ++w) {
      classes.merge(partial[w]);
      result.stats.nodes_visited += partial_stats[w].nodes_visited;
      result.stats.prunes += partial_stats[w].prunes;
      result.stats.semirings_emitted += partial_stats[w].semirings_emitted;
    }
  }

  result.counts.classes_before_filters = classes.size();
  for (const CanonicalForm& c : classes) {
    FiniteSemiring s{c.order, c.add, c.mul};
    if (passes_filters(s, constraints)) result.classes.push_back(c);
  }
  result.counts.classes_after_filters = result.classes.size();
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::vector<SemilatticeTable> enumerate_semilattices(int order) {
  if (order < 1)
    throw SemiringError(ErrorCode::InvalidArgument, "order must be at least 1");
  if (order > 6)
    throw SemiringError(ErrorCode::OrderTooLarge,
                        "semilattice enumeration is bounded at order 6");
  const int n = order;
  OpTable join(n, kUndef);
  for (int i = 0; i < n; ++i) join.at(i, i) = i;
  std::vector<std::pair<int, int>> free_cells;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) free_cells.emplace_back(i, j);
  std::set<OpTable> canon;
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == free_cells.size()) {
      canon.insert(canonical_table(join));
      return;
    }
    auto [i, j] = free_cells[k];
    for (ElementId v = 0; v < n; ++v) {
      join.at(i, j) = v;
      join.at(j, i) = v;
      if (assoc_consistent(join)) self(self, k + 1);
    }
    join.at(i, j) = kUndef;
    join.at(j, i) = kUndef;
  };
  dfs(dfs, 0);
  std::vector<SemilatticeTable> result;
  for (const OpTable& t : canon) result.push_back(SemilatticeTable{n, t});
  return result;
}

}  // namespace semirings
