#include "semirings/construction.hpp"

#include <algorithm>

namespace semirings {

SemilatticeTable make_semilattice(OpTable join) {
  const int n = join.order;
  if (n < 1)
    throw SemiringError(ErrorCode::InvalidArgument, "order must be at least 1");
  if (!join.in_range())
    throw SemiringError(ErrorCode::EntryOutOfRange,
                        "table entry outside 0..n-1");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (join.at(x, y) != join.at(y, x))
        throw SemiringError(ErrorCode::NotCommutativeAdd,
                            "join is not commutative", {x, y, 0});
  for (int x = 0; x < n; ++x)
    if (join.at(x, x) != x)
      throw SemiringError(ErrorCode::NotABand, "join is not idempotent",
                          {x, x, x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (join.at(join.at(x, y), z) != join.at(x, join.at(y, z)))
          throw SemiringError(ErrorCode::NotABand, "join is not associative",
                              {x, y, z});
  return SemilatticeTable{n, std::move(join)};
}

std::optional<ElementId> greatest_element(const SemilatticeTable& l) {
  for (int e = 0; e < l.order; ++e) {
    bool top = true;
    for (int x = 0; x < l.order; ++x)
      if (l.join.at(x, e) != e) top = false;
    if (top) return e;
  }
  return std::nullopt;
}

std::optional<ElementId> least_element(const SemilatticeTable& l) {
  for (int e = 0; e < l.order; ++e) {
    bool bottom = true;
    for (int x = 0; x < l.order; ++x)
      if (l.join.at(x, e) != x) bottom = false;
    if (bottom) return e;
  }
  return std::nullopt;
}

SemilatticeTable chain_semilattice(int n) {
  if (n < 1)
    throw SemiringError(ErrorCode::InvalidArgument, "order must be at least 1");
  OpTable join(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) join.at(i, j) = std::max(i, j);
  return SemilatticeTable{n, std::move(join)};
}

bool is_endomorphism(const SemilatticeTable& l, const Endomorphism& e) {
  if (static_cast<int>(e.image.size()) != l.order) return false;
  for (ElementId v : e.image)
    if (v < 0 || v >= l.order) return false;
  for (int x = 0; x < l.order; ++x)
    for (int y = 0; y < l.order; ++y)
      if (e.image[l.join.at(x, y)] != l.join.at(e.image[x], e.image[y]))
        return false;
  return true;
}

namespace {

FiniteSemiring projection_tables(const SemilatticeTable& l, ProjectionSide side) {
  OpTable mul(l.order, 0);
  for (int i = 0; i < l.order; ++i)
    for (int j = 0; j < l.order; ++j)
      mul.at(i, j) = side == ProjectionSide::Left ? i : j;
  return check_axioms(l.join, std::move(mul));
}

std::vector<std::string> numeric_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

CatalogEntry semiring_entry(std::string name,
                            const std::vector<std::vector<ElementId>>& add,
                            const std::vector<std::vector<ElementId>>& mul,
                            std::vector<std::string> element_names) {
  CatalogEntry e;
  e.name = std::move(name);
  e.kind = CatalogKind::Semiring;
  e.semiring = check_axioms(OpTable(add), OpTable(mul));
  e.element_names = std::move(element_names);
  return e;
}

CatalogEntry chain_entry(const std::string& name, int k) {
  CatalogEntry e;
  e.name = name;
  e.kind = CatalogKind::Semilattice;
  e.semilattice = chain_semilattice(k);
  // Exported/analyzed as the semiring with join as both operations.
  e.semiring = check_axioms(e.semilattice->join, e.semilattice->join);
  e.element_names = numeric_names(k);
  return e;
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
  if (name == "S1")
    return semiring_entry("S1", {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, {"w", "a"});
  if (name == "S2")
    return semiring_entry("S2", {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, {"w", "a"});
  if (name == "S3")
    return semiring_entry("S3", {{0, 0}, {0, 1}}, {{0, 0}, {0, 1}}, {"w", "a"});
  if (name == "S4")
    return semiring_entry("S4", {{0, 0}, {0, 0}}, {{0, 0}, {0, 1}}, {"w", "a"});
  if (name == "S5")
    return semiring_entry("S5", {{0, 1}, {1, 1}}, {{0, 0}, {1, 1}}, {"a", "w"});
  if (name == "S6")
    return semiring_entry("S6", {{0, 1}, {1, 1}}, {{0, 1}, {0, 1}}, {"a", "w"});
  if (name == "S7")
    return semiring_entry("S7", {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},
                          {{0, 0, 0}, {0, 1, 2}, {2, 2, 2}}, {"a", "b", "w"});
  if (name == "S8")
    return semiring_entry("S8", {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},
                          {{0, 0, 2}, {0, 1, 2}, {0, 2, 2}}, {"a", "b", "w"});
  if (name == "P")
    return semiring_entry("P",
                          {{0, 1, 2, 3, 4},
                           {1, 1, 4, 4, 4},
                           {2, 4, 2, 4, 4},
                           {3, 4, 4, 3, 4},
                           {4, 4, 4, 4, 4}},
                          {{0, 0, 0, 0, 0},
                           {0, 1, 2, 3, 4},
                           {0, 2, 2, 0, 2},
                           {0, 3, 0, 3, 3},
                           {0, 4, 2, 3, 4}},
                          {"0", "1", "a", "b", "c"});
  if (name.size() == 2 && name[0] == 'L' && name[1] >= '1' && name[1] <= '8')
    return chain_entry(name, name[1] - '0');
  throw SemiringError(ErrorCode::UnknownName, "unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 8; ++i) names.push_back("S" + std::to_string(i));
  names.push_back("P");
  for (int i = 1; i <= 8; ++i) names.push_back("L" + std::to_string(i));
  return names;
}

EndSemiring end_semiring(const SemilatticeTable& l) {
  const int n = l.order;
  std::vector<Endomorphism> maps;
  std::vector<ElementId> image(n, 0);
  // Ascending odometer emits images in lexicographic order.
  while (true) {
    Endomorphism e{image};
    if (is_endomorphism(l, e)) maps.push_back(std::move(e));
    int i = n - 1;
    while (i >= 0 && image[i] == n - 1) image[i--] = 0;
    if (i < 0) break;
    ++image[i];
  }
  const int m = static_cast<int>(maps.size());
  OpTable add(m, 0), mul(m, 0);
  auto index_of = [&](const Endomorphism& e) {
    auto it = std::lower_bound(maps.begin(), maps.end(), e);
    if (it == maps.end() || !(*it == e))
      throw SemiringError(ErrorCode::NotAnEndomorphism,
                          "join or composition left the enumerated set");
    return static_cast<int>(it - maps.begin());
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Endomorphism sum, comp;
      sum.image.resize(n);
      comp.image.resize(n);
      for (int x = 0; x < n; ++x) {
        sum.image[x] = l.join.at(maps[i].image[x], maps[j].image[x]);
        comp.image[x] = maps[i].image[maps[j].image[x]];
      }
      add.at(i, j) = index_of(sum);
      mul.at(i, j) = index_of(comp);
    }
  return EndSemiring{check_axioms(std::move(add), std::move(mul)),
                     std::move(maps)};
}

EndSemiring end0_semiring(const SemilatticeTable& l) {
  auto bottom = least_element(l);
  if (!bottom)
    throw SemiringError(ErrorCode::NoLeastElement,
                        "semilattice has no least element");
  EndSemiring full = end_semiring(l);
  std::vector<Endomorphism> kept;
  for (const auto& e : full.maps)
    if (e.image[*bottom] == *bottom) kept.push_back(e);
  const int m = static_cast<int>(kept.size());
  const int n = l.order;
  OpTable add(m, 0), mul(m, 0);
  auto index_of = [&](const Endomorphism& e) {
    auto it = std::lower_bound(kept.begin(), kept.end(), e);
    if (it == kept.end() || !(*it == e))
      throw SemiringError(ErrorCode::NotAnEndomorphism,
                          "join or composition left the filtered set");
    return static_cast<int>(it - kept.begin());
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Endomorphism sum, comp;
      sum.image.resize(n);
      comp.image.resize(n);
      for (int x = 0; x < n; ++x) {
        sum.image[x] = l.join.at(kept[i].image[x], kept[j].image[x]);
        comp.image[x] = kept[i].image[kept[j].image[x]];
      }
      add.at(i, j) = index_of(sum);
      mul.at(i, j) = index_of(comp);
    }
  return EndSemiring{check_axioms(std::move(add), std::move(mul)),
                     std::move(kept)};
}

Endomorphism step_endomorphism(const SemilatticeTable& l, ElementId a,
                               ElementId b) {
  auto bottom = least_element(l);
  if (!bottom)
    throw SemiringError(ErrorCode::NoLeastElement,
                        "semilattice has no least element");
  if (a < 0 || a >= l.order || b < 0 || b >= l.order)
    throw SemiringError(ErrorCode::InvalidArgument, "element out of range");
  Endomorphism e;
  e.image.resize(l.order);
  for (int x = 0; x < l.order; ++x) e.image[x] = l.leq(x, a) ? *bottom : b;
  if (!is_endomorphism(l, e))
    throw SemiringError(ErrorCode::NotAnEndomorphism,
                        "step map fails the join law");
  return e;
}

FiniteSemiring adjoin_zero(const FiniteSemiring& s) {
  if (!bi_absorbing_element(s))
    throw SemiringError(ErrorCode::NoBiAbsorbing,
                        "input has no bi-absorbing element");
  const int n = s.order;
  OpTable add(n + 1, 0), mul(n + 1, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add.at(i, j) = s.add.at(i, j);
      mul.at(i, j) = s.mul.at(i, j);
    }
  for (int i = 0; i <= n; ++i) {
    add.at(i, n) = i;  // z additively neutral
    add.at(n, i) = i;
    mul.at(i, n) = n;  // z multiplicatively absorbing
    mul.at(n, i) = n;
  }
  add.at(n, n) = n;
  return check_axioms(std::move(add), std::move(mul));
}

FiniteSemiring adjoin_biabsorber(const FiniteSemiring& s) {
  if (!zero_element(s))
    throw SemiringError(ErrorCode::NoZero, "input has no zero element");
  const int n = s.order;
  OpTable add(n + 1, 0), mul(n + 1, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add.at(i, j) = s.add.at(i, j);
      mul.at(i, j) = s.mul.at(i, j);
    }
  for (int i = 0; i <= n; ++i) {
    add.at(i, n) = n;  // z absorbing on both operations
    add.at(n, i) = n;
    mul.at(i, n) = n;
    mul.at(n, i) = n;
  }
  return check_axioms(std::move(add), std::move(mul));
}

FiniteSemiring projection_semiring(const SemilatticeTable& l, ProjectionSide side) {
  if (l.order < 2)
    throw SemiringError(ErrorCode::InvalidArgument,
                        "projection semiring needs order >= 2");
  return projection_tables(l, side);
}

}  // namespace semirings
