#include "semirings/table.hpp"

#include <algorithm>

namespace semirings {

std::string to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::NotAssociativeAdd: return "NotAssociativeAdd";
    case ErrorCode::NotCommutativeAdd: return "NotCommutativeAdd";
    case ErrorCode::NotAssociativeMul: return "NotAssociativeMul";
    case ErrorCode::NotLeftDistributive: return "NotLeftDistributive";
    case ErrorCode::NotRightDistributive: return "NotRightDistributive";
    case ErrorCode::NotABand: return "NotABand";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::NoAbsorbingElement: return "NoAbsorbingElement";
    case ErrorCode::NoBiAbsorbing: return "NoBiAbsorbing";
    case ErrorCode::NoZero: return "NoZero";
    case ErrorCode::NoLeastElement: return "NoLeastElement";
    case ErrorCode::NotAnEndomorphism: return "NotAnEndomorphism";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

OpTable::OpTable(const std::vector<std::vector<ElementId>>& rows)
    : order(static_cast<int>(rows.size())) {
  entries.reserve(order * order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order) {
      throw SemiringError(ErrorCode::DimensionMismatch,
                          "table rows must all have length equal to the order");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
}

bool OpTable::in_range() const {
  return std::all_of(entries.begin(), entries.end(),
                     [this](ElementId e) { return 0 <= e && e < order; });
}

OpTable OpTable::transposed() const {
  OpTable t(order, 0);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) t.at(i, j) = at(j, i);
  return t;
}

std::optional<AxiomViolation> find_axiom_violation(const OpTable& add,
                                                   const OpTable& mul) {
  const int n = add.order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (add.at(add.at(x, y), z) != add.at(x, add.at(y, z)))
          return AxiomViolation{ErrorCode::NotAssociativeAdd, {x, y, z}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (add.at(x, y) != add.at(y, x))
        return AxiomViolation{ErrorCode::NotCommutativeAdd, {x, y, 0}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul.at(mul.at(x, y), z) != mul.at(x, mul.at(y, z)))
          return AxiomViolation{ErrorCode::NotAssociativeMul, {x, y, z}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul.at(x, add.at(y, z)) != add.at(mul.at(x, y), mul.at(x, z)))
          return AxiomViolation{ErrorCode::NotLeftDistributive, {x, y, z}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul.at(add.at(y, z), x) != add.at(mul.at(y, x), mul.at(z, x)))
          return AxiomViolation{ErrorCode::NotRightDistributive, {x, y, z}};
  return std::nullopt;
}

FiniteSemiring check_axioms(OpTable add, OpTable mul) {
  if (add.order != mul.order)
    throw SemiringError(ErrorCode::DimensionMismatch,
                        "addition and multiplication tables disagree on order");
  if (add.order < 1)
    throw SemiringError(ErrorCode::InvalidArgument, "order must be at least 1");
  if (!add.in_range() || !mul.in_range())
    throw SemiringError(ErrorCode::EntryOutOfRange,
                        "table entry outside 0..n-1");
  if (auto v = find_axiom_violation(add, mul)) {
    throw SemiringError(v->axiom, "axiom violated", v->witness);
  }
  return FiniteSemiring{add.order, std::move(add), std::move(mul)};
}

PredicateReport predicates(const FiniteSemiring& s) {
  const int n = s.order;
  PredicateReport r;
  for (int x = 0; x < n && r.mult_idempotent.value; ++x)
    if (s.mul.at(x, x) != x) r.mult_idempotent = {false, {{x, x, x}}};
  for (int x = 0; x < n && r.add_idempotent.value; ++x)
    if (s.add.at(x, x) != x) r.add_idempotent = {false, {{x, x, x}}};
  r.bi_idempotent.value = r.mult_idempotent.value && r.add_idempotent.value;
  if (!r.bi_idempotent.value)
    r.bi_idempotent.counterexample = r.mult_idempotent.value
                                         ? r.add_idempotent.counterexample
                                         : r.mult_idempotent.counterexample;
  for (int x = 0; x < n && r.commutative_mul.value; ++x)
    for (int y = 0; y < n; ++y)
      if (s.mul.at(x, y) != s.mul.at(y, x)) {
        r.commutative_mul = {false, {{x, y, 0}}};
        break;
      }
  for (int a = 0; a < n && r.add_cancellative.value; ++a)
    for (int b = 0; b < n && r.add_cancellative.value; ++b)
      for (int c = 0; c < n; ++c)
        if (a != b && s.add.at(a, c) == s.add.at(b, c)) {
          r.add_cancellative = {false, {{a, b, c}}};
          break;
        }

  // Additively cancellative + zero + additive inverses + commutative
  // idempotent multiplication.
  auto zero = zero_element(s);
  bool ring = r.add_cancellative.value && zero.has_value() &&
              r.commutative_mul.value && r.mult_idempotent.value;
  std::optional<std::array<ElementId, 3>> ring_witness;
  if (!r.add_cancellative.value)
    ring_witness = r.add_cancellative.counterexample;
  else if (!r.commutative_mul.value)
    ring_witness = r.commutative_mul.counterexample;
  else if (!r.mult_idempotent.value)
    ring_witness = r.mult_idempotent.counterexample;
  if (ring) {
    for (int x = 0; x < n && ring; ++x) {
      bool has_inverse = false;
      for (int y = 0; y < n; ++y)
        if (s.add.at(x, y) == *zero) has_inverse = true;
      if (!has_inverse) {
        ring = false;
        ring_witness = {{x, x, x}};
      }
    }
  }
  r.boolean_ring = {ring, ring ? std::nullopt : ring_witness};
  return r;
}

std::vector<ElementProfile> classify_elements(const FiniteSemiring& s) {
  const int n = s.order;
  std::vector<ElementProfile> profiles(n);
  for (int w = 0; w < n; ++w) {
    ElementProfile& p = profiles[w];
    p.element = w;
    p.is_left_mult_absorbing = true;   // wS = {w}
    p.is_right_mult_absorbing = true;  // Sw = {w}
    p.is_add_absorbing = true;
    p.is_mult_neutral = true;
    p.is_add_neutral = true;
    for (int x = 0; x < n; ++x) {
      if (s.mul.at(w, x) != w) p.is_left_mult_absorbing = false;
      if (s.mul.at(x, w) != w) p.is_right_mult_absorbing = false;
      if (s.add.at(x, w) != w) p.is_add_absorbing = false;
      if (s.mul.at(x, w) != x || s.mul.at(w, x) != x) p.is_mult_neutral = false;
      if (s.add.at(x, w) != x) p.is_add_neutral = false;
    }
    p.is_mult_absorbing = p.is_left_mult_absorbing && p.is_right_mult_absorbing;
    p.is_bi_absorbing = p.is_mult_absorbing && p.is_add_absorbing;
    p.is_zero = p.is_mult_absorbing && p.is_add_neutral;
  }
  return profiles;
}

namespace {

template <typename Pred>
std::optional<ElementId> find_element(const FiniteSemiring& s, Pred pred) {
  for (const auto& p : classify_elements(s))
    if (pred(p)) return p.element;
  return std::nullopt;
}

}  // namespace

std::optional<ElementId> mult_absorbing_element(const FiniteSemiring& s) {
  return find_element(s, [](const ElementProfile& p) { return p.is_mult_absorbing; });
}

std::optional<ElementId> zero_element(const FiniteSemiring& s) {
  return find_element(s, [](const ElementProfile& p) { return p.is_zero; });
}

std::optional<ElementId> bi_absorbing_element(const FiniteSemiring& s) {
  return find_element(s, [](const ElementProfile& p) { return p.is_bi_absorbing; });
}

std::optional<ElementId> add_neutral_element(const FiniteSemiring& s) {
  return find_element(s, [](const ElementProfile& p) { return p.is_add_neutral; });
}

FiniteSemiring opposite(const FiniteSemiring& s) {
  return FiniteSemiring{s.order, s.add, s.mul.transposed()};
}

FiniteSemiring direct_product(const FiniteSemiring& s, const FiniteSemiring& t) {
  const int n = s.order, m = t.order;
  OpTable add(n * m, 0), mul(n * m, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < m; ++l) {
          add.at(i * m + j, k * m + l) = s.add.at(i, k) * m + t.add.at(j, l);
          mul.at(i * m + j, k * m + l) = s.mul.at(i, k) * m + t.mul.at(j, l);
        }
  return FiniteSemiring{n * m, std::move(add), std::move(mul)};
}

BandLawResult band_law_check(const OpTable& mul) {
  const int n = mul.order;
  for (int x = 0; x < n; ++x)
    if (mul.at(x, x) != x)
      throw SemiringError(ErrorCode::NotABand, "table is not idempotent",
                          {x, x, x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul.at(mul.at(x, y), z) != mul.at(x, mul.at(y, z)))
          throw SemiringError(ErrorCode::NotABand, "table is not associative",
                              {x, y, z});
  for (int a = 0; a < n; ++a) {
    std::vector<bool> in_bab(n, false);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) in_bab[mul.at(mul.at(x, a), y)] = true;
    for (int b = 0; b < n; ++b)
      if (in_bab[b] && mul.at(mul.at(b, a), b) != b)
        return BandLawResult{false, {{a, b}}};
  }
  return BandLawResult{};
}

}  // namespace semirings
