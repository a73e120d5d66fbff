#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <array>
#include <cstdio>
#include <filesystem>

#include "helpers.hpp"

using namespace th;

namespace {

// First axiom violation by the documented check order, scanning triples
// lexicographically.
std::optional<AxiomViolation> naive_first_violation(const oracle::Table& add,
                                                    const oracle::Table& mul) {
  const int n = oracle::order_of(add);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (add[add[a][b]][c] != add[a][add[b][c]])
          return AxiomViolation{ErrorCode::NotAssociativeAdd, {a, b, c}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add[a][b] != add[b][a])
        return AxiomViolation{ErrorCode::NotCommutativeAdd, {a, b, 0}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          return AxiomViolation{ErrorCode::NotAssociativeMul, {a, b, c}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
          return AxiomViolation{ErrorCode::NotLeftDistributive, {a, b, c}};
  // Same witness convention on both sides: the multiplier comes first.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]])
          return AxiomViolation{ErrorCode::NotRightDistributive, {a, b, c}};
  return std::nullopt;
}

}  // namespace

TEST_CASE("op table access, transpose and range check") {
  OpTable t(std::vector<std::vector<ElementId>>{{0, 1}, {1, 0}});
  CHECK(t.order == 2);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.in_range());

  OpTable tr = t.transposed();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(tr.at(i, j) == t.at(j, i));

  t.at(1, 1) = 7;
  CHECK_FALSE(t.in_range());

  CHECK_THROWS_AS(OpTable(std::vector<std::vector<ElementId>>{{0, 1}, {1}}),
                  SemiringError);
}

TEST_CASE("every catalog entry satisfies the axioms") {
  for (const std::string& name : catalog_names()) {
    CatalogEntry e = catalog(name);
    CAPTURE(name);
    CHECK_FALSE(find_axiom_violation(e.semiring.add, e.semiring.mul));
    CHECK(e.semiring.order == static_cast<int>(e.element_names.size()));
    if (e.kind == CatalogKind::Semilattice) {
      REQUIRE(e.semilattice.has_value());
      CHECK(e.semilattice->join == e.semiring.add);
      CHECK(e.semilattice->join == e.semiring.mul);
    }
  }
  CHECK_THROWS_AS(catalog("S9"), SemiringError);
}

TEST_CASE("axiom violations are found in check order with lex-first witnesses") {
  // Random table pairs, mostly invalid; the checker must agree with a naive
  // scan on both the axiom and the witness triple.
  std::mt19937 gen(271828);
  int violations_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 2u);
    oracle::Table add(n, std::vector<int>(n, 0)), mul = add;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        add[i][j] = static_cast<int>(gen() % static_cast<unsigned>(n));
        mul[i][j] = static_cast<int>(gen() % static_cast<unsigned>(n));
      }
    auto expected = naive_first_violation(add, mul);
    auto got = find_axiom_violation(table_of(add), table_of(mul));
    REQUIRE(got.has_value() == expected.has_value());
    if (expected) {
      ++violations_seen;
      CHECK(got->axiom == expected->axiom);
      CHECK(got->witness == expected->witness);
    }
  }
  CHECK(violations_seen > 300);

  // xor addition with or multiplication breaks distributivity.
  auto v = find_axiom_violation(
      OpTable(std::vector<std::vector<ElementId>>{{0, 1}, {1, 0}}),
      OpTable(std::vector<std::vector<ElementId>>{{0, 1}, {1, 1}}));
  REQUIRE(v.has_value());
  CHECK(v->axiom == ErrorCode::NotLeftDistributive);
}

TEST_CASE("check_axioms validates shape, range and axioms") {
  OpTable ok2(std::vector<std::vector<ElementId>>{{0, 1}, {1, 0}});
  OpTable and2(std::vector<std::vector<ElementId>>{{0, 0}, {0, 1}});
  FiniteSemiring z2 = check_axioms(ok2, and2);
  CHECK(z2.order == 2);

  OpTable ok3(std::vector<std::vector<ElementId>>{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  try {
    check_axioms(ok3, and2);
    FAIL("expected a dimension error");
  } catch (const SemiringError& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }

  OpTable bad = and2;
  bad.at(0, 0) = 5;
  try {
    check_axioms(ok2, bad);
    FAIL("expected a range error");
  } catch (const SemiringError& e) {
    CHECK(e.code() == ErrorCode::EntryOutOfRange);
  }

  OpTable or2(std::vector<std::vector<ElementId>>{{0, 1}, {1, 1}});
  try {
    check_axioms(ok2, or2);
    FAIL("expected an axiom error");
  } catch (const SemiringError& e) {
    CHECK(e.code() == ErrorCode::NotLeftDistributive);
    REQUIRE(e.witness().has_value());
  }
}

TEST_CASE("predicate flags match direct definitions on small corpora") {
  for (int order = 1; order <= 3; ++order) {
    for (const FiniteSemiring& s : corpus_semirings(order)) {
      auto add = rows_of(s.add), mul = rows_of(s.mul);
      PredicateReport r = predicates(s);
      CHECK(r.mult_idempotent.value == oracle::idempotent(mul));
      CHECK(r.add_idempotent.value == oracle::idempotent(add));
      CHECK(r.bi_idempotent.value ==
            (oracle::idempotent(mul) && oracle::idempotent(add)));
      CHECK(r.commutative_mul.value == oracle::commutative(mul));

      bool cancellative = true;
      for (int a = 0; a < s.order && cancellative; ++a)
        for (int b = 0; b < s.order && cancellative; ++b)
          for (int c = 0; c < s.order && cancellative; ++c)
            if (a != b && add[a][c] == add[b][c]) cancellative = false;
      CHECK(r.add_cancellative.value == cancellative);

      if (!r.mult_idempotent.value) {
        auto cx = *r.mult_idempotent.counterexample;
        CHECK(mul[cx[0]][cx[0]] != cx[0]);
      }
      if (!r.add_cancellative.value) {
        auto cx = *r.add_cancellative.counterexample;
        CHECK(cx[0] != cx[1]);
        CHECK(add[cx[0]][cx[2]] == add[cx[1]][cx[2]]);
      }
    }
  }
}

TEST_CASE("boolean ring detection") {
  // xor with and is the two-element boolean ring.
  FiniteSemiring z2 = check_axioms(
      OpTable(std::vector<std::vector<ElementId>>{{0, 1}, {1, 0}}),
      OpTable(std::vector<std::vector<ElementId>>{{0, 0}, {0, 1}}));
  CHECK(predicates(z2).boolean_ring.value);
  CHECK_FALSE(predicates(cat("S2")).boolean_ring.value);
  CHECK_FALSE(predicates(cat("S5")).boolean_ring.value);

  int rings = 0;
  for (const FiniteSemiring& s : corpus_semirings(2))
    if (predicates(s).boolean_ring.value) ++rings;
  CHECK(rings == 1);
}

TEST_CASE("element role classification matches direct scans") {
  for (int order = 1; order <= 3; ++order) {
    for (const FiniteSemiring& s : corpus_semirings(order)) {
      auto add = rows_of(s.add), mul = rows_of(s.mul);
      auto profiles = classify_elements(s);
      REQUIRE(static_cast<int>(profiles.size()) == s.order);
      for (int x = 0; x < s.order; ++x) {
        bool lma = true, rma = true, aab = true, ane = true, mne = true;
        for (int y = 0; y < s.order; ++y) {
          lma = lma && mul[x][y] == x;
          rma = rma && mul[y][x] == x;
          aab = aab && add[x][y] == x && add[y][x] == x;
          ane = ane && add[x][y] == y && add[y][x] == y;
          mne = mne && mul[x][y] == y && mul[y][x] == y;
        }
        const ElementProfile& p = profiles[x];
        CHECK(p.element == x);
        CHECK(p.is_left_mult_absorbing == lma);
        CHECK(p.is_right_mult_absorbing == rma);
        CHECK(p.is_mult_absorbing == (lma && rma));
        CHECK(p.is_add_absorbing == aab);
        CHECK(p.is_add_neutral == ane);
        CHECK(p.is_mult_neutral == mne);
        CHECK(p.is_zero == ((lma && rma) && ane));
        CHECK(p.is_bi_absorbing == ((lma && rma) && aab));
      }
    }
  }
}

TEST_CASE("distinguished element lookups on catalog entries") {
  FiniteSemiring p = cat("P");
  CHECK(zero_element(p) == 0);
  CHECK(mult_absorbing_element(p) == 0);
  CHECK_FALSE(bi_absorbing_element(p).has_value());
  CHECK_FALSE(zero_element(cat("S3")).has_value());
  CHECK(add_neutral_element(cat("S3")) == 1);
  CHECK_FALSE(add_neutral_element(cat("S4")).has_value());
  CHECK(bi_absorbing_element(cat("S3")) == 0);
  CHECK(bi_absorbing_element(cat("S4")) == 0);
  CHECK(zero_element(cat("S1")) == 0);
  CHECK(zero_element(cat("S2")) == 0);
  CHECK_FALSE(mult_absorbing_element(cat("S5")).has_value());
  CHECK_FALSE(mult_absorbing_element(cat("S6")).has_value());
}

TEST_CASE("opposite reverses multiplication and is an involution") {
  for (const FiniteSemiring& s : corpus_semirings(3)) {
    FiniteSemiring o = opposite(s);
    CHECK(o.add == s.add);
    CHECK(o.mul == s.mul.transposed());
    CHECK(opposite(o) == s);
    CHECK_FALSE(find_axiom_violation(o.add, o.mul));
  }
}

TEST_CASE("direct product is componentwise") {
  FiniteSemiring prod = direct_product(cat("S1"), cat("S7"));
  CHECK(prod.order == 6);
  CHECK_FALSE(find_axiom_violation(prod.add, prod.mul));
  // (i, j) lives at index i*|t| + j.
  FiniteSemiring a = cat("S1"), b = cat("S7");
  for (int i = 0; i < a.order; ++i)
    for (int j = 0; j < b.order; ++j)
      for (int k = 0; k < a.order; ++k)
        for (int l = 0; l < b.order; ++l) {
          int x = i * b.order + j, y = k * b.order + l;
          CHECK(prod.add.at(x, y) ==
                a.add.at(i, k) * b.order + b.add.at(j, l));
          CHECK(prod.mul.at(x, y) ==
                a.mul.at(i, k) * b.order + b.mul.at(j, l));
        }

  CHECK(predicates(prod).mult_idempotent.value);
  CHECK_FALSE(predicates(prod).add_idempotent.value);
}

TEST_CASE("sandwich law holds in every idempotent multiplication") {
  for (int order = 2; order <= 3; ++order) {
    for (const FiniteSemiring& s : corpus_semirings(order)) {
      if (!predicates(s).mult_idempotent.value) continue;
      BandLawResult r = band_law_check(s.mul);
      CHECK(r.holds);
      CHECK_FALSE(r.witness.has_value());

      // Direct scan: whenever b = x.a.y for some x, y, also b = b.a.b.
      auto mul = rows_of(s.mul);
      for (int a = 0; a < s.order; ++a)
        for (int x = 0; x < s.order; ++x)
          for (int y = 0; y < s.order; ++y) {
            int b = mul[mul[x][a]][y];
            CHECK(mul[mul[b][a]][b] == b);
          }
    }
  }
  CHECK_THROWS_AS(band_law_check(cat("S1").add), SemiringError);
}

TEST_CASE("serialization round-trips and rejects malformed input") {
  for (int order = 1; order <= 3; ++order)
    for (const FiniteSemiring& s : corpus_semirings(order)) {
      auto [add, mul] = parse_tables(format_semiring(s));
      CHECK(add == s.add);
      CHECK(mul == s.mul);
    }
  FiniteSemiring p = cat("P");
  auto [add, mul] = parse_tables(format_semiring(p));
  CHECK(add == p.add);
  CHECK(mul == p.mul);

  for (const char* bad : {
           "",
           "x",
           "0",
           "99",
           "2\n0 0\n0 0\n\n0 0",
           "2\n0 0\n0 0\n\n0 0\n0 x",
           "2\n0 0\n0 0\n\n0 0\n0 3",
           "2\n0 0\n0 0\n\n0 0\n0 0\n1",
       }) {
    CAPTURE(bad);
    try {
      parse_tables(bad);
      FAIL_CHECK("expected a parse error");
    } catch (const SemiringError& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("file io round-trips and reports unreadable paths") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "semirings_io_test";
  fs::create_directories(dir);
  const std::string path = (dir / "s7.txt").string();
  write_file(path, format_semiring(cat("S7")));
  CHECK(read_file(path) == format_semiring(cat("S7")));
  try {
    read_file((dir / "missing.txt").string());
    FAIL("expected a read error");
  } catch (const SemiringError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  fs::remove_all(dir);
}
