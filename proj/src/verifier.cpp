#include "semirings/verifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "semirings/congruence.hpp"
#include "semirings/construction.hpp"
#include "semirings/divisibility.hpp"
#include "semirings/enumeration.hpp"
#include "semirings/ideal.hpp"
#include "semirings/io.hpp"
#include "semirings/morphism.hpp"

namespace semirings {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "Pass";
    case ClaimStatus::Fail: return "Fail";
    case ClaimStatus::NotApplicable: return "NotApplicable";
    case ClaimStatus::SkippedOutOfScope: return "SkippedOutOfScope";
  }
  return "Unknown";
}

std::string to_string(SearchMode m) {
  return m == SearchMode::Restricted ? "restricted" : "full";
}

bool VerificationReport::overall_pass() const { return fail_count() == 0; }

int VerificationReport::fail_count() const {
  int count = 0;
  for (const auto& c : claims)
    if (c.status == ClaimStatus::Fail) ++count;
  return count;
}

namespace {

std::string join_elements(const std::vector<ElementId>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  out << '}';
  return out.str();
}

struct ClaimSink {
  std::vector<ClaimResult> claims;

  void pass(const std::string& id, const std::string& detail) {
    claims.push_back({id, ClaimStatus::Pass, detail, ""});
  }
  void fail(const std::string& id, const std::string& detail,
            const std::string& witness) {
    claims.push_back({id, ClaimStatus::Fail, detail, witness});
  }
  void na(const std::string& id, const std::string& unmet) {
    claims.push_back({id, ClaimStatus::NotApplicable, unmet, ""});
  }
  void skip(const std::string& id, const std::string& why) {
    claims.push_back({id, ClaimStatus::SkippedOutOfScope, why, ""});
  }
  void outcome(const std::string& id, bool ok, const std::string& detail,
               const std::string& witness) {
    if (ok)
      pass(id, detail);
    else
      fail(id, detail, witness);
  }
};

// Shared facts computed once per target semiring.
struct Facts {
  FiniteSemiring s;
  int n;
  PredicateReport preds;
  std::optional<ElementId> absorbing;
  std::optional<ElementId> zero;
  std::optional<ElementId> biabs;
  bool congruence_simple;
  SimplicityResult ideal_simple;
  SimplicityResult bi_ideal_simple;

  explicit Facts(const FiniteSemiring& sr)
      : s(sr),
        n(sr.order),
        preds(predicates(sr)),
        absorbing(mult_absorbing_element(sr)),
        zero(zero_element(sr)),
        biabs(bi_absorbing_element(sr)),
        congruence_simple(is_congruence_simple(sr)),
        ideal_simple(is_ideal_simple(sr)),
        bi_ideal_simple(is_bi_ideal_simple(sr)) {}

  bool mult_idem() const { return preds.mult_idempotent.value; }
  bool add_idem() const { return preds.add_idempotent.value; }

  std::vector<ElementId> complement_of(ElementId w) const {
    std::vector<ElementId> t;
    for (int x = 0; x < n; ++x)
      if (x != w) t.push_back(x);
    return t;
  }

  // Sums and products of complement elements stay off w.
  bool complement_add_closed(ElementId w) const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != w && y != w && s.add.at(x, y) == w) return false;
    return true;
  }
  bool complement_mul_closed(ElementId w) const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != w && y != w && s.mul.at(x, y) == w) return false;
    return true;
  }

  // All pairwise sums collapse onto w.
  bool addition_collapsed_to(ElementId w) const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (s.add.at(x, y) != w) return false;
    return true;
  }

  // The sub-semiring on S minus w; valid only when both closures hold.
  FiniteSemiring restriction_without(ElementId w) const {
    std::vector<int> dense(n, -1);
    int k = 0;
    for (int x = 0; x < n; ++x)
      if (x != w) dense[x] = k++;
    OpTable add(k, 0), mul(k, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == w || y == w) continue;
        add.at(dense[x], dense[y]) = dense[s.add.at(x, y)];
        mul.at(dense[x], dense[y]) = dense[s.mul.at(x, y)];
      }
    return check_axioms(std::move(add), std::move(mul));
  }
};

CanonicalForm catalog_canonical(const std::string& name) {
  return canonical_form(catalog(name).semiring);
}

bool matches_any_catalog(const FiniteSemiring& s,
                         const std::vector<std::string>& names,
                         std::string* matched) {
  if (s.order > kCanonicalFormOrderCap) return false;
  CanonicalForm c = canonical_form(s);
  for (const auto& name : names) {
    CanonicalForm ref = catalog_canonical(name);
    if (ref.order == c.order && ref == c) {
      if (matched) *matched = name;
      return true;
    }
  }
  return false;
}

// Quotient by the two-block split {S minus w | w}, when it is a congruence.
std::optional<FiniteSemiring> rho_quotient(const FiniteSemiring& s) {
  Partition rho = rho_partition(s);
  if (!is_congruence(s, rho)) return std::nullopt;
  return quotient(s, rho);
}

void per_semiring_claims(const Facts& f, ClaimSink& sink) {
  const FiniteSemiring& s = f.s;
  const int n = f.n;
  const bool core = f.mult_idem() && f.bi_ideal_simple.simple &&
                    f.absorbing.has_value();
  const std::string core_hyps =
      "needs multiplicative idempotency, bi-ideal-simplicity and a "
      "multiplicatively absorbing element";

  // With an absorbing element in a bi-ideal-simple idempotent semiring, the
  // absorbing element doubles to itself and is a zero or bi-absorbing.
  if (!core) {
    sink.na("absorbing-dichotomy", core_hyps);
  } else {
    const ElementId w = *f.absorbing;
    bool ok = s.add.at(w, w) == w && (f.zero == w || f.biabs == w);
    sink.outcome("absorbing-dichotomy", ok,
                 "absorbing element is a zero or is bi-absorbing",
                 ok ? "" : "element " + std::to_string(w));
  }

  // Elements split into collapsing and covering kinds, the collapsing kind
  // is empty or a bi-ideal, and collapsing elements double to the absorbing
  // element.
  if (!core) {
    sink.na("absorbing-split", core_hyps);
    sink.na("absorbing-split-doubling", core_hyps);
  } else {
    ABDecomposition d = ab_decomposition(s);
    bool split_ok = d.neither.empty();
    bool bi_ideal_ok = true;
    for (ElementId a : d.a) {
      for (int c = 0; c < n; ++c) {
        auto in_a = [&](ElementId v) {
          return std::find(d.a.begin(), d.a.end(), v) != d.a.end();
        };
        if (!in_a(s.add.at(c, a)) || !in_a(s.mul.at(c, a)) ||
            !in_a(s.mul.at(a, c)))
          bi_ideal_ok = false;
      }
    }
    sink.outcome("absorbing-split", split_ok && bi_ideal_ok,
                 "every element collapses or covers, and the collapsing set "
                 "is empty or a bi-ideal",
                 split_ok && bi_ideal_ok
                     ? ""
                     : "neither=" + join_elements(d.neither));
    bool doubling_ok = true;
    ElementId bad = 0;
    for (ElementId a : d.a)
      if (s.add.at(a, a) != d.absorbing) {
        doubling_ok = false;
        bad = a;
      }
    sink.outcome("absorbing-split-doubling", doubling_ok,
                 "collapsing elements double to the absorbing element",
                 doubling_ok ? "" : "element " + std::to_string(bad));
  }

  // Two-element case falls into the four catalog forms with an absorbing
  // element.
  if (!core || n != 2) {
    sink.na("absorbing-two-element-forms",
            core_hyps + " and order exactly 2");
  } else {
    std::string matched;
    bool ok = matches_any_catalog(s, {"S1", "S2", "S3", "S4"}, &matched);
    sink.outcome("absorbing-two-element-forms", ok,
                 ok ? "matches catalog entry " + matched
                    : "matches no two-element absorbing catalog entry",
                 ok ? "" : format_semiring(s));
  }

  // Two-element case without an absorbing element: additively idempotent and
  // one of the two projection forms.
  if (!f.mult_idem() || f.absorbing || n != 2) {
    sink.na("nonabsorbing-two-element-forms",
            "needs multiplicative idempotency, no multiplicatively absorbing "
            "element, order exactly 2");
  } else {
    std::string matched;
    bool ok = f.add_idem() &&
              matches_any_catalog(s, {"S5", "S6"}, &matched);
    sink.outcome("nonabsorbing-two-element-forms", ok,
                 ok ? "additively idempotent; matches catalog entry " + matched
                    : "expected a projection form",
                 ok ? "" : format_semiring(s));
  }

  // Fully collapsed addition forces a bi-absorbing element and a two-element
  // quotient of the all-sums-collapse kind.
  if (!core || !f.addition_collapsed_to(*f.absorbing)) {
    sink.na("collapsed-addition-quotient",
            core_hyps + " and every sum equal to the absorbing element");
  } else {
    auto q = rho_quotient(s);
    bool ok = f.biabs == f.absorbing && q.has_value() &&
              matches_any_catalog(*q, {"S4"}, nullptr);
    sink.outcome("collapsed-addition-quotient", ok,
                 "absorbing element is bi-absorbing and the two-block "
                 "quotient matches the all-sums-collapse form",
                 ok ? "" : format_semiring(s));
  }

  // Additively idempotent with a bi-absorbing element: the complement is
  // closed under both operations.
  const bool biabs_case =
      core && f.add_idem() && f.biabs && f.biabs == f.absorbing;
  if (!biabs_case) {
    sink.na("bi-absorbing-complement-closed",
            core_hyps + ", additive idempotency and a bi-absorbing element");
  } else {
    bool ok = f.complement_add_closed(*f.biabs) &&
              f.complement_mul_closed(*f.biabs);
    sink.outcome("bi-absorbing-complement-closed", ok,
                 "complement of the bi-absorbing element is closed under "
                 "addition and multiplication",
                 ok ? "" : format_semiring(s));
  }

  // Same hypotheses: the two-block split is a congruence and the quotient is
  // the bi-absorbing two-element form.
  if (!biabs_case) {
    sink.na("bi-absorbing-quotient",
            core_hyps + ", additive idempotency and a bi-absorbing element");
  } else {
    auto q = rho_quotient(s);
    bool ok = q.has_value() && matches_any_catalog(*q, {"S3"}, nullptr);
    sink.outcome("bi-absorbing-quotient", ok,
                 "two-block quotient matches the bi-absorbing form",
                 ok ? "" : format_semiring(s));
  }

  // Additively idempotent with a zero, and no product of nonzero elements
  // falling to zero: the two-block split is a congruence and the quotient is
  // the zero-bearing additively idempotent form. The closure hypothesis is
  // essential: without it the split need not be stable under multiplication
  // (catalog entry P is additively idempotent, bi-ideal-simple, has a zero,
  // and its split is not a congruence because some nonzero product is zero).
  if (!(core && f.add_idem() && f.zero && f.zero == f.absorbing)) {
    sink.na("zero-quotient",
            core_hyps + ", additive idempotency and a zero element");
  } else if (!f.complement_mul_closed(*f.zero)) {
    sink.na("zero-quotient",
            "needs the nonzero elements closed under multiplication; here "
            "some product of nonzero elements is zero");
  } else {
    auto q = rho_quotient(s);
    bool ok = q.has_value() && matches_any_catalog(*q, {"S2"}, nullptr);
    sink.outcome("zero-quotient", ok,
                 "two-block quotient matches the zero-bearing additively "
                 "idempotent form",
                 ok ? "" : format_semiring(s));
  }

  // Congruence-simple idempotent multiplication at order >= 3 forces
  // idempotent addition.
  if (!(f.congruence_simple && f.mult_idem() && n >= 3)) {
    sink.na("simple-add-idempotent",
            "needs congruence-simplicity, multiplicative idempotency and "
            "order >= 3");
  } else {
    sink.outcome("simple-add-idempotent", f.add_idem(),
                 "addition is idempotent",
                 f.add_idem() ? "" : format_semiring(s));
  }

  // Congruence-simple, multiplicatively idempotent, with an absorbing
  // element: order two and one of the four absorbing catalog forms.
  if (!(f.congruence_simple && f.mult_idem() && f.absorbing)) {
    sink.na("absorbing-simple-classification",
            "needs congruence-simplicity, multiplicative idempotency and a "
            "multiplicatively absorbing element");
  } else {
    std::string matched;
    bool ok = n == 2 && matches_any_catalog(s, {"S1", "S2", "S3", "S4"},
                                            &matched);
    sink.outcome("absorbing-simple-classification", ok,
                 ok ? "order 2, matches catalog entry " + matched
                    : "expected order 2 with an absorbing catalog form",
                 ok ? "" : format_semiring(s));
  }

  // Congruence-simple and multiplicatively idempotent: one of the eight
  // catalog forms of orders 2 and 3.
  if (!(f.congruence_simple && f.mult_idem())) {
    sink.na("idempotent-simple-catalog",
            "needs congruence-simplicity and multiplicative idempotency");
  } else if (n > kCanonicalFormOrderCap) {
    sink.na("idempotent-simple-catalog",
            "order above the canonical-form cap");
  } else {
    std::string matched;
    bool ok = matches_any_catalog(
        s, {"S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"}, &matched);
    sink.outcome("idempotent-simple-catalog", ok,
                 ok ? "matches catalog entry " + matched
                    : "matches none of the eight catalog forms",
                 ok ? "" : format_semiring(s));
  }

  // Under either simplicity-plus-absorbing hypothesis pairing, the two-block
  // split is a congruence and the unique maximal proper congruence.
  const bool coatom_hyps =
      f.mult_idem() && n >= 2 &&
      ((f.biabs && f.biabs == f.absorbing && f.bi_ideal_simple.simple) ||
       (f.zero && f.zero == f.absorbing && f.ideal_simple.simple));
  if (!coatom_hyps) {
    sink.na("rho-unique-coatom",
            "needs multiplicative idempotency with either a bi-absorbing "
            "element plus bi-ideal-simplicity or a zero plus "
            "ideal-simplicity");
  } else if (n > kCongruenceLatticeOrderCap) {
    sink.na("rho-unique-coatom", "order above the congruence-lattice cap");
  } else {
    Partition rho = rho_partition(s);
    bool cong = is_congruence(s, rho);
    bool ok = cong;
    std::string witness;
    if (cong) {
      auto coatoms = congruence_lattice(s).coatoms();
      ok = coatoms.size() == 1 && coatoms[0] == rho;
      if (!ok) {
        std::ostringstream w;
        w << "coatoms:";
        for (const auto& c : coatoms) w << " [" << c.to_string() << "]";
        witness = w.str();
      }
    } else {
      witness = "two-block split is not a congruence";
    }
    sink.outcome("rho-unique-coatom", ok,
                 "two-block split is a congruence and the unique maximal "
                 "proper congruence",
                 witness);
  }

  // Residue structure when the quotient by the two-block split is the
  // bi-absorbing form: complement is a subsemiring; under
  // bi-ideal-simplicity a two-or-more-element complement is itself
  // bi-ideal-simple and has no bi-absorbing element.
  {
    std::optional<FiniteSemiring> q;
    const bool base = f.mult_idem() && f.biabs && f.biabs == f.absorbing &&
                      n >= 2;
    if (base) q = rho_quotient(s);
    if (!base || !q) {
      sink.na("bi-absorbing-residue",
              "needs multiplicative idempotency, a bi-absorbing element and "
              "the two-block split to be a congruence");
    } else if (matches_any_catalog(*q, {"S3"}, nullptr)) {
      const ElementId w = *f.biabs;
      bool ok = f.complement_add_closed(w) && f.complement_mul_closed(w);
      std::string detail =
          "quotient is the bi-absorbing form; complement is a subsemiring";
      std::string witness = ok ? "" : format_semiring(s);
      if (ok && f.bi_ideal_simple.simple && n - 1 >= 2) {
        FiniteSemiring t = f.restriction_without(w);
        bool t_simple = is_bi_ideal_simple(t).simple;
        bool no_biabs = !bi_absorbing_element(t).has_value();
        ok = t_simple && no_biabs;
        detail +=
            "; complement is bi-ideal-simple and has no bi-absorbing element";
        if (!ok) witness = format_semiring(t);
      }
      sink.outcome("bi-absorbing-residue", ok, detail, witness);
    } else if (matches_any_catalog(*q, {"S4"}, nullptr)) {
      const ElementId w = *f.biabs;
      bool ok = f.addition_collapsed_to(w);
      std::string detail = "quotient is the all-sums-collapse form; every "
                           "sum equals the absorbing element";
      std::string witness = ok ? "" : format_semiring(s);
      if (ok && f.bi_ideal_simple.simple) {
        bool mul_closed = f.complement_mul_closed(w);
        bool rectangular = true;
        bool ideal_simple_s = f.ideal_simple.simple;
        for (int a = 0; a < n && rectangular; ++a)
          for (int b = 0; b < n; ++b) {
            if (a == w || b == w) continue;
            if (s.mul.at(s.mul.at(b, a), b) != b) {
              rectangular = false;
              break;
            }
          }
        bool no_absorbing_in_t = true;
        if (n - 1 >= 2 && mul_closed) {
          for (int c = 0; c < n && no_absorbing_in_t; ++c) {
            if (c == w) continue;
            bool absorbs = true;
            for (int x = 0; x < n; ++x) {
              if (x == w) continue;
              if (s.mul.at(c, x) != c || s.mul.at(x, c) != c) absorbs = false;
            }
            if (absorbs) no_absorbing_in_t = false;
          }
        }
        ok = mul_closed && rectangular && ideal_simple_s && no_absorbing_in_t;
        detail +=
            "; whole semiring ideal-simple, complement multiplicatively "
            "closed and rectangular, with no absorbing complement element";
        if (!ok) witness = format_semiring(s);
      }
      sink.outcome("bi-absorbing-residue", ok, detail, witness);
    } else {
      sink.na("bi-absorbing-residue",
              "two-block quotient matches neither residue form");
    }
  }

  // Residue structure when the quotient by the two-block split is a zero
  // form: the trivial-complement form forces the whole semiring to match it;
  // the zero-bearing additively idempotent form makes the complement a
  // subsemiring, and under ideal-simplicity a two-or-more-element complement
  // is ideal-simple with no absorbing element.
  {
    std::optional<FiniteSemiring> q;
    const bool base = f.mult_idem() && f.zero && f.zero == f.absorbing &&
                      n >= 2;
    if (base) q = rho_quotient(s);
    if (!base || !q) {
      sink.na("zero-residue",
              "needs multiplicative idempotency, a zero element and the "
              "two-block split to be a congruence");
    } else if (matches_any_catalog(*q, {"S1"}, nullptr)) {
      bool ok = true;
      std::string detail = "quotient is the two-element ring form";
      if (f.ideal_simple.simple) {
        ok = matches_any_catalog(s, {"S1"}, nullptr);
        detail += "; the whole semiring matches it";
      }
      sink.outcome("zero-residue", ok, detail, ok ? "" : format_semiring(s));
    } else if (matches_any_catalog(*q, {"S2"}, nullptr)) {
      const ElementId w = *f.zero;
      bool ok = f.complement_add_closed(w) && f.complement_mul_closed(w);
      std::string detail = "quotient is the zero-bearing additively "
                           "idempotent form; complement is a subsemiring";
      std::string witness = ok ? "" : format_semiring(s);
      if (ok && f.ideal_simple.simple && n - 1 >= 2) {
        FiniteSemiring t = f.restriction_without(w);
        bool t_simple = is_ideal_simple(t).simple;
        bool no_absorbing = !mult_absorbing_element(t).has_value();
        ok = t_simple && no_absorbing;
        detail += "; complement is ideal-simple and has no multiplicatively "
                  "absorbing element";
        if (!ok) witness = format_semiring(t);
      }
      sink.outcome("zero-residue", ok, detail, witness);
    } else {
      sink.na("zero-residue",
              "two-block quotient matches neither zero form");
    }
  }

  // Congruence-simple with a zero and no nonzero self-annihilating element:
  // no zero divisors at all.
  if (!(f.congruence_simple && f.zero)) {
    sink.na("no-zero-divisors",
            "needs congruence-simplicity and a zero element");
  } else {
    const ElementId z = *f.zero;
    bool squares_ok = true;
    for (int a = 0; a < n; ++a)
      if (a != z && s.mul.at(a, a) == z) squares_ok = false;
    if (!squares_ok) {
      sink.na("no-zero-divisors",
              "some nonzero element squares to zero");
    } else {
      bool ok = true;
      std::string witness;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n; ++b)
          if (a != z && b != z && s.mul.at(a, b) == z) {
            ok = false;
            witness = "product of " + std::to_string(a) + " and " +
                      std::to_string(b) + " is zero";
            break;
          }
      sink.outcome("no-zero-divisors", ok,
                   "no product of nonzero elements is zero", witness);
    }
  }

  // Multiplicative idempotency plus additive cancellativity force a Boolean
  // ring; with either simplicity, the two-element ring.
  if (!(f.mult_idem() && f.preds.add_cancellative.value)) {
    sink.na("cancellative-boolean-ring",
            "needs multiplicative idempotency and additive cancellativity");
    sink.na("cancellative-simple-field",
            "needs multiplicative idempotency, additive cancellativity and "
            "either simplicity");
  } else {
    sink.outcome("cancellative-boolean-ring", f.preds.boolean_ring.value,
                 "semiring is a Boolean ring",
                 f.preds.boolean_ring.value ? "" : format_semiring(s));
    if (!(f.congruence_simple || f.ideal_simple.simple)) {
      sink.na("cancellative-simple-field",
              "needs congruence- or ideal-simplicity");
    } else {
      bool ok = matches_any_catalog(s, {"S1"}, nullptr);
      sink.outcome("cancellative-simple-field", ok,
                   "matches the two-element ring",
                   ok ? "" : format_semiring(s));
    }
  }

  // Simplicity implications and the two-element blanket case.
  if (!f.ideal_simple.simple) {
    sink.na("ideal-simple-implies-bi-ideal-simple", "needs ideal-simplicity");
  } else {
    sink.outcome("ideal-simple-implies-bi-ideal-simple",
                 f.bi_ideal_simple.simple, "bi-ideal-simple as well",
                 f.bi_ideal_simple.simple
                     ? ""
                     : join_elements(*f.bi_ideal_simple.witness));
  }
  if (!f.congruence_simple) {
    sink.na("congruence-simple-implies-bi-ideal-simple",
            "needs congruence-simplicity");
  } else {
    sink.outcome("congruence-simple-implies-bi-ideal-simple",
                 f.bi_ideal_simple.simple, "bi-ideal-simple as well",
                 f.bi_ideal_simple.simple
                     ? ""
                     : join_elements(*f.bi_ideal_simple.witness));
  }
  if (!(n >= 2 && f.zero)) {
    sink.na("zero-implies-bi-ideal-simple",
            "needs order >= 2 and a zero element");
  } else {
    sink.outcome("zero-implies-bi-ideal-simple", f.bi_ideal_simple.simple,
                 "bi-ideal-simple",
                 f.bi_ideal_simple.simple
                     ? ""
                     : join_elements(*f.bi_ideal_simple.witness));
  }
  if (n != 2) {
    sink.na("two-element-simplicity", "needs order exactly 2");
  } else {
    bool ok = f.congruence_simple && f.ideal_simple.simple;
    sink.outcome("two-element-simplicity", ok,
                 "congruence-simple and ideal-simple",
                 ok ? "" : format_semiring(s));
  }

  // With a bi-absorbing element, the two-block split is proper and
  // non-identity exactly at order >= 3, and is a congruence whenever the
  // complement's sums and products each stay inside the complement or all
  // collapse onto the bi-absorbing element.
  if (!(f.biabs && n >= 2)) {
    sink.na("rho-congruence-cases",
            "needs a bi-absorbing element and order >= 2");
  } else {
    const ElementId o = *f.biabs;
    Partition rho = rho_partition(s);
    bool size_ok =
        (n >= 3) == (!rho.is_identity() && !rho.is_full());
    bool add_in = f.complement_add_closed(o);
    bool mul_in = f.complement_mul_closed(o);
    auto all_out = [&](const OpTable& t) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != o && y != o && t.at(x, y) != o) return false;
      return true;
    };
    bool case_holds = (add_in || all_out(s.add)) && (mul_in || all_out(s.mul));
    bool ok = size_ok;
    std::string detail = "split is proper and non-identity exactly when the "
                         "order is at least 3";
    if (case_holds) {
      ok = ok && is_congruence(s, rho);
      detail += "; complement closure case holds, split is a congruence";
    } else {
      detail += "; no complement closure case applies";
    }
    sink.outcome("rho-congruence-cases", ok, detail,
                 ok ? "" : format_semiring(s));
  }

  // Idempotent multiplication satisfies the sandwich law.
  if (!f.mult_idem()) {
    sink.na("band-sandwich-law", "needs multiplicative idempotency");
  } else {
    BandLawResult r = band_law_check(s.mul);
    sink.outcome("band-sandwich-law", r.holds,
                 "every product-reachable element is a sandwich fixed point",
                 r.holds ? ""
                         : "pair (" + std::to_string(r.witness->first) + "," +
                               std::to_string(r.witness->second) + ")");
  }

  // Divisibility of every power degree forces idempotent multiplication on
  // finite tables.
  {
    DivisibilityResult d = is_mult_divisible(s);
    bool ok = !d.divisible || f.mult_idem();
    std::string detail = d.divisible
                             ? "divisible, and multiplication is idempotent"
                             : "not divisible, nothing to force";
    sink.outcome("divisibility-forces-idempotency", ok, detail,
                 ok ? "" : format_semiring(s));
  }

  sink.skip("divisibility-conjecture",
            "ranges over arbitrary, possibly infinite carriers; only the "
            "finite consequence is machine-checked here");
  sink.skip("divisibility-finitely-generated",
            "ranges over finitely generated symbolic structures outside "
            "finite-table scope");
}

void sort_claims(std::vector<ClaimResult>& claims) {
  std::sort(claims.begin(), claims.end(),
            [](const ClaimResult& a, const ClaimResult& b) {
              return a.claim_id < b.claim_id;
            });
}

}  // namespace

VerificationReport verify_semiring(const FiniteSemiring& s) {
  VerificationReport report;
  {
    std::ostringstream t;
    t << "semiring order " << s.order << " digest " << std::hex << digest(s);
    report.target = t.str();
  }
  Facts facts(s);
  ClaimSink sink;
  per_semiring_claims(facts, sink);
  sort_claims(sink.claims);
  report.claims = std::move(sink.claims);
  return report;
}

VerificationReport verify_classification(int max_order, SearchMode mode,
                                         int threads) {
  if (max_order < 2 || max_order > 4)
    throw SemiringError(ErrorCode::InvalidArgument,
                        "classification runs at max_order 2..4");
  VerificationReport report;
  report.target = "classification up to order " + std::to_string(max_order) +
                  " (" + to_string(mode) + " mode)";
  ClaimSink sink;
  report.metrics.emplace_back("mode", to_string(mode));

  auto canon_set = [](const std::vector<std::string>& names) {
    std::vector<CanonicalForm> forms;
    for (const auto& n : names) forms.push_back(catalog_canonical(n));
    std::sort(forms.begin(), forms.end());
    return forms;
  };

  for (int order = 2; order <= max_order; ++order) {
    ConstraintSet cs;
    cs.mult_idempotent = true;
    cs.congruence_simple_filter = true;
    if (mode == SearchMode::Restricted && order >= 3) cs.add_idempotent = true;
    EnumerationResult r = enumerate_semirings(order, cs, threads);
    const std::string tag = "order" + std::to_string(order);
    report.metrics.emplace_back(tag + "_classes",
                                std::to_string(r.classes.size()));
    report.metrics.emplace_back(tag + "_nodes",
                                std::to_string(r.stats.nodes_visited));
    report.metrics.emplace_back(
        tag + "_wall_ms", std::to_string(static_cast<long>(r.stats.wall_ms)));

    std::vector<CanonicalForm> got = r.classes;
    std::sort(got.begin(), got.end());
    if (order == 2) {
      auto expected = canon_set({"S1", "S2", "S3", "S4", "S5", "S6"});
      sink.outcome("order2-classes", got == expected,
                   "six simple idempotent-multiplication classes, matching "
                   "the catalog",
                   got == expected ? ""
                                   : std::to_string(got.size()) + " classes");
      std::vector<CanonicalForm> absorbing, nonabsorbing;
      for (const auto& c : got) {
        FiniteSemiring s{c.order, c.add, c.mul};
        (mult_absorbing_element(s) ? absorbing : nonabsorbing).push_back(c);
      }
      bool split_ok = absorbing == canon_set({"S1", "S2", "S3", "S4"}) &&
                      nonabsorbing == canon_set({"S5", "S6"});
      sink.outcome("order2-absorbing-subfamily", split_ok,
                   "absorbing subfamily is the four catalog forms, the rest "
                   "the two projection forms",
                   split_ok ? ""
                            : std::to_string(absorbing.size()) + " absorbing");
      bool opp_ok =
          opposite(catalog("S6").semiring) == catalog("S5").semiring;
      sink.outcome("order2-opposite-exchange", opp_ok,
                   "reversing one projection form yields the other, "
                   "table-exactly",
                   "");
    } else if (order == 3) {
      auto expected = canon_set({"S7", "S8"});
      sink.outcome("order3-classes", got == expected,
                   "two simple classes at order 3, matching the catalog",
                   got == expected ? ""
                                   : std::to_string(got.size()) + " classes");
    } else if (order == 4) {
      sink.outcome("order4-empty", got.empty(),
                   "no simple idempotent-multiplication classes at order 4",
                   got.empty() ? "" : std::to_string(got.size()) + " classes");
    }
  }
  sort_claims(sink.claims);
  report.claims = std::move(sink.claims);
  return report;
}

VerificationReport verify_corpus_properties(int max_order, int threads) {
  if (max_order < 1 || max_order > 4)
    throw SemiringError(ErrorCode::InvalidArgument,
                        "corpus properties run at max_order 1..4");
  VerificationReport report;
  report.target =
      "corpus properties up to order " + std::to_string(max_order);
  ClaimSink sink;

  std::vector<Facts> corpus;
  for (int order = 1; order <= max_order; ++order) {
    EnumerationResult r = enumerate_semirings(order, ConstraintSet{}, threads);
    report.metrics.emplace_back("order" + std::to_string(order) + "_classes",
                                std::to_string(r.classes.size()));
    for (const auto& c : r.classes)
      corpus.emplace_back(FiniteSemiring{c.order, c.add, c.mul});
  }

  // Each property quantifies over the corpus; the detail records how many
  // classes met the hypotheses.
  struct Property {
    std::string id;
    std::string conclusion;
    std::function<bool(const Facts&)> hypotheses;
    std::function<bool(const Facts&)> check;
  };
  std::vector<Property> properties;
  properties.push_back(
      {"corpus-congruence-simple-implies-bi-ideal-simple",
       "congruence-simple classes are bi-ideal-simple",
       [](const Facts& e) { return e.congruence_simple; },
       [](const Facts& e) { return e.bi_ideal_simple.simple; }});
  properties.push_back(
      {"corpus-ideal-simple-implies-bi-ideal-simple",
       "ideal-simple classes are bi-ideal-simple",
       [](const Facts& e) { return e.ideal_simple.simple; },
       [](const Facts& e) { return e.bi_ideal_simple.simple; }});
  properties.push_back(
      {"corpus-order2-simplicity",
       "order-2 classes are congruence-simple and ideal-simple",
       [](const Facts& e) { return e.n == 2; },
       [](const Facts& e) {
         return e.congruence_simple && e.ideal_simple.simple;
       }});
  properties.push_back(
      {"corpus-zero-implies-bi-ideal-simple",
       "classes of order >= 2 with a zero are bi-ideal-simple",
       [](const Facts& e) { return e.n >= 2 && e.zero; },
       [](const Facts& e) { return e.bi_ideal_simple.simple; }});
  properties.push_back(
      {"corpus-boolean-ring",
       "idempotent-multiplication cancellative classes are Boolean rings",
       [](const Facts& e) {
         return e.mult_idem() && e.preds.add_cancellative.value;
       },
       [](const Facts& e) { return e.preds.boolean_ring.value; }});
  properties.push_back(
      {"corpus-divisible-iff-idempotent",
       "multiplicative divisibility holds exactly for idempotent "
       "multiplication",
       [](const Facts&) { return true; },
       [](const Facts& e) {
         return is_mult_divisible(e.s).divisible == e.mult_idem();
       }});
  properties.push_back(
      {"corpus-band-law",
       "idempotent multiplication satisfies the sandwich law",
       [](const Facts& e) { return e.mult_idem(); },
       [](const Facts& e) { return band_law_check(e.s.mul).holds; }});
  properties.push_back(
      {"corpus-commutative-simple-two-element",
       "commutative idempotent-multiplication classes with either "
       "simplicity are the four absorbing order-2 forms",
       [](const Facts& e) {
         return e.preds.commutative_mul.value && e.mult_idem() &&
                (e.congruence_simple || e.ideal_simple.simple);
       },
       [](const Facts& e) {
         return e.n == 2 &&
                matches_any_catalog(e.s, {"S1", "S2", "S3", "S4"}, nullptr);
       }});
  properties.push_back(
      {"corpus-commutative-subdirect-bi-ideal-simple",
       "commutative idempotent-multiplication subdirectly irreducible "
       "classes are bi-ideal-simple",
       [](const Facts& e) {
         return e.preds.commutative_mul.value && e.mult_idem() &&
                e.n >= 2 && monolith(e.s).exists;
       },
       [](const Facts& e) { return e.bi_ideal_simple.simple; }});
  properties.push_back(
      {"corpus-absorbing-dichotomy",
       "bi-ideal-simple idempotent-multiplication classes with an absorbing "
       "element have it as a zero or bi-absorbing",
       [](const Facts& e) {
         return e.mult_idem() && e.bi_ideal_simple.simple &&
                e.absorbing.has_value();
       },
       [](const Facts& e) {
         const ElementId w = *e.absorbing;
         return e.s.add.at(w, w) == w &&
                (e.zero == w || e.biabs == w);
       }});
  properties.push_back(
      {"corpus-absorbing-split",
       "bi-ideal-simple idempotent-multiplication classes split cleanly and "
       "collapsing elements double to the absorbing element",
       [](const Facts& e) {
         return e.mult_idem() && e.bi_ideal_simple.simple &&
                e.absorbing.has_value();
       },
       [](const Facts& e) {
         ABDecomposition d = ab_decomposition(e.s);
         if (!d.neither.empty()) return false;
         for (ElementId a : d.a)
           if (e.s.add.at(a, a) != d.absorbing) return false;
         return true;
       }});
  properties.push_back(
      {"corpus-simple-add-idempotent",
       "congruence-simple idempotent-multiplication classes of order >= 3 "
       "are additively idempotent",
       [](const Facts& e) {
         return e.congruence_simple && e.mult_idem() &&
                e.n >= 3;
       },
       [](const Facts& e) { return e.add_idem(); }});
  properties.push_back(
      {"corpus-absorbing-simple-order-two",
       "congruence-simple idempotent-multiplication classes with an "
       "absorbing element have order 2",
       [](const Facts& e) {
         return e.congruence_simple && e.mult_idem() &&
                e.absorbing.has_value();
       },
       [](const Facts& e) { return e.n == 2; }});
  properties.push_back(
      {"corpus-rho-quotient-forms",
       "additively idempotent bi-ideal-simple idempotent-multiplication "
       "classes quotient to the matching two-element form (the zero case "
       "additionally needs the nonzero elements closed under multiplication)",
       [](const Facts& e) {
         if (!(e.mult_idem() && e.add_idem() && e.bi_ideal_simple.simple &&
               e.absorbing.has_value() && e.n >= 2))
           return false;
         if (e.zero == e.absorbing && e.biabs != e.absorbing)
           return e.complement_mul_closed(*e.zero);
         return true;
       },
       [](const Facts& e) {
         auto q = rho_quotient(e.s);
         if (!q) return false;
         if (e.biabs == e.absorbing)
           return matches_any_catalog(*q, {"S3"}, nullptr);
         if (e.zero == e.absorbing)
           return matches_any_catalog(*q, {"S2"}, nullptr);
         return false;
       }});
  properties.push_back(
      {"corpus-collapsed-addition-quotient",
       "bi-ideal-simple idempotent-multiplication classes whose sums all "
       "collapse quotient to the all-sums-collapse form",
       [](const Facts& e) {
         return e.mult_idem() && e.bi_ideal_simple.simple &&
                e.absorbing.has_value() && e.n >= 2 &&
                e.addition_collapsed_to(*e.absorbing);
       },
       [](const Facts& e) {
         auto q = rho_quotient(e.s);
         return q && matches_any_catalog(*q, {"S4"}, nullptr);
       }});

  for (const auto& prop : properties) {
    int instances = 0;
    const Facts* offender = nullptr;
    for (const auto& e : corpus) {
      if (!prop.hypotheses(e)) continue;
      ++instances;
      if (!prop.check(e)) {
        offender = &e;
        break;
      }
    }
    if (offender) {
      sink.fail(prop.id, prop.conclusion, format_semiring(offender->s));
    } else {
      sink.pass(prop.id, prop.conclusion + " (" + std::to_string(instances) +
                             " classes met the hypotheses)");
    }
  }

  sort_claims(sink.claims);
  report.claims = std::move(sink.claims);
  return report;
}

}  // namespace semirings
