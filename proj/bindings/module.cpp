#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semirings/congruence.hpp"
#include "semirings/construction.hpp"
#include "semirings/divisibility.hpp"
#include "semirings/enumeration.hpp"
#include "semirings/ideal.hpp"
#include "semirings/io.hpp"
#include "semirings/morphism.hpp"
#include "semirings/table.hpp"
#include "semirings/verifier.hpp"

namespace py = pybind11;
using namespace semirings;

namespace {

using Rows = std::vector<std::vector<ElementId>>;

Rows to_rows(const OpTable& t) {
  Rows rows(t.order, std::vector<ElementId>(t.order));
  for (int i = 0; i < t.order; ++i)
    for (int j = 0; j < t.order; ++j) rows[i][j] = t.at(i, j);
  return rows;
}

FiniteSemiring from_rows(const Rows& add, const Rows& mul) {
  return check_axioms(OpTable(add), OpTable(mul));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite semiring tables: axioms, simplicity, canonical forms, "
            "enumeration";

  py::register_exception<SemiringError>(m, "SemiringError");

  m.def("axiom_violation",
        [](const Rows& add, const Rows& mul) -> py::object {
          auto v = find_axiom_violation(OpTable(add), OpTable(mul));
          if (!v) return py::none();
          return py::make_tuple(to_string(v->axiom), v->witness[0],
                                v->witness[1], v->witness[2]);
        },
        py::arg("add"), py::arg("mul"),
        "First violated axiom with its witness triple, or None.");

  m.def("predicates",
        [](const Rows& add, const Rows& mul) {
          FiniteSemiring s = from_rows(add, mul);
          PredicateReport r = predicates(s);
          py::dict d;
          d["mult_idempotent"] = r.mult_idempotent.value;
          d["add_idempotent"] = r.add_idempotent.value;
          d["bi_idempotent"] = r.bi_idempotent.value;
          d["commutative_mul"] = r.commutative_mul.value;
          d["add_cancellative"] = r.add_cancellative.value;
          d["boolean_ring"] = r.boolean_ring.value;
          return d;
        },
        py::arg("add"), py::arg("mul"));

  m.def("element_roles",
        [](const Rows& add, const Rows& mul) {
          FiniteSemiring s = from_rows(add, mul);
          py::dict d;
          auto set = [&](const char* key, std::optional<ElementId> v) {
            d[key] = v ? py::cast(*v) : py::none();
          };
          set("mult_absorbing", mult_absorbing_element(s));
          set("zero", zero_element(s));
          set("bi_absorbing", bi_absorbing_element(s));
          set("add_neutral", add_neutral_element(s));
          return d;
        },
        py::arg("add"), py::arg("mul"));

  m.def("is_congruence_simple",
        [](const Rows& add, const Rows& mul) {
          return is_congruence_simple(from_rows(add, mul));
        },
        py::arg("add"), py::arg("mul"));

  m.def("is_ideal_simple",
        [](const Rows& add, const Rows& mul) -> py::object {
          SimplicityResult r = is_ideal_simple(from_rows(add, mul));
          return py::make_tuple(r.simple,
                                r.witness ? py::cast(*r.witness) : py::none());
        },
        py::arg("add"), py::arg("mul"));

  m.def("is_bi_ideal_simple",
        [](const Rows& add, const Rows& mul) -> py::object {
          SimplicityResult r = is_bi_ideal_simple(from_rows(add, mul));
          return py::make_tuple(r.simple,
                                r.witness ? py::cast(*r.witness) : py::none());
        },
        py::arg("add"), py::arg("mul"));

  m.def("congruence_count",
        [](const Rows& add, const Rows& mul) {
          return congruence_lattice(from_rows(add, mul)).size();
        },
        py::arg("add"), py::arg("mul"));

  m.def("canonical",
        [](const Rows& add, const Rows& mul) {
          CanonicalForm c = canonical_form(from_rows(add, mul));
          return py::make_tuple(to_rows(c.add), to_rows(c.mul),
                                c.witness_permutation);
        },
        py::arg("add"), py::arg("mul"),
        "Canonical tables and the relabeling that reaches them.");

  m.def("is_isomorphic",
        [](const Rows& sa, const Rows& sm, const Rows& ta, const Rows& tm) {
          IsoResult r = is_isomorphic(from_rows(sa, sm), from_rows(ta, tm));
          return py::make_tuple(r.isomorphic,
                                r.witness ? py::cast(*r.witness) : py::none());
        },
        py::arg("s_add"), py::arg("s_mul"), py::arg("t_add"),
        py::arg("t_mul"));

  m.def("opposite",
        [](const Rows& add, const Rows& mul) {
          FiniteSemiring o = opposite(from_rows(add, mul));
          return py::make_tuple(to_rows(o.add), to_rows(o.mul));
        },
        py::arg("add"), py::arg("mul"));

  m.def("digest",
        [](const Rows& add, const Rows& mul) {
          return digest(from_rows(add, mul));
        },
        py::arg("add"), py::arg("mul"));

  m.def("is_mult_divisible",
        [](const Rows& add, const Rows& mul) {
          DivisibilityResult r = is_mult_divisible(from_rows(add, mul));
          return py::make_tuple(
              r.divisible, r.witness ? py::cast(*r.witness) : py::none());
        },
        py::arg("add"), py::arg("mul"));

  m.def("catalog_names", &catalog_names);

  m.def("catalog",
        [](const std::string& name) {
          CatalogEntry e = catalog(name);
          py::dict d;
          d["name"] = e.name;
          d["order"] = e.semiring.order;
          d["add"] = to_rows(e.semiring.add);
          d["mul"] = to_rows(e.semiring.mul);
          d["element_names"] = e.element_names;
          return d;
        },
        py::arg("name"));

  m.def("enumerate_classes",
        [](int order, bool mult_idempotent, bool add_idempotent,
           bool commutative_mul, bool congruence_simple, bool ideal_simple,
           bool bi_ideal_simple, bool has_mult_absorbing, bool divisible,
           int threads) {
          ConstraintSet cs;
          cs.mult_idempotent = mult_idempotent;
          cs.add_idempotent = add_idempotent;
          cs.commutative_mul = commutative_mul;
          cs.congruence_simple_filter = congruence_simple;
          cs.ideal_simple_filter = ideal_simple;
          cs.bi_ideal_simple_filter = bi_ideal_simple;
          cs.has_mult_absorbing = has_mult_absorbing;
          cs.mult_divisible_filter = divisible;
          EnumerationResult r = enumerate_semirings(order, cs, threads);
          py::list classes;
          for (const auto& c : r.classes)
            classes.append(py::make_tuple(to_rows(c.add), to_rows(c.mul)));
          py::dict d;
          d["order"] = r.order;
          d["classes"] = classes;
          d["nodes_visited"] = r.stats.nodes_visited;
          d["wall_ms"] = r.stats.wall_ms;
          return d;
        },
        py::arg("order"), py::arg("mult_idempotent") = false,
        py::arg("add_idempotent") = false, py::arg("commutative_mul") = false,
        py::arg("congruence_simple") = false, py::arg("ideal_simple") = false,
        py::arg("bi_ideal_simple") = false,
        py::arg("has_mult_absorbing") = false, py::arg("divisible") = false,
        py::arg("threads") = 1);

  m.def("verify",
        [](const Rows& add, const Rows& mul) {
          VerificationReport r = verify_semiring(from_rows(add, mul));
          py::list claims;
          for (const auto& c : r.claims) {
            py::dict d;
            d["id"] = c.claim_id;
            d["status"] = to_string(c.status);
            d["detail"] = c.detail;
            d["witness"] = c.witness;
            claims.append(d);
          }
          return claims;
        },
        py::arg("add"), py::arg("mul"));

  m.def("parse",
        [](const std::string& text) {
          auto [add, mul] = parse_tables(text);
          return py::make_tuple(to_rows(add), to_rows(mul));
        },
        py::arg("text"));

  m.def("format",
        [](const Rows& add, const Rows& mul) {
          return format_tables(OpTable(add), OpTable(mul));
        },
        py::arg("add"), py::arg("mul"));
}
