#include "semirings/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semirings/congruence.hpp"
#include "semirings/construction.hpp"
#include "semirings/divisibility.hpp"
#include "semirings/enumeration.hpp"
#include "semirings/ideal.hpp"
#include "semirings/io.hpp"
#include "semirings/morphism.hpp"
#include "semirings/table.hpp"
#include "semirings/verifier.hpp"

namespace semirings::cli {
namespace {

using nlohmann::json;

std::string hex_digest(std::uint64_t d) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << d;
  return out.str();
}

std::string elements_to_string(const std::vector<ElementId>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  out << '}';
  return out.str();
}

std::string triple_to_string(const std::array<ElementId, 3>& t) {
  std::ostringstream out;
  out << '(' << t[0] << ',' << t[1] << ',' << t[2] << ')';
  return out.str();
}

// Resolves "catalog:NAME", a bare catalog name, or a file path.
FiniteSemiring load_target(const std::string& target) {
  std::string name = target;
  if (name.rfind("catalog:", 0) == 0) name = name.substr(8);
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), name) != names.end())
    return catalog(name).semiring;
  if (target.rfind("catalog:", 0) == 0)
    throw SemiringError(ErrorCode::UnknownName,
                        "unknown catalog name: " + name);
  auto [add, mul] = parse_tables(read_file(target));
  return check_axioms(std::move(add), std::move(mul));
}

json claims_to_json(const std::vector<ClaimResult>& claims) {
  json arr = json::array();
  for (const auto& c : claims) {
    arr.push_back({{"id", c.claim_id},
                   {"status", to_string(c.status)},
                   {"detail", c.detail},
                   {"witness", c.witness}});
  }
  return arr;
}

json summary_to_json(const std::vector<ClaimResult>& claims) {
  int pass = 0, fail = 0, na = 0, skipped = 0;
  for (const auto& c : claims) {
    switch (c.status) {
      case ClaimStatus::Pass: ++pass; break;
      case ClaimStatus::Fail: ++fail; break;
      case ClaimStatus::NotApplicable: ++na; break;
      case ClaimStatus::SkippedOutOfScope: ++skipped; break;
    }
  }
  return {{"pass", pass},
          {"fail", fail},
          {"not_applicable", na},
          {"skipped", skipped},
          {"overall_pass", fail == 0}};
}

void print_claims(const std::vector<ClaimResult>& claims, std::ostream& out) {
  out << "claims:\n";
  for (const auto& c : claims) {
    out << "  " << c.claim_id << ": " << to_string(c.status);
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
    if (!c.witness.empty()) {
      // Multi-line witnesses are indented to stay inside the claim block.
      std::istringstream lines(c.witness);
      std::string line;
      while (std::getline(lines, line)) out << "    | " << line << '\n';
    }
  }
  json s = summary_to_json(claims);
  out << "claims summary: pass=" << s["pass"] << " fail=" << s["fail"]
      << " not_applicable=" << s["not_applicable"]
      << " skipped=" << s["skipped"] << '\n';
}

void print_report(const VerificationReport& report, std::ostream& out) {
  out << "target: " << report.target << '\n';
  for (const auto& [key, value] : report.metrics)
    out << key << '=' << value << '\n';
  print_claims(report.claims, out);
}

json report_to_json(const std::string& command,
                    const VerificationReport& report) {
  json metrics = json::object();
  for (const auto& [key, value] : report.metrics) metrics[key] = value;
  return {{"command", command},
          {"target", report.target},
          {"metrics", metrics},
          {"claims", claims_to_json(report.claims)},
          {"summary", summary_to_json(report.claims)}};
}

void maybe_write_json(const std::string& path, const json& doc) {
  if (!path.empty()) write_file(path, doc.dump(2) + "\n");
}

int cmd_analyze(const std::string& target, const std::string& json_out,
                std::ostream& out) {
  FiniteSemiring s = load_target(target);
  const int n = s.order;
  json doc{{"command", "analyze"}};

  out << "semiring: order " << n << " digest " << hex_digest(digest(s))
      << '\n';
  doc["semiring"] = {{"order", n}, {"digest", hex_digest(digest(s))}};
  out << "tables:\n" << format_semiring(s);

  // Catalog entries this semiring is isomorphic to.
  std::vector<std::string> matches;
  if (n <= kCanonicalFormOrderCap) {
    CanonicalForm c = canonical_form(s);
    for (const auto& name : catalog_names()) {
      const CatalogEntry entry = catalog(name);
      if (entry.semiring.order == n && canonical_form(entry.semiring) == c)
        matches.push_back(name);
    }
  }
  out << "catalog_matches:";
  if (matches.empty()) out << " none";
  for (const auto& m : matches) out << ' ' << m;
  out << '\n';
  doc["catalog_matches"] = matches;

  PredicateReport preds = predicates(s);
  out << "predicates:\n";
  json jpreds = json::object();
  auto show_pred = [&](const char* name, const PredicateFlag& flag) {
    out << "  " << name << '=' << (flag.value ? "true" : "false");
    if (!flag.value && flag.counterexample)
      out << " counterexample=" << triple_to_string(*flag.counterexample);
    out << '\n';
    jpreds[name] = flag.value;
  };
  show_pred("mult_idempotent", preds.mult_idempotent);
  show_pred("add_idempotent", preds.add_idempotent);
  show_pred("bi_idempotent", preds.bi_idempotent);
  show_pred("commutative_mul", preds.commutative_mul);
  show_pred("add_cancellative", preds.add_cancellative);
  show_pred("boolean_ring", preds.boolean_ring);
  doc["predicates"] = jpreds;

  out << "element_roles:\n";
  json jroles = json::array();
  for (const ElementProfile& p : classify_elements(s)) {
    std::vector<std::string> roles;
    if (p.is_left_mult_absorbing) roles.push_back("left_mult_absorbing");
    if (p.is_right_mult_absorbing) roles.push_back("right_mult_absorbing");
    if (p.is_mult_absorbing) roles.push_back("mult_absorbing");
    if (p.is_add_absorbing) roles.push_back("add_absorbing");
    if (p.is_bi_absorbing) roles.push_back("bi_absorbing");
    if (p.is_zero) roles.push_back("zero");
    if (p.is_mult_neutral) roles.push_back("mult_neutral");
    if (p.is_add_neutral) roles.push_back("add_neutral");
    out << "  " << p.element << ':';
    if (roles.empty()) out << " none";
    for (const auto& r : roles) out << ' ' << r;
    out << '\n';
    jroles.push_back({{"element", p.element}, {"roles", roles}});
  }
  doc["element_roles"] = jroles;

  const bool cs = is_congruence_simple(s);
  SimplicityResult is = is_ideal_simple(s);
  SimplicityResult bis = is_bi_ideal_simple(s);
  out << "simplicity:\n";
  out << "  congruence_simple=" << (cs ? "true" : "false") << '\n';
  out << "  ideal_simple=" << (is.simple ? "true" : "false");
  if (is.witness) out << " witness=" << elements_to_string(*is.witness);
  out << '\n';
  out << "  bi_ideal_simple=" << (bis.simple ? "true" : "false");
  if (bis.witness) out << " witness=" << elements_to_string(*bis.witness);
  out << '\n';
  doc["simplicity"] = {
      {"congruence_simple", cs},
      {"ideal_simple", is.simple},
      {"ideal_simple_witness",
       is.witness ? elements_to_string(*is.witness) : ""},
      {"bi_ideal_simple", bis.simple},
      {"bi_ideal_simple_witness",
       bis.witness ? elements_to_string(*bis.witness) : ""}};

  if (n <= kCongruenceLatticeOrderCap) {
    CongruenceLattice lattice = congruence_lattice(s);
    auto coatoms = lattice.coatoms();
    out << "congruence_lattice: size=" << lattice.size()
        << " coatoms=" << coatoms.size() << '\n';
    doc["congruence_lattice"] = {{"size", lattice.size()},
                                 {"coatoms", coatoms.size()}};
  } else {
    out << "congruence_lattice: skipped (order above cap "
        << kCongruenceLatticeOrderCap << ")\n";
    doc["congruence_lattice"] = nullptr;
  }

  if (n >= 2) {
    Monolith m = monolith(s);
    if (m.exists) {
      out << "monolith: " << m.partition->to_string() << '\n';
      doc["monolith"] = m.partition->to_string();
    } else {
      out << "monolith: none\n";
      doc["monolith"] = nullptr;
    }
  } else {
    out << "monolith: none\n";
    doc["monolith"] = nullptr;
  }

  DivisibilityResult div = is_mult_divisible(s);
  out << "mult_divisible=" << (div.divisible ? "true" : "false");
  if (div.witness)
    out << " first_missing: degree=" << div.witness->first
        << " element=" << div.witness->second;
  out << '\n';
  doc["mult_divisible"] = div.divisible;

  VerificationReport report = verify_semiring(s);
  print_claims(report.claims, out);
  doc["claims"] = claims_to_json(report.claims);
  doc["summary"] = summary_to_json(report.claims);

  maybe_write_json(json_out, doc);
  return report.overall_pass() ? 0 : 1;
}

int cmd_catalog(const std::string& name, const std::string& json_out,
                std::ostream& out) {
  json doc{{"command", "catalog"}};
  if (name.empty()) {
    json entries = json::array();
    for (const auto& entry_name : catalog_names()) {
      const CatalogEntry entry = catalog(entry_name);
      out << entry_name << ": order " << entry.semiring.order << " ("
          << (entry.kind == CatalogKind::Semiring ? "semiring" : "semilattice")
          << ")\n";
      entries.push_back({{"name", entry_name},
                         {"order", entry.semiring.order},
                         {"kind", entry.kind == CatalogKind::Semiring
                                      ? "semiring"
                                      : "semilattice"}});
    }
    doc["entries"] = entries;
  } else {
    const CatalogEntry entry = catalog(name);
    out << "name: " << entry.name << '\n';
    out << "kind: "
        << (entry.kind == CatalogKind::Semiring ? "semiring" : "semilattice")
        << '\n';
    out << "element_names:";
    for (const auto& e : entry.element_names) out << ' ' << e;
    out << '\n';
    out << "tables:\n" << format_semiring(entry.semiring);
    doc["entry"] = {{"name", entry.name},
                    {"order", entry.semiring.order},
                    {"element_names", entry.element_names},
                    {"tables", format_semiring(entry.semiring)}};
  }
  maybe_write_json(json_out, doc);
  return 0;
}

int cmd_enumerate(int order, const ConstraintSet& constraints, int threads,
                  const std::string& out_dir, const std::string& json_out,
                  std::ostream& out) {
  EnumerationResult r = enumerate_semirings(order, constraints, threads);
  const std::string mode = constraints.add_idempotent ? "restricted" : "full";

  std::ostringstream manifest;
  manifest << "order=" << r.order << '\n';
  manifest << "constraints=" << r.constraints.to_string() << '\n';
  manifest << "class_count=" << r.classes.size() << '\n';
  manifest << "nodes_visited=" << r.stats.nodes_visited << '\n';
  manifest << "wall_ms=" << static_cast<long>(r.stats.wall_ms) << '\n';
  manifest << "mode=" << mode << '\n';
  out << manifest.str();

  json doc{{"command", "enumerate"},
           {"order", r.order},
           {"constraints", r.constraints.to_string()},
           {"class_count", r.classes.size()},
           {"classes_before_filters", r.counts.classes_before_filters},
           {"nodes_visited", r.stats.nodes_visited},
           {"prunes", r.stats.prunes},
           {"wall_ms", static_cast<long>(r.stats.wall_ms)},
           {"mode", mode}};
  json classes = json::array();
  for (const auto& c : r.classes) {
    FiniteSemiring s{c.order, c.add, c.mul};
    classes.push_back({{"digest", hex_digest(digest(s))},
                       {"tables", format_semiring(s)}});
  }
  doc["classes"] = classes;

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& c : r.classes) {
      FiniteSemiring s{c.order, c.add, c.mul};
      write_file(out_dir + "/" + hex_digest(digest(s)) + ".txt",
                 format_semiring(s));
    }
    write_file(out_dir + "/manifest.txt", manifest.str());
  }
  maybe_write_json(json_out, doc);
  return 0;
}

int cmd_verify(const std::string& suite, int max_order,
               const std::string& mode_name, const std::string& target,
               int threads, const std::string& json_out, std::ostream& out) {
  VerificationReport report;
  if (suite == "classification") {
    SearchMode mode = mode_name == "full" ? SearchMode::Full
                                          : SearchMode::Restricted;
    report = verify_classification(max_order, mode, threads);
  } else if (suite == "corpus") {
    report = verify_corpus_properties(max_order, threads);
  } else if (suite == "semiring") {
    if (target.empty())
      throw SemiringError(ErrorCode::InvalidArgument,
                          "--target is required with --suite semiring");
    report = verify_semiring(load_target(target));
  } else {
    throw SemiringError(ErrorCode::InvalidArgument,
                        "unknown suite: " + suite);
  }
  print_report(report, out);
  maybe_write_json(json_out, report_to_json("verify", report));
  return report.overall_pass() ? 0 : 1;
}

int cmd_export(const std::string& name, const std::string& out_path) {
  write_file(out_path, format_semiring(catalog(name).semiring));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite semiring table engine"};
  app.require_subcommand(1);

  std::string analyze_target, analyze_json;
  auto* analyze = app.add_subcommand(
      "analyze", "report structure, simplicity and claims for one semiring");
  analyze->add_option("target", analyze_target,
                      "table file path, catalog name, or catalog:NAME")
      ->required();
  analyze->add_option("--json-out", analyze_json,
                      "write the structured report to this path");

  std::string catalog_name, catalog_json;
  auto* cat = app.add_subcommand("catalog", "list or print catalog entries");
  cat->add_option("name", catalog_name, "entry name, e.g. S1 or P");
  cat->add_option("--json-out", catalog_json,
                  "write the structured report to this path");

  int enum_order = 2;
  int enum_threads = 1;
  ConstraintSet enum_constraints;
  std::string enum_dir, enum_json;
  auto* enumerate = app.add_subcommand(
      "enumerate", "enumerate semiring classes up to isomorphism");
  enumerate->add_option("--order", enum_order, "carrier size")->required();
  enumerate->add_flag("--mult-idempotent", enum_constraints.mult_idempotent,
                      "restrict to idempotent multiplication");
  enumerate->add_flag("--add-idempotent", enum_constraints.add_idempotent,
                      "restrict to idempotent addition");
  enumerate->add_flag("--commutative-mul", enum_constraints.commutative_mul,
                      "restrict to commutative multiplication");
  enumerate->add_flag("--congruence-simple",
                      enum_constraints.congruence_simple_filter,
                      "keep only congruence-simple classes");
  enumerate->add_flag("--ideal-simple", enum_constraints.ideal_simple_filter,
                      "keep only ideal-simple classes");
  enumerate->add_flag("--bi-ideal-simple",
                      enum_constraints.bi_ideal_simple_filter,
                      "keep only bi-ideal-simple classes");
  enumerate->add_flag("--has-absorbing", enum_constraints.has_mult_absorbing,
                      "keep only classes with a multiplicatively absorbing "
                      "element");
  enumerate->add_flag("--divisible", enum_constraints.mult_divisible_filter,
                      "keep only multiplicatively divisible classes");
  enumerate->add_option("--threads", enum_threads, "worker cap");
  enumerate->add_option("--out", enum_dir,
                        "directory for class files and manifest");
  enumerate->add_option("--json-out", enum_json,
                        "write the structured report to this path");

  std::string verify_suite, verify_mode = "restricted", verify_target,
              verify_json;
  int verify_max_order = 0;
  int verify_threads = 1;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_suite,
                     "classification, corpus, or semiring")
      ->required()
      ->check(CLI::IsMember({"classification", "corpus", "semiring"}));
  verify->add_option("--max-order", verify_max_order,
                     "largest carrier size (default per suite)");
  verify->add_option("--mode", verify_mode, "restricted or full")
      ->check(CLI::IsMember({"restricted", "full"}));
  verify->add_option("--target", verify_target,
                     "semiring suite target: file, name, or catalog:NAME");
  verify->add_option("--threads", verify_threads, "worker cap");
  verify->add_option("--json-out", verify_json,
                     "write the structured report to this path");

  std::string export_name, export_path;
  auto* exp = app.add_subcommand("export",
                                 "write a catalog entry as a table file");
  exp->add_option("--name", export_name, "catalog entry name")->required();
  exp->add_option("--out", export_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_target, analyze_json, out);
    if (*cat) return cmd_catalog(catalog_name, catalog_json, out);
    if (*enumerate)
      return cmd_enumerate(enum_order, enum_constraints, enum_threads,
                           enum_dir, enum_json, out);
    if (*verify) {
      if (verify_max_order == 0)
        verify_max_order = verify_suite == "corpus" ? 4 : 3;
      return cmd_verify(verify_suite, verify_max_order, verify_mode,
                        verify_target, verify_threads, verify_json, out);
    }
    if (*exp) return cmd_export(export_name, export_path);
  } catch (const SemiringError& e) {
    err << "error: " << e.what();
    if (e.witness())
      err << " witness=" << triple_to_string(*e.witness());
    err << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace semirings::cli
