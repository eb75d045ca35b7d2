#include "nelson/cli_app.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "../vendor/CLI11.hpp"
#include "../vendor/json.hpp"
#include "nelson/algebra.hpp"
#include "nelson/axioms.hpp"
#include "nelson/deduction.hpp"
#include "nelson/duality.hpp"
#include "nelson/free_algebra.hpp"
#include "nelson/json_io.hpp"
#include "nelson/space.hpp"
#include "nelson/term.hpp"
#include "nelson/term_parser.hpp"

namespace nelson {
namespace {

using json = nlohmann::ordered_json;

void emit_line(const std::string& text) {
  std::fputs(text.c_str(), stdout);
  std::fputc('\n', stdout);
}
void emit_json(const json& doc) { emit_line(doc.dump(2)); }
void diagnose(const std::string& text) {
  std::fputs(text.c_str(), stderr);
  std::fputc('\n', stderr);
}

std::string variable_name(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : default_variable_name(static_cast<int>(i));
}

std::string witness_text(const std::vector<std::string>& names,
                         const std::vector<elem>& assignment) {
  std::string out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += cat(variable_name(names, i), "=", assignment[i]);
  }
  return out;
}

json witness_json(const std::vector<std::string>& names,
                  const std::vector<elem>& assignment) {
  json out = json::object();
  for (std::size_t i = 0; i < assignment.size(); ++i)
    out[variable_name(names, i)] = assignment[i];
  return out;
}

std::string identity_text(const Identity& id) {
  return cat(to_string(*id.lhs), " = ", to_string(*id.rhs));
}

json set_json(const Bitset& b) {
  json out = json::array();
  b.for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string set_text(const Bitset& b) {
  std::string out = "{";
  bool first = true;
  b.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

json set_list_json(const std::vector<elem>& xs) {
  json out = json::array();
  for (elem x : xs) out.push_back(x);
  return out;
}

std::string class_text(const std::vector<elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += cat(i ? "," : "", xs[i]);
  return out + "}";
}

// Shared guard for subcommands whose mathematics presumes a Nelson algebra.
// Prints the first failing axiom and returns false (caller exits 1).
bool require_nelson(const FiniteNelsonAlgebra& a, const std::string& origin) {
  AxiomReport report = check_axioms(a, AxiomVariant::main_eight);
  for (const IdentityCheck& check : report.results) {
    if (check.holds()) continue;
    std::vector<std::string> names;
    emit_line(cat("not a Nelson algebra: ", check.identity.name, " fails at ",
                  witness_text(names, *check.violation)));
    diagnose(cat(origin, " does not satisfy the Nelson axioms; see stdout for the witness"));
    return false;
  }
  return true;
}

int cmd_check_axioms(const std::string& path, const std::string& variant, bool as_json) {
  FiniteNelsonAlgebra a = read_algebra_file(path);
  AxiomVariant v =
      variant == "brignole" ? AxiomVariant::brignole_ten : AxiomVariant::main_eight;
  AxiomReport report = check_axioms(a, v);
  if (as_json) {
    json axioms = json::array();
    for (const IdentityCheck& check : report.results) {
      json row;
      row["name"] = check.identity.name;
      row["holds"] = check.holds();
      if (!check.holds()) {
        std::vector<std::string> names;  // axiom identities use default names
        row["witness"] = witness_json(names, *check.violation);
        row["lhs"] = evaluate(*check.identity.lhs, a, *check.violation);
        row["rhs"] = evaluate(*check.identity.rhs, a, *check.violation);
      }
      axioms.push_back(std::move(row));
    }
    json out;
    out["variant"] = variant_name(v);
    out["axioms"] = std::move(axioms);
    out["all_hold"] = report.all_hold();
    emit_json(out);
  } else {
    emit_line(cat("variant: ", variant_name(v)));
    int failures = 0;
    for (const IdentityCheck& check : report.results) {
      if (check.holds()) {
        emit_line(cat("ok    ", check.identity.name));
      } else {
        ++failures;
        std::vector<std::string> names;
        emit_line(cat("FAIL  ", check.identity.name, ": ",
                      witness_text(names, *check.violation), "  lhs=",
                      evaluate(*check.identity.lhs, a, *check.violation), " rhs=",
                      evaluate(*check.identity.rhs, a, *check.violation)));
      }
    }
    emit_line(failures == 0 ? "all axioms hold" : cat(failures, " axiom(s) fail"));
  }
  return report.all_hold() ? 0 : 1;
}

int cmd_check_identity(const std::string& path, const std::string& equation, bool as_json) {
  FiniteNelsonAlgebra a = read_algebra_file(path);
  ParsedEquation eq = parse_equation(equation);
  Identity id{"input", eq.lhs, eq.rhs};
  std::optional<std::vector<elem>> violation = find_identity_violation(a, id);
  if (as_json) {
    json out;
    out["identity"] = identity_text(id);
    out["variables"] = eq.variables;
    out["holds"] = !violation.has_value();
    if (violation) {
      out["witness"] = witness_json(eq.variables, *violation);
      out["lhs"] = evaluate(*id.lhs, a, *violation);
      out["rhs"] = evaluate(*id.rhs, a, *violation);
    }
    emit_json(out);
  } else {
    emit_line(cat("identity: ", identity_text(id)));
    if (!violation) {
      emit_line("holds");
    } else {
      if (!violation->empty())
        emit_line(cat("witness: ", witness_text(eq.variables, *violation)));
      emit_line(cat("lhs=", evaluate(*id.lhs, a, *violation), " rhs=",
                    evaluate(*id.rhs, a, *violation)));
    }
  }
  return violation ? 1 : 0;
}

int cmd_classify(const std::string& path, bool as_json) {
  FiniteNelsonAlgebra a = read_algebra_file(path);
  const bool nelson = is_nelson_algebra(a);
  const bool five = is_five_valued(a);
  const bool linear = is_linear(a);
  std::optional<std::uint32_t> chain;
  if (nelson && a.size() >= 2 && find_isomorphism(a, make_chain(a.size())))
    chain = a.size();
  if (as_json) {
    json out;
    out["size"] = a.size();
    out["nelson_algebra"] = nelson;
    out["five_valued"] = five;
    out["linear"] = linear;
    out["chain"] = chain ? json(cat("C", *chain)) : json(nullptr);
    emit_json(out);
  } else {
    emit_line(cat("size: ", a.size()));
    emit_line(cat("nelson-algebra: ", nelson ? "yes" : "no"));
    emit_line(cat("five-valued: ", five ? "yes" : "no"));
    emit_line(cat("linear: ", linear ? "yes" : "no"));
    emit_line(cat("chain: ", chain ? cat("C", *chain) : "none"));
  }
  return 0;
}

int cmd_spectrum(const std::string& path, bool as_json) {
  FiniteNelsonAlgebra a = read_algebra_file(path);
  if (!require_nelson(a, path)) return 1;
  SpectrumResult spec = spectrum(a);
  if (as_json) {
    json points = json::array();
    for (const Bitset& p : spec.points) points.push_back(set_json(p));
    json out;
    out["points"] = std::move(points);
    out["space"] = json::parse(space_to_json(spec.space));
    emit_json(out);
  } else {
    emit_line(cat("points: ", spec.space.size));
    for (std::uint32_t i = 0; i < spec.space.size; ++i)
      emit_line(cat("P", i, " = ", set_text(spec.points[i])));
    std::string phi = "phi:";
    for (std::uint32_t i = 0; i < spec.space.size; ++i) phi += cat(" ", spec.space.phi[i]);
    emit_line(phi);
    std::string order = "order:";
    for (std::uint32_t i = 0; i < spec.space.size; ++i)
      for (std::uint32_t j = 0; j < spec.space.size; ++j)
        if (i != j && spec.space.leq(i, j)) order += cat(" P", i, "<P", j);
    emit_line(order);
  }
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& ds_text, bool as_json) {
  FiniteNelsonAlgebra a = read_algebra_file(path);
  Bitset ds(a.size());
  std::size_t pos = 0;
  while (pos < ds_text.size()) {
    std::size_t comma = ds_text.find(',', pos);
    if (comma == std::string::npos) comma = ds_text.size();
    std::string item = ds_text.substr(pos, comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw format_error(cat("--ds items must be element indices, got \"", item, "\""));
    unsigned long value = std::stoul(item);
    if (value >= a.size())
      throw format_error(cat("--ds element ", value, " is outside 0..", a.size() - 1));
    ds.set(value);
    pos = comma + 1;
  }
  if (!require_nelson(a, path)) return 1;
  if (!is_deductive_system(a, ds))
    throw format_error(cat("the set ", set_text(ds), " is not a deductive system"));
  QuotientResult q = quotient(a, ds);
  if (as_json) {
    json classes = json::array();
    for (const std::vector<elem>& cls : q.classes) classes.push_back(set_list_json(cls));
    json out;
    out["ds"] = set_json(ds);
    out["classes"] = std::move(classes);
    out["natural_epi"] = set_list_json(q.natural_epi.map);
    out["algebra"] = json::parse(algebra_to_json(q.quotient));
    emit_json(out);
  } else {
    emit_line(cat("ds: ", set_text(ds)));
    std::string classes = "classes:";
    for (const std::vector<elem>& cls : q.classes) classes += cat(" ", class_text(cls));
    emit_line(classes);
    emit_line(cat("quotient-size: ", q.quotient.size()));
    std::string epi = "natural-epi:";
    for (elem image : q.natural_epi.map) epi += cat(" ", image);
    emit_line(epi);
  }
  return 0;
}

int cmd_dual(const std::string& path, bool as_json) {
  NelsonSpace s = read_space_file(path);
  if (auto violation = validate_space(s)) {
    emit_line(cat("not a Nelson space: ", violation->axiom, ": ", violation->detail));
    diagnose(cat(path, " violates the Nelson space axioms; see stdout for the witness"));
    return 1;
  }
  DualAlgebraResult dual = dual_algebra(s);
  if (as_json) {
    json carrier = json::array();
    for (const Bitset& u : dual.carrier_sets) carrier.push_back(set_json(u));
    json out;
    out["carrier_sets"] = std::move(carrier);
    out["algebra"] = json::parse(algebra_to_json(dual.algebra));
    emit_json(out);
  } else {
    emit_line(cat("points: ", s.size));
    emit_line(cat("up-sets: ", dual.algebra.size()));
    emit_line(cat("top: ", dual.algebra.top()));
  }
  return 0;
}

int cmd_roundtrip(const std::string& path, bool as_json) {
  FiniteNelsonAlgebra a = read_algebra_file(path);
  if (!require_nelson(a, path)) return 1;
  RoundtripResult rt = roundtrip_check(a);
  if (as_json) {
    json out;
    out["elements"] = a.size();
    out["points"] = rt.spec.space.size;
    out["iso"] = set_list_json(rt.iso.map);
    out["ok"] = true;
    emit_json(out);
  } else {
    emit_line(cat("elements: ", a.size()));
    emit_line(cat("points: ", rt.spec.space.size));
    emit_line("roundtrip: ok");
  }
  return 0;
}

int cmd_free(std::uint32_t n, bool materialize, bool as_json) {
  FreeSpaceDescription fs = free_space(n);
  std::vector<FreeComponent> comps = free_components(fs);
  big_int total = count_free(n);
  big_int product = 1;

  struct Row {
    std::string label, kind;
    std::size_t points;
    std::string size;
  };
  std::vector<Row> rows;
  for (const FreeComponent& c : comps) {
    std::uint32_t halves = 0;
    for (std::uint8_t d : c.maximal.digits) halves += d == 2;
    big_int size = count_up_sets_of(restrict_space(fs.space, c.points));
    product *= size;
    rows.push_back(Row{c.maximal.to_string(),
                       halves == 0 ? "Boolean" : cat("Halved(", halves, ")"),
                       c.points.size(), size.str()});
  }
  if (product != total)
    throw std::logic_error("component sizes do not multiply to the closed-form count");

  json materialized;
  if (materialize) {
    if (total > 100000)
      throw resource_error(cat("materializing ", total.str(),
                               " elements exceeds the 100000-element budget"));
    DualAlgebraResult dual = dual_algebra(fs.space, DualBudget{100000});
    materialized = json::parse(algebra_to_json(dual.algebra));
  }

  if (as_json) {
    json components = json::array();
    for (const Row& row : rows) {
      json r;
      r["label"] = row.label;
      r["kind"] = row.kind;
      r["points"] = row.points;
      r["algebra_size"] = row.size;
      components.push_back(std::move(r));
    }
    json out;
    out["n"] = n;
    out["points"] = fs.space.size;
    out["components"] = std::move(components);
    out["total_count"] = total.str();
    if (materialize) out["algebra"] = std::move(materialized);
    emit_json(out);
  } else {
    emit_line(cat("n: ", n));
    emit_line(cat("points: ", fs.space.size));
    emit_line(cat("components: ", rows.size()));
    for (const Row& row : rows)
      emit_line(cat("component ", row.label, ": kind=", row.kind, " points=", row.points,
                    " size=", row.size));
    emit_line(cat("total: ", total.str()));
    if (materialize) emit_line(materialized.dump(2));
  }
  return 0;
}

int cmd_count(std::uint32_t n) {
  emit_line(count_free(n).str());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Computation kit for finite Nelson algebras"};
  app.require_subcommand(1);

  std::string algebra_path, space_path, variant = "main", equation, ds_text;
  std::uint32_t n = 1;
  bool as_json = false, materialize = false;

  CLI::App* check_axioms_cmd =
      app.add_subcommand("check-axioms", "Verify the Nelson axiom identities");
  check_axioms_cmd->add_option("algebra", algebra_path, "algebra JSON file")->required();
  check_axioms_cmd->add_option("--variant", variant, "axiom set: main or brignole")
      ->check(CLI::IsMember({"main", "brignole"}));
  check_axioms_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* check_identity_cmd =
      app.add_subcommand("check-identity", "Check an equation on an algebra");
  check_identity_cmd->add_option("algebra", algebra_path, "algebra JSON file")->required();
  check_identity_cmd->add_option("--eq", equation, "equation \"<lhs> = <rhs>\"")->required();
  check_identity_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Report five-valuedness, linearity and chain type");
  classify_cmd->add_option("algebra", algebra_path, "algebra JSON file")->required();
  classify_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "Prime-filter space of an algebra");
  spectrum_cmd->add_option("algebra", algebra_path, "algebra JSON file")->required();
  spectrum_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* quotient_cmd =
      app.add_subcommand("quotient", "Quotient by a deductive system");
  quotient_cmd->add_option("algebra", algebra_path, "algebra JSON file")->required();
  quotient_cmd->add_option("--ds", ds_text, "deductive system as comma-separated indices")
      ->required();
  quotient_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* dual_cmd = app.add_subcommand("dual", "Up-set algebra of a Nelson space");
  dual_cmd->add_option("space", space_path, "space JSON file")->required();
  dual_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* roundtrip_cmd =
      app.add_subcommand("roundtrip", "Verify A is isomorphic to the dual of its spectrum");
  roundtrip_cmd->add_option("algebra", algebra_path, "algebra JSON file")->required();
  roundtrip_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* free_cmd =
      app.add_subcommand("free", "Describe the free five-valued algebra on n generators");
  free_cmd->add_option("--n", n, "number of generators")->required();
  free_cmd->add_flag("--materialize", materialize, "include the full algebra tables");
  free_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* count_cmd =
      app.add_subcommand("count", "Cardinality of the free five-valued algebra");
  count_cmd->add_option("--n", n, "number of generators")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check_axioms_cmd) return cmd_check_axioms(algebra_path, variant, as_json);
    if (*check_identity_cmd) return cmd_check_identity(algebra_path, equation, as_json);
    if (*classify_cmd) return cmd_classify(algebra_path, as_json);
    if (*spectrum_cmd) return cmd_spectrum(algebra_path, as_json);
    if (*quotient_cmd) return cmd_quotient(algebra_path, ds_text, as_json);
    if (*dual_cmd) return cmd_dual(space_path, as_json);
    if (*roundtrip_cmd) return cmd_roundtrip(algebra_path, as_json);
    if (*free_cmd) return cmd_free(n, materialize, as_json);
    if (*count_cmd) return cmd_count(n);
  } catch (const format_error& e) {
    diagnose(cat("error: ", e.what()));
    return 2;
  } catch (const resource_error& e) {
    diagnose(cat("error: ", e.what()));
    return 2;
  } catch (const std::exception& e) {
    diagnose(cat("internal error: ", e.what()));
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}

}  // namespace nelson
