#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "scf/axioms.hpp"
#include "scf/replay.hpp"
#include "scf/report.hpp"
#include "scf/rules.hpp"
#include "scf/text.hpp"

// Exit codes: 0 pass/match, 1 fail/witness/mismatch, 2 usage or parse or
// domain error, 3 budget exceeded.

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int cmd_eval(const std::string& rule_name, const std::string& path) {
  const auto& rule = scf::find_rule(rule_name);
  const auto parsed = scf::parse_profile_file(path);
  const scf::ChoiceSet out = rule.evaluate(parsed.profile);
  std::cout << scf::render_choice_set(out, parsed.names) << "\n";
  return kExitPass;
}

int cmd_matrix(const std::string& which, const std::string& path) {
  const auto parsed = scf::parse_profile_file(path);
  if (which == "rank") {
    std::cout << scf::render_rank_matrix(scf::rank_matrix(parsed.profile),
                                         parsed.names);
  } else if (which == "support") {
    std::cout << scf::render_support_matrix(
        scf::support_matrix(parsed.profile), parsed.names);
  } else if (which == "margins") {
    std::cout << scf::render_margin_matrix(scf::support_matrix(parsed.profile),
                                           parsed.names);
  } else if (which == "majority") {
    std::cout << scf::render_majority_relation(
        scf::majority_relation(parsed.profile), parsed.names);
  } else {
    throw scf::DomainError("unknown matrix '" + which +
                           "'; expected rank, support, majority, or margins");
  }
  return kExitPass;
}

int cmd_check(const std::string& rule_name, const std::string& axiom_name,
              const scf::DomainSpec& spec, int jobs, bool timing) {
  const auto& rule = scf::find_rule(rule_name);
  const auto& axiom = scf::find_axiom(axiom_name);
  const scf::CheckResult result = axiom.run(rule, spec, scf::CheckOptions{jobs});
  bool revalidated = false;
  if (result.witness)
    revalidated = scf::revalidate_witness(rule, axiom_name, *result.witness);
  std::cout << scf::check_record("check", rule_name, axiom_name, spec, jobs,
                                 result, revalidated, timing)
                   .dump()
            << "\n";
  return result.pass() ? kExitPass : kExitFail;
}

int cmd_nominators(const std::string& rule_name, const scf::DomainSpec& spec) {
  const auto& rule = scf::find_rule(rule_name);
  uint64_t scanned = 0;
  const auto noms = scf::nominators(rule, spec, &scanned);
  auto j = scf::report_header("nominators", spec, 1);
  j["rule"] = rule_name;
  j["nominators"] = noms;
  j["profiles_scanned"] = scanned;
  std::cout << j.dump() << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& name, const std::string& trace_path,
               bool dump) {
  const scf::Scenario sc = scf::load_scenario(name);
  if (dump) {
    std::cout << scf::dump_scenario(sc);
    return kExitPass;
  }
  const scf::PropagateResult result = scf::propagate(sc);
  std::string audit_why;
  const bool audit_ok = scf::audit_trace(sc, result.trace, &audit_why);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    out << scf::trace_to_jsonl(sc, result.trace);
  }

  bool match = false;
  std::string detail;
  if (!sc.expect) {
    match = true;
  } else if (sc.expect->kind == scf::Expectation::Contradiction) {
    match = result.contradiction();
    if (!match) detail = "expected a contradiction, propagation settled";
  } else if (sc.expect->kind == scf::Expectation::Forced) {
    match = !result.contradiction();
    if (!match) {
      detail = "unexpected contradiction at " +
               sc.label(*result.contradiction_profile);
    } else {
      for (const auto& [p, allowed] : sc.expect->forced)
        if (result.map.cand[p] != allowed) {
          match = false;
          detail = "final candidates at " + sc.label(p) + " are " +
                   std::to_string(result.map.cand[p]) + ", expected " +
                   std::to_string(allowed);
          break;
        }
    }
  } else {
    throw scf::DomainError("scenario '" + sc.name +
                           "' expects a solve verdict; use the solve command");
  }

  auto j = scf::report_header("verify", scf::DomainSpec{sc.m, sc.n}, 1);
  j["scenario"] = sc.name;
  j["profiles"] = sc.profiles.size();
  j["deductions"] = result.trace.size();
  j["contradiction"] = result.contradiction();
  if (result.contradiction())
    j["contradiction_at"] = sc.label(*result.contradiction_profile);
  j["trace_audit"] = audit_ok ? "sound" : ("unsound: " + audit_why);
  j["expected"] = match ? "match" : "mismatch";
  std::cout << j.dump() << "\n";

  if (!match || !audit_ok) {
    if (!detail.empty()) std::cerr << detail << "\n";
    if (!audit_ok) std::cerr << "trace audit failed: " << audit_why << "\n";
    // Tail of the deduction trace for diagnosis.
    const size_t from = result.trace.size() > 5 ? result.trace.size() - 5 : 0;
    scf::DeductionTrace last(result.trace.begin() + from, result.trace.end());
    std::cerr << scf::trace_to_jsonl(sc, last);
    return kExitFail;
  }
  return kExitPass;
}

int cmd_solve(const std::string& name, double budget_ms) {
  const scf::Scenario sc = scf::load_scenario(name);
  scf::SolveBudget budget;
  budget.ms = budget_ms;
  const scf::SolveResult result = scf::solve(sc, budget);

  const char* status = result.status == scf::SolveStatus::Satisfiable
                           ? "satisfiable"
                       : result.status == scf::SolveStatus::Unsatisfiable
                           ? "unsatisfiable"
                           : "budget-exceeded";
  auto j = scf::report_header("solve", scf::DomainSpec{sc.m, sc.n}, 1);
  j["scenario"] = sc.name;
  j["profiles"] = sc.profiles.size();
  j["status"] = status;
  j["nodes"] = result.nodes;
  if (result.status == scf::SolveStatus::Satisfiable &&
      !result.assignment.empty()) {
    const scf::AltNames names = scf::AltNames::letters(sc.m);
    nlohmann::ordered_json assign;
    for (size_t p = 0; p < result.assignment.size(); ++p)
      assign[sc.label(static_cast<int>(p))] = scf::render_choice_set(
          scf::ChoiceSet(result.assignment[p], sc.m), names);
    j["assignment"] = assign;
  }
  std::cout << j.dump() << "\n";

  if (result.status == scf::SolveStatus::BudgetExceeded) return kExitBudget;
  if (!sc.expect) return kExitPass;
  const bool want_unsat = sc.expect->kind == scf::Expectation::Unsatisfiable ||
                          sc.expect->kind == scf::Expectation::Contradiction;
  const bool is_unsat = result.status == scf::SolveStatus::Unsatisfiable;
  return want_unsat == is_unsat ? kExitPass : kExitFail;
}

int cmd_list() {
  std::cout << "rules:\n";
  for (const auto& r : scf::rule_registry()) {
    std::cout << "  " << r.name;
    if (r.requires_strict) std::cout << "  [strict profiles only]";
    if (r.exact_m) std::cout << "  [m = " << r.exact_m << " only]";
    std::cout << "  - " << r.summary << "\n";
  }
  std::cout << "axioms:\n";
  for (const auto& a : scf::axiom_registry()) std::cout << "  " << a.name << "\n";
  std::cout << "scenarios:\n";
  for (const auto& s : scf::scenario_names()) std::cout << "  " << s << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i) scf::command_echo() += " ";
    scf::command_echo() += argv[i];
  }

  CLI::App app{"verification toolkit for set-valued social choice functions"};
  app.require_subcommand(1);

  std::string rule_name, axiom_name, path, which, scenario, trace_path;
  scf::DomainSpec spec;
  int jobs = 1;
  bool timing = false, dump = false;
  double budget_ms = 30.0 * 60.0 * 1000.0;

  auto* eval = app.add_subcommand("eval", "evaluate a rule on a profile file");
  eval->add_option("rule", rule_name)->required();
  eval->add_option("profile", path)->required();

  auto* matrix =
      app.add_subcommand("matrix", "print a derived matrix of a profile file");
  matrix->add_option("which", which)->required();
  matrix->add_option("profile", path)->required();

  auto* check = app.add_subcommand("check", "exhaustively check an axiom");
  check->add_option("rule", rule_name)->required();
  check->add_option("axiom", axiom_name)->required();
  check->add_option("--m", spec.m)->required();
  check->add_option("--n", spec.n)->required();
  check->add_flag("--strict", spec.strict_only);
  check->add_flag("--exclude-indifferent", spec.exclude_indifferent);
  check->add_option("--jobs", jobs);
  check->add_flag("--timing", timing);

  auto* noms = app.add_subcommand("nominators", "list the rule's nominators");
  noms->add_option("rule", rule_name)->required();
  noms->add_option("--m", spec.m)->required();
  noms->add_option("--n", spec.n)->required();
  noms->add_flag("--strict", spec.strict_only);
  noms->add_flag("--exclude-indifferent", spec.exclude_indifferent);

  auto* verify =
      app.add_subcommand("verify", "replay a proof scenario by propagation");
  verify->add_option("scenario", scenario)->required();
  verify->add_option("--trace", trace_path);
  verify->add_flag("--dump", dump);

  auto* solve = app.add_subcommand(
      "solve", "backtracking search over a scenario's candidate space");
  solve->add_option("scenario", scenario)->required();
  solve->add_option("--budget-ms", budget_ms);

  app.add_subcommand("list", "list rules, axioms, and scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitPass;
  }

  try {
    if (app.got_subcommand("eval")) return cmd_eval(rule_name, path);
    if (app.got_subcommand("matrix")) return cmd_matrix(which, path);
    if (app.got_subcommand("check"))
      return cmd_check(rule_name, axiom_name, spec, jobs, timing);
    if (app.got_subcommand("nominators")) return cmd_nominators(rule_name, spec);
    if (app.got_subcommand("verify"))
      return cmd_verify(scenario, trace_path, dump);
    if (app.got_subcommand("solve")) return cmd_solve(scenario, budget_ms);
    if (app.got_subcommand("list")) return cmd_list();
  } catch (const scf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const scf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const scf::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
