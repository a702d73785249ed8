#include "scf/report.hpp"

namespace scf {

std::string& command_echo() {
  static std::string echo;
  return echo;
}

nlohmann::ordered_json report_header(const std::string& command,
                                     const DomainSpec& spec, int jobs) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  if (!command_echo().empty()) j["argv"] = command_echo();
  j["m"] = spec.m;
  j["n"] = spec.n;
  j["domain"] = spec.strict_only ? "strict" : "weak";
  j["exclude_indifferent"] = spec.exclude_indifferent;
  j["jobs"] = jobs;
  return j;
}

nlohmann::ordered_json witness_json(const Witness& witness, int m) {
  const AltNames names = AltNames::letters(m);
  nlohmann::ordered_json j;
  j["kind"] = witness.kind;
  std::string alts;
  for (int x = 0; x < m; ++x) {
    if (x) alts += " ";
    alts += names.name(x);
  }
  j["alternatives"] = alts;
  if (!witness.profiles.empty()) {
    nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
    for (const auto& p : witness.profiles)
      profiles.push_back(render_profile_lines(p, names));
    j["profiles"] = profiles;
  }
  if (witness.voter >= 0) j["voter"] = witness.voter;
  if (!witness.sets.empty()) {
    nlohmann::ordered_json sets = nlohmann::ordered_json::array();
    for (const auto& s : witness.sets)
      sets.push_back(render_choice_set(s, names));
    j["sets"] = sets;
  }
  if (witness.alternative >= 0)
    j["alternative"] = names.name(witness.alternative);
  if (witness.alternative2 >= 0)
    j["dominator"] = names.name(witness.alternative2);
  return j;
}

nlohmann::ordered_json check_record(const std::string& command,
                                    const std::string& rule,
                                    const std::string& axiom,
                                    const DomainSpec& spec, int jobs,
                                    const CheckResult& result,
                                    bool revalidated, bool timing) {
  nlohmann::ordered_json j = report_header(command, spec, jobs);
  j["rule"] = rule;
  j["axiom"] = axiom;
  j["verdict"] = result.pass() ? "pass" : "fail";
  j["profiles_scanned"] = result.profiles_scanned;
  if (timing) j["elapsed_ms"] = result.elapsed_ms;
  if (result.witness) {
    j["witness"] = witness_json(*result.witness, spec.m);
    j["witness_revalidated"] = revalidated;
  }
  return j;
}

}  // namespace scf
