#include <fstream>
#include <sstream>

#include "json.hpp"
#include "scf/replay.hpp"
#include "scf/text.hpp"

// Scenario text format:
//   name: thm4-alt-odd
//   m: 3
//   n: 5
//   axioms: sp-arcs condorcet-loser absolute-majority-seed
//   expect: contradiction            (or: unsat / sat / nothing)
//
//   profile R1
//   a > b > c
//   ...                              (n voter lines)
//
//   seed R1 = {a} | {a, b}
//   expect R4 = {c}
//   arc C1 -> C2 : c > a~b          (explicit manipulation arc)
// Blank lines and "#" comments are ignored.

namespace scf {
namespace {

std::string trimmed(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

uint64_t parse_set_list(const std::string& text, const AltNames& names,
                        int lineno) {
  uint64_t allowed = 0;
  std::string part;
  std::istringstream ss(text);
  while (std::getline(ss, part, '|')) {
    part = trimmed(part);
    if (part.empty()) continue;
    try {
      allowed |= uint64_t{1} << parse_choice_set(part, names).mask();
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }
  if (!allowed) throw ParseError("empty candidate list", lineno, 1);
  return allowed;
}

std::string render_set_list(uint64_t allowed, int m) {
  const AltNames names = AltNames::letters(m);
  std::string out;
  for (uint32_t s = 1; s < (1u << m); ++s) {
    if (!((allowed >> s) & 1)) continue;
    if (!out.empty()) out += " | ";
    out += render_choice_set(ChoiceSet(s, m), names);
  }
  return out;
}

}  // namespace

std::string dump_scenario(const Scenario& sc) {
  const AltNames names = AltNames::letters(sc.m);
  std::ostringstream out;
  out << "name: " << sc.name << "\n";
  if (!sc.note.empty()) out << "# " << sc.note << "\n";
  out << "m: " << sc.m << "\n";
  out << "n: " << sc.n << "\n";
  out << "axioms:";
  for (const auto& e : {kStrategyproofArcs, kParetoPrune, kWeakParetoPrune,
                        kCondorcetLoserPrune, kRankEquality, kSupportEquality,
                        kMajorityEquality, kPairwiseEquality,
                        kNearUnanimitySeed, kAbsoluteMajoritySeed,
                        kNonImpositionSeed, kAnonymityLink})
    if (sc.axioms & e) out << " " << deduction_name(e);
  out << "\n";
  if (sc.expect) {
    if (sc.expect->kind == Expectation::Contradiction)
      out << "expect: contradiction\n";
    else if (sc.expect->kind == Expectation::Unsatisfiable)
      out << "expect: unsat\n";
    else if (sc.expect->kind == Expectation::Satisfiable)
      out << "expect: sat\n";
  }
  for (size_t p = 0; p < sc.profiles.size(); ++p) {
    out << "\nprofile " << sc.labels[p] << "\n";
    for (const auto& v : sc.profiles[p].voters())
      out << render_order(v, names) << "\n";
  }
  out << "\n";
  for (const auto& seed : sc.seeds)
    out << "seed " << sc.labels[seed.profile] << " = "
        << render_set_list(seed.allowed, sc.m) << "\n";
  if (sc.expect && sc.expect->kind == Expectation::Forced)
    for (const auto& [p, allowed] : sc.expect->forced)
      out << "expect " << sc.labels[p] << " = "
          << render_set_list(allowed, sc.m) << "\n";
  for (const auto& arc : sc.explicit_arcs)
    out << "arc " << sc.labels[arc.from] << " -> " << sc.labels[arc.to]
        << " : " << render_order(arc.truth, names) << "\n";
  return out.str();
}

Scenario parse_scenario_text(std::string_view text) {
  Scenario sc;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  struct Pending {
    enum Kind { Seed, Expect, Arc } kind;
    std::string body;
    int lineno;
  };
  std::vector<Pending> pending;
  std::string pending_profile;  // label currently collecting voter lines
  std::vector<std::string> rows;
  bool have_m = false, have_n = false;

  auto flush_profile = [&]() {
    if (pending_profile.empty()) return;
    if (static_cast<int>(rows.size()) != sc.n)
      throw ParseError("profile '" + pending_profile + "' has " +
                           std::to_string(rows.size()) + " voter lines, expected " +
                           std::to_string(sc.n),
                       lineno, 1);
    sc.add_profile(pending_profile, prof(sc.m, rows));
    pending_profile.clear();
    rows.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;

    if (t.rfind("name:", 0) == 0) {
      sc.name = trimmed(t.substr(5));
      continue;
    }
    if (t.rfind("m:", 0) == 0) {
      sc.m = std::stoi(t.substr(2));
      have_m = true;
      continue;
    }
    if (t.rfind("n:", 0) == 0) {
      sc.n = std::stoi(t.substr(2));
      have_n = true;
      continue;
    }
    if (t.rfind("axioms:", 0) == 0) {
      std::istringstream as(t.substr(7));
      std::string tag;
      while (as >> tag) {
        const auto d = deduction_from_name(tag);
        if (!d) throw ParseError("unknown axiom tag '" + tag + "'", lineno, 1);
        sc.axioms |= *d;
      }
      continue;
    }
    if (t.rfind("expect:", 0) == 0) {
      const std::string what = trimmed(t.substr(7));
      if (what == "contradiction")
        sc.expect = Expectation{Expectation::Contradiction, {}};
      else if (what == "unsat")
        sc.expect = Expectation{Expectation::Unsatisfiable, {}};
      else if (what == "sat")
        sc.expect = Expectation{Expectation::Satisfiable, {}};
      else
        throw ParseError("unknown expectation '" + what + "'", lineno, 1);
      continue;
    }
    if (t.rfind("profile ", 0) == 0) {
      if (!have_m || !have_n)
        throw ParseError("m and n must precede profiles", lineno, 1);
      flush_profile();
      pending_profile = trimmed(t.substr(8));
      if (pending_profile.empty())
        throw ParseError("profile needs a label", lineno, 1);
      continue;
    }
    if (t.rfind("seed ", 0) == 0) {
      flush_profile();
      pending.push_back({Pending::Seed, t.substr(5), lineno});
      continue;
    }
    if (t.rfind("expect ", 0) == 0) {
      flush_profile();
      pending.push_back({Pending::Expect, t.substr(7), lineno});
      continue;
    }
    if (t.rfind("arc ", 0) == 0) {
      flush_profile();
      pending.push_back({Pending::Arc, t.substr(4), lineno});
      continue;
    }
    if (!pending_profile.empty()) {
      rows.push_back(t);
      continue;
    }
    throw ParseError("unexpected line '" + t + "'", lineno, 1);
  }
  flush_profile();
  if (!have_m || !have_n) throw ParseError("missing m/n header", lineno, 1);

  const AltNames names = AltNames::letters(sc.m);
  for (const auto& p : pending) {
    if (p.kind == Pending::Arc) {
      // "<from> -> <to> : <order>"
      const auto arrow = p.body.find("->");
      const auto colon = p.body.find(':');
      if (arrow == std::string::npos || colon == std::string::npos ||
          colon < arrow)
        throw ParseError("malformed arc line", p.lineno, 1);
      const std::string from = trimmed(p.body.substr(0, arrow));
      const std::string to = trimmed(p.body.substr(arrow + 2, colon - arrow - 2));
      const std::string order_text = trimmed(p.body.substr(colon + 1));
      sc.explicit_arcs.push_back(ExplicitArc{sc.profile_index(from),
                                             sc.profile_index(to),
                                             parse_order(order_text, names)});
      continue;
    }
    const auto eq = p.body.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected '='", p.lineno, 1);
    const std::string label = trimmed(p.body.substr(0, eq));
    const uint64_t allowed =
        parse_set_list(p.body.substr(eq + 1), names, p.lineno);
    if (p.kind == Pending::Seed) {
      sc.seeds.push_back(Seed{sc.profile_index(label), allowed});
    } else {
      if (!sc.expect) sc.expect = Expectation{Expectation::Forced, {}};
      if (sc.expect->kind != Expectation::Forced)
        throw ParseError("per-profile expectations clash with the header",
                         p.lineno, 1);
      sc.expect->forced.emplace_back(sc.profile_index(label), allowed);
    }
  }
  return sc;
}

Scenario load_scenario(const std::string& name_or_path) {
  for (const auto& name : scenario_names())
    if (name == name_or_path) return scenario_library(name);
  std::ifstream in(name_or_path);
  if (!in)
    throw DomainError("no library scenario or readable file named '" +
                      name_or_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

std::string trace_to_jsonl(const Scenario& sc, const DeductionTrace& trace) {
  const AltNames names = AltNames::letters(sc.m);
  std::ostringstream out;
  for (size_t i = 0; i < trace.size(); ++i) {
    const TraceRecord& rec = trace[i];
    nlohmann::ordered_json j;
    j["step"] = i;
    j["rule"] = deduction_name(rec.rule);
    j["profile"] = sc.labels[rec.profile];
    nlohmann::ordered_json removed = nlohmann::ordered_json::array();
    for (uint32_t s = 1; s < (1u << sc.m); ++s)
      if ((rec.removed >> s) & 1)
        removed.push_back(render_choice_set(ChoiceSet(s, sc.m), names));
    j["removed"] = removed;
    if (rec.partner >= 0) j["partner"] = sc.labels[rec.partner];
    if (rec.voter >= 0) j["voter"] = rec.voter;
    if (rec.alternative >= 0) j["alternative"] = names.name(rec.alternative);
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace scf
