#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>

#include "scf/replay.hpp"
#include "scf/rules.hpp"
#include "scf/text.hpp"

using namespace scf;

namespace {

uint64_t set_bit(std::initializer_list<int> alts, int m) {
  return uint64_t{1} << ChoiceSet::of(alts, m).mask();
}

Scenario two_profiles(int m, std::initializer_list<std::string_view> p,
                      std::initializer_list<std::string_view> q,
                      uint32_t axioms) {
  Scenario sc;
  sc.name = "fixture";
  sc.m = m;
  sc.n = static_cast<int>(p.size());
  sc.axioms = axioms;
  sc.add_profile("P", prof(m, p));
  sc.add_profile("Q", prof(m, q));
  return sc;
}

}  // namespace

TEST_CASE("init candidates") {
  Scenario sc;
  sc.name = "init";
  sc.m = 3;
  sc.n = 2;
  sc.add_profile("P", prof(3, {"a > b > c", "a > b > c"}));
  CandidateMap cm = init_candidates(sc);
  CHECK(std::popcount(cm.cand[0]) == 7);  // all 2^3 - 1 sets

  sc.seeds.push_back(Seed{0, set_bit({0, 3 - 1}, 3)});  // {a, c}
  cm = init_candidates(sc);
  CHECK(cm.cand[0] == set_bit({0, 2}, 3));

  // Contradictory double seed empties the profile immediately.
  sc.seeds.push_back(Seed{0, set_bit({1}, 3)});
  cm = init_candidates(sc);
  CHECK(cm.contradiction());
}

TEST_CASE("pareto pruning") {
  Scenario sc;
  sc.m = 4;
  sc.n = 3;
  sc.axioms = kParetoPrune;
  // a Pareto-dominates b: every set containing b dies.
  sc.add_profile("R1", prof(4, {"a~b > c~d", "c~d > a~b", "a > b~c~d"}));
  // No dominance at all: untouched.
  sc.add_profile("F", prof(4, {"a > b > c > d", "d > c > b > a",
                               "b > a > d > c"}));
  CandidateMap cm = init_candidates(sc);
  DeductionTrace trace;
  prune_pareto(sc, cm, &trace);
  for (uint32_t s = 1; s < 16; ++s)
    CHECK(((cm.cand[0] >> s) & 1) == ((s & 0b0010) == 0 ? 1 : 0));
  CHECK(std::popcount(cm.cand[1]) == 15);

  // Unanimous strict profile: only the top singleton survives.
  Scenario su;
  su.m = 3;
  su.n = 2;
  su.axioms = kParetoPrune;
  su.add_profile("U", prof(3, {"a > b > c", "a > b > c"}));
  CandidateMap cu = init_candidates(su);
  prune_pareto(su, cu, nullptr);
  CHECK(cu.cand[0] == set_bit({0}, 3));
}

TEST_CASE("weak pareto pruning") {
  Scenario sc;
  sc.m = 3;
  sc.n = 2;
  sc.axioms = kWeakParetoPrune;
  // c is strictly below a for both voters; b is not.
  sc.add_profile("R", prof(3, {"a > b~c", "a~b > c"}));
  CandidateMap cm = init_candidates(sc);
  prune_weak_pareto(sc, cm, nullptr);
  for (uint32_t s = 1; s < 8; ++s)
    CHECK(((cm.cand[0] >> s) & 1) == ((s & 0b100) == 0 ? 1 : 0));
}

TEST_CASE("condorcet loser pruning") {
  Scenario sc;
  sc.m = 3;
  sc.n = 3;
  sc.axioms = kCondorcetLoserPrune;
  sc.add_profile("U", prof(3, {"a > b > c", "a > b > c", "a > b > c"}));
  sc.add_profile("C", prof(3, {"a > b > c", "b > c > a", "c > a > b"}));
  CandidateMap cm = init_candidates(sc);
  prune_condorcet_loser(sc, cm, nullptr);
  for (uint32_t s = 1; s < 8; ++s)
    CHECK(((cm.cand[0] >> s) & 1) == ((s & 0b100) == 0 ? 1 : 0));
  CHECK(std::popcount(cm.cand[1]) == 7);  // no loser in a cycle

  Scenario tie;
  tie.m = 2;
  tie.n = 2;
  tie.axioms = kCondorcetLoserPrune;
  tie.add_profile("T", prof(2, {"a > b", "b > a"}));
  CandidateMap ct = init_candidates(tie);
  prune_condorcet_loser(tie, ct, nullptr);
  CHECK(std::popcount(ct.cand[0]) == 3);

  // The indifference-widened profile from the Condorcet-loser theorem's
  // basis still has c as its loser.
  Scenario r2;
  r2.m = 3;
  r2.n = 4;
  r2.axioms = kCondorcetLoserPrune;
  r2.add_profile("R2", prof(3, {"a~c > b", "a > b > c", "a > b > c",
                                "b > c > a"}));
  CandidateMap c2 = init_candidates(r2);
  prune_condorcet_loser(r2, c2, nullptr);
  for (uint32_t s = 1; s < 8; ++s)
    CHECK(((c2.cand[0] >> s) & 1) == ((s & 0b100) == 0 ? 1 : 0));
}

TEST_CASE("hypothesis seeds") {
  Scenario sc;
  sc.m = 3;
  sc.n = 3;
  sc.axioms = kNearUnanimitySeed;
  sc.add_profile("NU", prof(3, {"a > b > c", "a > c > b", "c > b > a"}));
  sc.add_profile("no", prof(3, {"a > b > c", "b > c > a", "c > b > a"}));
  CandidateMap cm = init_candidates(sc);
  apply_hypothesis_seeds(sc, cm, nullptr);
  CHECK(cm.cand[0] == set_bit({0}, 3));
  CHECK(std::popcount(cm.cand[1]) == 7);

  Scenario maj;
  maj.m = 3;
  maj.n = 4;
  maj.axioms = kAbsoluteMajoritySeed;
  maj.add_profile("M", prof(3, {"a > c > b", "a > b > c", "a > b > c",
                                "b > c > a"}));
  // Exactly half is not enough.
  maj.add_profile("H", prof(3, {"a > c > b", "a > b > c", "b > a > c",
                                "b > c > a"}));
  CandidateMap cmm = init_candidates(maj);
  apply_hypothesis_seeds(maj, cmm, nullptr);
  CHECK(cmm.cand[0] == set_bit({0}, 3));
  CHECK(std::popcount(cmm.cand[1]) == 7);

  // Two of three voters clear the more-than-half bar.
  Scenario odd;
  odd.m = 3;
  odd.n = 3;
  odd.axioms = kAbsoluteMajoritySeed;
  odd.add_profile("O", prof(3, {"c > a > b", "c > b > a", "a > b > c"}));
  CandidateMap cmo = init_candidates(odd);
  apply_hypothesis_seeds(odd, cmo, nullptr);
  CHECK(cmo.cand[0] == set_bit({2}, 3));

  Scenario cw;
  cw.m = 3;
  cw.n = 3;
  cw.axioms = kNonImpositionSeed;
  cw.add_profile("W", prof(3, {"c > b > a", "a > b > c", "a > c > b"}));
  cw.add_profile("cycle", prof(3, {"a > b > c", "b > c > a", "c > a > b"}));
  CandidateMap cmw = init_candidates(cw);
  apply_hypothesis_seeds(cw, cmw, nullptr);
  CHECK(cmw.cand[0] == set_bit({0}, 3));
  CHECK(std::popcount(cmw.cand[1]) == 7);
}

TEST_CASE("arcs: forced singleton pushes through a deviation") {
  // Voter 2's order in P bottom-ranks a uniquely; with f(P) = {a}, every
  // other outcome at the deviation Q would be a manipulation.
  Scenario sc = two_profiles(3, {"a > b > c", "c > b > a"},
                             {"a > b > c", "b > c > a"}, kStrategyproofArcs);
  sc.seeds.push_back(Seed{0, set_bit({0}, 3)});
  CandidateMap cm = init_candidates(sc);
  arc_strategyproof(sc, cm, nullptr);
  CHECK(cm.cand[1] == set_bit({0}, 3));
}

TEST_CASE("arcs: unconstrained endpoints stay unconstrained") {
  Scenario sc = two_profiles(3, {"a > b > c", "a > b > c"},
                             {"a > b > c", "b > a > c"}, kStrategyproofArcs);
  CandidateMap cm = init_candidates(sc);
  const bool changed = arc_strategyproof(sc, cm, nullptr);
  CHECK(!changed);
  CHECK(std::popcount(cm.cand[0]) == 7);
  CHECK(std::popcount(cm.cand[1]) == 7);
}

TEST_CASE("arcs: the induction step restriction to {a, c}") {
  // f(K1.2) = {a} forces the deviation's candidates into subsets of {a, c}.
  Scenario sc = two_profiles(
      4, {"b~d > c > a", "a > b > c > d", "a > b > c > d"},
      {"b~d > c > a", "a~c > b > d", "a > b > c > d"}, kStrategyproofArcs);
  sc.seeds.push_back(Seed{0, set_bit({0}, 4)});
  CandidateMap cm = init_candidates(sc);
  arc_strategyproof(sc, cm, nullptr);
  CHECK(cm.cand[1] ==
        (set_bit({0}, 4) | set_bit({2}, 4) | set_bit({0, 2}, 4)));
}

TEST_CASE("equality links intersect signature-equal profiles") {
  Scenario sc;
  sc.m = 4;
  sc.n = 3;
  sc.axioms = kRankEquality;
  sc.add_profile("A1", prof(4, {"a~b > c~d", "c~d > a~b", "a > b~c~d"}));
  sc.add_profile("A2", prof(4, {"a~c > b~d", "b~d > a~c", "a > b~c~d"}));
  sc.seeds.push_back(Seed{0, set_bit({0}, 4) | set_bit({1}, 4)});
  sc.seeds.push_back(Seed{1, set_bit({0}, 4) | set_bit({2}, 4)});
  CandidateMap cm = init_candidates(sc);
  link_equalities(sc, cm, nullptr);
  CHECK(cm.cand[0] == set_bit({0}, 4));
  CHECK(cm.cand[1] == set_bit({0}, 4));

  // Support equality across the preference swap of the nominator theorem.
  Scenario sw;
  sw.m = 3;
  sw.n = 3;
  sw.axioms = kSupportEquality;
  sw.add_profile("S2", prof(3, {"a > c > b", "c > b > a", "a~b > c"}));
  sw.add_profile("S3", prof(3, {"a > c > b", "c > a~b", "b > a > c"}));
  sw.seeds.push_back(Seed{0, set_bit({0}, 3) | set_bit({1}, 3)});
  CandidateMap cw = init_candidates(sw);
  link_equalities(sw, cw, nullptr);
  CHECK(cw.cand[1] == (set_bit({0}, 3) | set_bit({1}, 3)));

  // Linking identical profiles is idempotent.
  Scenario same;
  same.m = 3;
  same.n = 2;
  same.axioms = kSupportEquality;
  same.add_profile("X", prof(3, {"a > b > c", "b > a > c"}));
  same.add_profile("Y", prof(3, {"a > b > c", "b > a > c"}));
  CandidateMap cs = init_candidates(same);
  link_equalities(same, cs, nullptr);
  CHECK(!link_equalities(same, cs, nullptr));
  CHECK(std::popcount(cs.cand[0]) == 7);
}

TEST_CASE("anonymity links intersect voter permutations") {
  Scenario sc;
  sc.m = 3;
  sc.n = 2;
  sc.axioms = kAnonymityLink;
  sc.add_profile("P", prof(3, {"a > b > c", "c > b > a"}));
  sc.add_profile("Q", prof(3, {"c > b > a", "a > b > c"}));
  sc.seeds.push_back(Seed{0, set_bit({0}, 3)});
  CandidateMap cm = init_candidates(sc);
  link_equalities(sc, cm, nullptr);
  CHECK(cm.cand[1] == set_bit({0}, 3));
}

TEST_CASE("propagate terminates with a bounded removal volume") {
  const Scenario sc = scenario_library("thm4-base");
  const PropagateResult res = propagate(sc);
  CHECK(res.contradiction());
  uint64_t removed_bits = 0;
  for (const auto& rec : res.trace) removed_bits += std::popcount(rec.removed);
  CHECK(removed_bits <= sc.profiles.size() * 7);
}

TEST_CASE("propagate on an axiom-free scenario does nothing") {
  Scenario sc;
  sc.m = 3;
  sc.n = 2;
  sc.add_profile("P", prof(3, {"a > b > c", "b > a > c"}));
  const PropagateResult res = propagate(sc);
  CHECK(!res.contradiction());
  CHECK(res.trace.empty());
  CHECK(std::popcount(res.map.cand[0]) == 7);
}

TEST_CASE("library scenarios reach their expected terminal states") {
  for (const auto& name : scenario_names()) {
    if (name == "pairwise-corollary-m3n3") continue;  // solve-only scenario
    const Scenario sc = scenario_library(name);
    REQUIRE(sc.expect.has_value());
    const PropagateResult res = propagate(sc);
    if (sc.expect->kind == Expectation::Contradiction) {
      CHECK(res.contradiction());
    } else {
      CHECK(!res.contradiction());
      for (const auto& [p, allowed] : sc.expect->forced)
        CHECK(res.map.cand[p] == allowed);
    }
    std::string why;
    CHECK_MESSAGE(audit_trace(sc, res.trace, &why), name, ": ", why);
  }
}

TEST_CASE("trace replay is deterministic") {
  const Scenario sc = scenario_library("thm2-step");
  const PropagateResult a = propagate(sc);
  const PropagateResult b = propagate(sc);
  REQUIRE(a.trace.size() == b.trace.size());
  for (size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].rule == b.trace[i].rule);
    CHECK(a.trace[i].profile == b.trace[i].profile);
    CHECK(a.trace[i].removed == b.trace[i].removed);
  }
  CHECK(trace_to_jsonl(sc, a.trace) == trace_to_jsonl(sc, b.trace));
}

TEST_CASE("audit rejects a corrupted trace") {
  const Scenario sc = scenario_library("lemma1-example");
  PropagateResult res = propagate(sc);
  REQUIRE(!res.trace.empty());
  // Claim an extra removal that no rule justifies.
  DeductionTrace bad = res.trace;
  bad.push_back(TraceRecord{kParetoPrune, 0, set_bit({0, 3}, 4), -1, -1, -1});
  std::string why;
  CHECK(!audit_trace(sc, bad, &why));
  CHECK(!why.empty());
}

TEST_CASE("real-rule outputs survive propagation under axioms they satisfy") {
  struct Case {
    const char* scenario;
    uint32_t axioms;
    const char* rule;
  };
  // Each rule satisfies the listed deduction rules on the scenario's domain
  // (strategyproofness, Pareto/weak-Pareto-optimality, basedness, or the
  // Condorcet loser property), so no deduction may ever remove its output.
  const Case cases[] = {
      {"thm2-step", kStrategyproofArcs | kParetoPrune | kSupportEquality,
       "pareto"},
      {"thm4-base", kStrategyproofArcs | kWeakParetoPrune, "omninomination"},
      {"thm4-base", kStrategyproofArcs | kParetoPrune, "top-pareto"},
      {"thm4-alt-odd", kStrategyproofArcs | kCondorcetLoserPrune,
       "all-but-condorcet-loser"},
      {"thmC1",
       kStrategyproofArcs | kSupportEquality | kMajorityEquality |
           kPairwiseEquality,
       "constant-a"},
  };
  for (const Case& test : cases) {
    Scenario sc = scenario_library(test.scenario);
    sc.axioms = test.axioms;
    sc.seeds.clear();
    sc.expect.reset();
    const PropagateResult res = propagate(sc);
    CHECK(!res.contradiction());
    const auto& rule = find_rule(test.rule);
    for (size_t p = 0; p < sc.profiles.size(); ++p) {
      const uint32_t out = rule.evaluate(sc.profiles[p]).mask();
      CHECK_MESSAGE(((res.map.cand[p] >> out) & 1) == 1, test.scenario, "/",
                    test.rule, " pruned at ", sc.label(p));
    }
  }
}

TEST_CASE("intermediate forcings match the proof text at n=4") {
  // Without the mirrored chain and bridges, one induction step settles at
  // f(S5) = f(S7) = f(S9) = {b}, exactly the narrated forcings.
  Scenario sc;
  sc.m = 3;
  sc.n = 4;
  sc.axioms = kStrategyproofArcs | kParetoPrune | kSupportEquality |
              kNearUnanimitySeed;
  const Scenario full = scenario_library("thm2-step-n4");
  for (const char* label : {"S1", "S2", "S3", "S4", "S4a", "S4b", "S5", "S6",
                            "S7", "S7a", "S8", "S9"}) {
    const int idx = full.profile_index(label);
    sc.add_profile(label, full.profiles[idx]);
  }
  const PropagateResult res = propagate(sc);
  REQUIRE(!res.contradiction());
  CHECK(res.map.cand[sc.profile_index("S1")] == set_bit({0}, 3));
  CHECK(res.map.cand[sc.profile_index("S5")] == set_bit({1}, 3));
  CHECK(res.map.cand[sc.profile_index("S7")] == set_bit({1}, 3));
  CHECK(res.map.cand[sc.profile_index("S9")] == set_bit({1}, 3));
}

TEST_CASE("at n=3 the chain collides with near unanimity even earlier") {
  // Two of the three voters uniquely top-rank c from S7 onwards, so the
  // seed forces {c} against the chain's {b}: the contradiction surfaces
  // before the mirrored chain is even consulted.
  Scenario sc;
  sc.m = 3;
  sc.n = 3;
  sc.axioms = kStrategyproofArcs | kParetoPrune | kSupportEquality |
              kNearUnanimitySeed;
  const Scenario full = scenario_library("thm2-step");
  for (const char* label : {"S1", "S2", "S3", "S5", "S6", "S7", "S8", "S9"}) {
    const int idx = full.profile_index(label);
    sc.add_profile(label, full.profiles[idx]);
  }
  const PropagateResult res = propagate(sc);
  CHECK(res.contradiction());
  std::string why;
  CHECK(audit_trace(sc, res.trace, &why));
}

TEST_CASE("the boundary scenario's rank-link block forces {a}") {
  // The three m=5 profiles alone (no near-unanimity clash) pin every
  // profile to {a}, exhibiting the non-nominator premise.
  Scenario sc;
  sc.m = 5;
  sc.n = 2;
  sc.axioms = kParetoPrune | kRankEquality;
  const Scenario full = scenario_library("thm1-boundaries");
  for (const char* label : {"R1", "R2", "R3"})
    sc.add_profile(label, full.profiles[full.profile_index(label)]);
  const PropagateResult res = propagate(sc);
  REQUIRE(!res.contradiction());
  for (int p = 0; p < 3; ++p) CHECK(res.map.cand[p] == set_bit({0}, 5));
}

TEST_CASE("discovered arcs cover the transcribed deviations") {
  const Scenario sc = scenario_library("lemma1-example");
  const auto arcs = discover_arcs(sc);
  auto has_arc = [&](const char* from, const char* to) {
    const int p = sc.profile_index(from), q = sc.profile_index(to);
    return std::any_of(arcs.begin(), arcs.end(), [&](const auto& t) {
      auto [a, b, v] = t;
      return (a == std::min(p, q)) && (b == std::max(p, q));
    });
  };
  CHECK(has_arc("R0", "R0a"));
  CHECK(has_arc("R0a", "R1"));
  CHECK(has_arc("R1", "R2"));
  CHECK(has_arc("R3", "R4"));
  CHECK(has_arc("R6a", "R7"));
}

TEST_CASE("solve: satisfiable toy scenarios") {
  Scenario sc;
  sc.m = 3;
  sc.n = 2;
  sc.axioms = kParetoPrune;
  sc.add_profile("U", prof(3, {"a > b > c", "a > b > c"}));
  const SolveResult res = solve(sc);
  CHECK(res.status == SolveStatus::Satisfiable);
  REQUIRE(res.assignment.size() == 1);
  CHECK(res.assignment[0] == ChoiceSet::of({0}, 3).mask());

  Scenario free;
  free.m = 3;
  free.n = 2;
  free.add_profile("P", prof(3, {"a > b > c", "c > b > a"}));
  CHECK(solve(free).status == SolveStatus::Satisfiable);
}

TEST_CASE("solve: budget exhaustion is reported distinctly") {
  Scenario sc = build_pairwise_corollary_scenario();
  SolveBudget budget;
  budget.ms = 0.0;
  CHECK(solve(sc, budget).status == SolveStatus::BudgetExceeded);
}

TEST_CASE("solve: the pairwise corollary is unsatisfiable") {
  const Scenario sc = build_pairwise_corollary_scenario();
  CHECK(solve(sc).status == SolveStatus::Unsatisfiable);
}

TEST_CASE("solve: dropping pareto makes the collapsed scenario satisfiable") {
  // Sanity check on the encoding: without the Pareto seeds the constant
  // assignment is admissible, so unsatisfiability above really comes from
  // the axioms, not from the collapse.
  Scenario sc = build_pairwise_corollary_scenario();
  sc.seeds.clear();
  const SolveResult res = solve(sc);
  CHECK(res.status == SolveStatus::Satisfiable);
}

TEST_CASE("scenario profile labels resolve") {
  const Scenario sc = scenario_library("thm1");
  CHECK(sc.profile_index("A1") == 0);
  CHECK_THROWS_AS(sc.profile_index("nope"), DomainError);
}
