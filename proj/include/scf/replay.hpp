#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scf/core.hpp"
#include "scf/enumeration.hpp"
#include "scf/text.hpp"

namespace scf {

// Deduction rules a scenario may activate. The seed rules are theorems under
// the scenario's hypotheses (near unanimity from the no-nominator lemma,
// absolute majority from the Condorcet-loser lemma, Condorcet-winner forcing
// from non-imposition of majority-based rules); each scenario documents which
// hypothesis licenses which seed.
enum Deduction : uint32_t {
  kStrategyproofArcs = 1u << 0,
  kParetoPrune = 1u << 1,
  kWeakParetoPrune = 1u << 2,
  kCondorcetLoserPrune = 1u << 3,
  kRankEquality = 1u << 4,
  kSupportEquality = 1u << 5,
  kMajorityEquality = 1u << 6,
  kPairwiseEquality = 1u << 7,
  kNearUnanimitySeed = 1u << 8,
  kAbsoluteMajoritySeed = 1u << 9,
  kNonImpositionSeed = 1u << 10,
  kAnonymityLink = 1u << 11,
  kExplicitSeed = 1u << 12,  // trace tag only; scenario seeds are always applied
};

const char* deduction_name(Deduction d);
std::optional<Deduction> deduction_from_name(std::string_view name);

// A candidate restriction asserted by the scenario: the profile's candidates
// are intersected with `allowed` (a bitmask over choice-set masks).
struct Seed {
  int profile = 0;
  uint64_t allowed = 0;
};

// A directed manipulation constraint carried explicitly (used by the
// margin-collapsed solve scenarios): f(to) must not be Kelly-preferred to
// f(from) under `truth`, the deviating voter's order at `from`.
struct ExplicitArc {
  int from = 0;
  int to = 0;
  WeakOrder truth;
};

struct Expectation {
  enum Kind { Contradiction, Forced, Unsatisfiable, Satisfiable } kind;
  // For Forced: exact final candidate bitmask per listed profile.
  std::vector<std::pair<int, uint64_t>> forced;
};

struct Scenario {
  std::string name;
  int m = 0;
  int n = 0;
  std::vector<Profile> profiles;
  std::vector<std::string> labels;
  uint32_t axioms = 0;
  std::vector<Seed> seeds;
  std::vector<ExplicitArc> explicit_arcs;
  std::optional<Expectation> expect;
  std::string note;

  int profile_index(const std::string& label) const;
  const std::string& label(int idx) const { return labels[idx]; }
  void add_profile(std::string label, Profile p);
  uint32_t num_sets() const { return (1u << m) - 1; }
};

// Per profile: bitmask over choice-set masks (bit k = the set with member
// mask k is still admissible). Candidates only ever shrink.
struct CandidateMap {
  int m = 0;
  std::vector<uint64_t> cand;
  bool contradiction() const;
  int first_empty() const;  // -1 when none
  uint64_t full_mask() const { return ((uint64_t{1} << (1u << m)) - 1) & ~uint64_t{1}; }
};

struct TraceRecord {
  Deduction rule;
  int profile = -1;
  uint64_t removed = 0;  // bitmask over choice-set masks
  int partner = -1;      // arc/equality partner profile
  int voter = -1;        // deviating voter for arcs
  int alternative = -1;  // pruned alternative / seeded winner
};
using DeductionTrace = std::vector<TraceRecord>;

struct PropagateResult {
  CandidateMap map;
  DeductionTrace trace;
  std::optional<int> contradiction_profile;
  bool contradiction() const { return contradiction_profile.has_value(); }
};

// Candidate initialization: all 2^m - 1 choice sets per profile, intersected
// with the scenario's explicit seeds.
CandidateMap init_candidates(const Scenario& scenario,
                             DeductionTrace* trace = nullptr);

// Single-pass rule applications (propagate drives them to fixpoint). Each
// returns true when it removed something.
bool apply_hypothesis_seeds(const Scenario&, CandidateMap&, DeductionTrace*);
bool prune_pareto(const Scenario&, CandidateMap&, DeductionTrace*);
bool prune_weak_pareto(const Scenario&, CandidateMap&, DeductionTrace*);
bool prune_condorcet_loser(const Scenario&, CandidateMap&, DeductionTrace*);
bool link_equalities(const Scenario&, CandidateMap&, DeductionTrace*);
bool arc_strategyproof(const Scenario&, CandidateMap&, DeductionTrace*);

// Applies every active rule round-robin until no candidate set changes, or a
// candidate set empties (contradiction). Deterministic: identical scenarios
// produce byte-identical traces.
PropagateResult propagate(const Scenario& scenario);

// Replays the trace from the initial map, re-deriving every removal from the
// literal axiom definitions on the concrete profiles. Returns false (with a
// reason) on the first removal that cannot be re-derived.
bool audit_trace(const Scenario& scenario, const DeductionTrace& trace,
                 std::string* why = nullptr);

// Arcs the engine discovered (profile pairs differing in exactly one voter),
// exposed for inspection/testing.
std::vector<std::tuple<int, int, int>> discover_arcs(const Scenario& scenario);

enum class SolveStatus { Satisfiable, Unsatisfiable, BudgetExceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::Satisfiable;
  std::vector<uint32_t> assignment;  // per profile, a single choice-set mask
  uint64_t nodes = 0;
};

struct SolveBudget {
  double ms = 30.0 * 60.0 * 1000.0;
  uint64_t max_nodes = 0;  // 0 = unlimited
};

// Backtracking over candidate assignments with propagation as the inference
// step. Unsatisfiable certifies that no SCF on the listed profiles satisfies
// the active axioms.
SolveResult solve(const Scenario& scenario, const SolveBudget& budget = {});

// Named scenarios transcribed from the theorems' proofs.
std::vector<std::string> scenario_names();
Scenario scenario_library(const std::string& name);

// The margin-class-collapsed full-domain scenario certifying that no
// pairwise, Pareto-optimal, strategyproof SCF exists at m = 3, n = 3.
Scenario build_pairwise_corollary_scenario();

// Human-editable text form: header (m, n, axioms, seeds, expectation), then
// one profile block per profile.
std::string dump_scenario(const Scenario& scenario);
Scenario parse_scenario_text(std::string_view text);
Scenario load_scenario(const std::string& name_or_path);

// One JSON record per removal, for external audit.
std::string trace_to_jsonl(const Scenario& scenario,
                           const DeductionTrace& trace);

}  // namespace scf
