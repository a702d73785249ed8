#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scf/core.hpp"
#include "scf/enumeration.hpp"
#include "scf/rules.hpp"

namespace scf {

enum class Verdict { Pass, Fail };

// A concrete counterexample. Re-running the violated condition on the
// witness alone reproduces the failure (see revalidate_witness).
struct Witness {
  std::string kind;
  std::vector<Profile> profiles;
  std::vector<ChoiceSet> sets;
  int voter = -1;
  int alternative = -1;
  int alternative2 = -1;
};

struct CheckResult {
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  uint64_t profiles_scanned = 0;
  double elapsed_ms = 0.0;
  bool pass() const { return verdict == Verdict::Pass; }
};

struct CheckOptions {
  int jobs = 1;
};

// Exhaustive checkers over the full profile space of the DomainSpec. Each
// either certifies the axiom or returns the deterministic smallest-ProfileId
// counterexample regardless of the job count.
CheckResult check_strategyproof(const RuleDescriptor& rule,
                                const DomainSpec& spec, CheckOptions = {});
CheckResult check_pareto_optimal(const RuleDescriptor& rule,
                                 const DomainSpec& spec, CheckOptions = {});
CheckResult check_anonymous(const RuleDescriptor& rule, const DomainSpec& spec,
                            CheckOptions = {});
CheckResult check_rank_based(const RuleDescriptor& rule, const DomainSpec& spec,
                             CheckOptions = {});
CheckResult check_support_based(const RuleDescriptor& rule,
                                const DomainSpec& spec, CheckOptions = {});
CheckResult check_pairwise(const RuleDescriptor& rule, const DomainSpec& spec,
                           CheckOptions = {});
CheckResult check_majority_based(const RuleDescriptor& rule,
                                 const DomainSpec& spec, CheckOptions = {});
CheckResult check_non_imposing(const RuleDescriptor& rule,
                               const DomainSpec& spec, CheckOptions = {});
CheckResult check_condorcet_consistent(const RuleDescriptor& rule,
                                       const DomainSpec& spec,
                                       CheckOptions = {});
CheckResult check_condorcet_loser_property(const RuleDescriptor& rule,
                                           const DomainSpec& spec,
                                           CheckOptions = {});

// Scans only the structured sub-domain of qualifying profiles (pick x, pick
// the dissenter, enumerate the n-1 unique-top-rankers' orders). only_x
// restricts the scan to one alternative.
CheckResult check_near_unanimity(const RuleDescriptor& rule,
                                 const DomainSpec& spec, CheckOptions = {},
                                 std::optional<int> only_x = {});

// Voters i such that f(R) intersects i's top class on every profile.
std::vector<int> nominators(const RuleDescriptor& rule, const DomainSpec& spec,
                            uint64_t* profiles_scanned = nullptr);

// Strategyproofness scanned only on canonical representatives under voter
// permutation. Sound (same verdict as the full scan) only for anonymous
// rules; exposed for the symmetry-consistency property check.
CheckResult check_strategyproof_canonical(const RuleDescriptor& rule,
                                          const DomainSpec& spec);

// Re-runs the literal violated condition on the witness, without any domain
// scan. Axiom is the registry name the witness came from.
bool revalidate_witness(const RuleDescriptor& rule, const std::string& axiom,
                        const Witness& witness);

struct AxiomDescriptor {
  std::string name;
  std::function<CheckResult(const RuleDescriptor&, const DomainSpec&,
                            CheckOptions)>
      run;
};
const std::vector<AxiomDescriptor>& axiom_registry();
const AxiomDescriptor& find_axiom(const std::string& name);

}  // namespace scf
