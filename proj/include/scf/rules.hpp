#pragma once

#include <functional>
#include <string>
#include <vector>

#include "scf/core.hpp"
#include "scf/derived.hpp"
#include "scf/enumeration.hpp"

namespace scf {

// A named social choice function: a pure map Profile -> non-empty ChoiceSet,
// with its declared domain constraints.
struct RuleDescriptor {
  std::string name;
  std::string summary;
  std::function<ChoiceSet(const Profile&)> evaluate;
  bool requires_strict = false;
  int min_m = 1;
  int exact_m = 0;  // 0 = any
  int min_n = 1;
};

const std::vector<RuleDescriptor>& rule_registry();
const RuleDescriptor& find_rule(const std::string& name);
bool rule_compatible(const RuleDescriptor& rule, const DomainSpec& spec);
void require_compatible(const RuleDescriptor& rule, const DomainSpec& spec);

// The individual rules. All are total on profiles satisfying their declared
// domain; all return non-empty sets.
ChoiceSet pareto_rule(const Profile& r);
ChoiceSet omninomination(const Profile& r);
ChoiceSet top_pareto(const Profile& r);
ChoiceSet borda(const Profile& r);
ChoiceSet plurality(const Profile& r);
ChoiceSet copeland(const Profile& r);
ChoiceSet two_plurality(const Profile& r);
ChoiceSet two_borda(const Profile& r);
ChoiceSet two_copeland(const Profile& r);
ChoiceSet two_star_plurality(const Profile& r);  // strict profiles only
ChoiceSet fstar(const Profile& r);
ChoiceSet lex_pareto(const Profile& r);
ChoiceSet trivial_rule(const Profile& r);
ChoiceSet constant_rule(int x, const Profile& r);
ChoiceSet all_but_condorcet_loser(const Profile& r);
ChoiceSet pareto_minus_condorcet_loser(const Profile& r);
ChoiceSet majority_rule_m2(const Profile& r);  // m == 2 only

// Score vectors feeding the two_* threshold rules.
std::vector<int> borda_scores(const Profile& r);
std::vector<int> plurality_scores(const Profile& r);
std::vector<int> copeland_scores(const Profile& r);

// All alternatives whose score is at least the second-highest score, where
// "second-highest" indexes the score multiset (duplicates counted).
ChoiceSet two_threshold(const std::vector<int>& scores, int m);

// The dominance relation underlying fstar, exposed for transitivity checks:
// x dominates y if x Pareto-dominates y, or at least n-1 voters have x in
// their top class while s_xy >= 2 and s_yx <= 1.
bool fstar_dominates(const Profile& r, int x, int y);

}  // namespace scf
