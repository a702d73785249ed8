#include "scf/rules.hpp"

#include <algorithm>

namespace scf {
namespace {

ChoiceSet argmax_set(const std::vector<int>& scores, int m) {
  const int best = *std::max_element(scores.begin(), scores.begin() + m);
  uint32_t mask = 0;
  for (int x = 0; x < m; ++x)
    if (scores[x] == best) mask |= 1u << x;
  return ChoiceSet(mask, m);
}

}  // namespace

ChoiceSet pareto_rule(const Profile& r) { return pareto_optimal_set(r); }

ChoiceSet omninomination(const Profile& r) {
  uint32_t mask = 0;
  for (const auto& v : r.voters()) mask |= v.top_class_mask();
  return ChoiceSet(mask, r.m());
}

ChoiceSet top_pareto(const Profile& r) {
  const uint32_t mask =
      omninomination(r).mask() & pareto_optimal_set(r).mask();
  // Some voter's top class always contains a Pareto-optimal alternative, so
  // an empty intersection indicates a bug.
  if (mask == 0) throw Error("top_pareto: empty intersection");
  return ChoiceSet(mask, r.m());
}

std::vector<int> borda_scores(const Profile& r) {
  // m*n minus the summed count of strictly-better alternatives.
  const int m = r.m();
  std::vector<int> scores(m, m * r.n());
  for (const auto& v : r.voters())
    for (int x = 0; x < m; ++x)
      scores[x] -= rank_tuple(v, x).strict_above;
  return scores;
}

ChoiceSet borda(const Profile& r) { return argmax_set(borda_scores(r), r.m()); }

std::vector<int> plurality_scores(const Profile& r) {
  // A voter contributes one point to every alternative in his top class.
  std::vector<int> scores(r.m(), 0);
  for (const auto& v : r.voters()) {
    const uint32_t top = v.top_class_mask();
    for (int x = 0; x < r.m(); ++x)
      if ((top >> x) & 1u) ++scores[x];
  }
  return scores;
}

ChoiceSet plurality(const Profile& r) {
  return argmax_set(plurality_scores(r), r.m());
}

std::vector<int> copeland_scores(const Profile& r) {
  const auto s = support_matrix(r);
  const int m = r.m();
  std::vector<int> scores(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      if (s.s(x, y) > s.s(y, x)) ++scores[x];
      if (s.s(y, x) > s.s(x, y)) --scores[x];
    }
  return scores;
}

ChoiceSet copeland(const Profile& r) {
  return argmax_set(copeland_scores(r), r.m());
}

ChoiceSet two_threshold(const std::vector<int>& scores, int m) {
  if (m == 1) return ChoiceSet::full(1);
  std::vector<int> sorted(scores.begin(), scores.begin() + m);
  std::sort(sorted.rbegin(), sorted.rend());
  const int threshold = sorted[1];
  uint32_t mask = 0;
  for (int x = 0; x < m; ++x)
    if (scores[x] >= threshold) mask |= 1u << x;
  return ChoiceSet(mask, m);
}

ChoiceSet two_plurality(const Profile& r) {
  return two_threshold(plurality_scores(r), r.m());
}

ChoiceSet two_borda(const Profile& r) {
  return two_threshold(borda_scores(r), r.m());
}

ChoiceSet two_copeland(const Profile& r) {
  return two_threshold(copeland_scores(r), r.m());
}

ChoiceSet two_star_plurality(const Profile& r) {
  for (const auto& v : r.voters())
    if (!v.is_strict())
      throw DomainError("two-star-plurality is defined for strict profiles only");
  const int m = r.m();
  const auto scores = plurality_scores(r);
  std::vector<int> sorted = scores;
  std::sort(sorted.rbegin(), sorted.rend());
  const int second = m >= 2 ? sorted[1] : sorted[0];
  uint32_t mask = 0;
  for (int x = 0; x < m; ++x)
    if (scores[x] >= second && scores[x] > 0) mask |= 1u << x;
  return ChoiceSet(mask, m);
}

bool fstar_dominates(const Profile& r, int x, int y) {
  if (x == y) return false;
  if (pareto_dominates(r, x, y)) return true;
  int top_count = 0;
  for (const auto& v : r.voters())
    if ((v.top_class_mask() >> x) & 1u) ++top_count;
  if (top_count < r.n() - 1) return false;
  int sxy = 0, syx = 0;
  for (const auto& v : r.voters()) {
    if (v.strictly_prefers(x, y)) ++sxy;
    if (v.strictly_prefers(y, x)) ++syx;
  }
  return sxy >= 2 && syx <= 1;
}

ChoiceSet fstar(const Profile& r) {
  const int m = r.m();
  uint32_t mask = 0;
  for (int y = 0; y < m; ++y) {
    bool dominated = false;
    for (int x = 0; x < m && !dominated; ++x)
      if (fstar_dominates(r, x, y)) dominated = true;
    if (!dominated) mask |= 1u << y;
  }
  return ChoiceSet(mask, m);
}

ChoiceSet lex_pareto(const Profile& r) {
  const auto pareto = pareto_optimal_set(r);
  for (int x = 0; x < r.m(); ++x)
    if (pareto.contains(x)) return ChoiceSet::single(x, r.m());
  throw Error("lex_pareto: empty Pareto set");
}

ChoiceSet trivial_rule(const Profile& r) { return ChoiceSet::full(r.m()); }

ChoiceSet constant_rule(int x, const Profile& r) {
  return ChoiceSet::single(x, r.m());
}

ChoiceSet all_but_condorcet_loser(const Profile& r) {
  if (r.m() == 1) return ChoiceSet::full(1);
  const auto loser = condorcet_loser(r);
  uint32_t mask = (1u << r.m()) - 1;
  if (loser) mask &= ~(1u << *loser);
  return ChoiceSet(mask, r.m());
}

ChoiceSet pareto_minus_condorcet_loser(const Profile& r) {
  const auto pareto = pareto_optimal_set(r);
  const auto loser = condorcet_loser(r);
  if (!loser) return pareto;
  const uint32_t mask = pareto.mask() & ~(1u << *loser);
  // A unique Pareto-optimal alternative Pareto-dominates everything and so
  // cannot lose all majority comparisons; the guard is unreachable for m >= 2
  // but keeps the rule total.
  if (mask == 0) return pareto;
  return ChoiceSet(mask, r.m());
}

ChoiceSet majority_rule_m2(const Profile& r) {
  if (r.m() != 2) throw DomainError("majority rule is defined for m == 2 only");
  const auto s = support_matrix(r);
  if (s.s(0, 1) > s.s(1, 0)) return ChoiceSet::single(0, 2);
  if (s.s(1, 0) > s.s(0, 1)) return ChoiceSet::single(1, 2);
  return ChoiceSet::full(2);
}

const std::vector<RuleDescriptor>& rule_registry() {
  static const std::vector<RuleDescriptor> registry = [] {
    std::vector<RuleDescriptor> r;
    auto add = [&](RuleDescriptor d) { r.push_back(std::move(d)); };
    add({"pareto", "all Pareto-optimal alternatives", pareto_rule});
    add({"omninomination", "union of all voters' top classes", omninomination});
    add({"top-pareto", "Pareto-optimal top-ranked alternatives", top_pareto});
    add({"borda", "maximal Borda score", borda});
    add({"plurality", "maximal top-class count", plurality});
    add({"copeland", "maximal pairwise win-loss score", copeland});
    add({"two-plurality", "plurality score >= second-highest", two_plurality});
    add({"two-borda", "Borda score >= second-highest", two_borda});
    add({"two-copeland", "Copeland score >= second-highest", two_copeland});
    add({"two-star-plurality",
         "positive plurality score >= second-highest (strict profiles)",
         two_star_plurality, /*requires_strict=*/true});
    add({"fstar", "maximal elements of strengthened Pareto dominance", fstar});
    add({"lex-pareto", "lexicographically smallest Pareto-optimal alternative",
         lex_pareto});
    add({"trivial", "all alternatives", trivial_rule});
    for (int x = 0; x < 3; ++x)
      add({std::string("constant-") + char('a' + x),
           "always {" + std::string(1, char('a' + x)) + "}",
           [x](const Profile& p) { return constant_rule(x, p); },
           false, /*min_m=*/x + 1});
    add({"all-but-condorcet-loser", "everything except the Condorcet loser",
         all_but_condorcet_loser});
    add({"pareto-minus-condorcet-loser",
         "Pareto-optimal alternatives except the Condorcet loser",
         pareto_minus_condorcet_loser});
    {
      RuleDescriptor d{"majority", "majority winner(s) between two alternatives",
                       majority_rule_m2};
      d.exact_m = 2;
      add(std::move(d));
    }
    return r;
  }();
  return registry;
}

const RuleDescriptor& find_rule(const std::string& name) {
  for (const auto& r : rule_registry())
    if (r.name == name) return r;
  std::string msg = "unknown rule '" + name + "'; available:";
  for (const auto& r : rule_registry()) msg += " " + r.name;
  throw DomainError(msg);
}

bool rule_compatible(const RuleDescriptor& rule, const DomainSpec& spec) {
  if (rule.requires_strict && !spec.strict_only) return false;
  if (spec.m < rule.min_m || spec.n < rule.min_n) return false;
  if (rule.exact_m && spec.m != rule.exact_m) return false;
  return true;
}

void require_compatible(const RuleDescriptor& rule, const DomainSpec& spec) {
  if (!rule_compatible(rule, spec))
    throw DomainError("rule '" + rule.name +
                      "' is not defined on the requested domain");
}

}  // namespace scf
