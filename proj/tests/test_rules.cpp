#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scf/enumeration.hpp"
#include "scf/rules.hpp"
#include "scf/text.hpp"

using namespace scf;

namespace {

Profile indifferent_profile(int m, int n) {
  return Profile(std::vector<WeakOrder>(n, WeakOrder::indifferent(m)));
}

ChoiceSet cs(std::initializer_list<int> alts, int m) {
  return ChoiceSet::of(alts, m);
}

}  // namespace

TEST_CASE("pareto rule") {
  CHECK(pareto_rule(prof(3, {"a > b > c", "a > b > c"})) == cs({0}, 3));
  CHECK(!pareto_rule(prof(4, {"a~b > c~d", "c~d > a~b", "a > b~c~d"}))
             .contains(1));
  CHECK(pareto_rule(indifferent_profile(3, 2)) == ChoiceSet::full(3));
}

TEST_CASE("omninomination") {
  CHECK(omninomination(prof(3, {"a > b > c", "b > a > c", "a > c > b"})) ==
        cs({0, 1}, 3));
  CHECK(omninomination(Profile({ord(3, "a > b > c"),
                                WeakOrder::indifferent(3)})) ==
        ChoiceSet::full(3));
  CHECK(omninomination(prof(3, {"a > b > c", "a > c > b"})) == cs({0}, 3));
}

TEST_CASE("top pareto") {
  CHECK(top_pareto(prof(3, {"a > b > c", "a > b > c"})) == cs({0}, 3));
  // b is nobody's top, so it drops out of the full Pareto set.
  CHECK(top_pareto(prof(3, {"a > b > c", "c > b > a"})) == cs({0, 2}, 3));
  CHECK(top_pareto(indifferent_profile(3, 2)) == ChoiceSet::full(3));
}

TEST_CASE("top pareto is never empty at (3,3)") {
  ProfileSpace space = make_space(DomainSpec{3, 3, false, false});
  for (ProfileIterator it(space); !it.done(); it.next())
    CHECK(top_pareto(it.profile()).mask() != 0);
}

TEST_CASE("borda") {
  CHECK(borda(prof(3, {"a > b > c", "a > b > c"})) == cs({0}, 3));
  CHECK(borda_scores(prof(3, {"a > b > c", "a > b > c"}))[0] == 6);
  // Opposed strict voters: every score is 4.
  const Profile opposed = prof(3, {"a > b > c", "c > b > a"});
  CHECK(borda_scores(opposed) == std::vector<int>{4, 4, 4});
  CHECK(borda(opposed) == ChoiceSet::full(3));
  CHECK(borda(indifferent_profile(3, 2)) == ChoiceSet::full(3));
}

TEST_CASE("plurality") {
  CHECK(plurality(prof(3, {"a > b > c", "a > c > b", "b > a > c"})) ==
        cs({0}, 3));
  // Top classes {a,b}, {a}, {b}: two points each.
  CHECK(plurality(prof(3, {"a~b > c", "a > b > c", "b > a > c"})) ==
        cs({0, 1}, 3));
  CHECK(plurality(indifferent_profile(3, 2)) == ChoiceSet::full(3));
}

TEST_CASE("two_threshold uses the score multiset") {
  CHECK(two_threshold({5, 3, 3, 1}, 4) == cs({0, 1, 2}, 4));
  CHECK(two_threshold({2, 2, 2}, 3) == ChoiceSet::full(3));
  CHECK(two_threshold({5, 5, 1}, 3) == cs({0, 1}, 3));
  CHECK(two_threshold({7}, 1) == ChoiceSet::full(1));
}

TEST_CASE("two-star plurality") {
  // Tops (a, a, b, b, c): second-highest plurality score is 2.
  const Profile r = prof(3, {"a > b > c", "a > c > b", "b > a > c",
                             "b > c > a", "c > a > b"});
  CHECK(two_star_plurality(r) == cs({0, 1}, 3));
  // Unanimous tops: the second-highest score is 0, and the positive-score
  // condition leaves only the winner.
  const Profile unanimous = prof(3, {"a > b > c", "a > c > b", "a > b > c",
                                     "a > b > c", "a > c > b"});
  CHECK(two_star_plurality(unanimous) == cs({0}, 3));
  const Profile spread = prof(3, {"a > b > c", "b > c > a", "c > a > b"});
  CHECK(two_star_plurality(spread) == ChoiceSet::full(3));
  CHECK_THROWS_AS(two_star_plurality(prof(3, {"a~b > c", "a > b > c"})),
                  DomainError);
}

TEST_CASE("copeland") {
  const Profile with_winner = prof(3, {"a > b > c", "a > c > b", "b > a > c"});
  CHECK(copeland(with_winner) == cs({0}, 3));
  const Profile cycle = prof(3, {"a > b > c", "b > c > a", "c > a > b"});
  CHECK(copeland(cycle) == ChoiceSet::full(3));
  CHECK(copeland(indifferent_profile(3, 2)) == ChoiceSet::full(3));
}

TEST_CASE("fstar on the appendix pair") {
  const Profile r1 = prof(3, {"c > b > a", "a > b > c", "a > b > c"});
  const Profile r2 = prof(3, {"c > a > b", "b > a > c", "a > b > c"});
  CHECK(support_matrix(r1) == support_matrix(r2));
  CHECK(fstar(r1) == cs({0}, 3));
  CHECK(fstar(r2) == ChoiceSet::full(3));
  CHECK(fstar(prof(3, {"a > b > c", "a > b > c", "a > b > c"})) == cs({0}, 3));
}

TEST_CASE("fstar dominance is transitive on every (3,3) profile") {
  ProfileSpace space = make_space(DomainSpec{3, 3, false, false});
  for (ProfileIterator it(space); !it.done(); it.next()) {
    const Profile& r = it.profile();
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z) {
          if (x == y || y == z || x == z) continue;
          if (fstar_dominates(r, x, y) && fstar_dominates(r, y, z))
            CHECK(fstar_dominates(r, x, z));
        }
  }
}

TEST_CASE("lex pareto") {
  // Pareto set {b, c}: unanimous preference kills a.
  const Profile r = prof(3, {"b > c > a", "c > b > a"});
  CHECK(pareto_rule(r) == cs({1, 2}, 3));
  CHECK(lex_pareto(r) == cs({1}, 3));
  CHECK(lex_pareto(prof(3, {"a > b > c", "a > b > c"})) == cs({0}, 3));
  CHECK(lex_pareto(indifferent_profile(3, 2)) == cs({0}, 3));
}

TEST_CASE("trivial and constant rules") {
  const Profile r = prof(3, {"c > b > a", "b > a > c"});
  CHECK(trivial_rule(r) == ChoiceSet::full(3));
  CHECK(constant_rule(1, r) == cs({1}, 3));
}

TEST_CASE("all but condorcet loser") {
  CHECK(all_but_condorcet_loser(prof(3, {"a > b > c", "a > b > c"})) ==
        cs({0, 1}, 3));
  CHECK(all_but_condorcet_loser(
            prof(3, {"a > b > c", "b > c > a", "c > a > b"})) ==
        ChoiceSet::full(3));
  const Profile thm4_r1 =
      prof(3, {"a > c > b", "a > b > c", "a > b > c", "b > c > a"});
  CHECK(all_but_condorcet_loser(thm4_r1) == cs({0, 1}, 3));
}

TEST_CASE("pareto minus condorcet loser") {
  CHECK(pareto_minus_condorcet_loser(prof(3, {"a > b > c", "a > b > c"})) ==
        cs({0}, 3));
  // Cycle: full Pareto set, no loser.
  CHECK(pareto_minus_condorcet_loser(
            prof(3, {"a > b > c", "b > c > a", "c > a > b"})) ==
        ChoiceSet::full(3));
  // First (3,3) profile whose Pareto set is everything while c loses all
  // majority comparisons; the rule must drop exactly c.
  ProfileSpace space = make_space(DomainSpec{3, 3, false, false});
  bool found = false;
  for (ProfileIterator it(space); !it.done() && !found; it.next()) {
    if (pareto_rule(it.profile()).mask() == 0b111 &&
        condorcet_loser(it.profile()) == 2) {
      CHECK(pareto_minus_condorcet_loser(it.profile()) == cs({0, 1}, 3));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("the condorcet loser is never the whole pareto set") {
  // Justifies the rule's unreachable fallback.
  for (const DomainSpec spec :
       {DomainSpec{3, 3, false, false}, DomainSpec{2, 2, false, false}}) {
    ProfileSpace space = make_space(spec);
    for (ProfileIterator it(space); !it.done(); it.next()) {
      const auto loser = condorcet_loser(it.profile());
      if (!loser) continue;
      CHECK(pareto_rule(it.profile()).mask() != (1u << *loser));
    }
  }
}

TEST_CASE("majority rule at m=2") {
  CHECK(majority_rule_m2(prof(2, {"a > b", "a > b", "b > a"})) == cs({0}, 2));
  CHECK(majority_rule_m2(prof(2, {"a > b", "b > a"})) == ChoiceSet::full(2));
  CHECK(majority_rule_m2(indifferent_profile(2, 3)) == ChoiceSet::full(2));
  CHECK_THROWS_AS(majority_rule_m2(prof(3, {"a > b > c"})), DomainError);
}

TEST_CASE("registry lookups and domain constraints") {
  CHECK(find_rule("pareto").name == "pareto");
  CHECK_THROWS_AS(find_rule("no-such-rule"), DomainError);
  CHECK(find_rule("two-star-plurality").requires_strict);
  CHECK(!rule_compatible(find_rule("two-star-plurality"),
                         DomainSpec{3, 3, false, false}));
  CHECK(rule_compatible(find_rule("two-star-plurality"),
                        DomainSpec{3, 3, true, false}));
  CHECK(!rule_compatible(find_rule("majority"), DomainSpec{3, 2, false, false}));
  CHECK(rule_compatible(find_rule("majority"), DomainSpec{2, 2, false, false}));
}

TEST_CASE("every rule returns a non-empty set on its declared domain") {
  for (const DomainSpec spec :
       {DomainSpec{3, 3, false, false}, DomainSpec{3, 5, true, false}}) {
    ProfileSpace space = make_space(spec);
    for (const auto& rule : rule_registry()) {
      if (!rule_compatible(rule, spec)) continue;
      for (ProfileIterator it(space); !it.done(); it.next())
        CHECK(rule.evaluate(it.profile()).mask() != 0);
    }
  }
}

TEST_CASE("scoring rules are anonymous at (3,2)") {
  ProfileSpace space = make_space(DomainSpec{3, 2, false, false});
  const std::vector<int> swap01 = {1, 0};
  for (const char* name :
       {"borda", "plurality", "copeland", "two-plurality", "two-borda",
        "two-copeland"}) {
    const auto& rule = find_rule(name);
    for (ProfileIterator it(space); !it.done(); it.next())
      CHECK(rule.evaluate(it.profile()) ==
            rule.evaluate(permute_voters(it.profile(), swap01)));
  }
}

TEST_CASE("rules are neutral at (3,2)") {
  ProfileSpace space = make_space(DomainSpec{3, 2, false, false});
  const std::vector<int> perm = {2, 0, 1};
  for (const char* name : {"borda", "copeland", "fstar", "pareto"}) {
    const auto& rule = find_rule(name);
    for (ProfileIterator it(space); !it.done(); it.next()) {
      const uint32_t before = rule.evaluate(it.profile()).mask();
      const uint32_t after =
          rule.evaluate(permute_alternatives(it.profile(), perm)).mask();
      uint32_t mapped = 0;
      for (int x = 0; x < 3; ++x)
        if ((before >> x) & 1u) mapped |= 1u << perm[x];
      CHECK(after == mapped);
    }
  }
}
