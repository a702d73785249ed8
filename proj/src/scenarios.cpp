#include <algorithm>
#include <map>
#include <set>

#include "scf/derived.hpp"
#include "scf/replay.hpp"
#include "scf/text.hpp"

// The scenario library. Each scenario transcribes one proof's profile chain;
// intermediate profiles are inserted wherever the argument changes several
// voters "subsequently", so that every deduction is a single-voter arc, a
// signature-equality link, a prune, or a seed. Chains that the arguments
// repeat "for symmetric profiles" are generated by applying the relevant
// alternative/voter relabelings to the base chain.

namespace scf {
namespace {

struct Build {
  Scenario sc;

  Build(std::string name, int m, int n, uint32_t axioms, std::string note) {
    sc.name = std::move(name);
    sc.m = m;
    sc.n = n;
    sc.axioms = axioms;
    sc.note = std::move(note);
  }

  void add(const std::string& label,
           std::initializer_list<std::string_view> rows) {
    sc.add_profile(label, prof(sc.m, rows));
  }

  void add_profile(const std::string& label, Profile p) {
    sc.add_profile(label, std::move(p));
  }

  uint64_t sets_mask(std::initializer_list<std::string_view> sets) const {
    const AltNames names = AltNames::letters(sc.m);
    uint64_t allowed = 0;
    for (auto s : sets)
      allowed |= uint64_t{1} << parse_choice_set(s, names).mask();
    return allowed;
  }

  void seed(const std::string& label,
            std::initializer_list<std::string_view> sets) {
    sc.seeds.push_back(Seed{sc.profile_index(label), sets_mask(sets)});
  }

  void expect_contradiction() {
    sc.expect = Expectation{Expectation::Contradiction, {}};
  }

  void expect_forced(const std::string& label,
                     std::initializer_list<std::string_view> sets) {
    if (!sc.expect) sc.expect = Expectation{Expectation::Forced, {}};
    sc.expect->forced.emplace_back(sc.profile_index(label), sets_mask(sets));
  }
};

// ---- Lemma 1 worked example (m=4, n=3) --------------------------------------
// Seeded with f(R0) = {a, d}; the chain forces f(R4) = {a} and then, renaming
// roles, f(R7) = {b}.
Scenario lemma1_example() {
  Build b("lemma1-example", 4, 3, kStrategyproofArcs | kParetoPrune,
          "push-down construction for a non-nominator, seeded f(R0)={a,d}");
  b.add("R0", {"b > a~d > c", "d > a > b~c", "a~c > b~d"});
  b.add("R0a", {"b > a~d > c", "a~d > b~c", "a~c > b~d"});
  b.add("R1", {"b > a~d > c", "a~d > b~c", "a~d > b~c"});
  b.add("R2", {"b > a > d > c", "a~d > b~c", "a~d > b~c"});
  b.add("R2a", {"b > a > d > c", "a > b > c~d", "a~d > b~c"});
  b.add("R3", {"b > a > d > c", "a > b > c~d", "a > b > c~d"});
  b.add("R4", {"b > d > c > a", "a > b > c~d", "a > b > c~d"});
  b.add("R5", {"c > b > d > a", "a > b > c~d", "a > b > c~d"});
  b.add("R5a", {"c > b > d > a", "a~b > c~d", "a > b > c~d"});
  b.add("R6", {"c > b > d > a", "a~b > c~d", "a~b > c~d"});
  b.add("R6a", {"c > b > d > a", "b > c > a~d", "a~b > c~d"});
  b.add("R7", {"c > b > d > a", "b > c > a~d", "b > c > a~d"});
  b.seed("R0", {"{a, d}"});
  b.expect_forced("R4", {"{a}"});
  b.expect_forced("R7", {"{b}"});
  return b.sc;
}

// ---- Lemma 3 worked example (m=4, n=4) --------------------------------------
// Starts from unanimous profiles, whose unique winner is forced by
// non-imposition plus strategyproofness (the base case of the lemma); the
// chain then walks voter 4's best alternative down to the bottom.
namespace lemma3 {

const std::vector<std::vector<std::string>> kChain = {
    {"a > b > c > d", "a > b > c > d", "a > b > c > d", "a > b > c > d"},
    {"a > c > d > b", "a > b > c > d", "a > b > c > d", "a > b > c > d"},
    {"a > c > d > b", "a > c > d > b", "a > b > c > d", "a > b > c > d"},
    {"a > c > d > b", "a > c > d > b", "a > c > d > b", "a > b > c > d"},
    {"a > c > d > b", "a > c > d > b", "a > c > d > b", "b > a > c > d"},
    {"a > d > b > c", "a > c > d > b", "a > c > d > b", "b > a > c > d"},
    {"a > d > b > c", "a > d > b > c", "a > c > d > b", "b > a > c > d"},
    {"a > d > b > c", "a > d > b > c", "a > d > b > c", "b > a > c > d"},
    {"a > d > b > c", "a > d > b > c", "a > d > b > c", "c > a~b > d"},
    {"a > b > c > d", "a > d > b > c", "a > d > b > c", "c > a~b > d"},
    {"a > b > c > d", "a > b > c > d", "a > d > b > c", "c > a~b > d"},
    {"a > b > c > d", "a > b > c > d", "a > b > c > d", "c > a~b > d"},
};

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  // apply g first, then f
  std::vector<int> out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = f[g[x]];
  return out;
}

Profile image(const Profile& p, const std::vector<int>& perm) {
  return permute_alternatives(p, perm);
}

}  // namespace lemma3

Scenario lemma3_example() {
  using namespace lemma3;
  Build b("lemma3-example", 4, 4,
          kStrategyproofArcs | kCondorcetLoserPrune,
          "push-down construction from the Condorcet-loser lemma; unanimous "
          "starts seeded {a} (non-imposition base case)");

  const std::vector<int> id = {0, 1, 2, 3};
  const std::vector<int> bc = {0, 2, 1, 3};
  const std::vector<int> bd = {0, 3, 2, 1};
  const std::vector<int> cd = {0, 1, 3, 2};
  const std::vector<std::pair<std::string, std::vector<int>>> copies = {
      {"", id},           {"bc.", bc},
      {"bd.", bd},        {"bdbc.", compose(bd, bc)},
      {"cd.", cd},        {"cdbc.", compose(cd, bc)},
  };

  for (const auto& [tag, perm] : copies) {
    for (size_t i = 0; i < kChain.size(); ++i) {
      Profile base = prof(4, kChain[i]);
      b.add_profile(tag + "L" + std::to_string(i), image(base, perm));
    }
    b.seed(tag + "L0", {"{a}"});  // sigma fixes a in every copy
  }

  // R7 = (a,b,c,d x3; b,{a,c},d): bridge voters 1..3 from the bc-copy's L11.
  // Applied under tau in {id, bd, cd} to feed the three R8-analogues.
  const std::vector<std::pair<std::string, std::vector<int>>> taus = {
      {"", id}, {"bd.", bd}, {"cd.", cd}};
  for (const auto& [tag, tau] : taus) {
    const Profile base_b1 =
        prof(4, {"a > b > c > d", "a > c > b > d", "a > c > b > d",
                 "b > a~c > d"});
    const Profile base_b2 =
        prof(4, {"a > b > c > d", "a > b > c > d", "a > c > b > d",
                 "b > a~c > d"});
    const Profile base_r7 =
        prof(4, {"a > b > c > d", "a > b > c > d", "a > b > c > d",
                 "b > a~c > d"});
    const Profile base_r8 =
        prof(4, {"a > b > c > d", "a > b > c > d", "a > b > c > d",
                 "d > a~b~c"});
    b.add_profile(tag + "B1", image(base_b1, tau));
    b.add_profile(tag + "B2", image(base_b2, tau));
    b.add_profile(tag + "R7", image(base_r7, tau));
    b.add_profile(tag + "R8", image(base_r8, tau));
  }

  // Bridges from the three R8-analogues to R9/R10/R11, then R12.
  auto bridge3 = [&](const std::string& from_tag, const std::string& label,
                     const std::string& v4) {
    const std::vector<int>& tau = from_tag == "bd." ? bd
                                 : from_tag == "cd." ? cd
                                                     : id;
    const std::string from_row =
        render_order(permute_alternatives(ord(4, "a > b > c > d"), tau));
    b.add(label + "i1", {"a > c > b > d", from_row, from_row, v4});
    b.add(label + "i2", {"a > c > b > d", "a > c > b > d", from_row, v4});
    b.add(label, {"a > c > b > d", "a > c > b > d", "a > c > b > d", v4});
  };
  bridge3("bd.", "R9", "b > a~c~d");
  bridge3("cd.", "R10", "c > a~b~d");
  bridge3("", "R11", "d > a~b~c");
  b.add("R12",
        {"a > c > b > d", "a > c > b > d", "a > c > b > d", "b > c > d > a"});

  b.expect_forced("R8", {"{a}"});
  b.expect_forced("R12", {"{a}"});
  return b.sc;
}

// ---- rank-based impossibility (m=4, n=3) ------------------------------------
Scenario thm1() {
  Build b("thm1", 4, 3,
          kStrategyproofArcs | kParetoPrune | kRankEquality |
              kNearUnanimitySeed,
          "rank-based impossibility: non-nominator profiles plus the "
          "unrolled nominator induction");
  // Not every voter is a nominator: equal rank matrices, different Pareto
  // dominances.
  b.add("A1", {"a~b > c~d", "c~d > a~b", "a > b~c~d"});
  b.add("A2", {"a~c > b~d", "b~d > a~c", "a > b~c~d"});
  b.add("A3", {"a~d > b~c", "b~c > a~d", "a > b~c~d"});
  // Every voter is a nominator: induction on how many voters down-rank a.
  b.add("K1.1", {"c~d > b > a", "a > b > c > d", "a > b > c > d"});
  b.add("K1.2", {"b~d > c > a", "a > b > c > d", "a > b > c > d"});
  b.add("K1.3", {"b~d > c > a", "a~c > b > d", "a > b > c > d"});
  b.add("K2.1", {"c~d > b > a", "a~b > c > d", "a > b > c > d"});
  b.add("K2.2", {"b~d > c > a", "a~b > c > d", "a > b > c > d"});
  b.add("K2.3", {"b~d > c > a", "a~b > c > d", "a~c > b > d"});
  b.add("K3.1", {"c~d > b > a", "a~b > c > d", "a~b > c > d"});
  b.add("K3.2", {"b~d > c > a", "a~b > c > d", "a~b > c > d"});
  b.expect_contradiction();
  return b.sc;
}

// ---- rank-based impossibility boundary (m=5, n=2) ---------------------------
Scenario thm1_boundaries() {
  Build b("thm1-boundaries", 5, 2,
          kStrategyproofArcs | kParetoPrune | kRankEquality |
              kNearUnanimitySeed,
          "rank-based impossibility at m=5, n=2; near unanimity at n=2 lets "
          "both voters force distinct unique winners");
  b.add("R1", {"a~b > e > c~d", "c~d > a > b~e"});
  b.add("R2", {"a~c > e > b~d", "b~d > a > c~e"});
  b.add("R3", {"a~d > e > b~c", "b~c > a > d~e"});
  b.add("Q", {"a > b > c > d > e", "b > a > c > d > e"});
  b.expect_contradiction();
  return b.sc;
}

// ---- support-based nominator theorem, one induction step --------------------
namespace thm2 {

// Base chain for n=3 (k=1). R^{1,4} and R^{1,5} coincide.
const std::vector<std::pair<std::string, std::vector<std::string>>> kChainN3 = {
    {"S1", {"a > c > b", "c > b > a", "a > b > c"}},
    {"S2", {"a > c > b", "c > b > a", "a~b > c"}},
    {"S3", {"a > c > b", "c > a~b", "b > a > c"}},
    {"S5", {"a > c > b", "c > b > a", "b > a > c"}},
    {"S6", {"a > c > b", "b > a > c", "b > a > c"}},
    {"S7", {"c > a > b", "c > b > a", "b > a > c"}},
    {"S8", {"c > a > b", "c > b > a", "b > c > a"}},
    {"S9", {"c > a > b", "c > a > b", "b > c > a"}},
};

const std::vector<std::pair<std::string, std::vector<std::string>>> kChainN4 = {
    {"S1", {"a > c > b", "c > b > a", "a > b > c", "a > b > c"}},
    {"S2", {"a > c > b", "c > b > a", "a~b > c", "a > b > c"}},
    {"S3", {"a > c > b", "c > a~b", "b > a > c", "a > b > c"}},
    {"S4", {"a > c > b", "c > b > a", "b > a > c", "a > b > c"}},
    {"S4a", {"a > c > b", "c > b > a", "b > a > c", "a~b > c"}},
    {"S4b", {"a > c > b", "c > a~b", "b > a > c", "b > a > c"}},
    {"S5", {"a > c > b", "c > b > a", "b > a > c", "b > a > c"}},
    {"S6", {"a > c > b", "b > a > c", "b > a > c", "b > a > c"}},
    {"S7", {"c > a > b", "c > b > a", "b > a > c", "b > a > c"}},
    {"S7a", {"c > a > b", "c > b > a", "b > c > a", "b > a > c"}},
    {"S8", {"c > a > b", "c > b > a", "b > c > a", "b > c > a"}},
    {"S9", {"c > a > b", "c > a > b", "b > c > a", "b > c > a"}},
};

Scenario build(int n) {
  Build b(n == 3 ? "thm2-step" : "thm2-step-n4", 3, n,
          kStrategyproofArcs | kParetoPrune | kSupportEquality |
              kNearUnanimitySeed,
          "one unrolled induction step of the support-based nominator "
          "theorem, plus its alternative/voter-relabelled mirror");
  const auto& chain = n == 3 ? kChainN3 : kChainN4;

  // sigma swaps a and b; pi pairs each original voter with its mirror.
  const std::vector<int> sigma = {1, 0, 2};
  const std::vector<int> pi =
      n == 3 ? std::vector<int>{2, 1, 0} : std::vector<int>{2, 3, 0, 1};

  for (const auto& [label, rows] : chain) b.add_profile(label, prof(3, rows));
  for (const auto& [label, rows] : chain)
    b.add_profile("m." + label,
                  permute_voters(permute_alternatives(prof(3, rows), sigma), pi));

  if (n == 3) {
    // f(S9)={b} with voter 1 bottom-ranking b; f(m.S9)={a} with voters 2,3
    // bottom-ranking a. One voter change at a time meets in profile Q.
    b.add("E1", {"a > c > b", "c > a > b", "c > b > a"});
    b.add("Q", {"a > c > b", "c > a > b", "b > c > a"});
  } else {
    b.add("W1", {"a > c > b", "c > a > b", "b > c > a", "b > c > a"});
    b.add("X1", {"a > c > b", "a > c > b", "b > c > a", "c > b > a"});
    b.add("Q", {"a > c > b", "a > c > b", "b > c > a", "b > c > a"});
  }
  b.expect_contradiction();
  return b.sc;
}

}  // namespace thm2

// ---- Condorcet loser + non-imposition, induction basis (m=3, n=4) -----------
namespace thm4 {

const std::vector<std::pair<std::string, std::vector<std::string>>> kChain = {
    {"C1", {"a > c > b", "a > b > c", "a > b > c", "b > c > a"}},
    {"C2", {"a~c > b", "a > b > c", "a > b > c", "b > c > a"}},
    {"C2a", {"a~c > b", "a > c > b", "a > b > c", "b > c > a"}},
    {"C3", {"a~c > b", "a > c > b", "a > b > c", "c > a~b"}},
    {"C4", {"a~c > b", "a > c > b", "b > a > c", "c > a~b"}},
    {"C5", {"a~c > b", "a > c > b", "b > a > c", "c > b > a"}},
};

Scenario build() {
  Build b("thm4-base", 3, 4,
          kStrategyproofArcs | kCondorcetLoserPrune | kAbsoluteMajoritySeed,
          "induction basis of the Condorcet-loser/non-imposition theorem: "
          "four relabelled chains meeting in R9");

  const std::vector<int> id_a = {0, 1, 2};
  const std::vector<int> id_v = {0, 1, 2, 3};
  // Chain endpoints R5/R6/R7/R8 arise from one pattern under these
  // relabelings (alternatives, then voters).
  struct Copy {
    std::string tag;
    std::vector<int> alt;
    std::vector<int> voters;
  };
  const std::vector<Copy> copies = {
      {"", id_a, id_v},
      {"r6.", {2, 0, 1}, {0, 2, 3, 1}},
      {"r7.", {1, 0, 2}, {2, 3, 0, 1}},
      {"r8.", {2, 1, 0}, {3, 1, 0, 2}},
  };
  for (const auto& c : copies)
    for (const auto& [label, rows] : kChain)
      b.add_profile(c.tag + label,
                    permute_voters(permute_alternatives(prof(3, rows), c.alt),
                                   c.voters));

  // R5 = C5 forced to {a} by the arc to r6.C5 (= R6), and R7 = r7.C5 forced
  // to {b} by the arc to r8.C5 (= R8). Then both chains push into R9.
  b.add("W1", {"a > b > c", "a > c > b", "b > a > c", "c > b > a"});
  b.add("W2", {"a > b > c", "a > b > c", "b > a > c", "c > b > a"});
  b.add("V1", {"a > b > c", "c > a > b", "b > a > c", "b > c > a"});
  b.add("V2", {"a > b > c", "c > a > b", "b > a > c", "b > a > c"});
  b.add("R9", {"a > b > c", "a > b > c", "b > a > c", "b > a > c"});
  b.expect_contradiction();
  return b.sc;
}

}  // namespace thm4

// ---- Condorcet loser + non-imposition, odd-n variant (m=3, n=5) -------------
Scenario thm4_alt_odd() {
  Build b("thm4-alt-odd", 3, 5,
          kStrategyproofArcs | kCondorcetLoserPrune | kAbsoluteMajoritySeed,
          "completely-indifferent-voter-free variant for odd n");
  b.add("R1", {"a > b > c", "a > c > b", "a > c > b", "b > a~c", "b > a~c"});
  b.add("R2", {"a > b > c", "a > c > b", "c > a > b", "b > a~c", "b > a~c"});
  b.add("R2a", {"a > b > c", "a > c > b", "c > a > b", "b > c > a", "b > a~c"});
  b.add("R3", {"a > b > c", "a > c > b", "c > a > b", "b > c > a", "b > c > a"});
  b.add("R3b", {"b > a > c", "a > c > b", "c > a > b", "b > c > a", "b > c > a"});
  b.add("R4", {"a > c > b", "a > c > b", "c > a > b", "c > b > a", "c > b > a"});
  b.add("R4a", {"a > c > b", "a > c > b", "c > a > b", "b > c > a", "c > b > a"});
  b.add("R5", {"a > c > b", "a > c > b", "c > a > b", "b > c > a", "b > c > a"});
  b.expect_contradiction();
  return b.sc;
}

// ---- majority-based impossibility (m=3, n=3) --------------------------------
Scenario thmC1() {
  Build b("thmC1", 3, 3,
          kStrategyproofArcs | kMajorityEquality | kNonImpositionSeed,
          "majority-based SCFs: Condorcet-winner forcing (from "
          "non-imposition) against a majority-preserving preference swap");
  b.add("R1", {"c > b > a", "a > b > c", "a > c > b"});
  b.add("R2", {"c > b > a", "a~b > c", "a > c > b"});
  b.add("R3", {"c > a~b", "b > a > c", "a > c > b"});
  b.add("R4", {"c > b > a", "b > a > c", "a > c > b"});
  b.add("R6", {"b > c > a", "b > a > c", "a > c > b"});
  b.add("W", {"c > b > a", "b > a > c", "c > b > a"});
  b.add("R7", {"c > b > a", "b > c > a", "c > b > a"});
  b.expect_contradiction();
  return b.sc;
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"lemma1-example", "lemma3-example", "thm1",
          "thm1-boundaries", "thm2-step",      "thm2-step-n4",
          "thm4-base",       "thm4-alt-odd",   "thmC1",
          "pairwise-corollary-m3n3"};
}

Scenario scenario_library(const std::string& name) {
  if (name == "lemma1-example") return lemma1_example();
  if (name == "lemma3-example") return lemma3_example();
  if (name == "thm1") return thm1();
  if (name == "thm1-boundaries") return thm1_boundaries();
  if (name == "thm2-step") return thm2::build(3);
  if (name == "thm2-step-n4") return thm2::build(4);
  if (name == "thm4-base") return thm4::build();
  if (name == "thm4-alt-odd") return thm4_alt_odd();
  if (name == "thmC1") return thmC1();
  if (name == "pairwise-corollary-m3n3") return build_pairwise_corollary_scenario();
  std::string msg = "unknown scenario '" + name + "'; available:";
  for (const auto& n : scenario_names()) msg += " " + n;
  throw DomainError(msg);
}

// Collapses the full (m=3, n=3) weak domain by margin matrix: pairwiseness
// makes each margin class one variable. Pareto-optimality intersects each
// class's admissible sets over all member profiles; every single-voter
// deviation crossing classes becomes an explicit manipulation arc.
Scenario build_pairwise_corollary_scenario() {
  const DomainSpec spec{3, 3, false, false};
  auto catalog = std::make_shared<OrderCatalog>(spec);
  ProfileSpace space(catalog);
  const int k = catalog->count();
  const uint64_t all_sets = (uint64_t{1} << (1u << 3)) - 2;

  auto margin_key = [](const Profile& p) {
    const auto sm = support_matrix(p);
    std::string key;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        key.push_back(static_cast<char>(sm.margin(x, y) + p.n()));
    return key;
  };

  std::map<std::string, int> class_ids;
  std::vector<int> class_of(space.size());
  std::vector<uint64_t> admissible;
  std::vector<uint64_t> representative;
  for (ProfileIterator it(space); !it.done(); it.next()) {
    const std::string key = margin_key(it.profile());
    auto [iter, fresh] = class_ids.try_emplace(key, class_ids.size());
    const int cid = iter->second;
    class_of[it.pid()] = cid;
    if (fresh) {
      admissible.push_back(all_sets);
      representative.push_back(it.pid());
    }
    uint64_t bad = 0;
    const uint32_t dom = pareto_dominated_mask(it.profile());
    for (int x = 0; x < 3; ++x)
      if ((dom >> x) & 1u)
        for (uint32_t s = 1; s < 8; ++s)
          if ((s >> x) & 1u) bad |= uint64_t{1} << s;
    admissible[cid] &= ~bad;
  }

  Scenario sc;
  sc.name = "pairwise-corollary-m3n3";
  sc.m = 3;
  sc.n = 3;
  sc.note =
      "margin-class-collapsed search for a pairwise, Pareto-optimal, "
      "strategyproof SCF on the full weak (3,3) domain";
  for (size_t c = 0; c < representative.size(); ++c) {
    sc.add_profile("C" + std::to_string(c), space.decode(representative[c]));
    sc.seeds.push_back(Seed{static_cast<int>(c), admissible[c]});
  }

  std::set<std::tuple<int, int, int>> seen;
  for (ProfileIterator it(space); !it.done(); it.next()) {
    for (int i = 0; i < 3; ++i) {
      const int truth_oid = it.order_id(i);
      const uint64_t base = it.pid() - truth_oid * space.stride(i);
      for (int lie = 0; lie < k; ++lie) {
        if (lie == truth_oid) continue;
        const int c1 = class_of[it.pid()];
        const int c2 = class_of[base + lie * space.stride(i)];
        if (c1 == c2) continue;  // pairwiseness makes these self-consistent
        if (seen.emplace(c1, c2, truth_oid).second)
          sc.explicit_arcs.push_back(
              ExplicitArc{c1, c2, catalog->order(truth_oid)});
      }
    }
  }
  sc.expect = Expectation{Expectation::Unsatisfiable, {}};
  return sc;
}

}  // namespace scf
