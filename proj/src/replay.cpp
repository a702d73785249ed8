#include "scf/replay.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <map>
#include <tuple>

#include "scf/derived.hpp"

namespace scf {

namespace {

struct DeductionNames {
  Deduction d;
  const char* name;
};

constexpr DeductionNames kDeductionNames[] = {
    {kStrategyproofArcs, "sp-arcs"},
    {kParetoPrune, "pareto"},
    {kWeakParetoPrune, "weak-pareto"},
    {kCondorcetLoserPrune, "condorcet-loser"},
    {kRankEquality, "rank-equality"},
    {kSupportEquality, "support-equality"},
    {kMajorityEquality, "majority-equality"},
    {kPairwiseEquality, "pairwise-equality"},
    {kNearUnanimitySeed, "near-unanimity-seed"},
    {kAbsoluteMajoritySeed, "absolute-majority-seed"},
    {kNonImpositionSeed, "non-imposition-seed"},
    {kAnonymityLink, "anonymity-link"},
    {kExplicitSeed, "seed"},
};

}  // namespace

const char* deduction_name(Deduction d) {
  for (const auto& e : kDeductionNames)
    if (e.d == d) return e.name;
  return "?";
}

std::optional<Deduction> deduction_from_name(std::string_view name) {
  for (const auto& e : kDeductionNames)
    if (name == e.name) return e.d;
  return std::nullopt;
}

int Scenario::profile_index(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw DomainError("scenario has no profile labelled '" + label + "'");
}

void Scenario::add_profile(std::string label, Profile p) {
  if (p.m() != m || p.n() != n)
    throw DomainError("profile does not match the scenario's (m, n)");
  for (const auto& l : labels)
    if (l == label) throw DomainError("duplicate profile label '" + label + "'");
  labels.push_back(std::move(label));
  profiles.push_back(std::move(p));
}

bool CandidateMap::contradiction() const { return first_empty() >= 0; }

int CandidateMap::first_empty() const {
  for (size_t i = 0; i < cand.size(); ++i)
    if (cand[i] == 0) return static_cast<int>(i);
  return -1;
}

namespace {

uint64_t singleton_allowed(int x) { return uint64_t{1} << (1u << x); }

// Bitmask over choice-set masks of sets containing alternative x.
uint64_t sets_containing(int x, int m) {
  uint64_t out = 0;
  for (uint32_t s = 1; s < (1u << m); ++s)
    if ((s >> x) & 1u) out |= uint64_t{1} << s;
  return out;
}

void record(DeductionTrace* trace, Deduction rule, int profile,
            uint64_t removed, int partner = -1, int voter = -1,
            int alternative = -1) {
  if (!trace || removed == 0) return;
  trace->push_back(TraceRecord{rule, profile, removed, partner, voter,
                               alternative});
}

bool shrink(CandidateMap& cm, int profile, uint64_t keep, Deduction rule,
            DeductionTrace* trace, int partner = -1, int voter = -1,
            int alternative = -1) {
  const uint64_t removed = cm.cand[profile] & ~keep;
  if (!removed) return false;
  record(trace, rule, profile, removed, partner, voter, alternative);
  cm.cand[profile] &= keep;
  return true;
}

// Number of voters whose unique top is x.
int unique_top_count(const Profile& r, int x) {
  int count = 0;
  for (const auto& v : r.voters())
    if (v.uniquely_top_ranks(x)) ++count;
  return count;
}

}  // namespace

CandidateMap init_candidates(const Scenario& sc, DeductionTrace* trace) {
  if (sc.m < 1 || sc.m > 5)
    throw DomainError("replay supports 1 <= m <= 5");
  if (sc.profiles.empty())
    throw DomainError("scenario has no profiles");
  CandidateMap cm;
  cm.m = sc.m;
  cm.cand.assign(sc.profiles.size(), cm.full_mask());
  for (const auto& seed : sc.seeds) {
    if (seed.profile < 0 ||
        seed.profile >= static_cast<int>(sc.profiles.size()))
      throw DomainError("seed references an unknown profile");
    shrink(cm, seed.profile, seed.allowed, kExplicitSeed, trace);
    if (cm.cand[seed.profile] == 0) return cm;  // contradiction at init
  }
  return cm;
}

bool apply_hypothesis_seeds(const Scenario& sc, CandidateMap& cm,
                            DeductionTrace* trace) {
  bool changed = false;
  for (size_t p = 0; p < sc.profiles.size(); ++p) {
    const Profile& r = sc.profiles[p];
    for (int x = 0; x < sc.m; ++x) {
      const int tops = unique_top_count(r, x);
      if ((sc.axioms & kNearUnanimitySeed) && tops >= sc.n - 1)
        changed |= shrink(cm, p, singleton_allowed(x), kNearUnanimitySeed,
                          trace, -1, -1, x);
      if ((sc.axioms & kAbsoluteMajoritySeed) && 2 * tops > sc.n)
        changed |= shrink(cm, p, singleton_allowed(x), kAbsoluteMajoritySeed,
                          trace, -1, -1, x);
      if (cm.cand[p] == 0) return true;
    }
    if (sc.axioms & kNonImpositionSeed) {
      // Licensed by the majority-based theorem's first step: non-imposition
      // plus strategyproofness force Condorcet winners to be chosen uniquely.
      if (const auto cw = condorcet_winner(r)) {
        changed |= shrink(cm, p, singleton_allowed(*cw), kNonImpositionSeed,
                          trace, -1, -1, *cw);
        if (cm.cand[p] == 0) return true;
      }
    }
  }
  return changed;
}

bool prune_pareto(const Scenario& sc, CandidateMap& cm,
                  DeductionTrace* trace) {
  if (!(sc.axioms & kParetoPrune)) return false;
  bool changed = false;
  for (size_t p = 0; p < sc.profiles.size(); ++p) {
    uint64_t bad = 0;
    const uint32_t dom = pareto_dominated_mask(sc.profiles[p]);
    for (int x = 0; x < sc.m; ++x)
      if ((dom >> x) & 1u) bad |= sets_containing(x, sc.m);
    changed |= shrink(cm, p, ~bad, kParetoPrune, trace);
    if (cm.cand[p] == 0) return true;
  }
  return changed;
}

bool prune_weak_pareto(const Scenario& sc, CandidateMap& cm,
                       DeductionTrace* trace) {
  if (!(sc.axioms & kWeakParetoPrune)) return false;
  bool changed = false;
  for (size_t p = 0; p < sc.profiles.size(); ++p) {
    uint64_t bad = 0;
    const uint32_t dom = weak_pareto_dominated_mask(sc.profiles[p]);
    for (int x = 0; x < sc.m; ++x)
      if ((dom >> x) & 1u) bad |= sets_containing(x, sc.m);
    changed |= shrink(cm, p, ~bad, kWeakParetoPrune, trace);
    if (cm.cand[p] == 0) return true;
  }
  return changed;
}

bool prune_condorcet_loser(const Scenario& sc, CandidateMap& cm,
                           DeductionTrace* trace) {
  if (!(sc.axioms & kCondorcetLoserPrune)) return false;
  bool changed = false;
  for (size_t p = 0; p < sc.profiles.size(); ++p) {
    const auto loser = condorcet_loser(sc.profiles[p]);
    if (!loser) continue;
    changed |= shrink(cm, p, ~sets_containing(*loser, sc.m),
                      kCondorcetLoserPrune, trace, -1, -1, *loser);
    if (cm.cand[p] == 0) return true;
  }
  return changed;
}

namespace {

std::string rank_key(const Profile& r) {
  const auto rm = rank_matrix(r);
  std::string key;
  for (int x = 0; x < rm.m(); ++x)
    for (int j = 0; j < rm.n(); ++j) {
      key.push_back(static_cast<char>(rm.at(x, j).strict_above));
      key.push_back(static_cast<char>(rm.at(x, j).tie_class));
    }
  return key;
}

std::string support_key(const Profile& r) {
  const auto sm = support_matrix(r);
  std::string key;
  for (int x = 0; x < sm.m(); ++x)
    for (int y = 0; y < sm.m(); ++y)
      key.push_back(static_cast<char>(sm.s(x, y)));
  return key;
}

std::string margin_key(const Profile& r) {
  const auto sm = support_matrix(r);
  std::string key;
  for (int x = 0; x < sm.m(); ++x)
    for (int y = 0; y < sm.m(); ++y)
      key.push_back(static_cast<char>(sm.margin(x, y) + sm.n()));
  return key;
}

std::string majority_key(const Profile& r) {
  const auto rel = majority_relation(r);
  const uint64_t bits = rel.bits();
  return std::string(reinterpret_cast<const char*>(&bits), sizeof(bits));
}

std::string anonymity_key(const Profile& r) {
  // Canonical representative of the voter-anonymity class: sorted orders.
  std::vector<std::string> rows;
  for (const auto& v : r.voters()) rows.push_back(render_order(v));
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (auto& row : rows) key += row + "|";
  return key;
}

struct EqualityGroups {
  Deduction rule;
  std::vector<std::vector<int>> groups;  // members ascending, singletons kept out
};

std::vector<EqualityGroups> equality_groups(const Scenario& sc) {
  std::vector<EqualityGroups> out;
  const std::pair<Deduction, std::string (*)(const Profile&)> kinds[] = {
      {kRankEquality, rank_key},
      {kSupportEquality, support_key},
      {kMajorityEquality, majority_key},
      {kPairwiseEquality, margin_key},
      {kAnonymityLink, anonymity_key},
  };
  for (const auto& [rule, keyfn] : kinds) {
    if (!(sc.axioms & rule)) continue;
    std::map<std::string, std::vector<int>> by_key;
    for (size_t p = 0; p < sc.profiles.size(); ++p)
      by_key[keyfn(sc.profiles[p])].push_back(static_cast<int>(p));
    EqualityGroups eg{rule, {}};
    for (auto& [key, members] : by_key)
      if (members.size() > 1) eg.groups.push_back(std::move(members));
    // Deterministic order: by smallest member.
    std::sort(eg.groups.begin(), eg.groups.end());
    if (!eg.groups.empty()) out.push_back(std::move(eg));
  }
  return out;
}

bool apply_equality_groups(const std::vector<EqualityGroups>& all,
                           CandidateMap& cm, DeductionTrace* trace) {
  bool changed = false;
  for (const auto& eg : all) {
    for (const auto& members : eg.groups) {
      uint64_t common = ~uint64_t{0};
      for (int p : members) common &= cm.cand[p];
      for (int p : members) {
        changed |= shrink(cm, p, common, eg.rule, trace, members.front());
        if (cm.cand[p] == 0) return true;
      }
    }
  }
  return changed;
}

// One voter's manipulation constraints between two profiles, precomputed as
// incompatibility tables over choice-set masks.
struct ArcRuntime {
  int p = 0, q = 0;
  int voter = -1;  // -1 for explicit (collapsed) arcs
  std::vector<uint64_t> incompat_p;  // [x at p] -> mask of y at q incompatible
  std::vector<uint64_t> incompat_q;  // [y at q] -> mask of x at p incompatible
};

std::vector<ArcRuntime> build_arcs(const Scenario& sc) {
  std::vector<ArcRuntime> arcs;
  const uint32_t nsets = 1u << sc.m;

  if (sc.axioms & kStrategyproofArcs) {
    for (size_t p = 0; p < sc.profiles.size(); ++p) {
      for (size_t q = p + 1; q < sc.profiles.size(); ++q) {
        int voter = -1;
        bool ok = true;
        for (int i = 0; i < sc.n && ok; ++i) {
          if (sc.profiles[p].voter(i) == sc.profiles[q].voter(i)) continue;
          if (voter >= 0)
            ok = false;
          else
            voter = i;
        }
        if (!ok || voter < 0) continue;
        ArcRuntime arc;
        arc.p = static_cast<int>(p);
        arc.q = static_cast<int>(q);
        arc.voter = voter;
        arc.incompat_p.assign(nsets, 0);
        arc.incompat_q.assign(nsets, 0);
        const WeakOrder& at_p = sc.profiles[p].voter(voter);
        const WeakOrder& at_q = sc.profiles[q].voter(voter);
        for (uint32_t x = 1; x < nsets; ++x)
          for (uint32_t y = 1; y < nsets; ++y) {
            // (f(p)=x, f(q)=y) is impossible if the voter gains by lying in
            // either direction.
            const bool bad = kelly_strictly_prefers_masks(at_p, y, x) ||
                             kelly_strictly_prefers_masks(at_q, x, y);
            if (bad) {
              arc.incompat_p[x] |= uint64_t{1} << y;
              arc.incompat_q[y] |= uint64_t{1} << x;
            }
          }
        arcs.push_back(std::move(arc));
      }
    }
  }

  // Explicit directed arcs, merged per (from, to) pair.
  std::map<std::pair<int, int>, size_t> merged;
  for (const auto& ea : sc.explicit_arcs) {
    auto key = std::make_pair(ea.from, ea.to);
    auto it = merged.find(key);
    if (it == merged.end()) {
      ArcRuntime arc;
      arc.p = ea.from;
      arc.q = ea.to;
      arc.incompat_p.assign(nsets, 0);
      arc.incompat_q.assign(nsets, 0);
      merged.emplace(key, arcs.size());
      arcs.push_back(std::move(arc));
      it = merged.find(key);
    }
    ArcRuntime& arc = arcs[it->second];
    for (uint32_t x = 1; x < nsets; ++x)
      for (uint32_t y = 1; y < nsets; ++y)
        if (kelly_strictly_prefers_masks(ea.truth, y, x)) {
          arc.incompat_p[x] |= uint64_t{1} << y;
          arc.incompat_q[y] |= uint64_t{1} << x;
        }
  }
  return arcs;
}

bool apply_arcs(const std::vector<ArcRuntime>& arcs, CandidateMap& cm,
                DeductionTrace* trace) {
  bool changed = false;
  for (const auto& arc : arcs) {
    // Side p: keep x only if some y in cand(q) is compatible with it.
    {
      uint64_t keep = 0;
      uint64_t rest = cm.cand[arc.p];
      while (rest) {
        const int x = std::countr_zero(rest);
        rest &= rest - 1;
        if (cm.cand[arc.q] & ~arc.incompat_p[x]) keep |= uint64_t{1} << x;
      }
      changed |= shrink(cm, arc.p, keep, kStrategyproofArcs, trace, arc.q,
                        arc.voter);
      if (cm.cand[arc.p] == 0) return true;
    }
    {
      uint64_t keep = 0;
      uint64_t rest = cm.cand[arc.q];
      while (rest) {
        const int y = std::countr_zero(rest);
        rest &= rest - 1;
        if (cm.cand[arc.p] & ~arc.incompat_q[y]) keep |= uint64_t{1} << y;
      }
      changed |= shrink(cm, arc.q, keep, kStrategyproofArcs, trace, arc.p,
                        arc.voter);
      if (cm.cand[arc.q] == 0) return true;
    }
  }
  return changed;
}

}  // namespace

bool link_equalities(const Scenario& sc, CandidateMap& cm,
                     DeductionTrace* trace) {
  return apply_equality_groups(equality_groups(sc), cm, trace);
}

bool arc_strategyproof(const Scenario& sc, CandidateMap& cm,
                       DeductionTrace* trace) {
  return apply_arcs(build_arcs(sc), cm, trace);
}

std::vector<std::tuple<int, int, int>> discover_arcs(const Scenario& sc) {
  std::vector<std::tuple<int, int, int>> out;
  Scenario copy = sc;
  copy.axioms |= kStrategyproofArcs;
  copy.explicit_arcs.clear();
  for (const auto& arc : build_arcs(copy))
    out.emplace_back(arc.p, arc.q, arc.voter);
  return out;
}

PropagateResult propagate(const Scenario& sc) {
  PropagateResult res;
  res.map = init_candidates(sc, &res.trace);

  auto check = [&]() {
    const int empty = res.map.first_empty();
    if (empty >= 0 && !res.contradiction_profile)
      res.contradiction_profile = empty;
    return empty >= 0;
  };
  if (check()) return res;

  // Static rules first: seeds and profile-local prunes do not depend on
  // other candidate sets, so one application suffices.
  apply_hypothesis_seeds(sc, res.map, &res.trace);
  if (check()) return res;
  prune_pareto(sc, res.map, &res.trace);
  if (check()) return res;
  prune_weak_pareto(sc, res.map, &res.trace);
  if (check()) return res;
  prune_condorcet_loser(sc, res.map, &res.trace);
  if (check()) return res;

  const auto groups = equality_groups(sc);
  const auto arcs = build_arcs(sc);
  while (true) {
    bool changed = apply_equality_groups(groups, res.map, &res.trace);
    if (check()) return res;
    changed |= apply_arcs(arcs, res.map, &res.trace);
    if (check()) return res;
    if (!changed) break;
  }
  return res;
}

// ---- trace audit ------------------------------------------------------------

namespace {

// Recomputes, from the raw profiles, whether `removed` is exactly what the
// recorded rule may delete at this point of the replayed state.
bool audit_record(const Scenario& sc, const TraceRecord& rec,
                  const CandidateMap& state, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int p = rec.profile;
  if (p < 0 || p >= static_cast<int>(sc.profiles.size()))
    return fail("record names an unknown profile");
  const uint64_t cur = state.cand[p];
  if (rec.removed & ~cur) return fail("record removes an absent candidate");

  switch (rec.rule) {
    case kExplicitSeed: {
      for (const auto& seed : sc.seeds)
        if (seed.profile == p &&
            (cur & ~seed.allowed) == rec.removed)
          return true;
      return fail("seed removal does not match any scenario seed");
    }
    case kNearUnanimitySeed:
    case kAbsoluteMajoritySeed: {
      const int x = rec.alternative;
      if (x < 0 || x >= sc.m) return fail("seed names no alternative");
      const int tops = unique_top_count(sc.profiles[p], x);
      const bool licensed = rec.rule == kNearUnanimitySeed
                                ? tops >= sc.n - 1
                                : 2 * tops > sc.n;
      if (!licensed) return fail("profile does not qualify for the seed");
      return rec.removed == (cur & ~singleton_allowed(x));
    }
    case kNonImpositionSeed: {
      const auto cw = condorcet_winner(sc.profiles[p]);
      if (!cw || *cw != rec.alternative)
        return fail("profile has no matching Condorcet winner");
      return rec.removed == (cur & ~singleton_allowed(*cw));
    }
    case kParetoPrune:
    case kWeakParetoPrune: {
      const uint32_t dom = rec.rule == kParetoPrune
                               ? pareto_dominated_mask(sc.profiles[p])
                               : weak_pareto_dominated_mask(sc.profiles[p]);
      uint64_t bad = 0;
      for (int x = 0; x < sc.m; ++x)
        if ((dom >> x) & 1u) bad |= sets_containing(x, sc.m);
      return rec.removed == (cur & bad);
    }
    case kCondorcetLoserPrune: {
      const auto loser = condorcet_loser(sc.profiles[p]);
      if (!loser || *loser != rec.alternative)
        return fail("profile has no matching Condorcet loser");
      return rec.removed == (cur & sets_containing(*loser, sc.m));
    }
    case kRankEquality:
    case kSupportEquality:
    case kMajorityEquality:
    case kPairwiseEquality:
    case kAnonymityLink: {
      auto key = [&](const Profile& r) {
        switch (rec.rule) {
          case kRankEquality: return rank_key(r);
          case kSupportEquality: return support_key(r);
          case kMajorityEquality: return majority_key(r);
          case kPairwiseEquality: return margin_key(r);
          default: return anonymity_key(r);
        }
      };
      const std::string mine = key(sc.profiles[p]);
      uint64_t common = ~uint64_t{0};
      for (size_t q = 0; q < sc.profiles.size(); ++q)
        if (key(sc.profiles[q]) == mine) common &= state.cand[q];
      return rec.removed == (cur & ~common);
    }
    case kStrategyproofArcs: {
      const int q = rec.partner;
      if (q < 0 || q >= static_cast<int>(sc.profiles.size()))
        return fail("arc record names an unknown partner");
      // Re-derive the incompatibility relation for this arc from scratch.
      auto incompatible = [&](uint32_t x, uint32_t y) {
        if (rec.voter >= 0) {
          const WeakOrder& at_p = sc.profiles[p].voter(rec.voter);
          const WeakOrder& at_q = sc.profiles[q].voter(rec.voter);
          return kelly_strictly_prefers_masks(at_p, y, x) ||
                 kelly_strictly_prefers_masks(at_q, x, y);
        }
        bool bad = false;
        for (const auto& ea : sc.explicit_arcs) {
          if (ea.from == p && ea.to == q &&
              kelly_strictly_prefers_masks(ea.truth, y, x))
            bad = true;
          if (ea.from == q && ea.to == p &&
              kelly_strictly_prefers_masks(ea.truth, x, y))
            bad = true;
        }
        return bad;
      };
      if (rec.voter >= 0) {
        // The recorded pair must really be a single-voter deviation.
        for (int i = 0; i < sc.n; ++i) {
          const bool same = sc.profiles[p].voter(i) == sc.profiles[q].voter(i);
          if (i == rec.voter && same) return fail("arc voter does not deviate");
          if (i != rec.voter && !same) return fail("arc is not a deviation");
        }
      }
      uint64_t rest = rec.removed;
      while (rest) {
        const int x = std::countr_zero(rest);
        rest &= rest - 1;
        uint64_t others = state.cand[q];
        bool supported = false;
        while (others) {
          const int y = std::countr_zero(others);
          others &= others - 1;
          if (!incompatible(static_cast<uint32_t>(x),
                            static_cast<uint32_t>(y))) {
            supported = true;
            break;
          }
        }
        if (supported)
          return fail("arc removed a candidate that still has support");
      }
      return true;
    }
    default:
      return fail("unknown rule in trace");
  }
}

}  // namespace

bool audit_trace(const Scenario& sc, const DeductionTrace& trace,
                 std::string* why) {
  CandidateMap state;
  state.m = sc.m;
  state.cand.assign(sc.profiles.size(), CandidateMap{sc.m, {}}.full_mask());
  for (size_t i = 0; i < trace.size(); ++i) {
    const TraceRecord& rec = trace[i];
    std::string reason;
    if (!audit_record(sc, rec, state, &reason)) {
      if (why)
        *why = "record " + std::to_string(i) + " (" +
               deduction_name(rec.rule) + " at " + sc.label(rec.profile) +
               "): " + reason;
      return false;
    }
    state.cand[rec.profile] &= ~rec.removed;
  }
  return true;
}

// ---- backtracking search -----------------------------------------------------

namespace {

struct SearchContext {
  std::vector<EqualityGroups> groups;
  std::vector<ArcRuntime> arcs;
  std::chrono::steady_clock::time_point deadline;
  uint64_t max_nodes = 0;
  uint64_t nodes = 0;
  bool out_of_budget = false;
  std::vector<uint32_t> assignment;

  bool budget_ok() {
    if (max_nodes && nodes > max_nodes) {
      out_of_budget = true;
      return false;
    }
    if ((nodes & 0xff) == 1 && std::chrono::steady_clock::now() > deadline) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  // Equality + arc fixpoint; true when consistent (no empty candidate set).
  bool infer(CandidateMap& cm) {
    while (true) {
      bool changed = apply_equality_groups(groups, cm, nullptr);
      if (cm.contradiction()) return false;
      changed |= apply_arcs(arcs, cm, nullptr);
      if (cm.contradiction()) return false;
      if (!changed) return true;
    }
  }

  bool dfs(CandidateMap& cm) {
    ++nodes;
    if (!budget_ok()) return false;
    if (!infer(cm)) return false;

    // Fewest-candidates-first variable selection.
    int var = -1;
    int best_count = INT_MAX;
    for (size_t p = 0; p < cm.cand.size(); ++p) {
      const int count = std::popcount(cm.cand[p]);
      if (count > 1 && count < best_count) {
        best_count = count;
        var = static_cast<int>(p);
      }
    }
    if (var < 0) {  // all singletons: a satisfying assignment
      assignment.clear();
      for (uint64_t c : cm.cand)
        assignment.push_back(static_cast<uint32_t>(std::countr_zero(c)));
      return true;
    }

    // Value order: singletons before larger sets, then by mask.
    std::vector<uint32_t> values;
    uint64_t rest = cm.cand[var];
    while (rest) {
      values.push_back(static_cast<uint32_t>(std::countr_zero(rest)));
      rest &= rest - 1;
    }
    std::sort(values.begin(), values.end(), [](uint32_t a, uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    for (uint32_t v : values) {
      CandidateMap child = cm;
      child.cand[var] = uint64_t{1} << v;
      if (dfs(child)) return true;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

SolveResult solve(const Scenario& sc, const SolveBudget& budget) {
  SearchContext ctx;
  ctx.groups = equality_groups(sc);
  ctx.arcs = build_arcs(sc);
  ctx.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double, std::milli>(budget.ms));
  ctx.max_nodes = budget.max_nodes;

  SolveResult res;
  CandidateMap root = init_candidates(sc, nullptr);
  if (!root.contradiction()) {
    apply_hypothesis_seeds(sc, root, nullptr);
    prune_pareto(sc, root, nullptr);
    prune_weak_pareto(sc, root, nullptr);
    prune_condorcet_loser(sc, root, nullptr);
  }
  if (root.contradiction()) {
    res.status = SolveStatus::Unsatisfiable;
    return res;
  }

  const bool sat = ctx.dfs(root);
  res.nodes = ctx.nodes;
  if (ctx.out_of_budget) {
    res.status = SolveStatus::BudgetExceeded;
  } else if (sat) {
    res.status = SolveStatus::Satisfiable;
    res.assignment = std::move(ctx.assignment);
  } else {
    res.status = SolveStatus::Unsatisfiable;
  }
  return res;
}

}  // namespace scf
