#include "scf/axioms.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace scf {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int clamp_jobs(int jobs) {
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(jobs, 1, std::max(1, hw > 0 ? hw : 8));
}

// Runs fn(worker, lo, hi) over contiguous chunks of [0, total).
template <class Fn>
void parallel_ranges(uint64_t total, int jobs, Fn&& fn) {
  jobs = clamp_jobs(jobs);
  if (jobs <= 1 || total < 4096) {
    fn(0, uint64_t{0}, total);
    return;
  }
  const uint64_t chunk = (total + jobs - 1) / jobs;
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w) {
    const uint64_t lo = std::min<uint64_t>(w * chunk, total);
    const uint64_t hi = std::min<uint64_t>(lo + chunk, total);
    if (lo >= hi) break;
    threads.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
  }
  for (auto& t : threads) t.join();
}

// Choice-set masks of the rule over the whole space, indexed by ProfileId.
std::vector<uint8_t> build_memo(const ProfileSpace& space,
                                const RuleDescriptor& rule, int jobs) {
  std::vector<uint8_t> memo(space.size());
  parallel_ranges(space.size(), jobs, [&](int, uint64_t lo, uint64_t hi) {
    ProfileIterator it(space, lo);
    for (; it.pid() < hi; it.next())
      memo[it.pid()] = static_cast<uint8_t>(rule.evaluate(it.profile()).mask());
  });
  return memo;
}

uint32_t dominated_mask_fast(const OrderCatalog& cat,
                             std::span<const int> oids, int m) {
  uint32_t dominated = 0;
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      if (x == y) continue;
      bool weak_all = true, strict_any = false;
      for (int v = 0; v < static_cast<int>(oids.size()); ++v) {
        const auto& lev = cat.info(oids[v]).lev;
        if (lev[x] > lev[y]) {
          weak_all = false;
          break;
        }
        if (lev[x] < lev[y]) strict_any = true;
      }
      if (weak_all && strict_any) {
        dominated |= 1u << y;
        break;
      }
    }
  }
  return dominated;
}

void supports_fast(const OrderCatalog& cat, std::span<const int> oids, int m,
                   int* s) {
  std::memset(s, 0, sizeof(int) * m * m);
  for (int oid : oids) {
    const auto& lev = cat.info(oid).lev;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (lev[x] < lev[y]) ++s[x * m + y];
  }
}

int condorcet_winner_fast(const int* s, int m) {
  for (int a = 0; a < m; ++a) {
    bool wins = true;
    for (int x = 0; x < m && wins; ++x)
      if (x != a && s[a * m + x] <= s[x * m + a]) wins = false;
    if (wins) return a;
  }
  return -1;
}

int condorcet_loser_fast(const int* s, int m) {
  for (int a = 0; a < m; ++a) {
    bool loses = true;
    for (int x = 0; x < m && loses; ++x)
      if (x != a && s[x * m + a] <= s[a * m + x]) loses = false;
    if (loses) return a;
  }
  return -1;
}

struct Prepared {
  std::shared_ptr<const OrderCatalog> catalog;
  ProfileSpace space;
};

Prepared prepare(const RuleDescriptor& rule, const DomainSpec& spec) {
  require_compatible(rule, spec);
  auto catalog = std::make_shared<OrderCatalog>(spec);
  ProfileSpace space(catalog);
  return Prepared{catalog, std::move(space)};
}

ChoiceSet set_of(uint32_t mask, int m) { return ChoiceSet(mask, m); }

// ---- strategyproofness ----------------------------------------------------

struct SpHit {
  uint64_t pid = UINT64_MAX;
  int voter = 0;
  int lie_oid = 0;
  bool found() const { return pid != UINT64_MAX; }
  bool operator<(const SpHit& o) const {
    return std::tie(pid, voter, lie_oid) < std::tie(o.pid, o.voter, o.lie_oid);
  }
};

CheckResult finish_sp(const Prepared& prep, const RuleDescriptor& rule,
                      const SpHit& best, uint64_t scanned_on_pass,
                      Clock::time_point t0) {
  CheckResult res;
  res.elapsed_ms = ms_since(t0);
  if (!best.found()) {
    res.verdict = Verdict::Pass;
    res.profiles_scanned = scanned_on_pass;
    return res;
  }
  res.verdict = Verdict::Fail;
  res.profiles_scanned = best.pid + 1;
  Profile truth = prep.space.decode(best.pid);
  Profile lie = truth;
  lie.set_voter(best.voter, prep.catalog->order(best.lie_oid));
  Witness w;
  w.kind = "manipulation";
  w.voter = best.voter;
  w.sets = {rule.evaluate(truth), rule.evaluate(lie)};
  w.profiles = {std::move(truth), std::move(lie)};
  res.witness = std::move(w);
  return res;
}

}  // namespace

CheckResult check_strategyproof(const RuleDescriptor& rule,
                                const DomainSpec& spec, CheckOptions opts) {
  const auto t0 = Clock::now();
  auto prep = prepare(rule, spec);
  const auto memo = build_memo(prep.space, rule, opts.jobs);
  const int k = prep.catalog->count();
  const int n = spec.n;

  std::vector<SpHit> hits(clamp_jobs(opts.jobs));
  parallel_ranges(prep.space.size(), opts.jobs,
                  [&](int w, uint64_t lo, uint64_t hi) {
    ProfileIterator it(prep.space, lo);
    for (; it.pid() < hi; it.next()) {
      const uint32_t fx = memo[it.pid()];
      for (int i = 0; i < n; ++i) {
        const int truth_oid = it.order_id(i);
        const OrderInfo& inf = prep.catalog->info(truth_oid);
        const uint64_t stride = prep.space.stride(i);
        const uint64_t base = it.pid() - truth_oid * stride;
        for (int lie = 0; lie < k; ++lie) {
          if (lie == truth_oid) continue;
          if (inf.kelly(memo[base + lie * stride], fx)) {
            hits[w] = SpHit{it.pid(), i, lie};
            return;
          }
        }
      }
    }
  });
  SpHit best = *std::min_element(hits.begin(), hits.end());
  return finish_sp(prep, rule, best, prep.space.size(), t0);
}

CheckResult check_strategyproof_canonical(const RuleDescriptor& rule,
                                          const DomainSpec& spec) {
  const auto t0 = Clock::now();
  auto prep = prepare(rule, spec);
  const auto memo = build_memo(prep.space, rule, 1);
  const int k = prep.catalog->count();
  const int n = spec.n;
  uint64_t scanned = 0;
  SpHit best;
  ProfileIterator it(prep.space, 0);
  for (; !it.done() && !best.found(); it.next()) {
    if (!voter_canonical(it.order_ids())) continue;
    ++scanned;
    const uint32_t fx = memo[it.pid()];
    for (int i = 0; i < n && !best.found(); ++i) {
      const int truth_oid = it.order_id(i);
      const OrderInfo& inf = prep.catalog->info(truth_oid);
      const uint64_t stride = prep.space.stride(i);
      const uint64_t base = it.pid() - truth_oid * stride;
      for (int lie = 0; lie < k; ++lie) {
        if (lie == truth_oid) continue;
        if (inf.kelly(memo[base + lie * stride], fx)) {
          best = SpHit{it.pid(), i, lie};
          break;
        }
      }
    }
  }
  auto res = finish_sp(prep, rule, best, scanned, t0);
  if (res.verdict == Verdict::Fail) res.profiles_scanned = scanned;
  return res;
}

CheckResult check_pareto_optimal(const RuleDescriptor& rule,
                                 const DomainSpec& spec, CheckOptions opts) {
  const auto t0 = Clock::now();
  auto prep = prepare(rule, spec);
  const int m = spec.m;

  std::vector<uint64_t> hits(clamp_jobs(opts.jobs), UINT64_MAX);
  parallel_ranges(prep.space.size(), opts.jobs,
                  [&](int w, uint64_t lo, uint64_t hi) {
    ProfileIterator it(prep.space, lo);
    for (; it.pid() < hi; it.next()) {
      const uint32_t dom =
          dominated_mask_fast(*prep.catalog, it.order_ids(), m);
      if (dom && (rule.evaluate(it.profile()).mask() & dom)) {
        hits[w] = it.pid();
        return;
      }
    }
  });
  const uint64_t pid = *std::min_element(hits.begin(), hits.end());

  CheckResult res;
  res.elapsed_ms = ms_since(t0);
  if (pid == UINT64_MAX) {
    res.profiles_scanned = prep.space.size();
    return res;
  }
  res.verdict = Verdict::Fail;
  res.profiles_scanned = pid + 1;
  Profile r = prep.space.decode(pid);
  const ChoiceSet out = rule.evaluate(r);
  int dominated = -1, dominator = -1;
  for (int y = 0; y < m && dominated < 0; ++y) {
    if (!out.contains(y)) continue;
    for (int x = 0; x < m && dominated < 0; ++x)
      if (x != y && pareto_dominates(r, x, y)) {
        dominated = y;
        dominator = x;
      }
  }
  Witness w;
  w.kind = "pareto-violation";
  w.sets = {out};
  w.alternative = dominated;
  w.alternative2 = dominator;
  w.profiles = {std::move(r)};
  res.witness = std::move(w);
  return res;
}

CheckResult check_anonymous(const RuleDescriptor& rule, const DomainSpec& spec,
                            CheckOptions opts) {
  const auto t0 = Clock::now();
  auto prep = prepare(rule, spec);
  const auto memo = build_memo(prep.space, rule, opts.jobs);
  const int n = spec.n;

  // Adjacent transpositions generate the symmetric group, so checking them
  // is enough for a Pass, and any hit is a genuine transposition witness.
  struct Hit {
    uint64_t pid = UINT64_MAX;
    int voter = 0;
  };
  std::vector<Hit> hits(clamp_jobs(opts.jobs));
  parallel_ranges(prep.space.size(), opts.jobs,
                  [&](int w, uint64_t lo, uint64_t hi) {
    ProfileIterator it(prep.space, lo);
    for (; it.pid() < hi; it.next()) {
      for (int i = 0; i + 1 < n; ++i) {
        const int a = it.order_id(i), b = it.order_id(i + 1);
        if (a == b) continue;
        const uint64_t pid2 = it.pid() +
                              (b - a) * prep.space.stride(i) +
                              (a - b) * prep.space.stride(i + 1);
        if (memo[it.pid()] != memo[pid2]) {
          hits[w] = {it.pid(), i};
          return;
        }
      }
    }
  });
  Hit best{UINT64_MAX, 0};
  for (const auto& h : hits)
    if (std::tie(h.pid, h.voter) < std::tie(best.pid, best.voter)) best = h;

  CheckResult res;
  res.elapsed_ms = ms_since(t0);
  if (best.pid == UINT64_MAX) {
    res.profiles_scanned = prep.space.size();
    return res;
  }
  res.verdict = Verdict::Fail;
  res.profiles_scanned = best.pid + 1;
  Profile r = prep.space.decode(best.pid);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::swap(perm[best.voter], perm[best.voter + 1]);
  Profile r2 = permute_voters(r, perm);
  Witness w;
  w.kind = "anonymity-violation";
  w.voter = best.voter;
  w.sets = {rule.evaluate(r), rule.evaluate(r2)};
  w.profiles = {std::move(r), std::move(r2)};
  res.witness = std::move(w);
  return res;
}

// ---- basedness checks (group profiles by a signature) ----------------------

namespace {

struct GroupState {
  uint64_t a_pid = UINT64_MAX;
  uint32_t a_out = 0;
  uint64_t b_pid = UINT64_MAX;  // smallest pid whose output differs from a's
  uint32_t b_out = 0;

  void add(uint64_t pid, uint32_t out) {
    if (pid < a_pid) {
      const uint64_t oa_pid = a_pid;
      const uint32_t oa_out = a_out;
      a_pid = pid;
      a_out = out;
      uint64_t nb_pid = UINT64_MAX;
      uint32_t nb_out = 0;
      if (oa_pid != UINT64_MAX && oa_out != a_out) {
        nb_pid = oa_pid;
        nb_out = oa_out;
      }
      if (b_pid != UINT64_MAX && b_out != a_out && b_pid < nb_pid) {
        nb_pid = b_pid;
        nb_out = b_out;
      }
      b_pid = nb_pid;
      b_out = nb_out;
    } else if (out != a_out && pid < b_pid) {
      b_pid = pid;
      b_out = out;
    }
  }
  void merge(const GroupState& o) {
    if (o.a_pid != UINT64_MAX) add(o.a_pid, o.a_out);
    if (o.b_pid != UINT64_MAX) add(o.b_pid, o.b_out);
  }
};

enum class Signature { Rank, Support, Margins, Majority };

void signature_key(Signature kind, const OrderCatalog& cat,
                   std::span<const int> oids, int m, int n, std::string& key) {
  key.clear();
  switch (kind) {
    case Signature::Rank: {
      RankTuple row[32];
      for (int x = 0; x < m; ++x) {
        for (int v = 0; v < n; ++v) row[v] = cat.info(oids[v]).rank[x];
        std::sort(row, row + n);
        for (int v = 0; v < n; ++v) {
          key.push_back(static_cast<char>(row[v].strict_above));
          key.push_back(static_cast<char>(row[v].tie_class));
        }
      }
      break;
    }
    case Signature::Support:
    case Signature::Margins: {
      int s[64];
      supports_fast(cat, oids, m, s);
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          if (x == y) continue;
          const int val = kind == Signature::Support
                              ? s[x * m + y]
                              : s[x * m + y] - s[y * m + x] + n;
          key.push_back(static_cast<char>(val));
        }
      break;
    }
    case Signature::Majority: {
      int s[64];
      supports_fast(cat, oids, m, s);
      uint64_t bits = 0;
      int idx = 0;
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          if (x == y) continue;
          if (s[x * m + y] >= s[y * m + x]) bits |= uint64_t{1} << idx;
          ++idx;
        }
      key.assign(reinterpret_cast<const char*>(&bits), sizeof(bits));
      break;
    }
  }
}

CheckResult check_signature_based(Signature kind, const char* witness_kind,
                                  const RuleDescriptor& rule,
                                  const DomainSpec& spec, CheckOptions opts) {
  const auto t0 = Clock::now();
  auto prep = prepare(rule, spec);
  const auto memo = build_memo(prep.space, rule, opts.jobs);
  const int m = spec.m, n = spec.n;
  const int jobs = clamp_jobs(opts.jobs);

  using Map = std::unordered_map<std::string, GroupState>;
  std::vector<Map> maps(jobs);
  parallel_ranges(prep.space.size(), opts.jobs,
                  [&](int w, uint64_t lo, uint64_t hi) {
    Map& groups = maps[w];
    std::string key;
    ProfileIterator it(prep.space, lo);
    for (; it.pid() < hi; it.next()) {
      signature_key(kind, *prep.catalog, it.order_ids(), m, n, key);
      groups[key].add(it.pid(), memo[it.pid()]);
    }
  });
  Map& groups = maps[0];
  for (int w = 1; w < jobs; ++w) {
    for (auto& [key, st] : maps[w]) groups[key].merge(st);
    maps[w].clear();
  }

  GroupState best;
  for (const auto& [key, st] : groups)
    if (st.b_pid < best.b_pid) best = st;

  CheckResult res;
  res.elapsed_ms = ms_since(t0);
  res.profiles_scanned = prep.space.size();
  if (best.b_pid == UINT64_MAX) return res;
  res.verdict = Verdict::Fail;
  Witness w;
  w.kind = witness_kind;
  w.sets = {set_of(best.a_out, m), set_of(best.b_out, m)};
  w.profiles = {prep.space.decode(best.a_pid), prep.space.decode(best.b_pid)};
  res.witness = std::move(w);
  return res;
}

}  // namespace

CheckResult check_rank_based(const RuleDescriptor& rule, const DomainSpec& spec,
                             CheckOptions opts) {
  return check_signature_based(Signature::Rank, "rank-signature-conflict",
                               rule, spec, opts);
}

CheckResult check_support_based(const RuleDescriptor& rule,
                                const DomainSpec& spec, CheckOptions opts) {
  return check_signature_based(Signature::Support,
                               "support-signature-conflict", rule, spec, opts);
}

CheckResult check_pairwise(const RuleDescriptor& rule, const DomainSpec& spec,
                           CheckOptions opts) {
  return check_signature_based(Signature::Margins, "margin-signature-conflict",
                               rule, spec, opts);
}

CheckResult check_majority_based(const RuleDescriptor& rule,
                                 const DomainSpec& spec, CheckOptions opts) {
  return check_signature_based(Signature::Majority,
                               "majority-signature-conflict", rule, spec, opts);
}

// ---- remaining profile-local checks ----------------------------------------

CheckResult check_non_imposing(const RuleDescriptor& rule,
                               const DomainSpec& spec, CheckOptions opts) {
  const auto t0 = Clock::now();
  auto prep = prepare(rule, spec);
  const uint32_t all = (1u << spec.m) - 1;

  std::vector<uint32_t> covered(clamp_jobs(opts.jobs), 0);
  std::vector<uint64_t> stop(clamp_jobs(opts.jobs), 0);
  parallel_ranges(prep.space.size(), opts.jobs,
                  [&](int w, uint64_t lo, uint64_t hi) {
    ProfileIterator it(prep.space, lo);
    for (; it.pid() < hi; it.next()) {
      const uint32_t out = rule.evaluate(it.profile()).mask();
      if (std::popcount(out) == 1) covered[w] |= out;
      if (covered[w] == all) break;  // this worker cannot add more
    }
    stop[w] = it.done() ? hi : it.pid() + 1;
  });
  uint32_t total_covered = 0;
  uint64_t scanned = 0;
  for (size_t w = 0; w < covered.size(); ++w) {
    total_covered |= covered[w];
    scanned = std::max(scanned, stop[w]);
  }

  CheckResult res;
  res.elapsed_ms = ms_since(t0);
  res.profiles_scanned = scanned;
  if (total_covered == all) return res;
  res.verdict = Verdict::Fail;
  res.profiles_scanned = prep.space.size();
  Witness w;
  w.kind = "never-unique-winner";
  w.alternative = std::countr_zero(~total_covered & all);
  res.witness = std::move(w);
  return res;
}

namespace {

// Shared shape of the two Condorcet checks: per profile, derive a target
// alternative from the support matrix and test the rule's output against it.
template <class Check>
CheckResult scan_condorcet(const RuleDescriptor& rule, const DomainSpec& spec,
                           CheckOptions opts, const char* kind, Check check) {
  const auto t0 = Clock::now();
  auto prep = prepare(rule, spec);
  const int m = spec.m;

  struct Hit {
    uint64_t pid = UINT64_MAX;
    int alt = -1;
  };
  std::vector<Hit> hits(clamp_jobs(opts.jobs));
  parallel_ranges(prep.space.size(), opts.jobs,
                  [&](int w, uint64_t lo, uint64_t hi) {
    int s[64];
    ProfileIterator it(prep.space, lo);
    for (; it.pid() < hi; it.next()) {
      supports_fast(*prep.catalog, it.order_ids(), m, s);
      const int alt = check.target(s, m);
      if (alt < 0) continue;
      if (check.violates(rule.evaluate(it.profile()).mask(), alt)) {
        hits[w] = {it.pid(), alt};
        return;
      }
    }
  });
  Hit best;
  for (const auto& h : hits)
    if (h.pid < best.pid) best = h;

  CheckResult res;
  res.elapsed_ms = ms_since(t0);
  if (best.pid == UINT64_MAX) {
    res.profiles_scanned = prep.space.size();
    return res;
  }
  res.verdict = Verdict::Fail;
  res.profiles_scanned = best.pid + 1;
  Profile r = prep.space.decode(best.pid);
  Witness w;
  w.kind = kind;
  w.alternative = best.alt;
  w.sets = {rule.evaluate(r)};
  w.profiles = {std::move(r)};
  res.witness = std::move(w);
  return res;
}

}  // namespace

CheckResult check_condorcet_consistent(const RuleDescriptor& rule,
                                       const DomainSpec& spec,
                                       CheckOptions opts) {
  struct {
    int target(const int* s, int m) const { return condorcet_winner_fast(s, m); }
    bool violates(uint32_t out, int alt) const {
      return out != (1u << alt);
    }
  } check;
  return scan_condorcet(rule, spec, opts, "condorcet-winner-not-unique-choice",
                        check);
}

CheckResult check_condorcet_loser_property(const RuleDescriptor& rule,
                                           const DomainSpec& spec,
                                           CheckOptions opts) {
  struct {
    int target(const int* s, int m) const { return condorcet_loser_fast(s, m); }
    bool violates(uint32_t out, int alt) const {
      return (out >> alt) & 1u;
    }
  } check;
  return scan_condorcet(rule, spec, opts, "condorcet-loser-chosen", check);
}

CheckResult check_near_unanimity(const RuleDescriptor& rule,
                                 const DomainSpec& spec, CheckOptions,
                                 std::optional<int> only_x) {
  const auto t0 = Clock::now();
  if (spec.n < 2) throw DomainError("near unanimity needs n >= 2");
  require_compatible(rule, spec);
  OrderCatalog catalog(spec);
  const int m = spec.m, n = spec.n, k = catalog.count();

  CheckResult res;
  for (int x = 0; x < m; ++x) {
    if (only_x && *only_x != x) continue;
    std::vector<int> uniquely_top;
    for (int i = 0; i < k; ++i)
      if (catalog.order(i).uniquely_top_ranks(x)) uniquely_top.push_back(i);
    if (uniquely_top.empty()) continue;

    for (int dissenter = 0; dissenter < n; ++dissenter) {
      // Odometer over the n-1 supporters' unique-top orders; the dissenter
      // ranges over the whole order set.
      std::vector<int> pick(n - 1, 0);
      while (true) {
        for (int d = 0; d < k; ++d) {
          std::vector<WeakOrder> voters;
          voters.reserve(n);
          int supporter = 0;
          for (int i = 0; i < n; ++i)
            voters.push_back(i == dissenter
                                 ? catalog.order(d)
                                 : catalog.order(uniquely_top[pick[supporter++]]));
          Profile r(std::move(voters));
          ++res.profiles_scanned;
          const ChoiceSet out = rule.evaluate(r);
          if (out.mask() != (1u << x)) {
            res.verdict = Verdict::Fail;
            Witness w;
            w.kind = "near-unanimity-violation";
            w.alternative = x;
            w.voter = dissenter;
            w.sets = {out};
            w.profiles = {std::move(r)};
            res.witness = std::move(w);
            res.elapsed_ms = ms_since(t0);
            return res;
          }
        }
        int i = n - 2;
        while (i >= 0 && pick[i] == static_cast<int>(uniquely_top.size()) - 1)
          pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
      }
    }
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

std::vector<int> nominators(const RuleDescriptor& rule, const DomainSpec& spec,
                            uint64_t* profiles_scanned) {
  auto prep = prepare(rule, spec);
  uint32_t surviving = (1u << spec.n) - 1;
  uint64_t scanned = 0;
  ProfileIterator it(prep.space, 0);
  for (; !it.done() && surviving; it.next()) {
    ++scanned;
    const uint32_t out = rule.evaluate(it.profile()).mask();
    for (int i = 0; i < spec.n; ++i) {
      if (!((surviving >> i) & 1u)) continue;
      if (!(out & prep.catalog->info(it.order_id(i)).top_mask))
        surviving &= ~(1u << i);
    }
  }
  if (profiles_scanned) *profiles_scanned = scanned;
  std::vector<int> out;
  for (int i = 0; i < spec.n; ++i)
    if ((surviving >> i) & 1u) out.push_back(i);
  return out;
}

bool revalidate_witness(const RuleDescriptor& rule, const std::string& axiom,
                        const Witness& w) {
  if (axiom == "strategyproof") {
    if (w.profiles.size() != 2 || w.sets.size() != 2 || w.voter < 0)
      return false;
    const Profile& truth = w.profiles[0];
    const Profile& lie = w.profiles[1];
    for (int j = 0; j < truth.n(); ++j)
      if (j != w.voter && !(truth.voter(j) == lie.voter(j))) return false;
    if (truth.voter(w.voter) == lie.voter(w.voter)) return false;
    if (!(rule.evaluate(truth) == w.sets[0])) return false;
    if (!(rule.evaluate(lie) == w.sets[1])) return false;
    return kelly_strictly_prefers(truth.voter(w.voter), w.sets[1], w.sets[0]);
  }
  if (axiom == "pareto-optimal") {
    if (w.profiles.size() != 1 || w.alternative < 0 || w.alternative2 < 0)
      return false;
    const Profile& r = w.profiles[0];
    return rule.evaluate(r).contains(w.alternative) &&
           pareto_dominates(r, w.alternative2, w.alternative);
  }
  if (axiom == "anonymous") {
    if (w.profiles.size() != 2) return false;
    // The recorded pair must be a voter permutation of each other.
    std::vector<int> perm(w.profiles[0].n());
    for (int i = 0; i < w.profiles[0].n(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    bool is_perm = false;
    do {
      if (permute_voters(w.profiles[0], perm) == w.profiles[1]) {
        is_perm = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return is_perm &&
           !(rule.evaluate(w.profiles[0]) == rule.evaluate(w.profiles[1]));
  }
  if (axiom == "rank-based" || axiom == "support-based" ||
      axiom == "pairwise" || axiom == "majority-based") {
    if (w.profiles.size() != 2) return false;
    const Profile& r1 = w.profiles[0];
    const Profile& r2 = w.profiles[1];
    bool same_sig = false;
    if (axiom == "rank-based") same_sig = rank_matrix(r1) == rank_matrix(r2);
    if (axiom == "support-based")
      same_sig = support_matrix(r1) == support_matrix(r2);
    if (axiom == "pairwise") {
      const auto s1 = support_matrix(r1), s2 = support_matrix(r2);
      same_sig = true;
      for (int x = 0; x < r1.m(); ++x)
        for (int y = 0; y < r1.m(); ++y)
          if (s1.margin(x, y) != s2.margin(x, y)) same_sig = false;
    }
    if (axiom == "majority-based")
      same_sig = majority_relation(r1) == majority_relation(r2);
    return same_sig && !(rule.evaluate(r1) == rule.evaluate(r2));
  }
  if (axiom == "non-imposing") {
    // The failure is global (no profile makes the alternative the unique
    // winner); the witness only names the uncovered alternative.
    return w.alternative >= 0;
  }
  if (axiom == "condorcet-consistent") {
    if (w.profiles.size() != 1) return false;
    const auto cw = condorcet_winner(w.profiles[0]);
    return cw && *cw == w.alternative &&
           !(rule.evaluate(w.profiles[0]) ==
             ChoiceSet::single(w.alternative, w.profiles[0].m()));
  }
  if (axiom == "condorcet-loser") {
    if (w.profiles.size() != 1) return false;
    const auto cl = condorcet_loser(w.profiles[0]);
    return cl && *cl == w.alternative &&
           rule.evaluate(w.profiles[0]).contains(w.alternative);
  }
  if (axiom == "near-unanimity") {
    if (w.profiles.size() != 1 || w.alternative < 0) return false;
    const Profile& r = w.profiles[0];
    int unique_top = 0;
    for (const auto& v : r.voters())
      if (v.uniquely_top_ranks(w.alternative)) ++unique_top;
    return unique_top >= r.n() - 1 &&
           !(rule.evaluate(r) == ChoiceSet::single(w.alternative, r.m()));
  }
  return false;
}

const std::vector<AxiomDescriptor>& axiom_registry() {
  static const std::vector<AxiomDescriptor> registry = {
      {"strategyproof",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_strategyproof(r, s, o);
       }},
      {"pareto-optimal",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_pareto_optimal(r, s, o);
       }},
      {"anonymous",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_anonymous(r, s, o);
       }},
      {"rank-based",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_rank_based(r, s, o);
       }},
      {"support-based",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_support_based(r, s, o);
       }},
      {"pairwise",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_pairwise(r, s, o);
       }},
      {"majority-based",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_majority_based(r, s, o);
       }},
      {"non-imposing",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_non_imposing(r, s, o);
       }},
      {"condorcet-consistent",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_condorcet_consistent(r, s, o);
       }},
      {"condorcet-loser",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_condorcet_loser_property(r, s, o);
       }},
      {"near-unanimity",
       [](const RuleDescriptor& r, const DomainSpec& s, CheckOptions o) {
         return check_near_unanimity(r, s, o);
       }},
  };
  return registry;
}

const AxiomDescriptor& find_axiom(const std::string& name) {
  for (const auto& a : axiom_registry())
    if (a.name == name) return a;
  std::string msg = "unknown axiom '" + name + "'; available:";
  for (const auto& a : axiom_registry()) msg += " " + a.name;
  throw DomainError(msg);
}

}  // namespace scf
