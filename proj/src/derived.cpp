#include "scf/derived.hpp"

#include <algorithm>

namespace scf {

RankTuple rank_tuple(const WeakOrder& order, int x) {
  const int lx = order.level(x);
  RankTuple t{0, 0};
  for (int y = 0; y < order.m(); ++y) {
    const int ly = order.level(y);
    if (ly < lx) ++t.strict_above;
    if (ly == lx) ++t.tie_class;  // counts x itself
  }
  return t;
}

RankMatrix rank_matrix(const Profile& profile) {
  const int m = profile.m(), n = profile.n();
  std::vector<RankTuple> cells(static_cast<size_t>(m) * n);
  for (int x = 0; x < m; ++x) {
    auto row = cells.begin() + static_cast<size_t>(x) * n;
    for (int i = 0; i < n; ++i) row[i] = rank_tuple(profile.voter(i), x);
    std::sort(row, row + n);
  }
  return RankMatrix(m, n, std::move(cells));
}

SupportMatrix support_matrix(const Profile& profile) {
  const int m = profile.m();
  std::vector<int> s(static_cast<size_t>(m) * m, 0);
  for (const auto& v : profile.voters())
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (v.strictly_prefers(x, y)) ++s[x * m + y];
  return SupportMatrix(m, profile.n(), std::move(s));
}

MajorityRelation::MajorityRelation(const SupportMatrix& s) : m_(s.m()), bits_(0) {
  for (int x = 0; x < m_; ++x)
    for (int y = 0; y < m_; ++y)
      if (s.s(x, y) >= s.s(y, x)) bits_ |= uint64_t{1} << (x * m_ + y);
}

MajorityRelation majority_relation(const Profile& profile) {
  return MajorityRelation(support_matrix(profile));
}

bool pareto_dominates(const Profile& profile, int x, int y) {
  if (x == y) throw DomainError("pareto_dominates: x == y");
  bool strict = false;
  for (const auto& v : profile.voters()) {
    if (!v.weakly_prefers(x, y)) return false;
    if (v.strictly_prefers(x, y)) strict = true;
  }
  return strict;
}

uint32_t pareto_dominated_mask(const Profile& profile) {
  const int m = profile.m();
  uint32_t dominated = 0;
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m && !((dominated >> y) & 1u); ++x)
      if (x != y && pareto_dominates(profile, x, y)) dominated |= 1u << y;
  return dominated;
}

ChoiceSet pareto_optimal_set(const Profile& profile) {
  const uint32_t all = (1u << profile.m()) - 1;
  return ChoiceSet(all & ~pareto_dominated_mask(profile), profile.m());
}

uint32_t weak_pareto_dominated_mask(const Profile& profile) {
  const int m = profile.m();
  uint32_t dominated = 0;
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      if (x == y) continue;
      bool all_strict = true;
      for (const auto& v : profile.voters())
        if (!v.strictly_prefers(x, y)) {
          all_strict = false;
          break;
        }
      if (all_strict) {
        dominated |= 1u << y;
        break;
      }
    }
  }
  return dominated;
}

ChoiceSet weak_pareto_optimal_set(const Profile& profile) {
  const uint32_t all = (1u << profile.m()) - 1;
  return ChoiceSet(all & ~weak_pareto_dominated_mask(profile), profile.m());
}

std::optional<Alternative> condorcet_winner(const Profile& profile) {
  const auto s = support_matrix(profile);
  const int m = profile.m();
  for (int a = 0; a < m; ++a) {
    bool wins_all = true;
    for (int x = 0; x < m && wins_all; ++x)
      if (x != a && s.s(a, x) <= s.s(x, a)) wins_all = false;
    if (wins_all) return a;
  }
  return std::nullopt;
}

std::optional<Alternative> condorcet_loser(const Profile& profile) {
  const auto s = support_matrix(profile);
  const int m = profile.m();
  for (int a = 0; a < m; ++a) {
    bool loses_all = true;
    for (int x = 0; x < m && loses_all; ++x)
      if (x != a && s.s(x, a) <= s.s(a, x)) loses_all = false;
    if (loses_all) return a;
  }
  return std::nullopt;
}

bool kelly_strictly_prefers_masks(const WeakOrder& order, uint32_t x,
                                  uint32_t y) {
  // X > Y iff max level of X <= min level of Y (all weak) and
  // min level of X < max level of Y (some strict pair exists).
  int xmin = 127, xmax = -1, ymin = 127, ymax = -1;
  for (int a = 0; a < order.m(); ++a) {
    const int l = order.level(a);
    if ((x >> a) & 1u) {
      xmin = std::min(xmin, l);
      xmax = std::max(xmax, l);
    }
    if ((y >> a) & 1u) {
      ymin = std::min(ymin, l);
      ymax = std::max(ymax, l);
    }
  }
  return xmax <= ymin && xmin < ymax;
}

bool kelly_strictly_prefers(const WeakOrder& order, const ChoiceSet& x,
                            const ChoiceSet& y) {
  if (x.m() != order.m() || y.m() != order.m())
    throw DomainError("kelly comparison across different m");
  return kelly_strictly_prefers_masks(order, x.mask(), y.mask());
}

}  // namespace scf
