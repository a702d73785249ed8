#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "scf/core.hpp"

namespace scf {

// (#strictly above x, size of x's indifference class including x itself).
struct RankTuple {
  uint8_t strict_above = 0;
  uint8_t tie_class = 1;
  friend auto operator<=>(const RankTuple&, const RankTuple&) = default;
};

RankTuple rank_tuple(const WeakOrder& order, int x);

// Row per alternative: that alternative's n rank tuples in ascending
// lexicographic order. Two rank matrices compare equal iff all rows do;
// rank-based SCFs are exactly the maps constant on each equality class.
class RankMatrix {
public:
  RankMatrix(int m, int n, std::vector<RankTuple> cells)
      : m_(m), n_(n), cells_(std::move(cells)) {}
  int m() const { return m_; }
  int n() const { return n_; }
  const RankTuple& at(int alt, int j) const { return cells_[alt * n_ + j]; }
  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

private:
  int m_, n_;
  std::vector<RankTuple> cells_;  // row-major, rows sorted
};

RankMatrix rank_matrix(const Profile& profile);

// s(x, y) = number of voters strictly preferring x to y. Margins and the
// majority relation are both derived views of this matrix.
class SupportMatrix {
public:
  SupportMatrix(int m, int n, std::vector<int> s)
      : m_(m), n_(n), s_(std::move(s)) {}
  int m() const { return m_; }
  int n() const { return n_; }
  int s(int x, int y) const { return s_[x * m_ + y]; }
  int margin(int x, int y) const { return s(x, y) - s(y, x); }
  friend bool operator==(const SupportMatrix&, const SupportMatrix&) = default;

private:
  int m_, n_;
  std::vector<int> s_;
};

SupportMatrix support_matrix(const Profile& profile);

// rel(x, y) iff s(x, y) >= s(y, x); complete by construction.
class MajorityRelation {
public:
  explicit MajorityRelation(const SupportMatrix& s);
  int m() const { return m_; }
  bool rel(int x, int y) const { return (bits_ >> (x * m_ + y)) & 1u; }
  uint64_t bits() const { return bits_; }
  friend bool operator==(const MajorityRelation&,
                         const MajorityRelation&) = default;

private:
  int m_;
  uint64_t bits_;
};

MajorityRelation majority_relation(const Profile& profile);

// x Pareto-dominates y: every voter weakly prefers x, at least one strictly.
bool pareto_dominates(const Profile& profile, int x, int y);

// Bitmask of Pareto-dominated alternatives.
uint32_t pareto_dominated_mask(const Profile& profile);

ChoiceSet pareto_optimal_set(const Profile& profile);

// Weak Pareto-optimality excludes only alternatives that some single
// alternative beats strictly in every voter's order.
uint32_t weak_pareto_dominated_mask(const Profile& profile);
ChoiceSet weak_pareto_optimal_set(const Profile& profile);

std::optional<Alternative> condorcet_winner(const Profile& profile);
std::optional<Alternative> condorcet_loser(const Profile& profile);

// Kelly's strict set extension: X > Y iff every member of X is weakly above
// every member of Y with at least one strict pair.
bool kelly_strictly_prefers(const WeakOrder& order, const ChoiceSet& x,
                            const ChoiceSet& y);

// Mask-level variant used by the scanners and the replay engine.
bool kelly_strictly_prefers_masks(const WeakOrder& order, uint32_t x,
                                  uint32_t y);

}  // namespace scf
