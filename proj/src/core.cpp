#include "scf/core.hpp"

#include <algorithm>
#include <bit>

namespace scf {

ChoiceSet::ChoiceSet(uint32_t mask, int m) : mask_(mask), m_(m) {
  if (m < 1 || m > kMaxAlternatives)
    throw DomainError("choice set: m out of range");
  if (mask == 0) throw DomainError("choice set must be non-empty");
  if (mask >= (1u << m))
    throw DomainError("choice set contains an alternative >= m");
}

ChoiceSet ChoiceSet::of(std::initializer_list<int> alts, int m) {
  uint32_t mask = 0;
  for (int a : alts) {
    if (a < 0 || a >= m) throw DomainError("alternative index out of range");
    mask |= 1u << a;
  }
  return ChoiceSet(mask, m);
}

ChoiceSet ChoiceSet::full(int m) { return ChoiceSet((1u << m) - 1, m); }

ChoiceSet ChoiceSet::single(int x, int m) {
  if (x < 0 || x >= m) throw DomainError("alternative index out of range");
  return ChoiceSet(1u << x, m);
}

int ChoiceSet::size() const { return std::popcount(mask_); }

std::vector<int> ChoiceSet::members() const {
  std::vector<int> out;
  for (int x = 0; x < m_; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

WeakOrder WeakOrder::from_levels(const std::vector<int>& levels) {
  const int m = static_cast<int>(levels.size());
  if (m < 1 || m > kMaxAlternatives)
    throw DomainError("weak order: m out of range");
  std::vector<int> used(levels);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  WeakOrder o;
  o.m_ = static_cast<uint8_t>(m);
  o.levels_ = static_cast<uint8_t>(used.size());
  for (int x = 0; x < m; ++x) {
    auto it = std::lower_bound(used.begin(), used.end(), levels[x]);
    o.lev_[x] = static_cast<uint8_t>(it - used.begin());
  }
  return o;
}

WeakOrder WeakOrder::indifferent(int m) {
  return from_levels(std::vector<int>(m, 0));
}

int WeakOrder::level(int x) const {
  check(x);
  return lev_[x];
}

void WeakOrder::check(int x) const {
  if (x < 0 || x >= m_) throw DomainError("alternative index out of range");
}

bool WeakOrder::is_strict() const { return levels_ == m_; }

uint32_t WeakOrder::class_mask(int level) const {
  uint32_t mask = 0;
  for (int x = 0; x < m_; ++x)
    if (lev_[x] == level) mask |= 1u << x;
  return mask;
}

Profile::Profile(std::vector<WeakOrder> voters) : voters_(std::move(voters)) {
  if (voters_.empty()) throw DomainError("profile needs at least one voter");
  m_ = voters_.front().m();
  for (const auto& v : voters_)
    if (v.m() != m_) throw DomainError("profile voters disagree on m");
}

const WeakOrder& Profile::voter(int i) const {
  if (i < 0 || i >= n()) throw DomainError("voter index out of range");
  return voters_[i];
}

void Profile::set_voter(int i, const WeakOrder& order) {
  if (i < 0 || i >= n()) throw DomainError("voter index out of range");
  if (order.m() != m_) throw DomainError("order has wrong m");
  voters_[i] = order;
}

}  // namespace scf
