#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "scf/core.hpp"
#include "scf/derived.hpp"

namespace scf {

// Parameterizes an exhaustive domain: all profiles of n weak (or strict)
// orders over m alternatives. exclude_indifferent drops the single
// completely-indifferent order from the per-voter order set.
struct DomainSpec {
  int m = 3;
  int n = 1;
  bool strict_only = false;
  bool exclude_indifferent = false;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

// Per-order tables used by the hot scan loops. minlev/maxlev are indexed by
// subset mask, so a Kelly comparison is two table lookups.
struct OrderInfo {
  std::array<uint8_t, kMaxAlternatives> lev{};
  uint32_t top_mask = 0;
  uint32_t bottom_mask = 0;
  std::array<RankTuple, kMaxAlternatives> rank{};
  std::array<uint8_t, 1u << kMaxAlternatives> minlev{};
  std::array<uint8_t, 1u << kMaxAlternatives> maxlev{};

  bool kelly(uint32_t x, uint32_t y) const {
    return maxlev[x] <= minlev[y] && minlev[x] < maxlev[y];
  }
  bool strictly_prefers(int x, int y) const { return lev[x] < lev[y]; }
};

// The per-voter order set of a DomainSpec, in a fixed deterministic order
// (lexicographic on canonical level vectors), with precomputed tables.
class OrderCatalog {
public:
  explicit OrderCatalog(const DomainSpec& spec);

  const DomainSpec& spec() const { return spec_; }
  int count() const { return static_cast<int>(orders_.size()); }
  const WeakOrder& order(int idx) const { return orders_[idx]; }
  const OrderInfo& info(int idx) const { return info_[idx]; }
  const std::vector<WeakOrder>& orders() const { return orders_; }

  // Index of an order in this catalog; DomainError if it is not a member
  // (e.g. a weak order looked up in a strict catalog).
  int index_of(const WeakOrder& order) const;

private:
  DomainSpec spec_;
  std::vector<WeakOrder> orders_;
  std::vector<OrderInfo> info_;
};

// Exhaustive, duplicate-free, deterministic enumeration of the order set.
std::vector<WeakOrder> all_orders(const DomainSpec& spec);
uint64_t order_count(const DomainSpec& spec);

// Mixed-radix bijection between [0, count^n) and the profile space. Voter 0
// is the most significant digit.
class ProfileSpace {
public:
  explicit ProfileSpace(std::shared_ptr<const OrderCatalog> catalog);

  const OrderCatalog& catalog() const { return *catalog_; }
  std::shared_ptr<const OrderCatalog> catalog_ptr() const { return catalog_; }
  uint64_t size() const { return size_; }
  int n() const { return catalog_->spec().n; }
  int m() const { return catalog_->spec().m; }

  Profile decode(uint64_t pid) const;
  uint64_t encode(const Profile& profile) const;
  uint64_t stride(int voter) const { return strides_[voter]; }

private:
  std::shared_ptr<const OrderCatalog> catalog_;
  std::vector<uint64_t> strides_;
  uint64_t size_ = 0;
};

ProfileSpace make_space(const DomainSpec& spec);

// Streaming, resumable iteration over the profile space. Keeps one Profile
// buffer and rewrites a single voter per step.
class ProfileIterator {
public:
  explicit ProfileIterator(const ProfileSpace& space, uint64_t start = 0);

  bool done() const { return pid_ >= space_->size(); }
  uint64_t pid() const { return pid_; }
  const Profile& profile() const { return profile_; }
  int order_id(int voter) const { return digits_[voter]; }
  std::span<const int> order_ids() const { return digits_; }
  void next();
  void seek(uint64_t pid);

private:
  const ProfileSpace* space_;
  uint64_t pid_ = 0;
  std::vector<int> digits_;
  Profile profile_;
};

// All profiles differing from the input only in the given voter's order,
// excluding the input itself.
std::vector<Profile> deviations(const Profile& profile, int voter,
                                const OrderCatalog& catalog);

// Voter i of the output holds the order of voter perm[i] of the input.
Profile permute_voters(const Profile& profile, std::span<const int> perm);

// Consistent relabeling: alternative x becomes perm[x].
WeakOrder permute_alternatives(const WeakOrder& order,
                               std::span<const int> perm);
Profile permute_alternatives(const Profile& profile,
                             std::span<const int> perm);

// True when the per-voter order ids are non-decreasing: the canonical
// representative of the profile's anonymity class. Only sound as a scan
// filter for voter-symmetric properties.
bool voter_canonical(std::span<const int> order_ids);

}  // namespace scf
