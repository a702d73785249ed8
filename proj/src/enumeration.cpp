#include "scf/enumeration.hpp"

#include <algorithm>
#include <bit>

namespace scf {
namespace {

bool canonical_levels(const std::vector<int>& lev, int m) {
  int maxl = 0;
  for (int x = 0; x < m; ++x) maxl = std::max(maxl, lev[x]);
  std::vector<bool> used(maxl + 1, false);
  for (int x = 0; x < m; ++x) used[lev[x]] = true;
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

void validate_permutation(std::span<const int> perm, int size) {
  if (static_cast<int>(perm.size()) != size)
    throw DomainError("permutation has wrong size");
  std::vector<bool> seen(size, false);
  for (int p : perm) {
    if (p < 0 || p >= size || seen[p]) throw DomainError("malformed permutation");
    seen[p] = true;
  }
}

}  // namespace

std::vector<WeakOrder> all_orders(const DomainSpec& spec) {
  const int m = spec.m;
  if (m < 1 || m > kMaxAlternatives)
    throw DomainError("domain spec: m out of range");
  if (spec.n < 1) throw DomainError("domain spec: n must be >= 1");

  // Walk level vectors in lexicographic order, keeping the canonical ones
  // (levels form a contiguous, fully used range). m^m candidates: trivial at
  // these sizes, and the output order is the documented one by construction.
  std::vector<WeakOrder> out;
  std::vector<int> lev(m, 0);
  while (true) {
    if (canonical_levels(lev, m)) {
      WeakOrder o = WeakOrder::from_levels(lev);
      const bool strict_ok = !spec.strict_only || o.is_strict();
      const bool indiff_ok = !spec.exclude_indifferent || !o.is_indifferent();
      if (strict_ok && indiff_ok) out.push_back(o);
    }
    int i = m - 1;
    while (i >= 0 && lev[i] == m - 1) lev[i--] = 0;
    if (i < 0) break;
    ++lev[i];
  }
  return out;
}

uint64_t order_count(const DomainSpec& spec) { return all_orders(spec).size(); }

OrderCatalog::OrderCatalog(const DomainSpec& spec)
    : spec_(spec), orders_(all_orders(spec)) {
  info_.resize(orders_.size());
  const int m = spec.m;
  const uint32_t nsets = 1u << m;
  for (size_t i = 0; i < orders_.size(); ++i) {
    const WeakOrder& o = orders_[i];
    OrderInfo& fo = info_[i];
    for (int x = 0; x < m; ++x) {
      fo.lev[x] = static_cast<uint8_t>(o.level(x));
      fo.rank[x] = rank_tuple(o, x);
    }
    fo.top_mask = o.top_class_mask();
    fo.bottom_mask = o.bottom_class_mask();
    fo.minlev[0] = 127;
    fo.maxlev[0] = 0;
    for (uint32_t s = 1; s < nsets; ++s) {
      const int x = std::countr_zero(s);
      const uint32_t rest = s & (s - 1);
      fo.minlev[s] = std::min<uint8_t>(fo.lev[x], fo.minlev[rest]);
      fo.maxlev[s] = std::max<uint8_t>(fo.lev[x], fo.maxlev[rest]);
    }
  }
}

int OrderCatalog::index_of(const WeakOrder& order) const {
  const auto it = std::lower_bound(orders_.begin(), orders_.end(), order);
  if (it == orders_.end() || !(*it == order))
    throw DomainError("order is not in this catalog's domain");
  return static_cast<int>(it - orders_.begin());
}

ProfileSpace::ProfileSpace(std::shared_ptr<const OrderCatalog> catalog)
    : catalog_(std::move(catalog)) {
  const uint64_t k = catalog_->count();
  const int n = catalog_->spec().n;
  strides_.assign(n, 1);
  uint64_t total = 1;
  for (int i = n - 1; i >= 0; --i) {
    strides_[i] = total;
    if (k != 0 && total > UINT64_MAX / k)
      throw CapacityError("profile space exceeds 64-bit index capacity");
    total *= k;
  }
  size_ = total;
}

Profile ProfileSpace::decode(uint64_t pid) const {
  if (pid >= size_) throw DomainError("profile id out of range");
  const int n = catalog_->spec().n;
  std::vector<WeakOrder> voters;
  voters.reserve(n);
  for (int i = 0; i < n; ++i)
    voters.push_back(catalog_->order((pid / strides_[i]) % catalog_->count()));
  return Profile(std::move(voters));
}

uint64_t ProfileSpace::encode(const Profile& profile) const {
  if (profile.n() != catalog_->spec().n || profile.m() != catalog_->spec().m)
    throw DomainError("profile does not match the space's domain spec");
  uint64_t pid = 0;
  for (int i = 0; i < profile.n(); ++i)
    pid += strides_[i] * catalog_->index_of(profile.voter(i));
  return pid;
}

ProfileSpace make_space(const DomainSpec& spec) {
  return ProfileSpace(std::make_shared<OrderCatalog>(spec));
}

ProfileIterator::ProfileIterator(const ProfileSpace& space, uint64_t start)
    : space_(&space) {
  digits_.assign(space.n(), 0);
  if (start < space.size()) {
    seek(start);
  } else {
    pid_ = space.size();
    profile_ = space.size() ? space.decode(0) : Profile();
  }
}

void ProfileIterator::seek(uint64_t pid) {
  if (pid >= space_->size()) throw DomainError("profile id out of range");
  pid_ = pid;
  const int n = space_->n();
  std::vector<WeakOrder> voters;
  for (int i = 0; i < n; ++i) {
    digits_[i] = static_cast<int>((pid / space_->stride(i)) %
                                  space_->catalog().count());
    voters.push_back(space_->catalog().order(digits_[i]));
  }
  profile_ = Profile(std::move(voters));
}

void ProfileIterator::next() {
  ++pid_;
  if (done()) return;
  // Odometer: bump the least significant voter, carrying leftwards.
  const int k = space_->catalog().count();
  for (int i = space_->n() - 1; i >= 0; --i) {
    if (++digits_[i] < k) {
      profile_.set_voter(i, space_->catalog().order(digits_[i]));
      return;
    }
    digits_[i] = 0;
    profile_.set_voter(i, space_->catalog().order(0));
  }
}

std::vector<Profile> deviations(const Profile& profile, int voter,
                                const OrderCatalog& catalog) {
  if (voter < 0 || voter >= profile.n())
    throw DomainError("voter index out of range");
  std::vector<Profile> out;
  out.reserve(catalog.count() - 1);
  for (int i = 0; i < catalog.count(); ++i) {
    if (catalog.order(i) == profile.voter(voter)) continue;
    Profile p = profile;
    p.set_voter(voter, catalog.order(i));
    out.push_back(std::move(p));
  }
  return out;
}

Profile permute_voters(const Profile& profile, std::span<const int> perm) {
  validate_permutation(perm, profile.n());
  std::vector<WeakOrder> voters;
  voters.reserve(profile.n());
  for (int i = 0; i < profile.n(); ++i)
    voters.push_back(profile.voter(perm[i]));
  return Profile(std::move(voters));
}

WeakOrder permute_alternatives(const WeakOrder& order,
                               std::span<const int> perm) {
  validate_permutation(perm, order.m());
  std::vector<int> lev(order.m());
  for (int x = 0; x < order.m(); ++x) lev[perm[x]] = order.level(x);
  return WeakOrder::from_levels(lev);
}

Profile permute_alternatives(const Profile& profile,
                             std::span<const int> perm) {
  std::vector<WeakOrder> voters;
  voters.reserve(profile.n());
  for (const auto& v : profile.voters())
    voters.push_back(permute_alternatives(v, perm));
  return Profile(std::move(voters));
}

bool voter_canonical(std::span<const int> order_ids) {
  for (size_t i = 1; i < order_ids.size(); ++i)
    if (order_ids[i - 1] > order_ids[i]) return false;
  return true;
}

}  // namespace scf
