#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "scf/derived.hpp"
#include "scf/enumeration.hpp"
#include "scf/text.hpp"

using namespace scf;

namespace {

// Independent count of weak orders on k alternatives (ordered Bell numbers)
// via the recurrence a(k) = sum_j C(k,j) a(k-j).
uint64_t ordered_bell(int k) {
  std::vector<uint64_t> a(k + 1, 0);
  a[0] = 1;
  std::vector<std::vector<uint64_t>> choose(k + 1,
                                            std::vector<uint64_t>(k + 1, 0));
  for (int i = 0; i <= k; ++i) {
    choose[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= i; ++j) a[i] += choose[i][j] * a[i - j];
  return a[k];
}

uint64_t factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

// Small deterministic generator for round-trip sampling.
struct Lcg {
  uint64_t state = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
};

}  // namespace

TEST_CASE("order counts match the known sequences") {
  CHECK(ordered_bell(3) == 13);
  CHECK(ordered_bell(4) == 75);
  CHECK(ordered_bell(5) == 541);
  for (int m = 1; m <= 5; ++m) {
    CHECK(order_count(DomainSpec{m, 1, false, false}) == ordered_bell(m));
    CHECK(order_count(DomainSpec{m, 1, true, false}) == factorial(m));
    CHECK(order_count(DomainSpec{m, 1, false, true}) == ordered_bell(m) - 1);
  }
}

TEST_CASE("all_orders is canonical, duplicate-free, deterministic") {
  const auto orders = all_orders(DomainSpec{4, 1, false, false});
  CHECK(orders.size() == 75);
  for (size_t i = 1; i < orders.size(); ++i) CHECK(orders[i - 1] < orders[i]);
  for (const auto& o : orders) {
    // canonical: every level up to num_levels-1 is non-empty
    for (int l = 0; l < o.num_levels(); ++l) CHECK(o.class_mask(l) != 0);
  }
  // exclude_indifferent drops exactly the fully indifferent order
  const auto without = all_orders(DomainSpec{4, 1, false, true});
  CHECK(without.size() == 74);
  for (const auto& o : without) CHECK(!o.is_indifferent());
}

TEST_CASE("profile space sizes") {
  CHECK(make_space(DomainSpec{3, 2, false, false}).size() == 169);
  CHECK(make_space(DomainSpec{3, 3, false, false}).size() == 2197);
  CHECK(make_space(DomainSpec{3, 5, true, false}).size() == 7776);
  CHECK(make_space(DomainSpec{4, 3, false, false}).size() == 421875);
}

TEST_CASE("profile space capacity error fires before iteration") {
  // 541^8 overflows uint64.
  CHECK_THROWS_AS(make_space(DomainSpec{5, 8, false, false}), CapacityError);
}

TEST_CASE("encode and decode are inverse bijections") {
  for (const DomainSpec spec : {DomainSpec{3, 3, false, false},
                                DomainSpec{4, 2, false, false},
                                DomainSpec{3, 4, true, false},
                                DomainSpec{3, 2, false, true}}) {
    ProfileSpace space = make_space(spec);
    Lcg rng;
    for (int trial = 0; trial < 1000; ++trial) {
      const uint64_t pid = rng.next() % space.size();
      CHECK(space.encode(space.decode(pid)) == pid);
    }
  }
}

TEST_CASE("profile iterator streams each profile exactly once") {
  ProfileSpace space = make_space(DomainSpec{3, 2, false, false});
  std::set<std::pair<WeakOrder, WeakOrder>> seen;
  uint64_t count = 0;
  for (ProfileIterator it(space); !it.done(); it.next()) {
    CHECK(it.pid() == count);
    CHECK(space.encode(it.profile()) == it.pid());
    seen.insert({it.profile().voter(0), it.profile().voter(1)});
    ++count;
  }
  CHECK(count == 169);
  CHECK(seen.size() == 169);
}

TEST_CASE("profile iterator resumes from any checkpoint") {
  ProfileSpace space = make_space(DomainSpec{3, 3, false, false});
  ProfileIterator it(space, 1234);
  CHECK(it.pid() == 1234);
  CHECK(it.profile() == space.decode(1234));
  it.next();
  CHECK(it.profile() == space.decode(1235));
}

TEST_CASE("deviations") {
  const OrderCatalog weak(DomainSpec{3, 1, false, false});
  const OrderCatalog strict(DomainSpec{3, 1, true, false});
  const Profile p = prof(3, {"a > b > c", "b > a > c"});

  const auto devs = deviations(p, 0, weak);
  CHECK(devs.size() == 12);
  for (const auto& d : devs) {
    CHECK(!(d == p));
    CHECK(d.voter(1) == p.voter(1));
  }
  CHECK(deviations(p, 1, strict).size() == 5);
  CHECK_THROWS_AS(deviations(p, 2, weak), DomainError);

  // Summed over all voters: n * (order_count - 1).
  size_t total = 0;
  for (int i = 0; i < p.n(); ++i) total += deviations(p, i, weak).size();
  CHECK(total == 2 * 12);
}

TEST_CASE("voter permutations") {
  const Profile p = prof(3, {"a > b > c", "b > a > c", "c > a~b"});
  const std::vector<int> id = {0, 1, 2};
  CHECK(permute_voters(p, id) == p);

  const Profile twins = prof(3, {"a > b > c", "a > b > c", "c > a~b"});
  const std::vector<int> swap01 = {1, 0, 2};
  CHECK(permute_voters(twins, swap01) == twins);

  const std::vector<int> rot = {2, 0, 1};
  CHECK(support_matrix(permute_voters(p, rot)) == support_matrix(p));
  CHECK(rank_matrix(permute_voters(p, rot)) == rank_matrix(p));

  CHECK_THROWS_AS(permute_voters(p, std::vector<int>{0, 0, 1}), DomainError);
}

TEST_CASE("alternative permutations") {
  const Profile p = prof(3, {"a > b > c", "c > a~b"});
  const std::vector<int> id = {0, 1, 2};
  CHECK(permute_alternatives(p, id) == p);

  const std::vector<int> swap_ab = {1, 0, 2};
  CHECK(permute_alternatives(permute_alternatives(p, swap_ab), swap_ab) == p);

  // A permutation followed by its inverse is the identity, exhaustively.
  const std::vector<int> rot = {1, 2, 0};
  const std::vector<int> rot_inv = {2, 0, 1};
  ProfileSpace space = make_space(DomainSpec{3, 2, false, false});
  for (ProfileIterator it(space); !it.done(); it.next())
    CHECK(permute_alternatives(permute_alternatives(it.profile(), rot),
                               rot_inv) == it.profile());

  // Rank matrix rows permute with the alternatives.
  const auto rm = rank_matrix(p);
  const auto rm2 = rank_matrix(permute_alternatives(p, swap_ab));
  for (int x = 0; x < 3; ++x)
    for (int j = 0; j < 2; ++j) CHECK(rm.at(x, j) == rm2.at(swap_ab[x], j));

  CHECK_THROWS_AS(permute_alternatives(p, std::vector<int>{0, 1}), DomainError);
}

TEST_CASE("voter-canonical filter") {
  ProfileSpace space = make_space(DomainSpec{3, 2, false, false});
  uint64_t canonical = 0;
  for (ProfileIterator it(space); !it.done(); it.next())
    if (voter_canonical(it.order_ids())) ++canonical;
  CHECK(canonical == 13 * 14 / 2);  // multisets of size 2 over 13 orders
}

TEST_CASE("catalog order lookup") {
  const OrderCatalog cat(DomainSpec{3, 1, false, false});
  for (int i = 0; i < cat.count(); ++i)
    CHECK(cat.index_of(cat.order(i)) == i);
  const OrderCatalog strict(DomainSpec{3, 1, true, false});
  CHECK_THROWS_AS(strict.index_of(ord(3, "a~b > c")), DomainError);
}

TEST_CASE("catalog kelly tables agree with the definitional comparison") {
  for (int m : {3, 4}) {
    const OrderCatalog cat(DomainSpec{m, 1, false, false});
    for (int i = 0; i < cat.count(); ++i) {
      const OrderInfo& info = cat.info(i);
      const WeakOrder& o = cat.order(i);
      for (uint32_t x = 1; x < (1u << m); ++x)
        for (uint32_t y = 1; y < (1u << m); ++y)
          CHECK(info.kelly(x, y) == kelly_strictly_prefers_masks(o, x, y));
    }
  }
}
