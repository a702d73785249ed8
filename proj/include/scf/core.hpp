#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace scf {

// Everything in this library is exhaustive search over tiny domains; eight
// alternatives is already far beyond what any scan can finish (541 weak
// orders at m=5, 4683 at m=6). Fixing a cap lets WeakOrder and ChoiceSet be
// flat PODs, which the scanners copy by the million.
inline constexpr int kMaxAlternatives = 8;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid inputs: bad alternative index, rule evaluated outside its declared
// domain, malformed permutation, empty choice set.
class DomainError : public Error {
public:
  using Error::Error;
};

// Profile space does not fit the index type.
class CapacityError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Alternatives are dense indices 0..m-1. Letters a, b, c, ... are a
// presentation-layer rendering only (see text.hpp).
using Alternative = int;

// A non-empty subset of the alternatives, stored as a bitmask.
class ChoiceSet {
public:
  ChoiceSet(uint32_t mask, int m);
  static ChoiceSet of(std::initializer_list<int> alts, int m);
  static ChoiceSet full(int m);
  static ChoiceSet single(int x, int m);

  uint32_t mask() const { return mask_; }
  int m() const { return m_; }
  bool contains(int x) const { return (mask_ >> x) & 1u; }
  int size() const;
  std::vector<int> members() const;

  friend bool operator==(const ChoiceSet& a, const ChoiceSet& b) {
    return a.m_ == b.m_ && a.mask_ == b.mask_;
  }

private:
  uint32_t mask_;
  uint8_t m_;
};

// One voter's complete, transitive, reflexive ranking, stored as contiguous
// indifference levels: level 0 is the most preferred class. Canonical form
// (levels 0..L-1, all non-empty) is established at construction, so equal
// relations compare equal structurally.
class WeakOrder {
public:
  WeakOrder() = default;

  // Accepts arbitrary integer labels; they are renormalized so that the used
  // levels form 0..L-1.
  static WeakOrder from_levels(const std::vector<int>& levels);
  static WeakOrder indifferent(int m);

  int m() const { return m_; }
  int level(int x) const;
  int num_levels() const { return levels_; }

  bool weakly_prefers(int x, int y) const { return lev(x) <= lev(y); }
  bool strictly_prefers(int x, int y) const { return lev(x) < lev(y); }
  bool indifferent_between(int x, int y) const { return lev(x) == lev(y); }
  bool is_strict() const;
  bool is_indifferent() const { return levels_ == 1; }

  uint32_t class_mask(int level) const;
  uint32_t top_class_mask() const { return class_mask(0); }
  uint32_t bottom_class_mask() const { return class_mask(levels_ - 1); }
  bool uniquely_top_ranks(int x) const { return top_class_mask() == (1u << x); }

  // Lexicographic on the canonical level vector; the enumeration order.
  friend std::strong_ordering operator<=>(const WeakOrder& a,
                                          const WeakOrder& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    for (int x = 0; x < a.m_; ++x)
      if (auto c = a.lev_[x] <=> b.lev_[x]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const WeakOrder& a, const WeakOrder& b) {
    return (a <=> b) == 0;
  }

private:
  int lev(int x) const { return lev_[x]; }
  void check(int x) const;

  uint8_t m_ = 0;
  uint8_t levels_ = 0;
  std::array<uint8_t, kMaxAlternatives> lev_{};

  friend class WeakOrderBuilder;
};

// An ordered tuple of n voters' orders over the same m alternatives.
class Profile {
public:
  Profile() = default;
  explicit Profile(std::vector<WeakOrder> voters);

  int n() const { return static_cast<int>(voters_.size()); }
  int m() const { return m_; }
  const WeakOrder& voter(int i) const;
  const std::vector<WeakOrder>& voters() const { return voters_; }

  // For iteration machinery: replaces one voter's order (same m enforced).
  void set_voter(int i, const WeakOrder& order);

  friend bool operator==(const Profile& a, const Profile& b) = default;

private:
  std::vector<WeakOrder> voters_;
  int m_ = 0;
};

}  // namespace scf
