#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scf/core.hpp"
#include "scf/derived.hpp"

namespace scf {

// Alternative display names. Default rendering is letters a, b, c, ...
struct AltNames {
  std::vector<std::string> names;
  static AltNames letters(int m);
  int m() const { return static_cast<int>(names.size()); }
  const std::string& name(int x) const { return names.at(x); }
  int index_of(std::string_view token) const;  // -1 when unknown
};

// Text form of a weak order: indifference classes joined by " > ", ties
// inside a class joined by "~". Example: "a~b > c > d".
std::string render_order(const WeakOrder& order, const AltNames& names);
std::string render_order(const WeakOrder& order);

// Inverse of render_order; every alternative must appear exactly once.
WeakOrder parse_order(std::string_view text, const AltNames& names);
WeakOrder parse_order(std::string_view text, int m);

std::string render_choice_set(const ChoiceSet& set, const AltNames& names);
std::string render_choice_set(const ChoiceSet& set);
ChoiceSet parse_choice_set(std::string_view text, const AltNames& names);

// Profile files: one voter per line, "#" comments and blank lines ignored.
// An optional "alternatives: a b c" header pins the name order; otherwise
// names are mapped by first appearance.
struct ParsedProfile {
  Profile profile;
  AltNames names;
};
ParsedProfile parse_profile_text(std::string_view text);
ParsedProfile parse_profile_file(const std::string& path);
std::vector<std::string> render_profile_lines(const Profile& profile,
                                              const AltNames& names);

// Stable text layouts for the derived matrices.
std::string render_rank_matrix(const RankMatrix& rm, const AltNames& names);
std::string render_support_matrix(const SupportMatrix& sm,
                                  const AltNames& names);
std::string render_margin_matrix(const SupportMatrix& sm,
                                 const AltNames& names);
std::string render_majority_relation(const MajorityRelation& rel,
                                     const AltNames& names);

// Shorthands for building fixtures from letter notation.
WeakOrder ord(int m, std::string_view text);
Profile prof(int m, std::initializer_list<std::string_view> voters);
Profile prof(int m, const std::vector<std::string>& voters);

}  // namespace scf
