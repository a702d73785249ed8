#include "scf/text.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

namespace scf {
namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(std::string(s.substr(pos)));
      break;
    }
    out.push_back(std::string(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

}  // namespace

AltNames AltNames::letters(int m) {
  AltNames an;
  for (int x = 0; x < m; ++x) an.names.push_back(std::string(1, char('a' + x)));
  return an;
}

int AltNames::index_of(std::string_view token) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == token) return static_cast<int>(i);
  return -1;
}

std::string render_order(const WeakOrder& order, const AltNames& names) {
  std::string out;
  for (int l = 0; l < order.num_levels(); ++l) {
    if (l > 0) out += " > ";
    bool first = true;
    for (int x = 0; x < order.m(); ++x) {
      if (order.level(x) != l) continue;
      if (!first) out += "~";
      out += names.name(x);
      first = false;
    }
  }
  return out;
}

std::string render_order(const WeakOrder& order) {
  return render_order(order, AltNames::letters(order.m()));
}

WeakOrder parse_order(std::string_view text, const AltNames& names) {
  const int m = names.m();
  std::vector<int> levels(m, -1);
  int level = 0;
  for (const auto& cls : split(text, '>')) {
    bool any = false;
    for (const auto& raw : split(cls, '~')) {
      const std::string tok = trim(raw);
      if (tok.empty()) throw ParseError("empty alternative token", 1, 1);
      const int x = names.index_of(tok);
      if (x < 0) throw ParseError("unknown alternative '" + tok + "'", 1, 1);
      if (levels[x] != -1)
        throw ParseError("alternative '" + tok + "' repeated", 1, 1);
      levels[x] = level;
      any = true;
    }
    if (any) ++level;
  }
  for (int x = 0; x < m; ++x)
    if (levels[x] == -1)
      throw ParseError("alternative '" + names.name(x) + "' missing", 1, 1);
  return WeakOrder::from_levels(levels);
}

WeakOrder parse_order(std::string_view text, int m) {
  return parse_order(text, AltNames::letters(m));
}

std::string render_choice_set(const ChoiceSet& set, const AltNames& names) {
  std::string out = "{";
  bool first = true;
  for (int x : set.members()) {
    if (!first) out += ", ";
    out += names.name(x);
    first = false;
  }
  return out + "}";
}

std::string render_choice_set(const ChoiceSet& set) {
  return render_choice_set(set, AltNames::letters(set.m()));
}

ChoiceSet parse_choice_set(std::string_view text, const AltNames& names) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("choice set must be braced, e.g. {a, b}", 1, 1);
  s = s.substr(1, s.size() - 2);
  uint32_t mask = 0;
  for (const auto& raw : split(s, ',')) {
    const std::string tok = trim(raw);
    if (tok.empty()) continue;
    const int x = names.index_of(tok);
    if (x < 0) throw ParseError("unknown alternative '" + tok + "'", 1, 1);
    mask |= 1u << x;
  }
  if (mask == 0) throw ParseError("empty choice set", 1, 1);
  return ChoiceSet(mask, names.m());
}

namespace {

// Tokens appearing in an order line, in order of appearance.
std::vector<std::string> order_line_tokens(std::string_view line) {
  std::vector<std::string> toks;
  for (const auto& cls : split(line, '>'))
    for (const auto& raw : split(cls, '~')) {
      const std::string tok = trim(raw);
      if (!tok.empty()) toks.push_back(tok);
    }
  return toks;
}

}  // namespace

ParsedProfile parse_profile_text(std::string_view text) {
  std::vector<std::pair<int, std::string>> voter_lines;  // (line no, text)
  AltNames names;
  bool pinned = false;

  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("alternatives:", 0) == 0) {
      if (pinned || !voter_lines.empty())
        throw ParseError("alternatives header must come first", lineno, 1);
      std::istringstream hs(t.substr(13));
      std::string tok;
      while (hs >> tok) names.names.push_back(tok);
      if (names.names.empty())
        throw ParseError("alternatives header names nothing", lineno, 1);
      pinned = true;
      continue;
    }
    voter_lines.emplace_back(lineno, t);
  }
  if (voter_lines.empty()) throw ParseError("no voter lines", lineno, 1);

  if (!pinned) {
    for (const auto& [ln, vt] : voter_lines)
      for (const auto& tok : order_line_tokens(vt))
        if (names.index_of(tok) < 0) names.names.push_back(tok);
  }
  if (names.m() > kMaxAlternatives)
    throw ParseError("too many alternatives", voter_lines.front().first, 1);

  std::vector<WeakOrder> voters;
  for (const auto& [ln, vt] : voter_lines) {
    try {
      voters.push_back(parse_order(vt, names));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ln, 1);
    }
  }
  return ParsedProfile{Profile(std::move(voters)), std::move(names)};
}

ParsedProfile parse_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open profile file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_profile_text(ss.str());
}

std::vector<std::string> render_profile_lines(const Profile& profile,
                                              const AltNames& names) {
  std::vector<std::string> out;
  for (const auto& v : profile.voters()) out.push_back(render_order(v, names));
  return out;
}

std::string render_rank_matrix(const RankMatrix& rm, const AltNames& names) {
  std::string out;
  for (int x = 0; x < rm.m(); ++x) {
    out += names.name(x) + ":";
    for (int j = 0; j < rm.n(); ++j) {
      const auto& t = rm.at(x, j);
      out += " (" + std::to_string(t.strict_above) + "," +
             std::to_string(t.tie_class) + ")";
    }
    out += "\n";
  }
  return out;
}

namespace {

std::string render_int_grid(int m, const AltNames& names,
                            const std::function<std::string(int, int)>& cell) {
  std::string out = " ";
  for (int y = 0; y < m; ++y) out += "\t" + names.name(y);
  out += "\n";
  for (int x = 0; x < m; ++x) {
    out += names.name(x);
    for (int y = 0; y < m; ++y) out += "\t" + cell(x, y);
    out += "\n";
  }
  return out;
}

}  // namespace

std::string render_support_matrix(const SupportMatrix& sm,
                                  const AltNames& names) {
  return render_int_grid(sm.m(), names, [&](int x, int y) {
    return x == y ? std::string("-") : std::to_string(sm.s(x, y));
  });
}

std::string render_margin_matrix(const SupportMatrix& sm,
                                 const AltNames& names) {
  return render_int_grid(sm.m(), names, [&](int x, int y) {
    return x == y ? std::string("-") : std::to_string(sm.margin(x, y));
  });
}

std::string render_majority_relation(const MajorityRelation& rel,
                                     const AltNames& names) {
  return render_int_grid(rel.m(), names, [&](int x, int y) {
    return x == y ? std::string("-") : (rel.rel(x, y) ? "1" : "0");
  });
}

WeakOrder ord(int m, std::string_view text) { return parse_order(text, m); }

Profile prof(int m, std::initializer_list<std::string_view> voters) {
  std::vector<WeakOrder> v;
  for (auto s : voters) v.push_back(ord(m, s));
  return Profile(std::move(v));
}

Profile prof(int m, const std::vector<std::string>& voters) {
  std::vector<WeakOrder> v;
  for (const auto& s : voters) v.push_back(ord(m, s));
  return Profile(std::move(v));
}

}  // namespace scf
