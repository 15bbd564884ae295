#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superstab/error.hpp"
#include "superstab/model.hpp"

// Instance text format (.ssm):
//
//   doctors: d1 d2
//   hospitals: h1 h2
//   pref d1: (h1 h2)     # parenthesised group = tie, groups run best to worst
//   pref d2: h1 h2
//   pref h1: d1 d2
//   pref h2: (d1 d2)
//
// Every vertex needs exactly one pref line, possibly with an empty list.

namespace superstab {

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view s, std::size_t first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), first_column + i});
      ++i;
    } else {
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r' && s[j] != '(' && s[j] != ')') ++j;
      out.push_back({std::string(s.substr(i, j - i)), first_column + i});
      i = j;
    }
  }
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

/// Splits "key rest" at the first ':'; returns the key tokens and the column where the remainder starts.
struct KeyedLine {
  std::vector<Token> key;
  std::string_view rest;
  std::size_t rest_column;
};

inline std::optional<KeyedLine> split_key(std::string_view line) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return KeyedLine{tokenize(line.substr(0, colon), 1), line.substr(colon + 1), colon + 2};
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

/// Parses a best-to-worst list of names with parenthesised tie groups.
inline std::vector<std::vector<Token>> parse_groups(const std::vector<Token>& tokens, std::size_t line) {
  std::vector<std::vector<Token>> groups;
  bool open = false;
  std::size_t open_column = 0;
  for (const auto& tok : tokens) {
    if (tok.text == "(") {
      if (open) throw ParseError(line, tok.column, "nested '('");
      open = true;
      open_column = tok.column;
      groups.emplace_back();
    } else if (tok.text == ")") {
      if (!open) throw ParseError(line, tok.column, "unmatched ')'");
      if (groups.back().empty()) throw ParseError(line, tok.column, "empty tie group");
      open = false;
    } else {
      if (!valid_vertex_name(tok.text)) throw ParseError(line, tok.column, "invalid name '" + tok.text + "'");
      if (open)
        groups.back().push_back(tok);
      else
        groups.push_back({tok});
    }
  }
  if (open) throw ParseError(line, open_column, "unclosed '('");
  return groups;
}

}  // namespace detail

/// Parses .ssm text. Syntax errors, duplicate names, duplicate entries in a
/// list, unknown names and one-sided listings raise ParseError with the
/// offending position.
inline Instance parse_instance(std::string_view text) {
  using detail::Token;

  struct Decl {
    std::vector<Token> names;
    std::size_t line = 0;
  };
  struct PrefLine {
    Token owner;
    std::vector<std::vector<Token>> groups;
    std::size_t line;
  };

  std::optional<Decl> doctors, hospitals;
  std::vector<PrefLine> prefs;

  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto body = detail::strip_comment(lines[i]);
    if (detail::blank(body)) continue;
    auto keyed = detail::split_key(body);
    if (!keyed || keyed->key.empty()) {
      auto first = body.find_first_not_of(" \t\r");
      throw ParseError(lineno, first + 1, "expected 'doctors:', 'hospitals:' or 'pref <name>:'");
    }
    const auto& key = keyed->key;
    auto values = detail::tokenize(keyed->rest, keyed->rest_column);

    if (key[0].text == "doctors" || key[0].text == "hospitals") {
      if (key.size() != 1) throw ParseError(lineno, key[1].column, "unexpected token before ':'");
      auto& slot = key[0].text == "doctors" ? doctors : hospitals;
      if (slot) throw ParseError(lineno, key[0].column, "duplicate '" + key[0].text + ":' line");
      for (const auto& tok : values)
        if (!valid_vertex_name(tok.text)) throw ParseError(lineno, tok.column, "invalid name '" + tok.text + "'");
      slot = Decl{values, lineno};
    } else if (key[0].text == "pref") {
      if (key.size() != 2) throw ParseError(lineno, key[0].column, "expected 'pref <name>:'");
      prefs.push_back({key[1], detail::parse_groups(values, lineno), lineno});
    } else {
      throw ParseError(lineno, key[0].column, "unknown directive '" + key[0].text + "'");
    }
  }
  if (!doctors) throw ParseError(lines.size(), 0, "missing 'doctors:' line");
  if (!hospitals) throw ParseError(lines.size(), 0, "missing 'hospitals:' line");

  // name -> side and declaration position
  std::map<std::string, std::pair<Side, std::size_t>> declared;
  for (auto [decl, side] : {std::pair{&*doctors, Side::Doctor}, std::pair{&*hospitals, Side::Hospital}})
    for (const auto& tok : decl->names)
      if (!declared.emplace(tok.text, std::pair{side, decl->line}).second)
        throw ParseError(decl->line, tok.column, "duplicate name '" + tok.text + "'");

  struct Position {
    std::size_t line, column;
  };
  // (owner, other) -> position of the entry
  std::map<std::pair<std::string, std::string>, Position> entries;
  std::set<std::string> has_pref;
  InstanceBuilder builder;
  for (const auto& t : doctors->names) builder.add_doctor(t.text);
  for (const auto& t : hospitals->names) builder.add_hospital(t.text);

  for (const auto& p : prefs) {
    auto owner = declared.find(p.owner.text);
    if (owner == declared.end()) throw ParseError(p.line, p.owner.column, "unknown vertex '" + p.owner.text + "'");
    if (!has_pref.insert(p.owner.text).second)
      throw ParseError(p.line, p.owner.column, "second pref line for '" + p.owner.text + "'");
    const Side side = owner->second.first;
    int rank = 0;
    for (const auto& group : p.groups) {
      ++rank;
      for (const auto& tok : group) {
        auto other = declared.find(tok.text);
        if (other == declared.end() || other->second.first == side)
          throw ParseError(p.line, tok.column,
                           "'" + tok.text + "' is not a " + (side == Side::Doctor ? "hospital" : "doctor"));
        if (!entries.emplace(std::pair{p.owner.text, tok.text}, Position{p.line, tok.column}).second)
          throw ParseError(p.line, tok.column, "'" + tok.text + "' listed twice");
        builder.rank({side, p.owner.text}, tok.text, rank);
      }
    }
  }

  for (const auto& [name, where] : declared)
    if (!has_pref.count(name)) throw ParseError(where.second, 0, "no pref line for '" + name + "'");

  for (const auto& [key, pos] : entries)
    if (!entries.count({key.second, key.first}))
      throw ParseError(pos.line, pos.column,
                       "'" + key.first + "' lists '" + key.second + "' but '" + key.second + "' does not list '" +
                           key.first + "'");

  return builder.build();
}

namespace detail {

inline std::string render_groups(const Instance& inst, Side side, std::span<const EdgeIndex> incident) {
  std::map<int, std::vector<std::string>> groups;
  for (EdgeIndex e : incident)
    groups[inst.rank(side, e)].push_back(side == Side::Doctor ? inst.hospital_name(e) : inst.doctor_name(e));
  std::string out;
  for (auto& [rank, names] : groups) {
    std::sort(names.begin(), names.end());
    out += ' ';
    if (names.size() > 1) out += '(';
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ' ';
      out += names[i];
    }
    if (names.size() > 1) out += ')';
  }
  return out;
}

}  // namespace detail

/// Canonical text: declaration order for vertices, groups by rank, names
/// sorted inside a tie group.
inline std::string serialize_instance(const Instance& inst) {
  std::string out = "doctors:";
  for (const auto& d : inst.doctors()) out += ' ' + d;
  out += "\nhospitals:";
  for (const auto& h : inst.hospitals()) out += ' ' + h;
  out += '\n';
  for (DoctorIndex d = 0; d < inst.num_doctors(); ++d)
    out += "pref " + inst.doctors()[d] + ":" + detail::render_groups(inst, Side::Doctor, inst.edges_of_doctor(d)) + '\n';
  for (HospitalIndex h = 0; h < inst.num_hospitals(); ++h)
    out += "pref " + inst.hospitals()[h] + ":" +
           detail::render_groups(inst, Side::Hospital, inst.edges_of_hospital(h)) + '\n';
  return out;
}

}  // namespace superstab
