#include "relsimp/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace relsimp {

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> names) {
  if (names.size() > 31) {
    throw config_error("universe exceeds the representable limit of 31 atoms");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw config_error("duplicate atom '" + n + "' in universe");
    }
  }
  return std::shared_ptr<const Universe>(new Universe(std::move(names)));
}

std::optional<int> Universe::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

Mask Universe::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) {
    auto idx = index_of(n);
    if (!idx) throw config_error("unknown atom '" + n + "'");
    m |= Mask{1} << *idx;
  }
  return m;
}

std::vector<std::string> Universe::names_of(Mask m) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (m & (Mask{1} << i)) out.push_back(names_[i]);
  }
  return out;
}

std::vector<std::string> Universe::sorted_names_of(Mask m) const {
  auto out = names_of(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Universe::set_text(Mask m) const {
  auto names = sorted_names_of(m);
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  out += "}";
  return out;
}

std::shared_ptr<const Universe> Universe::without(Mask drop) const {
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!(drop & (Mask{1} << i))) keep.push_back(names_[i]);
  }
  return make(std::move(keep));
}

std::shared_ptr<const Universe> Universe::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names_;
  for (const auto& n : extra) {
    if (!index_of(n)) all.push_back(n);
  }
  return make(std::move(all));
}

Mask translate_mask(Mask m, const Universe& from, const Universe& to) {
  Mask out = 0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!(m & (Mask{1} << i))) continue;
    auto idx = to.index_of(from.name(static_cast<int>(i)));
    if (!idx) throw config_error("atom '" + from.name(static_cast<int>(i)) +
                                 "' missing from target universe");
    out |= Mask{1} << *idx;
  }
  return out;
}

namespace {

std::vector<Rule> dedup_rules(std::vector<Rule> rules) {
  std::vector<Rule> out;
  for (const Rule& r : rules) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

}  // namespace

Program Program::with_universe(UniversePtr target) const {
  Program out;
  out.universe = target;
  out.rules.reserve(rules.size());
  for (const Rule& r : rules) {
    out.rules.push_back(Rule{translate_mask(r.head, *universe, *target),
                             translate_mask(r.pos, *universe, *target),
                             translate_mask(r.neg, *universe, *target),
                             translate_mask(r.dneg, *universe, *target)});
  }
  out.rules = dedup_rules(std::move(out.rules));
  return out;
}

bool Program::equals_modulo_order(const Program& other) const {
  auto a = universe->names();
  auto b = other.universe->names();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  Program o = other.with_universe(universe);
  auto r1 = rules;
  auto r2 = o.rules;
  std::sort(r1.begin(), r1.end());
  std::sort(r2.begin(), r2.end());
  r1.erase(std::unique(r1.begin(), r1.end()), r1.end());
  r2.erase(std::unique(r2.begin(), r2.end()), r2.end());
  return r1 == r2;
}

namespace {

struct Token {
  enum Kind { Ident, Dot, Comma, Pipe, ColonDash, HashUniverse, End } kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::End, "", line, col};
    char c = text_[pos_];
    if (c == '.') {
      advance();
      return {Token::Dot, ".", line, col};
    }
    if (c == ',') {
      advance();
      return {Token::Comma, ",", line, col};
    }
    if (c == '|') {
      advance();
      return {Token::Pipe, "|", line, col};
    }
    if (c == ':') {
      advance();
      if (pos_ >= text_.size() || text_[pos_] != '-') {
        throw parse_error("expected '-' after ':'", line_, col_);
      }
      advance();
      return {Token::ColonDash, ":-", line, col};
    }
    if (c == '#') {
      advance();
      std::string word = read_ident_chars();
      if (word != "universe") {
        throw parse_error("unknown directive '#" + word + "'", line, col);
      }
      return {Token::HashUniverse, "#universe", line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word = read_ident_chars();
      return {Token::Ident, word, line, col};
    }
    throw parse_error(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string read_ident_chars() {
    std::string out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        out += c;
        advance();
      } else {
        break;
      }
    }
    if (out.empty()) throw parse_error("expected identifier", line_, col_);
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct RawRule {
  std::vector<std::string> head, pos, neg, dneg;
  int line, col;
};

}  // namespace

ParseOutcome parse_program_ex(std::string_view text,
                              const std::optional<std::vector<std::string>>& declared_universe,
                              const ParseLimits& limits) {
  Lexer lex(text);
  Token tok = lex.next();

  std::vector<std::string> declared;
  std::unordered_set<std::string> declared_set;
  bool strict = declared_universe.has_value();
  if (declared_universe) {
    for (const auto& n : *declared_universe) {
      if (declared_set.insert(n).second) declared.push_back(n);
    }
  }

  std::vector<std::string> occurring;
  std::unordered_set<std::string> occurring_set;
  std::map<std::string, std::pair<int, int>> first_use;

  auto note_atom = [&](const std::string& name, int line, int col) {
    if (occurring_set.insert(name).second) {
      occurring.push_back(name);
      first_use[name] = {line, col};
    }
  };

  std::vector<RawRule> raw;

  auto expect_ident = [&](const char* what) {
    if (tok.kind != Token::Ident) {
      throw parse_error(std::string("expected ") + what, tok.line, tok.col);
    }
    if (tok.text == "not") {
      throw parse_error("'not' is a keyword and cannot name an atom", tok.line, tok.col);
    }
    Token t = tok;
    tok = lex.next();
    return t;
  };

  while (tok.kind != Token::End) {
    if (tok.kind == Token::HashUniverse) {
      tok = lex.next();
      for (;;) {
        Token a = expect_ident("atom in #universe directive");
        if (declared_set.insert(a.text).second) declared.push_back(a.text);
        strict = true;
        if (tok.kind == Token::Comma) {
          tok = lex.next();
          continue;
        }
        break;
      }
      if (tok.kind != Token::Dot) {
        throw parse_error("expected '.' after #universe directive", tok.line, tok.col);
      }
      tok = lex.next();
      continue;
    }

    RawRule r;
    r.line = tok.line;
    r.col = tok.col;
    if (tok.kind == Token::Ident) {
      for (;;) {
        Token a = expect_ident("atom in rule head");
        if (std::find(r.head.begin(), r.head.end(), a.text) != r.head.end()) {
          throw parse_error("duplicate atom '" + a.text + "' in rule head", a.line, a.col);
        }
        r.head.push_back(a.text);
        note_atom(a.text, a.line, a.col);
        if (tok.kind == Token::Pipe) {
          tok = lex.next();
          continue;
        }
        break;
      }
      if (tok.kind == Token::Dot) {
        tok = lex.next();
        raw.push_back(std::move(r));
        continue;
      }
      if (tok.kind != Token::ColonDash) {
        throw parse_error("expected '.' or ':-' after rule head", tok.line, tok.col);
      }
    } else if (tok.kind != Token::ColonDash) {
      throw parse_error("expected rule or directive", tok.line, tok.col);
    }

    // Body after ':-'. An immediate '.' is accepted only for the degenerate
    // always-false constraint ':-.'.
    tok = lex.next();
    if (tok.kind == Token::Dot && r.head.empty()) {
      tok = lex.next();
      raw.push_back(std::move(r));
      continue;
    }
    for (;;) {
      std::vector<std::string>* bucket = &r.pos;
      if (tok.kind == Token::Ident && tok.text == "not") {
        tok = lex.next();
        bucket = &r.neg;
        if (tok.kind == Token::Ident && tok.text == "not") {
          tok = lex.next();
          bucket = &r.dneg;
        }
      }
      Token a = expect_ident("atom in rule body");
      if (std::find(bucket->begin(), bucket->end(), a.text) != bucket->end()) {
        throw parse_error("duplicate atom '" + a.text + "' in literal list", a.line, a.col);
      }
      bucket->push_back(a.text);
      note_atom(a.text, a.line, a.col);
      if (tok.kind == Token::Comma) {
        tok = lex.next();
        continue;
      }
      break;
    }
    if (tok.kind != Token::Dot) {
      throw parse_error("expected '.' at end of rule", tok.line, tok.col);
    }
    tok = lex.next();
    raw.push_back(std::move(r));
  }

  std::vector<std::string> names = declared;
  if (strict) {
    for (const auto& n : occurring) {
      if (!declared_set.count(n)) {
        auto [line, col] = first_use[n];
        throw parse_error("atom '" + n + "' is not in the declared universe", line, col);
      }
    }
  } else {
    names = occurring;
  }

  ParseOutcome out;
  if (static_cast<int>(names.size()) > limits.hard_cap) {
    throw parse_error("universe has " + std::to_string(names.size()) +
                          " atoms; the hard cap is " + std::to_string(limits.hard_cap),
                      1, 1);
  }
  if (static_cast<int>(names.size()) > limits.soft_cap) {
    out.warnings.push_back("universe has " + std::to_string(names.size()) +
                           " atoms; exhaustive enumeration will be slow beyond " +
                           std::to_string(limits.soft_cap));
  }

  auto universe = Universe::make(names);
  out.program.universe = universe;
  for (const RawRule& r : raw) {
    Rule rule{universe->mask_of(r.head), universe->mask_of(r.pos), universe->mask_of(r.neg),
              universe->mask_of(r.dneg)};
    if (std::find(out.program.rules.begin(), out.program.rules.end(), rule) ==
        out.program.rules.end()) {
      out.program.rules.push_back(rule);
    }
  }
  return out;
}

Program parse_program(std::string_view text,
                      const std::optional<std::vector<std::string>>& declared_universe,
                      const ParseLimits& limits) {
  return parse_program_ex(text, declared_universe, limits).program;
}

std::string format_rule(const Universe& u, const Rule& r) {
  std::string out;
  auto append_atoms = [&](Mask m, const char* prefix, bool& first) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!(m & (Mask{1} << i))) continue;
      if (!first) out += ", ";
      out += prefix;
      out += u.name(static_cast<int>(i));
      first = false;
    }
  };

  bool first_head = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(r.head & (Mask{1} << i))) continue;
    if (!first_head) out += " | ";
    out += u.name(static_cast<int>(i));
    first_head = false;
  }

  Mask body = r.pos | r.neg | r.dneg;
  if (body == 0) {
    out += r.head ? "." : ":-.";
    return out;
  }
  out += r.head ? " :- " : ":- ";
  bool first = true;
  append_atoms(r.pos, "", first);
  append_atoms(r.neg, "not ", first);
  append_atoms(r.dneg, "not not ", first);
  out += ".";
  return out;
}

std::string format_program(const Program& p) {
  std::string out;
  if (p.universe->size() > 0) {
    out += "#universe ";
    for (std::size_t i = 0; i < p.universe->size(); ++i) {
      if (i) out += ", ";
      out += p.universe->name(static_cast<int>(i));
    }
    out += ".\n";
  }
  for (const Rule& r : p.rules) {
    out += format_rule(*p.universe, r);
    out += "\n";
  }
  return out;
}

Program project_keep_universe(const Program& p, Mask a) {
  Program out;
  out.universe = p.universe;
  for (const Rule& r : p.rules) {
    if ((r.head & a) || (r.neg & a)) continue;
    Rule kept{r.head, r.pos & ~a, r.neg, r.dneg & ~a};
    if (std::find(out.rules.begin(), out.rules.end(), kept) == out.rules.end()) {
      out.rules.push_back(kept);
    }
  }
  return out;
}

Program project(const Program& p, Mask a) {
  Program kept = project_keep_universe(p, a);
  return kept.with_universe(p.universe->without(a));
}

bool is_a_separated(const Program& r, Mask a) {
  for (const Rule& rule : r.rules) {
    Mask used = rule.atoms();
    if ((used & a) && (used & ~a)) return false;
  }
  return true;
}

Program union_programs(const Program& p, const Program& q) {
  std::vector<std::string> extra;
  for (const auto& n : q.universe->names()) {
    if (!p.universe->index_of(n)) extra.push_back(n);
  }
  UniversePtr merged = extra.empty() ? p.universe : p.universe->extended(extra);
  Program ph = extra.empty() && merged == p.universe ? p : p.with_universe(merged);
  Program qh = q.with_universe(merged);
  Program out;
  out.universe = merged;
  out.rules = ph.rules;
  for (const Rule& r : qh.rules) {
    if (std::find(out.rules.begin(), out.rules.end(), r) == out.rules.end()) {
      out.rules.push_back(r);
    }
  }
  return out;
}

}  // namespace relsimp
