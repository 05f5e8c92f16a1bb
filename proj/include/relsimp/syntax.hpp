#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relsimp/bits.hpp"

namespace relsimp {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line, int col)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg)
      : std::runtime_error("configuration error: " + msg) {}
};

// Immutable, shared vocabulary. Atom index = position in the declaration order.
class Universe {
 public:
  static std::shared_ptr<const Universe> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  Mask full() const {
    return names_.empty() ? 0 : (names_.size() >= 32 ? ~Mask{0} : (Mask{1} << names_.size()) - 1);
  }

  // Throws config_error on unknown names.
  Mask mask_of(const std::vector<std::string>& names) const;

  std::vector<std::string> names_of(Mask m) const;          // universe order
  std::vector<std::string> sorted_names_of(Mask m) const;   // lexicographic
  std::string set_text(Mask m) const;                       // "{a, b}" sorted by name

  bool same_names(const Universe& other) const { return names_ == other.names_; }

  std::shared_ptr<const Universe> without(Mask drop) const;
  std::shared_ptr<const Universe> extended(const std::vector<std::string>& extra) const;

 private:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;

struct Rule {
  Mask head = 0;
  Mask pos = 0;   // positive body
  Mask neg = 0;   // default-negated body
  Mask dneg = 0;  // doubly negated body

  bool is_constraint() const { return head == 0; }
  Mask atoms() const { return head | pos | neg | dneg; }

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

struct Program {
  UniversePtr universe;
  std::vector<Rule> rules;

  Mask full() const { return universe->full(); }

  // Re-hosts the program on a universe that contains all of its atom names.
  Program with_universe(UniversePtr target) const;

  // Universe as a name set and rules as a set, ignoring order.
  bool equals_modulo_order(const Program& other) const;
};

struct ParseLimits {
  int soft_cap = 16;
  int hard_cap = 24;
};

struct ParseOutcome {
  Program program;
  std::vector<std::string> warnings;
};

// Grammar (UTF-8, '%' starts a line comment):
//   program   := (directive | rule)*
//   directive := "#universe" atom ("," atom)* "."
//   rule      := head "." | head ":-" body "." | ":-" body "."
//   head      := atom ("|" atom)*
//   body      := literal ("," literal)*
//   literal   := atom | "not" atom | "not" "not" atom
// When the text declares a universe (or declared_universe is given), every
// occurring atom must belong to it. Duplicate rules are dropped; a duplicate
// atom inside one literal list is a parse error.
ParseOutcome parse_program_ex(
    std::string_view text,
    const std::optional<std::vector<std::string>>& declared_universe = std::nullopt,
    const ParseLimits& limits = {});

Program parse_program(
    std::string_view text,
    const std::optional<std::vector<std::string>>& declared_universe = std::nullopt,
    const ParseLimits& limits = {});

std::string format_rule(const Universe& u, const Rule& r);
std::string format_program(const Program& p);

// Drops every rule whose head or negative body meets `a`; removes `a` from the
// positive and doubly negated bodies of the rest. Result lives on universe∖a.
Program project(const Program& p, Mask a);

// Same rule transformation but the result keeps the original universe.
Program project_keep_universe(const Program& p, Mask a);

// True iff every rule uses atoms entirely inside `a` or entirely outside it.
bool is_a_separated(const Program& r, Mask a);

// Hosts both programs on the merged universe (left universe first) and
// concatenates their rules, dropping duplicates.
Program union_programs(const Program& p, const Program& q);

// Remaps a mask between universes by atom name; throws config_error when an
// atom is missing from the target.
Mask translate_mask(Mask m, const Universe& from, const Universe& to);

}  // namespace relsimp
