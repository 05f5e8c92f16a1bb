#include "relsimp/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace relsimp {

namespace {

std::vector<Rule> rule_pool_over(Mask atoms, const ContextBounds& bounds) {
  std::vector<Rule> pool;
  const int limit = bounds.max_body_literals;
  for_each_subset(atoms, [&](Mask head) {
    for_each_subset(atoms, [&](Mask pos) {
      if (mask_size(pos) > limit) return;
      for_each_subset(atoms, [&](Mask neg) {
        if (mask_size(pos) + mask_size(neg) > limit) return;
        Mask dneg_space = bounds.allow_double_negation ? atoms : 0;
        for_each_subset(dneg_space, [&](Mask dneg) {
          if (mask_size(pos) + mask_size(neg) + mask_size(dneg) > limit) return;
          Rule r{head, pos, neg, dneg};
          if (r.atoms() == 0 && r.head == 0) return;  // skip the bare ':-.'
          pool.push_back(r);
        });
      });
    });
  });
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

std::size_t combinations_upto(std::size_t n, int k) {
  std::size_t total = 0;
  std::size_t binom = 1;  // C(n, 0)
  for (int i = 0; i <= k; ++i) {
    total += binom;
    if (total > 100'000'000) return total;  // saturate; only used against limits
    binom = binom * (n - static_cast<std::size_t>(i)) / (static_cast<std::size_t>(i) + 1);
    if (static_cast<std::size_t>(i) >= n) break;
  }
  return total;
}

class WitnessShapes {
 public:
  WitnessShapes(UniversePtr u, Mask b, Mask a, const ContextBounds& bounds)
      : u_(std::move(u)), b_(b), a_(a), bounds_(bounds) {}

  // Proof-shaped contexts over B, parametrized by X ⊆ Y ⊆ A∪B. Shapes whose
  // rules exceed the body bound are dropped, and so are programs the plain
  // enumeration already yields.
  std::vector<Program> all() const {
    std::set<std::vector<Rule>> seen;
    std::vector<Program> out;
    auto emit = [&](std::vector<Rule> rules) {
      std::sort(rules.begin(), rules.end());
      rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
      for (const Rule& r : rules) {
        if (mask_size(r.pos) + mask_size(r.neg) + mask_size(r.dneg) > bounds_.max_body_literals) {
          return;
        }
      }
      if (static_cast<int>(rules.size()) <= bounds_.max_rules) return;  // plain part has it
      if (!seen.insert(rules).second) return;
      out.push_back(Program{u_, std::move(rules)});
    };

    const Mask scope = (a_ | b_) & u_->full();
    for_each_subset(scope, [&](Mask y) {
      emit(facts(y & b_));
      emit(cat(facts(y & b_), kill((b_ & ~a_) & ~y)));
      emit(cat(cat(facts(y & b_), kill((b_ & ~a_) & ~y)), force((a_ & b_) & ~y)));
      for_each_subset(y, [&](Mask x) {
        if (x == y) return;
        Mask gap = (y & b_) & ~x;
        emit(cat(facts(x & b_), cliques(gap)));
        emit(cat(cat(facts(x & b_), cliques(gap)), kill((b_ & ~a_) & ~y)));
        emit(cat(cat(facts(x & b_), force(gap & a_)), cliques(gap & ~a_)));
        emit(cat(cat(cat(facts(x & b_), force(gap & a_)), cliques(gap & ~a_)),
                 kill((b_ & ~a_) & ~y)));
      });
    });
    return out;
  }

 private:
  static std::vector<Rule> cat(std::vector<Rule> x, const std::vector<Rule>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  }

  static std::vector<Rule> facts(Mask s) {
    std::vector<Rule> out;
    for (Mask bit = 1; bit; bit <<= 1) {
      if (s & bit) out.push_back(Rule{bit, 0, 0, 0});
      if (bit >= s) break;
    }
    return out;
  }

  // y :- not y.  (atoms of A∩B; vanishes under projection)
  static std::vector<Rule> force(Mask s) {
    std::vector<Rule> out;
    for (Mask bit = 1; bit; bit <<= 1) {
      if (s & bit) out.push_back(Rule{bit, 0, bit, 0});
      if (bit >= s) break;
    }
    return out;
  }

  // :- y.  (atoms of B∖A; survives projection unchanged)
  static std::vector<Rule> kill(Mask s) {
    std::vector<Rule> out;
    for (Mask bit = 1; bit; bit <<= 1) {
      if (s & bit) out.push_back(Rule{0, bit, 0, 0});
      if (bit >= s) break;
    }
    return out;
  }

  // Implication cliques, one per side of the separation.
  std::vector<Rule> cliques(Mask s) const {
    std::vector<Rule> out;
    for (Mask side : {s & ~a_, s & a_}) {
      for (Mask b1 = 1; b1; b1 <<= 1) {
        if (!(side & b1)) {
          if (b1 >= side) break;
          continue;
        }
        for (Mask b2 = 1; b2; b2 <<= 1) {
          if ((side & b2) && b1 != b2) out.push_back(Rule{b2, b1, 0, 0});
          if (b2 >= side) break;
        }
        if (b1 >= side) break;
      }
    }
    return out;
  }

  UniversePtr u_;
  Mask b_;
  Mask a_;
  ContextBounds bounds_;
};

}  // namespace

std::size_t estimate_context_count(const Universe& u, Mask b, Mask a,
                                   const ContextBounds& bounds) {
  std::size_t pool = rule_pool_over(b & ~a & u.full(), bounds).size() +
                     rule_pool_over(b & a & u.full(), bounds).size();
  return combinations_upto(pool, bounds.max_rules);
}

void enumerate_contexts(UniversePtr u, Mask b, Mask a, const ContextBounds& bounds,
                        const std::function<bool(const Program&)>& fn) {
  std::size_t estimate = estimate_context_count(*u, b, a, bounds);
  if (estimate > bounds.enumeration_limit) {
    throw bound_overflow_error(estimate, bounds.enumeration_limit);
  }

  std::vector<Rule> pool = rule_pool_over(b & ~a & u->full(), bounds);
  std::vector<Rule> a_side = rule_pool_over(b & a & u->full(), bounds);
  pool.insert(pool.end(), a_side.begin(), a_side.end());

  // Size-major, then lexicographic over pool indices.
  std::vector<int> pick;
  std::function<bool(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      std::vector<Rule> rules;
      for (int idx : pick) rules.push_back(pool[static_cast<std::size_t>(idx)]);
      return fn(Program{u, std::move(rules)});
    }
    for (int i = start; i + remaining <= static_cast<int>(pool.size()); ++i) {
      pick.push_back(i);
      bool keep_going = rec(i + 1, remaining - 1);
      pick.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };

  for (int size = 0; size <= bounds.max_rules; ++size) {
    if (!rec(0, size)) return;
  }

  if (bounds.include_proof_witness_family) {
    WitnessShapes shapes(u, b & u->full(), a & u->full(), bounds);
    for (const Program& w : shapes.all()) {
      if (!fn(w)) return;
    }
  }
}

namespace {

std::vector<std::vector<std::string>> name_sets(const std::vector<Mask>& sets, const Universe& u) {
  std::vector<std::vector<std::string>> out;
  out.reserve(sets.size());
  for (Mask m : sets) out.push_back(u.sorted_names_of(m));
  return out;
}

VerificationReport run_operational(const Program& p, const Program& q, Mask remove, Mask b,
                                   Mask enum_a, const ContextBounds& bounds,
                                   bool project_context, bool semantic_pass) {
  VerificationReport report;
  report.semantic_pass = semantic_pass;
  report.operational_pass = true;

  Program q_hosted = q.with_universe(p.universe);
  enumerate_contexts(p.universe, b, enum_a, bounds, [&](const Program& r) {
    ++report.contexts_checked;
    Program pr = union_programs(p, r);
    std::vector<Mask> lhs = project_sets(answer_sets(pr), remove);

    Program r_for_q = project_context ? project_keep_universe(r, remove) : r;
    Program qr = union_programs(q_hosted, r_for_q);
    std::vector<Mask> rhs = answer_sets(qr);
    std::sort(rhs.begin(), rhs.end());

    if (lhs != rhs) {
      report.operational_pass = false;
      report.counterexample =
          Counterexample{r, name_sets(lhs, *p.universe), name_sets(rhs, *p.universe)};
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace

VerificationReport check_simplification(const Program& p, const Program& q, const RelCtx& ctx,
                                        const ContextBounds& bounds) {
  for (const auto& name : q.universe->names()) {
    auto idx = p.universe->index_of(name);
    if (!idx || (ctx.remove & (Mask{1} << *idx))) {
      throw config_error("candidate program mentions atom '" + name +
                         "' outside the kept vocabulary");
    }
  }

  SEModelSet expected = ab_se_models(p, ctx);
  Program q_kept = q.with_universe(expected.universe);
  SEModelSet got = se_models_restricted(q_kept, q_kept.full(),
                                        expected.relativizer.value_or(q_kept.full()));
  bool semantic = got.pairs == expected.pairs;

  return run_operational(p, q, ctx.remove, ctx.context, ctx.remove, bounds,
                         /*project_context=*/true, semantic);
}

VerificationReport check_forgetting(const Program& p, const Program& q, Mask a, Mask s,
                                    const ContextBounds& bounds) {
  if (s & a) throw config_error("the persistence context must avoid the forgotten atoms");
  for (const auto& name : q.universe->names()) {
    auto idx = p.universe->index_of(name);
    if (!idx || (a & (Mask{1} << *idx))) {
      throw config_error("candidate program mentions atom '" + name +
                         "' outside the kept vocabulary");
    }
  }

  RelCtx ctx{p.full(), a, s};
  SEModelSet expected = ab_se_models(p, ctx);
  Program q_kept = q.with_universe(expected.universe);
  SEModelSet got = se_models_restricted(q_kept, q_kept.full(),
                                        expected.relativizer.value_or(q_kept.full()));
  bool semantic = got.pairs == expected.pairs;

  // Every program over S is A-separated, so the stream is not A-constrained;
  // contexts stay untouched on the q side.
  return run_operational(p, q, a, s, /*enum_a=*/0, bounds, /*project_context=*/false, semantic);
}

const std::string& QbfInstance::var_name(int idx) const {
  std::size_t i = static_cast<std::size_t>(idx);
  if (i < u.size()) return u[i];
  i -= u.size();
  if (i < v.size()) return v[i];
  i -= v.size();
  return w[i];
}

QbfInstance parse_qbf(std::string_view text) {
  QbfInstance phi;
  std::vector<std::pair<std::string, int>> statements;  // text, starting line
  std::string current;
  int line = 1;
  int stmt_line = 1;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      in_comment = false;
      current += ' ';
      continue;
    }
    if (in_comment) continue;
    if (c == '%') {
      in_comment = true;
      continue;
    }
    if (c == ';') {
      statements.emplace_back(current, stmt_line);
      current.clear();
      stmt_line = line;
    } else {
      if (current.empty() && !std::isspace(static_cast<unsigned char>(c))) stmt_line = line;
      current += c;
    }
  }
  {
    std::istringstream tail(current);
    std::string leftover;
    if (tail >> leftover) throw parse_error("statement not terminated by ';'", line, 1);
  }

  int forall_blocks = 0;
  auto var_index = [&](const std::string& name) -> std::optional<int> {
    int idx = 0;
    for (const auto& list : {&phi.u, &phi.v, &phi.w}) {
      for (const auto& n : *list) {
        if (n == name) return idx;
        ++idx;
      }
    }
    return std::nullopt;
  };

  for (const auto& [stmt, at] : statements) {
    std::istringstream in(stmt);
    std::string keyword;
    if (!(in >> keyword)) continue;
    if (keyword == "forall" || keyword == "exists") {
      std::vector<std::string>* block = nullptr;
      if (keyword == "exists") {
        block = &phi.v;
        if (!phi.v.empty()) throw parse_error("duplicate exists block", at, 1);
      } else {
        block = forall_blocks == 0 ? &phi.u : &phi.w;
        if (++forall_blocks > 2) throw parse_error("too many forall blocks", at, 1);
      }
      if (!phi.terms.empty()) throw parse_error("quantifier blocks must precede terms", at, 1);
      std::string name;
      while (in >> name) {
        if (var_index(name)) throw parse_error("duplicate variable '" + name + "'", at, 1);
        block->push_back(name);
      }
    } else if (keyword == "term") {
      std::array<QbfLiteral, 3> term{};
      for (int i = 0; i < 3; ++i) {
        std::string lit;
        if (!(in >> lit)) throw parse_error("term needs exactly 3 literals", at, 1);
        bool negated = !lit.empty() && lit[0] == '-';
        std::string name = negated ? lit.substr(1) : lit;
        auto idx = var_index(name);
        if (!idx) throw parse_error("undeclared variable '" + name + "'", at, 1);
        term[static_cast<std::size_t>(i)] = QbfLiteral{*idx, negated};
      }
      std::string extra;
      if (in >> extra) throw parse_error("term needs exactly 3 literals", at, 1);
      phi.terms.push_back(term);
    } else {
      throw parse_error("unknown statement '" + keyword + "'", at, 1);
    }
  }
  return phi;
}

namespace {

bool matrix_true(const QbfInstance& phi, Mask assignment) {
  for (const auto& term : phi.terms) {
    bool all = true;
    for (const QbfLiteral& lit : term) {
      bool value = (assignment >> lit.var) & 1;
      if (value == lit.negated) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool qbf_eval(const QbfInstance& phi) {
  const int nu = static_cast<int>(phi.u.size());
  const int nv = static_cast<int>(phi.v.size());
  const int nw = static_cast<int>(phi.w.size());
  const Mask u_full = nu ? (Mask{1} << nu) - 1 : 0;
  const Mask v_full = nv ? (Mask{1} << nv) - 1 : 0;
  const Mask w_full = nw ? (Mask{1} << nw) - 1 : 0;

  for (Mask ua = 0;; ++ua) {
    bool exists_v = false;
    for (Mask va = 0;; ++va) {
      bool all_w = true;
      for (Mask wa = 0;; ++wa) {
        Mask assignment = ua | (va << nu) | (wa << (nu + nv));
        if (!matrix_true(phi, assignment)) {
          all_w = false;
          break;
        }
        if (wa == w_full) break;
      }
      if (all_w) {
        exists_v = true;
        break;
      }
      if (va == v_full) break;
    }
    if (!exists_v) return false;
    if (ua == u_full) return true;
  }
}

QbfReduction qbf_reduce(const QbfInstance& phi) {
  std::vector<std::string> names;
  auto add_pair = [&](const std::string& n) {
    names.push_back(n);
    names.push_back(n + "_c");
  };
  for (const auto& n : phi.u) add_pair(n);
  for (const auto& n : phi.v) add_pair(n);
  for (const auto& n : phi.w) add_pair(n);
  names.push_back("sat");
  {
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) {
      throw config_error("variable names collide with the generated copies");
    }
  }

  UniversePtr u = Universe::make(names);
  auto bit = [&](const std::string& n) { return Mask{1} << *u->index_of(n); };
  const Mask sat = bit("sat");

  Program p;
  p.universe = u;
  for (const auto& blocks : {&phi.u, &phi.v, &phi.w}) {
    for (const auto& n : *blocks) {
      p.rules.push_back(Rule{bit(n) | bit(n + "_c"), 0, 0, 0});
    }
  }
  for (const auto& n : phi.w) {
    p.rules.push_back(Rule{bit(n), sat, 0, 0});
    p.rules.push_back(Rule{bit(n + "_c"), sat, 0, 0});
    p.rules.push_back(Rule{sat, bit(n) | bit(n + "_c"), 0, 0});
  }
  for (const auto& term : phi.terms) {
    Mask body = 0;
    for (const QbfLiteral& lit : term) {
      const std::string& name = phi.var_name(lit.var);
      body |= lit.negated ? bit(name + "_c") : bit(name);
    }
    p.rules.push_back(Rule{sat, body, 0, 0});
  }
  p.rules.push_back(Rule{0, 0, sat, 0});

  QbfReduction out;
  out.p = p;
  std::vector<std::string> q_names;
  for (const auto& n : phi.u) {
    q_names.push_back(n);
    q_names.push_back(n + "_c");
  }
  out.q.universe = Universe::make(q_names);
  for (const auto& n : phi.u) {
    out.q.rules.push_back(
        Rule{out.q.universe->mask_of({n, n + "_c"}), 0, 0, 0});
  }
  for (const auto& n : phi.v) {
    out.a_atoms.push_back(n);
    out.a_atoms.push_back(n + "_c");
  }
  for (const auto& n : phi.w) {
    out.a_atoms.push_back(n);
    out.a_atoms.push_back(n + "_c");
  }
  out.a_atoms.push_back("sat");
  out.a_mask = u->mask_of(out.a_atoms);
  return out;
}

}  // namespace relsimp
