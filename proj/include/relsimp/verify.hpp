#pragma once

#include <array>
#include <functional>
#include <string>

#include "relsimp/synthesis.hpp"

namespace relsimp {

class bound_overflow_error : public std::runtime_error {
 public:
  explicit bound_overflow_error(std::size_t estimate, std::size_t limit)
      : std::runtime_error("context enumeration would visit about " + std::to_string(estimate) +
                           " programs, above the configured limit of " + std::to_string(limit)),
        estimate_(estimate) {}
  std::size_t estimate() const { return estimate_; }

 private:
  std::size_t estimate_;
};

struct ContextBounds {
  int max_rules = 2;
  int max_body_literals = 2;
  bool allow_double_negation = true;
  bool include_proof_witness_family = true;
  std::size_t enumeration_limit = 2'000'000;
};

// Number of programs the plain enumeration will yield (witness family extra).
std::size_t estimate_context_count(const Universe& u, Mask b, Mask a, const ContextBounds& bounds);

// Yields, deterministically and without duplicates, the A-separated programs
// over B within the bounds; with the witness family enabled, additionally
// yields proof-shaped contexts over B (facts, per-side implication cliques,
// `y :- not y` guards for atoms of A∩B and `:- y` kills for atoms of B∖A).
// The callback returns false to stop early.
void enumerate_contexts(UniversePtr u, Mask b, Mask a, const ContextBounds& bounds,
                        const std::function<bool(const Program&)>& fn);

struct Counterexample {
  Program context;
  std::vector<std::vector<std::string>> as_p;  // projected answer sets of p ∪ R
  std::vector<std::vector<std::string>> as_q;  // answer sets of q ∪ R|kept
};

struct VerificationReport {
  bool semantic_pass = false;
  bool operational_pass = false;
  std::size_t contexts_checked = 0;
  std::optional<Counterexample> counterexample;

  bool pass() const { return semantic_pass && operational_pass; }
};

// Semantic side: ab_se_models(p, ctx) against the (B∖A)-SE-models of q over
// U∖A. Operational side: AS(p ∪ R)|kept = AS(q ∪ R|kept) over the bounded
// context stream; the first failing context (canonical order) is reported.
VerificationReport check_simplification(const Program& p, const Program& q, const RelCtx& ctx,
                                        const ContextBounds& bounds);

// AS(q ∪ R) = AS(p ∪ R)|U∖A for every enumerated R over S, S ⊆ U∖A.
VerificationReport check_forgetting(const Program& p, const Program& q, Mask a, Mask s,
                                    const ContextBounds& bounds);

struct QbfLiteral {
  int var = 0;  // index into the concatenated u,v,w variable list
  bool negated = false;

  friend bool operator==(const QbfLiteral&, const QbfLiteral&) = default;
};

// ∀U ∃V ∀W ⋁ᵢ (lᵢ₁ ∧ lᵢ₂ ∧ lᵢ₃) with a DNF matrix of 3-literal terms.
struct QbfInstance {
  std::vector<std::string> u, v, w;
  std::vector<std::array<QbfLiteral, 3>> terms;

  std::size_t var_count() const { return u.size() + v.size() + w.size(); }
  const std::string& var_name(int idx) const;
};

// One declaration or term per line, ';' terminated, '-' for negation:
//   forall u1 u2; exists v1; forall w1; term u1 v1 w1; term -u1 -v1 -w1;
QbfInstance parse_qbf(std::string_view text);

bool qbf_eval(const QbfInstance& phi);

struct QbfReduction {
  Program p;
  Program q;
  std::vector<std::string> a_atoms;
  Mask a_mask = 0;  // over p's universe
};

// Saturation encoding: the formula is true iff AS(p)|kept equals AS(q).
QbfReduction qbf_reduce(const QbfInstance& phi);

}  // namespace relsimp
