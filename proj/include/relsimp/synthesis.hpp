#pragma once

#include "relsimp/relativized.hpp"

namespace relsimp {

// A construction produced something that fails its mandatory re-verification.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& msg)
      : std::runtime_error("verification failure: " + msg) {}
};

class simplify_error : public std::runtime_error {
 public:
  simplify_error(const std::string& msg, SimplifiabilityReport report)
      : std::runtime_error(msg), report_(std::move(report)) {}
  const SimplifiabilityReport& report() const { return report_; }

 private:
  SimplifiabilityReport report_;
};

class forget_error : public std::runtime_error {
 public:
  forget_error(const std::string& msg, OmegaReport omega)
      : std::runtime_error(msg), omega_(std::move(omega)) {}
  const OmegaReport& omega() const { return omega_; }

 private:
  OmegaReport omega_;
};

// Builds an ELP over the target's alphabet whose plain SE-models equal the
// target, one countermodel rule per excluded pair:
//   ⟨Y,Y⟩ missing        :-  Y, not (V∖Y).
//   ⟨X,Y⟩ missing, X ⊂ Y  ⋁(Y∖X) :- X, not (V∖Y), not not Y.
// Recomputes the SE-models of the result and throws verification_error on any
// mismatch. The target must be total-closed and plain (no relativizer).
Program canonical_program(const SEModelSet& target);

struct ForgetResult {
  Program program;        // over U∖A
  SEModelSet target;      // {⟨X,Y⟩ | Y ⊆ U∖A, X ∈ core(ℛ^Y)} on U∖A
  bool contract_ok = false;  // se_models_restricted(program, U∖A, B∖A) == target
  OmegaReport omega;
  std::vector<std::string> warnings;
};

// The forgetting operator: realizes the ℛ-family target as a program over
// U∖A. Callable on any input; when the Ω criterion blocks forgetting the
// result carries a warning and the contract flag reports whether the target
// was still realizable.
ForgetResult forget_rss(const Program& p, const RelCtx& ctx);

// Project-then-forget: projects A∩B away syntactically, then forgets A∖B
// relative to B∖A. Requires is_simplifiable(p, ctx); throws simplify_error
// with the failing witness otherwise. The result is defined over U∖A and is
// re-verified against the A-B-SE-models of p.
Program simplify(const Program& p, const RelCtx& ctx);

// Relativized strong-persistence forgetting: forget_rss with context S ⊆ U∖A.
// Throws forget_error with the Ω witness when forgetting is impossible, and
// config_error when S ⊄ U∖A.
ForgetResult forget_rsp(const Program& p, Mask a, Mask s);

// Greedily drops rules whose removal keeps the SE-models intact, scanning in
// canonical rule order.
Program prune_redundant_rules(const Program& p);

}  // namespace relsimp
