#pragma once

#include <optional>
#include <vector>

#include "relsimp/syntax.hpp"

namespace relsimp {

struct SEPair {
  Mask here = 0;   // X
  Mask there = 0;  // Y

  bool total() const { return here == there; }

  friend bool operator==(const SEPair&, const SEPair&) = default;
  friend auto operator<=>(const SEPair& a, const SEPair& b) {
    if (auto c = a.there <=> b.there; c != 0) return c;
    return a.here <=> b.here;
  }
};

struct SEModelSet {
  UniversePtr universe;
  Mask alphabet = 0;                   // every there is a subset of this
  std::optional<Mask> relativizer;     // the B of B-SE semantics, when any
  std::vector<SEPair> pairs;           // sorted (there, here), unique

  bool contains(SEPair p) const;
  SEModelSet with_universe(UniversePtr target) const;

  friend bool operator==(const SEModelSet& a, const SEModelSet& b) {
    return a.universe->same_names(*b.universe) && a.alphabet == b.alphabet &&
           a.relativizer == b.relativizer && a.pairs == b.pairs;
  }
};

bool is_model(Mask i, const Program& p);

// x ⊨ p^y without materializing the reduct.
bool holds_in_reduct(Mask x, const Program& p, Mask y);

Program reduct(const Program& p, Mask i);

std::vector<Mask> answer_sets(const Program& p);

SEModelSet se_models(const Program& p);

// B-SE-models: totals ⟨Y,Y⟩ with Y a model such that no Y' ⊂ Y with
// Y'∩B = Y∩B satisfies p^Y; non-totals ⟨X,Y⟩ with X ⊂ Y∩B witnessed by some
// X' ⊆ Y, X'∩B = X, X' ⊨ p^Y.
SEModelSet rel_se_models(const Program& p, Mask b);

// Canonically least witness X' for a non-total B-SE-model, if the pair is one.
std::optional<Mask> rel_se_witness(const Program& p, Mask b, SEPair pair);

// {⟨X,Y⟩ ∈ rel_se_models(p, a2) | Y ⊆ a1}
SEModelSet se_models_restricted(const Program& p, Mask a1, Mask a2);

std::vector<Mask> project_sets(const std::vector<Mask>& sets, Mask drop);

}  // namespace relsimp
