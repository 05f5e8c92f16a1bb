#pragma once

#include <optional>
#include <vector>

#include "relsimp/semantics.hpp"

namespace relsimp {

// Analysis context: U is the program's universe; `remove` is A, `context` is B.
// A and B need not be related by containment.
struct RelCtx {
  Mask universe = 0;
  Mask remove = 0;
  Mask context = 0;

  Mask kept() const { return universe & ~remove; }
};

RelCtx make_ctx(const Program& p, const std::vector<std::string>& remove,
                const std::optional<std::vector<std::string>>& context = std::nullopt);

struct DeltaCondition {
  bool holds = true;
  std::optional<SEPair> witness;  // canonically least violating pair
};

struct DeltaReport {
  DeltaCondition s1, s2, s3;
  // True when quantifying s2 over the B-SE-models instead of the plain
  // SE-models would flip its verdict.
  bool s2_reading_differs = false;

  bool all() const { return s1.holds && s2.holds && s3.holds; }
};

struct RYFamilyEntry {
  Mask a_prime = 0;                   // A' with ⟨Y∪A',Y∪A'⟩ a total B-SE-model
  std::vector<Mask> projected_heres;  // {X∖A | ⟨X,Y∪A'⟩ ∈ SE^B(P)}, sorted
};

struct RYFamily {
  Mask y = 0;
  std::vector<RYFamilyEntry> entries;

  // Entry sets with duplicates removed, in canonical order.
  std::vector<std::vector<Mask>> distinct_sets() const;
  // ⊆-least member among distinct_sets(), when one exists.
  std::optional<std::vector<Mask>> least_element() const;
  // Least element when present, otherwise the empty set.
  std::vector<Mask> core() const;
};

struct OmegaReport {
  bool satisfied = false;
  std::optional<Mask> witness_y;      // canonically least witness
  std::optional<RYFamily> witness_family;
  int witness_count = 0;
};

struct SimplifiabilityReport {
  DeltaReport delta;
  OmegaReport omega;
  bool simplifiable = false;
};

// Projections of all total B-SE-models plus the projection-stable non-totals:
// ⟨X,Y⟩ projects in iff every total B-SE-model agreeing with Y on U∖A carries
// some B-SE-model whose here agrees with X on U∖A. Result lives on U∖A.
SEModelSet ab_se_models(const Program& p, const RelCtx& ctx);

// Same pair set kept on the original universe (atoms of A masked out).
std::vector<SEPair> ab_se_pairs_unprojected(const Program& p, const RelCtx& ctx);

DeltaReport check_delta(const Program& p, const RelCtx& ctx);

RYFamily ry_family(const Program& p, const RelCtx& ctx, Mask y);

std::pair<bool, std::optional<std::pair<Mask, RYFamily>>> check_omega_with_witness(
    const Program& p, const RelCtx& ctx);

OmegaReport check_omega(const Program& p, const RelCtx& ctx);

// Verdict derived from the A-B-SE-model characterization; agrees with
// check_omega on every input.
bool check_omega_via_abse(const Program& p, const RelCtx& ctx);

// {⟨X,Y⟩ | Y ⊆ U∖A, X ∈ core(ℛ^Y)} on the original universe.
std::vector<SEPair> rss_target_pairs(const Program& p, const RelCtx& ctx);

SimplifiabilityReport is_simplifiable(const Program& p, const RelCtx& ctx);

// rel_se_models agree on the shared universe (programs are matched by name).
bool check_relativized_equivalence(const Program& p1, const Program& p2, Mask b);

}  // namespace relsimp
