#pragma once

#include <algorithm>
#include <map>
#include <random>

#include "relsimp/relativized.hpp"

// Independent reference implementations used only as test oracles. They take
// different routes than the library code on purpose.
namespace relsimp::testing {

// Plain simplifiability conditions evaluated directly on the SE-models.
struct DirectDelta {
  bool s1 = true, s2 = true, s3 = true;
  bool all() const { return s1 && s2 && s3; }
};

inline DirectDelta direct_delta_plain(const Program& p, Mask a) {
  DirectDelta out;
  SEModelSet se = se_models(p);
  for (SEPair pr : se.pairs) {
    if (pr.total() && !mask_subset(a, pr.there)) out.s1 = false;
    if (!pr.total() && (pr.here & ~a) == (pr.there & ~a)) out.s2 = false;
    if (!se.contains(SEPair{pr.here | (pr.there & a), pr.there})) out.s3 = false;
  }
  return out;
}

// The classic family criterion over the complement-relativized SE-models,
// written as its own scan.
inline bool direct_omega_complement(const Program& p, Mask a) {
  const Mask kept = p.full() & ~a;
  SEModelSet rel = rel_se_models(p, kept);
  std::map<Mask, std::vector<Mask>> heres;
  for (SEPair pr : rel.pairs) heres[pr.there].push_back(pr.here);

  bool satisfied = false;
  for_each_subset(kept, [&](Mask y) {
    std::vector<std::vector<Mask>> family;
    for_each_subset(a, [&](Mask extra) {
      Mask total = y | extra;
      auto it = heres.find(total);
      if (it == heres.end()) return;
      if (std::find(it->second.begin(), it->second.end(), total) == it->second.end()) return;
      std::vector<Mask> entry;
      for (Mask x : it->second) entry.push_back(x & ~a);
      std::sort(entry.begin(), entry.end());
      entry.erase(std::unique(entry.begin(), entry.end()), entry.end());
      family.push_back(std::move(entry));
    });
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty()) return;
    for (const auto& candidate : family) {
      bool least = true;
      for (const auto& other : family) {
        if (!std::includes(other.begin(), other.end(), candidate.begin(), candidate.end())) {
          least = false;
          break;
        }
      }
      if (least) return;
    }
    satisfied = true;
  });
  return satisfied;
}

// Plain-intersection variant of the A-B-SE collection. Using raw set
// intersection (not the least element) this equals the A-B-SE-models for
// every program, which makes it a second route to ab_se_models.
inline std::vector<SEPair> abse_by_plain_intersection(const Program& p, const RelCtx& ctx) {
  SEModelSet rel = rel_se_models(p, ctx.context);
  std::map<Mask, std::vector<Mask>> heres;
  for (SEPair pr : rel.pairs) heres[pr.there].push_back(pr.here);

  std::vector<SEPair> out;
  for_each_subset(ctx.kept(), [&](Mask y) {
    bool any_entry = false;
    std::vector<Mask> meet;
    for_each_subset(ctx.remove, [&](Mask extra) {
      Mask total = y | extra;
      auto it = heres.find(total);
      if (it == heres.end()) return;
      if (std::find(it->second.begin(), it->second.end(), total) == it->second.end()) return;
      std::vector<Mask> entry;
      for (Mask x : it->second) entry.push_back(x & ~ctx.remove);
      std::sort(entry.begin(), entry.end());
      entry.erase(std::unique(entry.begin(), entry.end()), entry.end());
      if (!any_entry) {
        meet = entry;
        any_entry = true;
      } else {
        std::vector<Mask> next;
        std::set_intersection(meet.begin(), meet.end(), entry.begin(), entry.end(),
                              std::back_inserter(next));
        meet = next;
      }
    });
    if (!any_entry) return;
    for (Mask x : meet) out.push_back(SEPair{x, y});
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Answer sets through the materialized reduct and the classical model check.
inline std::vector<Mask> naive_answer_sets(const Program& p) {
  std::vector<Mask> out;
  for (Mask i = 0;; ++i) {
    Program red = reduct(p, i);
    if (is_model(i, red)) {
      bool minimal = true;
      for (Mask j = 0; j < i; ++j) {
        if (mask_subset(j, i) && is_model(j, red)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(i);
    }
    if (i == p.full()) break;
  }
  return out;
}

struct InstanceGen {
  std::mt19937 rng;

  explicit InstanceGen(unsigned seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Mask subset_of(Mask space, double bias = 0.5) {
    Mask out = 0;
    for (Mask bit = 1; bit; bit <<= 1) {
      if ((space & bit) && std::bernoulli_distribution(bias)(rng)) out |= bit;
      if (bit >= space) break;
    }
    return out;
  }

  UniversePtr universe(int min_atoms = 2, int max_atoms = 4) {
    static const std::vector<std::string> pool{"a", "b", "c", "d"};
    int n = pick(min_atoms, max_atoms);
    return Universe::make(std::vector<std::string>(pool.begin(), pool.begin() + n));
  }

  Program program(UniversePtr u, int max_rules = 4) {
    Program p;
    p.universe = u;
    if (u->size() == 0) return p;
    const Mask full = u->full();
    int rules = pick(0, max_rules);
    for (int i = 0; i < rules; ++i) {
      Rule r;
      r.head = subset_of(full, 0.3);
      r.pos = subset_of(full, 0.25);
      r.neg = subset_of(full, 0.25);
      r.dneg = subset_of(full, 0.15);
      if (r.atoms() == 0) r.head = Mask{1} << pick(0, static_cast<int>(u->size()) - 1);
      if (std::find(p.rules.begin(), p.rules.end(), r) == p.rules.end()) p.rules.push_back(r);
    }
    return p;
  }

  // A random total-closed plain SE target over the universe.
  SEModelSet target(UniversePtr u) {
    SEModelSet out;
    out.universe = u;
    out.alphabet = u->full();
    std::vector<Mask> totals;
    for_each_subset(u->full(), [&](Mask y) {
      if (std::bernoulli_distribution(0.45)(rng)) totals.push_back(y);
    });
    for (Mask y : totals) {
      out.pairs.push_back(SEPair{y, y});
      for_each_subset(y, [&](Mask x) {
        if (x != y && std::bernoulli_distribution(0.3)(rng)) out.pairs.push_back(SEPair{x, y});
      });
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
  }
};

}  // namespace relsimp::testing
