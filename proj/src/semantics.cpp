#include "relsimp/semantics.hpp"

#include <algorithm>

namespace relsimp {

bool SEModelSet::contains(SEPair p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

SEModelSet SEModelSet::with_universe(UniversePtr target) const {
  SEModelSet out;
  out.universe = target;
  out.alphabet = translate_mask(alphabet, *universe, *target);
  if (relativizer) out.relativizer = translate_mask(*relativizer, *universe, *target);
  out.pairs.reserve(pairs.size());
  for (SEPair p : pairs) {
    out.pairs.push_back(
        SEPair{translate_mask(p.here, *universe, *target), translate_mask(p.there, *universe, *target)});
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
  return out;
}

bool is_model(Mask i, const Program& p) {
  for (const Rule& r : p.rules) {
    if (((r.head | r.neg) & i) == 0 && mask_subset(r.pos | r.dneg, i)) return false;
  }
  return true;
}

bool holds_in_reduct(Mask x, const Program& p, Mask y) {
  for (const Rule& r : p.rules) {
    if ((r.neg & y) != 0 || !mask_subset(r.dneg, y)) continue;
    if ((r.head & x) == 0 && mask_subset(r.pos, x)) return false;
  }
  return true;
}

Program reduct(const Program& p, Mask i) {
  Program out;
  out.universe = p.universe;
  for (const Rule& r : p.rules) {
    if ((r.neg & i) != 0 || !mask_subset(r.dneg, i)) continue;
    Rule pos{r.head, r.pos, 0, 0};
    if (std::find(out.rules.begin(), out.rules.end(), pos) == out.rules.end()) {
      out.rules.push_back(pos);
    }
  }
  return out;
}

std::vector<Mask> answer_sets(const Program& p) {
  std::vector<Mask> out;
  const Mask full = p.full();
  for (Mask i = 0;; ++i) {
    if (holds_in_reduct(i, p, i)) {
      bool minimal = true;
      for (Mask j = (i - 1) & i; j != i; j = (j - 1) & i) {
        if (holds_in_reduct(j, p, i)) {
          minimal = false;
          break;
        }
        if (j == 0) break;
      }
      if (minimal) out.push_back(i);
    }
    if (i == full) break;
  }
  return out;
}

SEModelSet se_models(const Program& p) {
  SEModelSet out;
  out.universe = p.universe;
  out.alphabet = p.full();
  for (Mask y = 0;; ++y) {
    if (is_model(y, p)) {
      for_each_subset(y, [&](Mask x) {
        if (holds_in_reduct(x, p, y)) out.pairs.push_back(SEPair{x, y});
      });
    }
    if (y == p.full()) break;
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

SEModelSet rel_se_models(const Program& p, Mask b) {
  SEModelSet out;
  out.universe = p.universe;
  out.alphabet = p.full();
  out.relativizer = b;
  for (Mask y = 0;; ++y) {
    if (is_model(y, p)) {
      const Mask yb = y & b;
      bool total_blocked = false;
      std::vector<Mask> traces;
      for_each_subset(y, [&](Mask x) {
        if (total_blocked || !holds_in_reduct(x, p, y)) return;
        Mask t = x & b;
        if (t == yb) {
          if (x != y) total_blocked = true;
          return;
        }
        traces.push_back(t);
      });
      if (!total_blocked) {
        std::sort(traces.begin(), traces.end());
        traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
        for (Mask t : traces) out.pairs.push_back(SEPair{t, y});
        out.pairs.push_back(SEPair{y, y});
      }
    }
    if (y == p.full()) break;
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::optional<Mask> rel_se_witness(const Program& p, Mask b, SEPair pair) {
  if (!rel_se_models(p, b).contains(pair)) return std::nullopt;
  if (pair.total()) return pair.here;
  std::optional<Mask> found;
  for_each_subset(pair.there, [&](Mask x) {
    if (found) return;
    if ((x & b) == pair.here && holds_in_reduct(x, p, pair.there)) found = x;
  });
  return found;
}

SEModelSet se_models_restricted(const Program& p, Mask a1, Mask a2) {
  SEModelSet all = rel_se_models(p, a2);
  SEModelSet out;
  out.universe = p.universe;
  out.alphabet = a1;
  out.relativizer = a2;
  for (SEPair pr : all.pairs) {
    if (mask_subset(pr.there, a1)) out.pairs.push_back(pr);
  }
  return out;
}

std::vector<Mask> project_sets(const std::vector<Mask>& sets, Mask drop) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (Mask m : sets) out.push_back(m & ~drop);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace relsimp
