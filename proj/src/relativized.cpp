#include "relsimp/relativized.hpp"

#include <algorithm>
#include <map>

namespace relsimp {

RelCtx make_ctx(const Program& p, const std::vector<std::string>& remove,
                const std::optional<std::vector<std::string>>& context) {
  RelCtx ctx;
  ctx.universe = p.full();
  ctx.remove = p.universe->mask_of(remove);
  ctx.context = context ? p.universe->mask_of(*context) : p.full();
  return ctx;
}

std::vector<SEPair> ab_se_pairs_unprojected(const Program& p, const RelCtx& ctx) {
  const Mask keep = ~ctx.remove;
  SEModelSet rel = rel_se_models(p, ctx.context);

  std::map<Mask, std::vector<Mask>> totals_by_proj;  // Y|keep -> totals Y
  std::map<Mask, std::vector<Mask>> heres_by_there;  // Y -> projected heres
  for (SEPair pr : rel.pairs) {
    if (pr.total()) totals_by_proj[pr.there & keep].push_back(pr.there);
    heres_by_there[pr.there].push_back(pr.here & keep);
  }

  std::vector<SEPair> out;
  for (SEPair pr : rel.pairs) {
    if (pr.total()) {
      out.push_back(SEPair{pr.there & keep, pr.there & keep});
      continue;
    }
    Mask px = pr.here & keep;
    Mask py = pr.there & keep;
    bool stable = true;
    for (Mask total : totals_by_proj[py]) {
      const auto& heres = heres_by_there[total];
      if (std::find(heres.begin(), heres.end(), px) == heres.end()) {
        stable = false;
        break;
      }
    }
    if (stable) out.push_back(SEPair{px, py});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SEModelSet ab_se_models(const Program& p, const RelCtx& ctx) {
  SEModelSet raw;
  raw.universe = p.universe;
  raw.alphabet = ctx.kept();
  raw.relativizer = ctx.context & ~ctx.remove;
  raw.pairs = ab_se_pairs_unprojected(p, ctx);
  return raw.with_universe(p.universe->without(ctx.remove));
}

DeltaReport check_delta(const Program& p, const RelCtx& ctx) {
  const Mask a = ctx.remove;
  const Mask b = ctx.context;
  const Mask keep = ~a;
  SEModelSet rel = rel_se_models(p, b);
  DeltaReport report;

  for (SEPair pr : rel.pairs) {
    if (pr.total() && !mask_subset(a & b, pr.there)) {
      report.s1 = {false, pr};
      break;
    }
  }

  SEModelSet se = se_models(p);
  auto s2_violation = [&](const std::vector<SEPair>& pairs) -> std::optional<SEPair> {
    for (SEPair pr : pairs) {
      if (pr.here == pr.there) continue;
      if (!rel.contains(SEPair{pr.there, pr.there})) continue;
      if ((pr.here & keep) == (pr.there & keep)) return pr;
    }
    return std::nullopt;
  };
  if (auto w = s2_violation(se.pairs)) report.s2 = {false, *w};
  bool s2_alt_holds = !s2_violation(rel.pairs).has_value();
  report.s2_reading_differs = (report.s2.holds != s2_alt_holds);

  for (SEPair pr : rel.pairs) {
    Mask lifted = pr.here | (pr.there & (a & b));
    SEPair required{lifted, pr.there};
    bool valid = lifted == pr.there || mask_proper_subset(lifted, pr.there & b);
    if (!valid || !rel.contains(required)) {
      report.s3 = {false, pr};
      break;
    }
  }
  return report;
}

namespace {

struct RelIndex {
  std::map<Mask, std::vector<Mask>> heres_by_there;

  explicit RelIndex(const SEModelSet& rel) {
    for (SEPair pr : rel.pairs) heres_by_there[pr.there].push_back(pr.here);
  }

  bool has_total(Mask y) const {
    auto it = heres_by_there.find(y);
    if (it == heres_by_there.end()) return false;
    return std::find(it->second.begin(), it->second.end(), y) != it->second.end();
  }
};

RYFamily ry_family_indexed(const RelIndex& idx, Mask a, Mask y) {
  RYFamily fam;
  fam.y = y;
  for_each_subset(a, [&](Mask a_prime) {
    Mask total = y | a_prime;
    if (!idx.has_total(total)) return;
    RYFamilyEntry entry;
    entry.a_prime = a_prime;
    for (Mask here : idx.heres_by_there.at(total)) {
      entry.projected_heres.push_back(here & ~a);
    }
    std::sort(entry.projected_heres.begin(), entry.projected_heres.end());
    entry.projected_heres.erase(
        std::unique(entry.projected_heres.begin(), entry.projected_heres.end()),
        entry.projected_heres.end());
    fam.entries.push_back(std::move(entry));
  });
  return fam;
}

}  // namespace

RYFamily ry_family(const Program& p, const RelCtx& ctx, Mask y) {
  RelIndex idx(rel_se_models(p, ctx.context));
  return ry_family_indexed(idx, ctx.remove, y);
}

std::vector<std::vector<Mask>> RYFamily::distinct_sets() const {
  std::vector<std::vector<Mask>> sets;
  for (const auto& e : entries) sets.push_back(e.projected_heres);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::optional<std::vector<Mask>> RYFamily::least_element() const {
  auto sets = distinct_sets();
  for (const auto& candidate : sets) {
    bool least = true;
    for (const auto& other : sets) {
      if (!std::includes(other.begin(), other.end(), candidate.begin(), candidate.end())) {
        least = false;
        break;
      }
    }
    if (least) return candidate;
  }
  return std::nullopt;
}

std::vector<Mask> RYFamily::core() const {
  if (entries.empty()) return {};
  if (auto least = least_element()) return *least;
  return {};
}

std::pair<bool, std::optional<std::pair<Mask, RYFamily>>> check_omega_with_witness(
    const Program& p, const RelCtx& ctx) {
  OmegaReport r = check_omega(p, ctx);
  if (!r.satisfied) return {false, std::nullopt};
  return {true, std::make_pair(*r.witness_y, *r.witness_family)};
}

OmegaReport check_omega(const Program& p, const RelCtx& ctx) {
  OmegaReport report;
  RelIndex idx(rel_se_models(p, ctx.context));
  for_each_subset(ctx.kept(), [&](Mask y) {
    RYFamily fam = ry_family_indexed(idx, ctx.remove, y);
    if (fam.entries.empty()) return;
    if (!fam.least_element()) {
      ++report.witness_count;
      if (!report.satisfied) {
        report.satisfied = true;
        report.witness_y = y;
        report.witness_family = fam;
      }
    }
  });
  return report;
}

std::vector<SEPair> rss_target_pairs(const Program& p, const RelCtx& ctx) {
  std::vector<SEPair> out;
  RelIndex idx(rel_se_models(p, ctx.context));
  for_each_subset(ctx.kept(), [&](Mask y) {
    RYFamily fam = ry_family_indexed(idx, ctx.remove, y);
    for (Mask x : fam.core()) out.push_back(SEPair{x, y});
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_omega_via_abse(const Program& p, const RelCtx& ctx) {
  return rss_target_pairs(p, ctx) != ab_se_pairs_unprojected(p, ctx);
}

SimplifiabilityReport is_simplifiable(const Program& p, const RelCtx& ctx) {
  SimplifiabilityReport report;
  report.delta = check_delta(p, ctx);
  report.omega = check_omega(p, ctx);
  report.simplifiable = report.delta.all() && !report.omega.satisfied;
  return report;
}

bool check_relativized_equivalence(const Program& p1, const Program& p2, Mask b) {
  Program q = p2.universe == p1.universe ? p2 : p2.with_universe(p1.universe);
  return rel_se_models(p1, b) == rel_se_models(q, b);
}

}  // namespace relsimp
