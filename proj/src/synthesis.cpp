#include "relsimp/synthesis.hpp"

#include <algorithm>

namespace relsimp {

Program canonical_program(const SEModelSet& target) {
  if (target.relativizer && *target.relativizer != target.alphabet) {
    throw config_error("canonical_program expects a plain SE-model target");
  }
  for (SEPair pr : target.pairs) {
    if (!mask_subset(pr.here, pr.there) || !mask_subset(pr.there, target.alphabet)) {
      throw config_error("canonical_program target pair outside the alphabet");
    }
    if (!target.contains(SEPair{pr.there, pr.there})) {
      throw config_error("canonical_program target is not total-closed");
    }
  }

  UniversePtr alphabet = target.universe->without(~target.alphabet & target.universe->full());
  SEModelSet want = target.with_universe(alphabet);
  const Mask full = alphabet->full();

  Program out;
  out.universe = alphabet;
  for_each_subset(full, [&](Mask y) {
    if (!want.contains(SEPair{y, y})) {
      out.rules.push_back(Rule{0, y, full & ~y, 0});
      return;
    }
    for_each_subset(y, [&](Mask x) {
      if (x == y || want.contains(SEPair{x, y})) return;
      out.rules.push_back(Rule{y & ~x, x, full & ~y, y});
    });
  });

  SEModelSet got = se_models(out);
  if (got.pairs != want.pairs) {
    throw verification_error("canonical_program output does not realize its target");
  }
  return out;
}

ForgetResult forget_rss(const Program& p, const RelCtx& ctx) {
  ForgetResult result;
  result.omega = check_omega(p, ctx);

  SEModelSet target_raw;
  target_raw.universe = p.universe;
  target_raw.alphabet = ctx.kept();
  target_raw.pairs = rss_target_pairs(p, ctx);
  UniversePtr kept_universe = p.universe->without(ctx.remove);
  result.target = target_raw.with_universe(kept_universe);
  result.target.relativizer = translate_mask(ctx.context & ~ctx.remove, *p.universe, *kept_universe);

  SEModelSet plain = result.target;
  plain.relativizer = std::nullopt;
  result.program = canonical_program(plain);

  Mask b_rest = *result.target.relativizer;
  SEModelSet achieved = se_models_restricted(result.program, result.program.full(), b_rest);
  result.contract_ok = achieved.pairs == result.target.pairs;

  if (result.omega.satisfied) {
    result.warnings.push_back(
        "the family criterion blocks forgetting here; the returned program realizes the "
        "canonical target set only");
  }
  if (!result.contract_ok) {
    result.warnings.push_back("the relativized SE-model contract does not hold for the result");
  }
  return result;
}

Program simplify(const Program& p, const RelCtx& ctx) {
  SimplifiabilityReport report = is_simplifiable(p, ctx);
  if (!report.simplifiable) {
    std::string msg = "program is not simplifiable for the requested sets;";
    if (!report.delta.all()) msg += " a delta condition fails";
    if (report.omega.satisfied) msg += " the omega criterion is satisfied";
    throw simplify_error(msg, report);
  }

  const Mask projected = ctx.remove & ctx.context;
  Program stripped = project(p, projected);

  RelCtx inner;
  inner.universe = stripped.full();
  inner.remove = translate_mask(ctx.remove & ~ctx.context, *p.universe, *stripped.universe);
  inner.context = translate_mask(ctx.context & ~ctx.remove, *p.universe, *stripped.universe);

  ForgetResult fr = forget_rss(stripped, inner);
  if (!fr.contract_ok) {
    throw verification_error("project-then-forget lost the relativized SE-model contract");
  }

  SEModelSet expected = ab_se_models(p, ctx);
  SEModelSet got = se_models_restricted(fr.program, fr.program.full(),
                                        translate_mask(expected.relativizer.value_or(0),
                                                       *expected.universe, *fr.program.universe));
  if (got.pairs != expected.with_universe(fr.program.universe).pairs) {
    throw verification_error("simplification output disagrees with the A-B-SE-models");
  }
  return fr.program;
}

Program prune_redundant_rules(const Program& p) {
  Program out = p;
  std::sort(out.rules.begin(), out.rules.end());
  std::vector<SEPair> want = se_models(out).pairs;
  for (std::size_t i = 0; i < out.rules.size();) {
    Program candidate = out;
    candidate.rules.erase(candidate.rules.begin() + static_cast<std::ptrdiff_t>(i));
    if (se_models(candidate).pairs == want) {
      out = std::move(candidate);
    } else {
      ++i;
    }
  }
  return out;
}

ForgetResult forget_rsp(const Program& p, Mask a, Mask s) {
  if (s & a) {
    throw config_error("the persistence context must avoid the forgotten atoms");
  }
  RelCtx ctx{p.full(), a, s};
  OmegaReport omega = check_omega(p, ctx);
  if (omega.satisfied) {
    throw forget_error("forgetting is impossible for this instance: the family criterion is "
                       "satisfied",
                       omega);
  }
  ForgetResult result = forget_rss(p, ctx);
  if (!result.contract_ok) {
    throw verification_error("forgetting result lost the relativized SE-model contract");
  }
  return result;
}

}  // namespace relsimp
