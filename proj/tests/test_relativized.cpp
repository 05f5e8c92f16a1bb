#include <doctest.h>

#include "relsimp/json_io.hpp"
#include "relsimp/relativized.hpp"
#include "relsimp/synthesis.hpp"
#include "test_helpers.hpp"

using namespace relsimp;
using namespace relsimp::testing;

namespace {

RelCtx ctx_of(const Program& p, const char* remove, const char* context) {
  RelCtx ctx;
  ctx.universe = p.full();
  ctx.remove = atoms(p, remove);
  ctx.context = atoms(p, context);
  return ctx;
}

// The running example with A={b,c}, B={a,b,d}.
RelCtx ctx1(const Program& p) { return ctx_of(p, "b,c", "a,b,d"); }

// Program of the family-criterion example, reconstructed from its SE-models.
Program family_example() {
  Program frame = parse_program("#universe a, b, c, d.");
  SEModelSet target;
  target.universe = frame.universe;
  target.alphabet = frame.full();
  target.pairs = pairs_of(frame, {
                                     {"a,b,c", "a,b,c"},
                                     {"a,b,d", "a,b,d"},
                                     {"a,b,c,d", "a,b,c,d"},
                                     {"a,c", "a,b,c"},
                                     {"b,d", "a,b,d"},
                                     {"a,b,c", "a,b,c,d"},
                                     {"a,c", "a,b,c,d"},
                                     {"b,d", "a,b,c,d"},
                                     {"a,b,d", "a,b,c,d"},
                                 });
  return canonical_program(target);
}

}  // namespace

TEST_CASE("A-B-SE-models of the running example") {
  Program p = p1();
  SEModelSet ab = ab_se_models(p, ctx1(p));
  CHECK(ab.universe->names() == std::vector<std::string>{"a", "d"});
  Program frame{ab.universe, {}};
  auto expected = pairs_of(frame, {
                                      {"a,d", "a,d"},
                                      {"a", "a"},
                                      {"", ""},
                                      {"a", "a,d"},
                                      {"", "a,d"},
                                      {"", "a"},
                                  });
  CHECK(ab.pairs == expected);
}

TEST_CASE("dropping one witness pair leaves the A-B-SE-models stable") {
  // Drop ⟨ba,bca⟩ from the SE-models of the running example. Both ⟨bca,bca⟩
  // and ⟨b,bca⟩ then join the relativized models, so every projected pair
  // keeps a companion under each total and the A-B-SE-models are unchanged.
  Program p = p1();
  SEModelSet target = se_models(p);
  std::erase(target.pairs, pair_of(p, "b,a", "b,c,a"));
  Program variant = canonical_program(target);
  CHECK(se_models(variant).pairs == target.pairs);

  RelCtx vctx = ctx_of(variant, "b,c", "a,b,d");
  SEModelSet rel = rel_se_models(variant, vctx.context);
  CHECK(rel.contains(pair_of(variant, "b,c,a", "b,c,a")));
  CHECK(rel.contains(pair_of(variant, "b", "b,c,a")));

  SEModelSet ab = ab_se_models(variant, vctx);
  SEModelSet base = ab_se_models(p, ctx1(p));
  CHECK(ab.pairs == base.pairs);
}

TEST_CASE("losing every non-total companion shrinks the A-B-SE-models") {
  // Removing ⟨b,bca⟩ as well leaves no non-total pair under ⟨bca,bca⟩, so the
  // projected ⟨∅,a⟩ loses stability.
  Program p = p1();
  SEModelSet target = se_models(p);
  std::erase(target.pairs, pair_of(p, "b,a", "b,c,a"));
  std::erase(target.pairs, pair_of(p, "b", "b,c,a"));
  Program variant = canonical_program(target);

  SEModelSet ab = ab_se_models(variant, ctx_of(variant, "b,c", "a,b,d"));
  SEModelSet base = ab_se_models(p, ctx1(p));
  std::vector<SEPair> expected = base.pairs;
  std::erase(expected, SEPair{0, ab.universe->mask_of({"a"})});
  CHECK(ab.pairs == expected);
}

TEST_CASE("with nothing removed the A-B-SE-models are the B-SE-models") {
  for (const char* text : {"a :- b, c.  c :- d.  b.", "a :- not b. b :- not a. c."}) {
    Program p = parse_program(text);
    RelCtx ctx = ctx_of(p, "", "a,b");
    SEModelSet ab = ab_se_models(p, ctx);
    SEModelSet rel = rel_se_models(p, ctx.context);
    CHECK(ab.with_universe(p.universe).pairs == rel.pairs);
  }
}

TEST_CASE("delta conditions hold for the running example") {
  Program p = p1();
  DeltaReport report = check_delta(p, ctx1(p));
  CHECK(report.s1.holds);
  CHECK(report.s2.holds);
  CHECK(report.s3.holds);
  CHECK(report.all());
}

TEST_CASE("delta s1 fails over the full context with the least witness") {
  Program p = p1();
  DeltaReport report = check_delta(p, ctx_of(p, "b,c", "a,b,c,d"));
  CHECK_FALSE(report.s1.holds);
  REQUIRE(report.s1.witness.has_value());
  CHECK(*report.s1.witness == pair_of(p, "b", "b"));
}

TEST_CASE("delta holds whenever the context avoids the removed atoms") {
  Program p = p3();
  CHECK(check_delta(p, ctx_of(p, "p,q", "a,b")).all());
  Program q = p2();
  CHECK(check_delta(q, ctx_of(q, "b,c", "a")).all());
}

TEST_CASE("family of the criterion example") {
  Program p = family_example();
  RelCtx ctx = ctx_of(p, "c,d", "a,b,c");
  RYFamily fam = ry_family(p, ctx, atoms(p, "a,b"));
  auto sets = fam.distinct_sets();
  std::vector<std::vector<Mask>> expected{sets_of(p, {"a,b", "a"}), sets_of(p, {"a,b", "b"})};
  std::sort(expected.begin(), expected.end());
  CHECK(sets == expected);
  CHECK_FALSE(fam.least_element().has_value());
  CHECK(fam.core().empty());

  RYFamily empty_fam = ry_family(p, ctx, atoms(p, "a"));
  CHECK(empty_fam.entries.empty());
}

TEST_CASE("every non-empty family entry contains its own projection") {
  Program p = p1();
  RelCtx ctx = ctx1(p);
  for (Mask y = 0; y <= ctx.kept(); ++y) {
    if (y & ctx.remove) continue;
    RYFamily fam = ry_family(p, ctx, y);
    for (const auto& entry : fam.entries) {
      CHECK(std::find(entry.projected_heres.begin(), entry.projected_heres.end(), y) !=
            entry.projected_heres.end());
    }
  }
}

TEST_CASE("omega criterion on the worked examples") {
  Program fam = family_example();
  OmegaReport on = check_omega(fam, ctx_of(fam, "c,d", "a,b,c"));
  CHECK(on.satisfied);
  REQUIRE(on.witness_y.has_value());
  CHECK(*on.witness_y == atoms(fam, "a,b"));
  CHECK(on.witness_count == 1);

  Program p = p1();
  CHECK_FALSE(check_omega(p, ctx1(p)).satisfied);
}

TEST_CASE("omega is never satisfied with nothing removed or no context") {
  for (const char* text : {"a :- b, c.  c :- d.  b.", "a :- not b. b :- not a. c.",
                           "a :- p. b :- q. p :- not q. q :- not p."}) {
    Program p = parse_program(text);
    RelCtx nothing_removed;
    nothing_removed.universe = p.full();
    nothing_removed.remove = 0;
    nothing_removed.context = atoms(p, "a,b");
    CHECK_FALSE(check_omega(p, nothing_removed).satisfied);

    RelCtx no_context;
    no_context.universe = p.full();
    no_context.remove = p.full() & ~atoms(p, "a");
    no_context.context = 0;
    CHECK_FALSE(check_omega(p, no_context).satisfied);
  }
}

TEST_CASE("omega verdict via the A-B-SE characterization") {
  Program p = p1();
  CHECK_FALSE(check_omega_via_abse(p, ctx1(p)));

  Program fam = family_example();
  CHECK(check_omega_via_abse(fam, ctx_of(fam, "c,d", "a,b,c")));

  Program p3prog = p3();
  CHECK(check_omega_via_abse(p3prog, ctx_of(p3prog, "p,q", "a,b")));
  CHECK(check_omega(p3prog, ctx_of(p3prog, "p,q", "a,b")).satisfied);
}

TEST_CASE("simplifiability verdicts of the worked examples") {
  Program p1prog = p1();
  CHECK(is_simplifiable(p1prog, ctx1(p1prog)).simplifiable);
  CHECK_FALSE(is_simplifiable(p1prog, ctx_of(p1prog, "b,c", "a,b,c,d")).simplifiable);

  Program p2prog = p2();
  CHECK(is_simplifiable(p2prog, ctx_of(p2prog, "b,c", "a,c")).simplifiable);
  CHECK_FALSE(is_simplifiable(p2prog, ctx_of(p2prog, "b,c", "a,b,c")).simplifiable);

  Program p3prog = p3();
  SimplifiabilityReport report = is_simplifiable(p3prog, ctx_of(p3prog, "p,q", "a,b"));
  CHECK(report.delta.all());
  CHECK(report.omega.satisfied);
  CHECK_FALSE(report.simplifiable);
}

TEST_CASE("relativized equivalence") {
  Program p = p1();
  CHECK(check_relativized_equivalence(p, p, atoms(p, "a,b")));

  // With B = U this is plain strong equivalence.
  Program q = parse_program("a :- b, c. c :- d. b. a :- b, c, d.");
  CHECK(check_relativized_equivalence(p, q, p.full()));

  // With B = ∅ it is answer-set equality.
  Program r = parse_program("#universe a, b, c, d.\nb. :- not b.");
  CHECK(check_relativized_equivalence(p, r, 0));
  CHECK_FALSE(check_relativized_equivalence(p, r, p.full()));
}

TEST_CASE("simplifiability report serializes to the documented schema") {
  Program p = p3();
  SimplifiabilityReport report = is_simplifiable(p, ctx_of(p, "p,q", "a,b"));
  nlohmann::json j = simplifiability_json(*p.universe, report);
  CHECK(j["simplifiable"] == false);
  CHECK(j["delta"]["s1"]["holds"] == true);
  CHECK(j["delta"]["s1"]["witness"].is_null());
  CHECK(j["omega"]["satisfied"] == true);
  CHECK(j["omega"]["witnessY"] == nlohmann::json::array({"a", "b"}));
  CHECK(j["omega"]["family"].size() == 2);
  std::string dumped = j.dump();
  CHECK(nlohmann::json::parse(dumped) == j);
}
