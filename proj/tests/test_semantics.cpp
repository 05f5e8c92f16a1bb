#include <doctest.h>

#include "relsimp/semantics.hpp"
#include "test_helpers.hpp"

using namespace relsimp;
using namespace relsimp::testing;

TEST_CASE("classical models") {
  Program p = p1();
  CHECK(is_model(atoms(p, "b"), p));
  CHECK_FALSE(is_model(0, p));
  CHECK(is_model(atoms(p, "b,a"), p));
  CHECK_FALSE(is_model(atoms(p, "b,c"), p));
  CHECK_FALSE(is_model(atoms(p, "b,d"), p));
}

TEST_CASE("reduct clears satisfied negation") {
  Program p = parse_program("a :- not b.");
  Program r = reduct(p, 0);
  REQUIRE(r.rules.size() == 1);
  CHECK(r.rules[0] == Rule{1, 0, 0, 0});
  CHECK(reduct(p, atoms(p, "b")).rules.empty());
}

TEST_CASE("reduct of double negation keeps the rule only when supported") {
  Program p = parse_program("a :- not not a.");
  Program at_a = reduct(p, atoms(p, "a"));
  REQUIRE(at_a.rules.size() == 1);
  CHECK(at_a.rules[0] == Rule{1, 0, 0, 0});
  CHECK(reduct(p, 0).rules.empty());
}

TEST_CASE("reduct of a positive program is itself") {
  Program p = p1();
  for (Mask i = 0; i <= p.full(); ++i) {
    CHECK(reduct(p, i).rules == p.rules);
  }
}

TEST_CASE("answer sets by exhaustive minimality") {
  Program p = p1();
  CHECK(answer_sets(p) == std::vector<Mask>{atoms(p, "b")});

  Program q = p2();
  CHECK(answer_sets(q) == sets_of(q, {"a,c", "b,c"}));

  Program c = parse_program(":- not s.");
  CHECK(answer_sets(c).empty());
}

TEST_CASE("SE-models of the running example") {
  Program p = p1();
  SEModelSet se = se_models(p);
  auto expected = pairs_of(p, {
                                  {"b,c,a,d", "b,c,a,d"},
                                  {"b,c,a", "b,c,a"},
                                  {"b,a", "b,a"},
                                  {"b", "b"},
                                  {"b,c,a", "b,c,a,d"},
                                  {"b,a", "b,c,a"},
                                  {"b", "b,a"},
                                  {"b,a", "b,c,a,d"},
                                  {"b", "b,c,a,d"},
                                  {"b", "b,c,a"},
                              });
  CHECK(se.pairs == expected);
}

TEST_CASE("SE-models of the empty program over one atom") {
  Program p = parse_program("#universe a.");
  SEModelSet se = se_models(p);
  CHECK(se.pairs == pairs_of(p, {{"", ""}, {"", "a"}, {"a", "a"}}));
}

TEST_CASE("answer sets match total SE-models without smaller companions") {
  for (const char* text : {"a :- b, c.  c :- d.  b.", "a :- not b. b :- not a. c.",
                           "a :- not not a.", "a | b. :- a."}) {
    Program p = parse_program(text);
    SEModelSet se = se_models(p);
    std::vector<Mask> expected;
    for (SEPair pr : se.pairs) {
      if (!pr.total()) continue;
      bool has_smaller = false;
      for (SEPair other : se.pairs) {
        if (other.there == pr.there && !other.total()) has_smaller = true;
      }
      if (!has_smaller) expected.push_back(pr.there);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(answer_sets(p) == expected);
  }
}

TEST_CASE("relativized SE-models of the running example") {
  Program p = p1();
  SEModelSet rel = rel_se_models(p, atoms(p, "a,b,d"));
  auto expected = pairs_of(p, {
                                  {"b,c,a,d", "b,c,a,d"},
                                  {"b,a", "b,a"},
                                  {"b", "b"},
                                  {"b,a", "b,c,a,d"},
                                  {"b", "b,c,a,d"},
                                  {"b", "b,a"},
                              });
  CHECK(rel.pairs == expected);
}

TEST_CASE("relativizing to the full universe collapses to plain SE-models") {
  for (const char* text : {"a :- b, c.  c :- d.  b.", "a :- not b. b :- not a. c.",
                           "a :- not not a. :- not a."}) {
    Program p = parse_program(text);
    CHECK(rel_se_models(p, p.full()).pairs == se_models(p).pairs);
  }
}

TEST_CASE("relativizing to the empty set keeps exactly the answer-set totals") {
  for (const char* text : {"a :- b, c.  c :- d.  b.", "a :- not b. b :- not a. c.",
                           "a | b. c :- not a."}) {
    Program p = parse_program(text);
    SEModelSet rel = rel_se_models(p, 0);
    std::vector<SEPair> expected;
    for (Mask m : answer_sets(p)) expected.push_back(SEPair{m, m});
    CHECK(rel.pairs == expected);
  }
}

TEST_CASE("non-total relativized models carry a recoverable witness") {
  Program p = p1();
  Mask b = atoms(p, "a,b,d");
  SEModelSet rel = rel_se_models(p, b);
  for (SEPair pr : rel.pairs) {
    auto witness = rel_se_witness(p, b, pr);
    REQUIRE(witness.has_value());
    if (pr.total()) {
      CHECK(*witness == pr.there);
    } else {
      CHECK((*witness & b) == pr.here);
      CHECK(holds_in_reduct(*witness, p, pr.there));
    }
  }
  CHECK_FALSE(rel_se_witness(p, b, pair_of(p, "a", "b,a")).has_value());
}

TEST_CASE("restriction keeps only pairs inside the first alphabet") {
  Program q1 = parse_program("a :- d.");
  SEModelSet res = se_models_restricted(q1, q1.full(), q1.full());
  CHECK(res.pairs == se_models(q1).pairs);

  Program p = p1();
  SEModelSet none = se_models_restricted(p, 0, p.full());
  CHECK(none.pairs.empty());

  Program fact_free = parse_program("#universe a.\na :- not not a.");
  SEModelSet only_empty = se_models_restricted(fact_free, 0, fact_free.full());
  CHECK(only_empty.pairs == std::vector<SEPair>{SEPair{0, 0}});
}
